//! Small dense symmetric linear algebra: cyclic Jacobi eigendecomposition,
//! Gauss-Jordan inversion with partial pivoting, and power iteration.

use serde::Serialize;

use crate::error::{Error, Result};

/// Dense symmetric matrix in full row-major storage.
///
/// Writes go through [`SymMatrix::set`], which mirrors the entry, so the
/// stored matrix is exactly symmetric.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SymMatrix {
    order: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(order: usize) -> Self {
        SymMatrix {
            order,
            data: vec![0.0; order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m.set(i, i, 1.0);
        }
        m
    }

    /// Builds from a closure evaluated on the upper triangle.
    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            for j in i..order {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.order + j] = value;
        self.data[j * self.order + i] = value;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.order..(i + 1) * self.order]
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.order)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Principal submatrix on `indices`, in the given order.
    pub fn principal(&self, indices: &[usize]) -> SymMatrix {
        SymMatrix::from_fn(indices.len(), |a, b| self.get(indices[a], indices[b]))
    }

    /// `self + c J`.
    pub fn add_constant(&self, c: f64) -> SymMatrix {
        SymMatrix {
            order: self.order,
            data: self.data.iter().map(|x| x + c).collect(),
        }
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(blocks: &[&SymMatrix]) -> SymMatrix {
        let order = blocks.iter().map(|b| b.order).sum();
        let mut m = SymMatrix::zeros(order);
        let mut offset = 0;
        for b in blocks {
            for i in 0..b.order {
                for j in i..b.order {
                    m.set(offset + i, offset + j, b.get(i, j));
                }
            }
            offset += b.order;
        }
        m
    }

    pub fn min_entry(&self) -> f64 {
        self.data.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// Inverse by Gauss-Jordan elimination with partial pivoting.
    pub fn inverse(&self) -> Result<SymMatrix> {
        let n = self.order;
        let mut a = self.data.clone();
        let mut inv = SymMatrix::identity(n).data;
        let scale = self.frobenius_norm().max(f64::MIN_POSITIVE);
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&r, &s| a[r * n + col].abs().total_cmp(&a[s * n + col].abs()))
                .unwrap();
            if a[pivot * n + col].abs() <= 1e-13 * scale {
                return Err(Error::Singular);
            }
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                    inv.swap(pivot * n + j, col * n + j);
                }
            }
            let p = a[col * n + col];
            for j in 0..n {
                a[col * n + j] /= p;
                inv[col * n + j] /= p;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a[r * n + col];
                if f == 0.0 {
                    continue;
                }
                for j in 0..n {
                    a[r * n + j] -= f * a[col * n + j];
                    inv[r * n + j] -= f * inv[col * n + j];
                }
            }
        }
        // The exact inverse of a symmetric matrix is symmetric; average out rounding.
        Ok(SymMatrix::from_fn(n, |i, j| {
            0.5 * (inv[i * n + j] + inv[j * n + i])
        }))
    }
}

/// Eigenvalues in ascending order with orthonormal eigenvectors.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Eigen {
    pub values: Vec<f64>,
    /// `vectors[i]` is the unit eigenvector for `values[i]`.
    pub vectors: Vec<Vec<f64>>,
}

const JACOBI_MAX_SWEEPS: usize = 100;

/// Full eigendecomposition by cyclic Jacobi rotations.
///
/// Rotations sweep the strict upper triangle row by row. Iteration stops once
/// the off-diagonal Frobenius mass is at most `1e-14` times the Frobenius norm.
pub fn eigen_sym(m: &SymMatrix) -> Result<Eigen> {
    let n = m.order;
    let mut a = m.data.clone();
    let mut v = SymMatrix::identity(n).data;
    let norm = m.frobenius_norm();
    let off = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
        }
        s.sqrt()
    };
    let mut sweeps = 0;
    while off(&a) > 1e-14 * norm {
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::NoConvergence(sweeps));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                // A <- Jᵀ A J on rows/cols p, q.
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]).then(i.cmp(&j)));
    Ok(Eigen {
        values: idx.iter().map(|&i| a[i * n + i]).collect(),
        vectors: idx
            .iter()
            .map(|&j| (0..n).map(|k| v[k * n + j]).collect())
            .collect(),
    })
}

/// Largest eigenvalue of a symmetric matrix.
pub fn largest_eigenvalue(m: &SymMatrix) -> Result<f64> {
    Ok(eigen_sym(m)?
        .values
        .last()
        .copied()
        .unwrap_or(f64::NEG_INFINITY))
}

/// Dominant eigenpair of an entrywise-positive symmetric matrix.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PerronPair {
    pub value: f64,
    /// Positive unit vector.
    pub vector: Vec<f64>,
    pub iterations: usize,
}

const POWER_MAX_ITERATIONS: usize = 100_000;

/// Power iteration from the all-ones vector, stopping when successive
/// Rayleigh quotients agree to `1e-13` relative to the quotient's magnitude.
pub fn perron_pair(m: &SymMatrix) -> Result<PerronPair> {
    let n = m.order;
    if n == 0 {
        return Err(Error::Domain("empty matrix has no Perron value".into()));
    }
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut previous = f64::NAN;
    for it in 1..=POWER_MAX_ITERATIONS {
        let y = m.mul_vec(&x);
        let rq: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let norm = y.iter().map(|t| t * t).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(Error::Internal(
                "power iteration hit the zero vector".into(),
            ));
        }
        x = y.into_iter().map(|t| t / norm).collect();
        if (rq - previous).abs() <= 1e-13 * rq.abs().max(1.0) {
            return Ok(PerronPair {
                value: rq,
                vector: x,
                iterations: it,
            });
        }
        previous = rq;
    }
    Err(Error::NoConvergence(POWER_MAX_ITERATIONS))
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm2(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub fn norm_inf(a: &[f64]) -> f64 {
    a.iter().fold(0.0, |m, x| m.max(x.abs()))
}
