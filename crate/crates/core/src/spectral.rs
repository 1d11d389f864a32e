//! Laplacian spectra: algebraic connectivity, its multiplicity and a Fiedler vector.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::Graph;
use crate::linalg::{eigen_sym, norm_inf, Eigen, SymMatrix};

/// Eigenvalues closer than this to `mu` count toward its multiplicity.
pub const DEFAULT_MULTIPLICITY_TOL: f64 = 1e-9;

/// A second-smallest Laplacian eigenvalue below this marks a disconnected graph.
pub const DISCONNECTED_THRESHOLD: f64 = 1e-9;

/// `L(G) = D(G) − A(G)`.
pub fn laplacian(g: &Graph) -> SymMatrix {
    let mut m = SymMatrix::zeros(g.order());
    for v in 0..g.order() {
        m.set(v, v, g.degree(v) as f64);
    }
    for &(u, v) in g.edges() {
        m.set(u, v, -1.0);
    }
    m
}

/// Laplacian spectrum of a connected graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Vec<Vec<f64>>,
    pub mu: f64,
    pub mu_multiplicity: usize,
    /// Unit eigenvector for `mu` whose first non-negligible coordinate is positive.
    pub fiedler: Vec<f64>,
}

impl Spectrum {
    pub fn of_graph(g: &Graph) -> Result<Self> {
        Self::with_tolerance(g, DEFAULT_MULTIPLICITY_TOL)
    }

    pub fn with_tolerance(g: &Graph, multiplicity_tol: f64) -> Result<Self> {
        if g.order() < 2 {
            return Err(Error::Domain(
                "algebraic connectivity needs at least two vertices".into(),
            ));
        }
        let Eigen { values, vectors } = eigen_sym(&laplacian(g))?;
        let mu = values[1];
        if mu < DISCONNECTED_THRESHOLD {
            return Err(Error::Disconnected);
        }
        let mu_multiplicity = values
            .iter()
            .filter(|&&x| (x - mu).abs() <= multiplicity_tol)
            .count();
        let fiedler = sign_normalized(vectors[1].clone());
        Ok(Spectrum {
            eigenvalues: values,
            eigenvectors: vectors,
            mu,
            mu_multiplicity,
            fiedler,
        })
    }
}

/// Flips `y` so its first coordinate above `1e-8 · ‖y‖∞` in magnitude is positive.
pub fn sign_normalized(mut y: Vec<f64>) -> Vec<f64> {
    let eps = 1e-8 * norm_inf(&y);
    if let Some(&first) = y.iter().find(|x| x.abs() > eps) {
        if first < 0.0 {
            y.iter_mut().for_each(|x| *x = -*x);
        }
    }
    y
}

/// Algebraic connectivity with multiplicity and sign-normalized Fiedler vector.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlgebraicConnectivity {
    pub mu: f64,
    pub multiplicity: usize,
    pub fiedler: Vec<f64>,
}

pub fn algebraic_connectivity(g: &Graph) -> Result<AlgebraicConnectivity> {
    let s = Spectrum::of_graph(g)?;
    Ok(AlgebraicConnectivity {
        mu: s.mu,
        multiplicity: s.mu_multiplicity,
        fiedler: s.fiedler,
    })
}

/// Shorthand for the second-smallest Laplacian eigenvalue of a connected graph.
pub fn mu(g: &Graph) -> Result<f64> {
    Ok(Spectrum::of_graph(g)?.mu)
}

/// Exact algebraic connectivity for families with a known formula.
pub fn mu_closed_form(spec: &FamilySpec) -> Option<f64> {
    match *spec {
        FamilySpec::Path(n) if n >= 2 => Some(2.0 * (1.0 - (PI / n as f64).cos())),
        FamilySpec::Cycle(n) if n >= 3 => Some(2.0 * (1.0 - (2.0 * PI / n as f64).cos())),
        FamilySpec::Star(n) if n >= 3 => Some(1.0),
        FamilySpec::Star(2) => Some(2.0),
        FamilySpec::Complete(n) if n >= 2 => Some(n as f64),
        _ => None,
    }
}

/// Upper bound `2(1 − cos(π/(d+1)))` on the algebraic connectivity of a tree of diameter `d`.
pub fn diameter_bound(d: usize) -> f64 {
    2.0 * (1.0 - (PI / (d as f64 + 1.0)).cos())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn laplacian_of_small_graphs() {
        let k2 = families::complete(2).unwrap();
        let l = laplacian(&k2);
        assert_eq!((l.get(0, 0), l.get(0, 1), l.get(1, 1)), (1.0, -1.0, 1.0));
        let k5 = families::complete(5).unwrap();
        let l = laplacian(&k5);
        for i in 0..5 {
            for j in 0..5 {
                let expect = if i == j { 4.0 } else { -1.0 };
                assert_eq!(l.get(i, j), expect);
            }
        }
    }

    #[test]
    fn spectra_of_k4_and_p3() {
        let e = eigen_sym(&laplacian(&families::complete(4).unwrap())).unwrap();
        for (got, want) in e.values.iter().zip([0.0, 4.0, 4.0, 4.0]) {
            assert!((got - want).abs() < 1e-12);
        }
        // det(L(P_3) − x I) = −x(x − 1)(x − 3)
        let e = eigen_sym(&laplacian(&families::path(3).unwrap())).unwrap();
        for (got, want) in e.values.iter().zip([0.0, 1.0, 3.0]) {
            assert!((got - want).abs() < 1e-12);
        }
        let ac = algebraic_connectivity(&families::complete(4).unwrap()).unwrap();
        assert_eq!(ac.multiplicity, 3);
    }

    #[test]
    fn closed_forms() {
        let p10 = mu_closed_form(&FamilySpec::Path(10)).unwrap();
        assert!((p10 - 0.097_887).abs() < 1e-6);
        assert!((mu(&families::path(10).unwrap()).unwrap() - p10).abs() < 1e-12);
        assert_eq!(mu_closed_form(&FamilySpec::Complete(7)), Some(7.0));
        assert_eq!(mu_closed_form(&FamilySpec::Tkld { k: 1, l: 2, d: 3 }), None);
        assert!((mu(&families::cycle(3).unwrap()).unwrap() - 3.0).abs() < 1e-12);
        assert!((mu(&families::cycle(4).unwrap()).unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn diameter_bounds() {
        assert!((diameter_bound(1) - 2.0).abs() < 1e-15);
        for n in 2..20 {
            let p = mu_closed_form(&FamilySpec::Path(n)).unwrap();
            assert!((diameter_bound(n - 1) - p).abs() < 1e-15);
        }
    }

    #[test]
    fn rejects_disconnected() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(algebraic_connectivity(&g), Err(Error::Disconnected));
        assert!(algebraic_connectivity(&Graph::empty(1)).is_err());
    }

    #[test]
    fn fiedler_sign_convention() {
        let ac = algebraic_connectivity(&families::path(6).unwrap()).unwrap();
        assert!(ac.fiedler[0] > 0.0);
        let s = sign_normalized(vec![0.0, -1e-12, -0.5, 0.5]);
        assert_eq!(s, vec![-0.0, 1e-12, 0.5, -0.5]);
    }
}
