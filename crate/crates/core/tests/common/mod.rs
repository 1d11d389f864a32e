//! Reference computations written independently of the library, used as test oracles.
#![allow(dead_code)]

use std::collections::BTreeSet;

use fiedler::Graph;

/// Dense Laplacian as nested vectors.
pub fn laplacian_rows(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.order();
    let mut l = vec![vec![0.0; n]; n];
    for &(u, v) in g.edges() {
        l[u][v] -= 1.0;
        l[v][u] -= 1.0;
        l[u][u] += 1.0;
        l[v][v] += 1.0;
    }
    l
}

/// Householder reduction of a symmetric matrix to tridiagonal form; returns (diagonal, off-diagonal).
pub fn tridiagonalize(mut a: Vec<Vec<f64>>) -> (Vec<f64>, Vec<f64>) {
    let n = a.len();
    for k in 0..n.saturating_sub(2) {
        let x: Vec<f64> = (k + 1..n).map(|i| a[i][k]).collect();
        let alpha = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        if alpha < 1e-300 {
            continue;
        }
        let sign = if x[0] >= 0.0 { 1.0 } else { -1.0 };
        let mut v = x.clone();
        v[0] += sign * alpha;
        let vn = v.iter().map(|t| t * t).sum::<f64>().sqrt();
        if vn < 1e-300 {
            continue;
        }
        v.iter_mut().for_each(|t| *t /= vn);
        // A <- H A H with H = I - 2 v v^T on the trailing block.
        let m = n - k - 1;
        let idx = |i: usize| i + k + 1;
        let mut p = vec![0.0; n];
        for i in 0..n {
            p[i] = (0..m).map(|j| a[i][idx(j)] * v[j]).sum();
        }
        for i in 0..n {
            for j in 0..m {
                a[i][idx(j)] -= 2.0 * p[i] * v[j];
            }
        }
        let mut q = vec![0.0; n];
        for j in 0..n {
            q[j] = (0..m).map(|i| v[i] * a[idx(i)][j]).sum();
        }
        for i in 0..m {
            for j in 0..n {
                a[idx(i)][j] -= 2.0 * v[i] * q[j];
            }
        }
    }
    let d = (0..n).map(|i| a[i][i]).collect();
    let e = (1..n).map(|i| a[i][i - 1]).collect();
    (d, e)
}

/// Number of eigenvalues of the tridiagonal matrix strictly less than `x`.
fn sturm_count(d: &[f64], e: &[f64], x: f64) -> usize {
    let mut count = 0;
    let mut q = 1.0;
    for i in 0..d.len() {
        let off = if i == 0 { 0.0 } else { e[i - 1] * e[i - 1] };
        q = d[i] - x - if i == 0 { 0.0 } else { off / q };
        if q == 0.0 {
            q = -1e-300;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// All eigenvalues (ascending) by Sturm bisection.
pub fn sturm_eigenvalues(a: Vec<Vec<f64>>) -> Vec<f64> {
    let (d, e) = tridiagonalize(a);
    let n = d.len();
    let radius = (0..n)
        .map(|i| {
            d[i].abs()
                + if i > 0 { e[i - 1].abs() } else { 0.0 }
                + if i + 1 < n { e[i].abs() } else { 0.0 }
        })
        .fold(0.0, f64::max);
    (0..n)
        .map(|k| {
            let (mut lo, mut hi) = (-radius - 1.0, radius + 1.0);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if sturm_count(&d, &e, mid) > k {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            0.5 * (lo + hi)
        })
        .collect()
}

/// Inverse by Gauss-Jordan elimination with full row pivoting.
pub fn invert(a: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = a.len();
    let mut m: Vec<Vec<f64>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { 1.0 } else { 0.0 }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n)
            .max_by(|&x, &y| m[x][c].abs().total_cmp(&m[y][c].abs()))
            .unwrap();
        m.swap(c, p);
        let piv = m[c][c];
        assert!(piv.abs() > 1e-12, "singular matrix in oracle");
        m[c].iter_mut().for_each(|t| *t /= piv);
        for r in 0..n {
            if r != c && m[r][c] != 0.0 {
                let f = m[r][c];
                let pivot_row = m[c].clone();
                m[r].iter_mut()
                    .zip(&pivot_row)
                    .for_each(|(t, s)| *t -= f * s);
            }
        }
    }
    m.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// Adjacency bitmask code minimized over all vertex permutations.
pub fn brute_canonical(g: &Graph) -> u64 {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let mut code = 0u64;
        for &(u, v) in g.edges() {
            let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
            code |= 1 << (b * (b - 1) / 2 + a);
        }
        best = best.min(code);
        if !next_permutation(&mut perm) {
            return best;
        }
    }
}

pub fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Number of connected graphs on `n` labeled vertices up to isomorphism, by
/// brute force over all edge subsets.
pub fn naive_connected_count(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut seen = BTreeSet::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<_> = (0..pairs.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        let g = Graph::from_edges(n, edges).unwrap();
        if g.is_connected() {
            seen.insert(brute_canonical(&g));
        }
    }
    seen.len()
}

/// Every labeled tree on `n >= 3` vertices, from all Prüfer sequences.
pub fn prufer_trees(n: usize) -> Vec<Graph> {
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total)
        .map(|mut code| {
            let mut seq = Vec::with_capacity(len);
            for _ in 0..len {
                seq.push(code % n);
                code /= n;
            }
            decode(n, &seq)
        })
        .collect()
}

fn decode(n: usize, seq: &[usize]) -> Graph {
    let mut degree = vec![1; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::new();
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] = 0;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, edges).unwrap()
}

/// AHU code of a tree rooted at its center (the lexicographically smaller code
/// for a bicentral tree); two trees are isomorphic iff their codes match.
pub fn tree_code(t: &Graph) -> String {
    let n = t.order();
    if n == 1 {
        return "()".into();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in t.neighbors(leaf) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| rooted_code(t, c, usize::MAX))
        .min()
        .unwrap()
}

fn rooted_code(t: &Graph, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_code(t, w, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Unlabeled free-tree counts for orders `0..=max`, by Otter's formula.
pub fn otter_free_tree_counts(max: usize) -> Vec<u64> {
    // Rooted trees: a(n+1) = (1/n) Σ_{k=1}^{n} (Σ_{d|k} d a(d)) a(n−k+1).
    let mut a = vec![0u64; max + 1];
    if max >= 1 {
        a[1] = 1;
    }
    for n in 1..max {
        let mut s = 0u64;
        for k in 1..=n {
            let c: u64 = (1..=k)
                .filter(|d| k % d == 0)
                .map(|d| d as u64 * a[d])
                .sum();
            s += c * a[n - k + 1];
        }
        a[n + 1] = s / n as u64;
    }
    (0..=max)
        .map(|n| {
            if n == 0 {
                return 1;
            }
            let pairs: u64 = (1..n).map(|i| a[i] * a[n - i]).sum();
            let half = if n % 2 == 0 { a[n / 2] } else { 0 };
            a[n] - (pairs - half) / 2
        })
        .collect()
}
