//! Constructors for the named graph families.
//!
//! Every constructor emits a fixed labeling:
//!
//! * `path(n)`: `0 - 1 - .. - (n-1)`.
//! * `cycle(n)`: `path(n)` plus `{n-1, 0}`.
//! * `star(n)`: center `0`, leaves `1..n`.
//! * `complete(n)`: all pairs.
//! * `t_kld(k, l, d)`: spine `0..d`; `k` pendants `d..d+k` at `0`; `l` pendants
//!   `d+k..d+k+l` at `d-1`.
//! * `t_broom(n, d)`: spine `0..d`; pendants `d..n` at spine vertex `⌊(d+1)/2⌋ - 1`.
//! * `p_n_k(n, k)`, `k != n-2`: clique `0..n-k`; pendants `n-k..n` at `0`.
//!   `p_n_k(n, n-2)`: path `0 - 1 - 2`; pendants `3..n` at `0`.
//! * `c3_tail(n)`: triangle `0, 1, 2`; tail `2 - 3 - .. - (n-1)`.
//! * `t_spider(n, k)`: center `0`; legs listed longest first, labels increase
//!   outward along each leg.
//! * `two_cycles(n)`: shared vertex `0`; cycle `0, 1, .., a-1` with
//!   `a = ⌊(n+1)/2⌋`, and cycle `0, a, .., n-1`.
//! * `dumbbell(n)`: `t22(n)` plus edges `{n-4, n-3}` and `{n-2, n-1}`.
//! * `t22(n)`: `t_kld(2, 2, n-4)`.
//! * `star_with_chords(n, k)`: `star(n)` plus edges `{i, i+1}` for `1 <= i <= n-k-2`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A named family member with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Star(usize),
    Complete(usize),
    Tkld { k: usize, l: usize, d: usize },
    Broom { n: usize, d: usize },
    Pnk { n: usize, k: usize },
    C3Tail(usize),
    Spider { n: usize, k: usize },
    TwoCycles(usize),
    Dumbbell(usize),
    T22(usize),
    StarWithChords { n: usize, k: usize },
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            FamilySpec::Path(n) => path(n),
            FamilySpec::Cycle(n) => cycle(n),
            FamilySpec::Star(n) => star(n),
            FamilySpec::Complete(n) => complete(n),
            FamilySpec::Tkld { k, l, d } => t_kld(k, l, d),
            FamilySpec::Broom { n, d } => t_broom(n, d),
            FamilySpec::Pnk { n, k } => p_n_k(n, k),
            FamilySpec::C3Tail(n) => c3_tail(n),
            FamilySpec::Spider { n, k } => t_spider(n, k),
            FamilySpec::TwoCycles(n) => two_cycles(n),
            FamilySpec::Dumbbell(n) => dumbbell(n),
            FamilySpec::T22(n) => t22(n),
            FamilySpec::StarWithChords { n, k } => star_with_chords(n, k),
        }
    }

    /// Order of the constructed graph.
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Star(n)
            | FamilySpec::Complete(n)
            | FamilySpec::C3Tail(n)
            | FamilySpec::TwoCycles(n)
            | FamilySpec::Dumbbell(n)
            | FamilySpec::T22(n) => n,
            FamilySpec::Tkld { k, l, d } => k + l + d,
            FamilySpec::Broom { n, .. }
            | FamilySpec::Pnk { n, .. }
            | FamilySpec::Spider { n, .. }
            | FamilySpec::StarWithChords { n, .. } => n,
        }
    }

    pub fn family_id(&self) -> &'static str {
        match self {
            FamilySpec::Path(_) => "Path",
            FamilySpec::Cycle(_) => "Cycle",
            FamilySpec::Star(_) => "Star",
            FamilySpec::Complete(_) => "Complete",
            FamilySpec::Tkld { .. } => "T_kld",
            FamilySpec::Broom { .. } => "T_broom",
            FamilySpec::Pnk { .. } => "P_n_k",
            FamilySpec::C3Tail(_) => "C3_tail",
            FamilySpec::Spider { .. } => "T_spider",
            FamilySpec::TwoCycles(_) => "TwoCycles",
            FamilySpec::Dumbbell(_) => "Dumbbell",
            FamilySpec::T22(_) => "T22",
            FamilySpec::StarWithChords { .. } => "StarWithChords",
        }
    }

    pub fn params(&self) -> Vec<usize> {
        match *self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Star(n)
            | FamilySpec::Complete(n)
            | FamilySpec::C3Tail(n)
            | FamilySpec::TwoCycles(n)
            | FamilySpec::Dumbbell(n)
            | FamilySpec::T22(n) => vec![n],
            FamilySpec::Tkld { k, l, d } => vec![k, l, d],
            FamilySpec::Broom { n, d } => vec![n, d],
            FamilySpec::Pnk { n, k }
            | FamilySpec::Spider { n, k }
            | FamilySpec::StarWithChords { n, k } => vec![n, k],
        }
    }

    /// Parses an id (case-insensitive) and its parameter list.
    pub fn parse(id: &str, params: &[usize]) -> Result<Self> {
        let want = |count: usize| -> Result<()> {
            if params.len() == count {
                Ok(())
            } else {
                Err(Error::Domain(format!(
                    "family {id} takes {count} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let key = id.to_ascii_lowercase().replace(['-', '_'], "");
        let spec = match key.as_str() {
            "path" => want(1).map(|_| FamilySpec::Path(params[0])),
            "cycle" => want(1).map(|_| FamilySpec::Cycle(params[0])),
            "star" => want(1).map(|_| FamilySpec::Star(params[0])),
            "complete" => want(1).map(|_| FamilySpec::Complete(params[0])),
            "tkld" => want(3).map(|_| FamilySpec::Tkld {
                k: params[0],
                l: params[1],
                d: params[2],
            }),
            "tbroom" | "broom" => want(2).map(|_| FamilySpec::Broom {
                n: params[0],
                d: params[1],
            }),
            "pnk" => want(2).map(|_| FamilySpec::Pnk {
                n: params[0],
                k: params[1],
            }),
            "c3tail" => want(1).map(|_| FamilySpec::C3Tail(params[0])),
            "tspider" | "spider" => want(2).map(|_| FamilySpec::Spider {
                n: params[0],
                k: params[1],
            }),
            "twocycles" => want(1).map(|_| FamilySpec::TwoCycles(params[0])),
            "dumbbell" => want(1).map(|_| FamilySpec::Dumbbell(params[0])),
            "t22" => want(1).map(|_| FamilySpec::T22(params[0])),
            "starwithchords" => want(2).map(|_| FamilySpec::StarWithChords {
                n: params[0],
                k: params[1],
            }),
            _ => Err(Error::Domain(format!("unknown family {id:?}"))),
        }?;
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params().iter().map(ToString::to_string).collect();
        write!(f, "{}({})", self.family_id(), params.join(","))
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Accepts `Id(a,b,..)` as produced by `Display`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (id, rest) = s
            .split_once('(')
            .ok_or_else(|| Error::Parse(format!("expected Id(params), got {s:?}")))?;
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse(format!("missing ')' in {s:?}")))?;
        let params = inner
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| {
                t.trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad parameter {t:?}")))
            })
            .collect::<Result<Vec<usize>>>()?;
        FamilySpec::parse(id, &params)
    }
}

fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

fn build(n: usize, edges: Vec<(usize, usize)>) -> Result<Graph> {
    Graph::from_edges(n, edges)
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(domain("path needs n >= 1"));
    }
    build(n, (1..n).map(|i| (i - 1, i)).collect())
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(domain("cycle needs n >= 3"));
    }
    let mut e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    e.push((n - 1, 0));
    build(n, e)
}

/// `K_{1,n-1}`, a star of order `n`.
pub fn star(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(domain("star needs n >= 2"));
    }
    build(n, (1..n).map(|i| (0, i)).collect())
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(domain("complete graph needs n >= 1"));
    }
    build(
        n,
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect(),
    )
}

/// Path on `d` vertices with `k` pendants at one end and `l` at the other.
pub fn t_kld(k: usize, l: usize, d: usize) -> Result<Graph> {
    if k == 0 || l == 0 || d == 0 {
        return Err(domain(format!(
            "T(k,l,d) needs k,l,d >= 1, got ({k},{l},{d})"
        )));
    }
    let mut e: Vec<_> = (1..d).map(|i| (i - 1, i)).collect();
    e.extend((d..d + k).map(|p| (0, p)));
    e.extend((d + k..d + k + l).map(|p| (d - 1, p)));
    build(k + l + d, e)
}

/// Path on `d` vertices with `n − d` pendants at vertex `⌊(d+1)/2⌋` (1-based).
///
/// Diameter is `d − 1`. `n == d` is accepted and yields the path itself.
pub fn t_broom(n: usize, d: usize) -> Result<Graph> {
    if d < 3 || n < d {
        return Err(domain(format!(
            "broom needs d >= 3 and n >= d, got n={n}, d={d}"
        )));
    }
    let hub = d.div_ceil(2) - 1;
    let mut e: Vec<_> = (1..d).map(|i| (i - 1, i)).collect();
    e.extend((d..n).map(|p| (hub, p)));
    build(n, e)
}

/// The maximizer of algebraic connectivity over graphs of order `n` with `k` pendants.
pub fn p_n_k(n: usize, k: usize) -> Result<Graph> {
    if n < 3 || k == 0 || k >= n {
        return Err(domain(format!(
            "P_n^k needs n >= 3 and 1 <= k <= n-1, got n={n}, k={k}"
        )));
    }
    if (n, k) == (3, 1) {
        return Err(domain("no graph of order 3 has exactly one pendant vertex"));
    }
    if k == n - 2 {
        let mut e = vec![(0, 1), (1, 2)];
        e.extend((3..n).map(|p| (0, p)));
        return build(n, e);
    }
    let core = n - k;
    let mut e: Vec<_> = (0..core)
        .flat_map(|i| (i + 1..core).map(move |j| (i, j)))
        .collect();
    e.extend((core..n).map(|p| (0, p)));
    build(n, e)
}

/// Triangle with a path of `n − 3` vertices hanging from one corner.
pub fn c3_tail(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(domain("C_3 with a tail needs n >= 4"));
    }
    let mut e = vec![(0, 1), (0, 2), (1, 2)];
    e.extend((3..n).map(|i| (i - 1, i)));
    build(n, e)
}

/// Leg orders (vertex counts, excluding the center) of the balanced spider.
///
/// With `n − 1 = kq + r`, `0 <= r < k`: `r` legs of `q + 1` vertices and
/// `k − r` legs of `q` vertices, so the order is `1 + kq + r = n`.
pub fn spider_legs(n: usize, k: usize) -> Result<Vec<usize>> {
    if k < 2 || k >= n {
        return Err(domain(format!(
            "spider needs 2 <= k <= n-1, got n={n}, k={k}"
        )));
    }
    let q = (n - 1) / k;
    let r = (n - 1) % k;
    Ok(std::iter::repeat_n(q + 1, r)
        .chain(std::iter::repeat_n(q, k - r))
        .collect())
}

/// Diameter of the balanced spider: `2q`, `2q + 1` or `2q + 2` as `r` is 0, 1, or larger.
pub fn spider_diameter(n: usize, k: usize) -> Result<usize> {
    spider_legs(n, k)?;
    let q = (n - 1) / k;
    Ok(match (n - 1) % k {
        0 => 2 * q,
        1 => 2 * q + 1,
        _ => 2 * q + 2,
    })
}

/// Tree with `k` legs of nearly equal length around one center.
pub fn t_spider(n: usize, k: usize) -> Result<Graph> {
    let legs = spider_legs(n, k)?;
    let mut e = Vec::with_capacity(n - 1);
    let mut next = 1;
    for len in legs {
        let mut prev = 0;
        for _ in 0..len {
            e.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    build(n, e)
}

/// Two cycles of orders `⌊(n+1)/2⌋` and `⌈(n+1)/2⌉` sharing one vertex.
pub fn two_cycles(n: usize) -> Result<Graph> {
    if n < 5 {
        return Err(domain("two cycles sharing a vertex need n >= 5"));
    }
    let a = n.div_ceil(2);
    let mut e = Vec::new();
    for cycle in [(1..a).collect::<Vec<_>>(), (a..n).collect()] {
        let mut prev = 0;
        for &v in &cycle {
            e.push((prev, v));
            prev = v;
        }
        e.push((prev, 0));
    }
    build(n, e)
}

/// `T(2, 2, n − 4)`.
pub fn t22(n: usize) -> Result<Graph> {
    if n < 5 {
        return Err(domain("T(2,2,n-4) needs n >= 5"));
    }
    t_kld(2, 2, n - 4)
}

/// Two triangles joined by a path; for `n = 6` the triangles are joined by a single edge.
pub fn dumbbell(n: usize) -> Result<Graph> {
    if n < 6 {
        return Err(domain("dumbbell needs n >= 6"));
    }
    t22(n)?.with_edge(n - 4, n - 3)?.with_edge(n - 2, n - 1)
}

/// Star with a path of chords among `n − k − 1` of its leaves; `k` pendants remain.
pub fn star_with_chords(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || n < k + 4 {
        return Err(domain(format!(
            "star with chords needs 1 <= k <= n-4, got n={n}, k={k}"
        )));
    }
    let mut e: Vec<_> = (1..n).map(|i| (0, i)).collect();
    e.extend((1..=n - k - 2).map(|i| (i, i + 1)));
    build(n, e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::isomorphic;

    #[test]
    fn t_kld_shapes() {
        for d in 1..8 {
            assert!(isomorphic(&t_kld(1, 1, d).unwrap(), &path(d + 2).unwrap()).unwrap());
        }
        let t = t_kld(2, 3, 4).unwrap();
        assert_eq!(t.order(), 9);
        assert_eq!(t.pendant_count(), 5);
        assert_eq!(t.diameter().unwrap(), 5);
        assert!(t_kld(0, 1, 1).is_err());
    }

    #[test]
    fn broom_shapes() {
        for n in 5..11 {
            assert!(isomorphic(&t_broom(n, 4).unwrap(), &p_n_k(n, n - 2).unwrap()).unwrap());
        }
        assert!(isomorphic(&t_broom(5, 3).unwrap(), &star(5).unwrap()).unwrap());
        for d in 3..9 {
            for n in d..d + 4 {
                assert_eq!(t_broom(n, d).unwrap().diameter().unwrap(), d - 1);
            }
        }
        assert!(t_broom(5, 2).is_err());
        assert!(t_broom(3, 4).is_err());
    }

    #[test]
    fn p_n_k_shapes() {
        for n in 3..9 {
            assert!(isomorphic(&p_n_k(n, n - 1).unwrap(), &star(n).unwrap()).unwrap());
        }
        let g = p_n_k(6, 3).unwrap();
        assert_eq!(g.pendant_count(), 3);
        assert!(g.induces_clique(&[0, 1, 2]));
        for n in 4..9 {
            assert!(isomorphic(&p_n_k(n, n - 2).unwrap(), &t_kld(n - 3, 1, 2).unwrap()).unwrap());
            for k in 1..n {
                if (n, k) != (3, 1) {
                    assert_eq!(p_n_k(n, k).unwrap().pendant_count(), k, "n={n} k={k}");
                }
            }
        }
        assert!(p_n_k(3, 1).is_err());
        assert!(p_n_k(5, 0).is_err());
        assert!(p_n_k(5, 5).is_err());
    }

    #[test]
    fn c3_tail_shape() {
        for n in 4..10 {
            let g = c3_tail(n).unwrap();
            assert_eq!(g.pendant_count(), 1);
            assert_eq!(g.girth(), Some(3));
            assert!(g.is_unicyclic());
        }
        assert!(c3_tail(3).is_err());
    }

    #[test]
    fn spider_shapes() {
        assert!(isomorphic(&t_spider(7, 2).unwrap(), &path(7).unwrap()).unwrap());
        assert_eq!(spider_legs(7, 3).unwrap(), vec![2, 2, 2]);
        assert_eq!(t_spider(7, 3).unwrap().diameter().unwrap(), 4);
        assert_eq!(spider_legs(9, 3).unwrap(), vec![3, 3, 2]);
        assert_eq!(t_spider(9, 3).unwrap().diameter().unwrap(), 6);
        for n in 4..=30 {
            for k in 2..n {
                let t = t_spider(n, k).unwrap();
                assert_eq!(t.order(), n);
                assert!(t.is_tree());
                assert_eq!(t.pendant_count(), k);
                assert_eq!(t.diameter().unwrap(), spider_diameter(n, k).unwrap());
            }
        }
    }

    #[test]
    fn two_cycles_shape() {
        let g = two_cycles(5).unwrap();
        assert_eq!(g.size(), 6);
        assert_eq!(g.degree(0), 4);
        for n in 5..15 {
            let g = two_cycles(n).unwrap();
            assert_eq!(g.order(), n);
            assert!(g.pendant_vertices().is_empty());
            assert_eq!(g.cut_vertices().unwrap(), vec![0]);
            let sizes: Vec<_> = g
                .components_at(0)
                .unwrap()
                .components
                .iter()
                .map(Vec::len)
                .collect();
            assert_eq!(sizes, vec![(n - 1) / 2, n / 2]);
        }
    }

    #[test]
    fn dumbbell_shape() {
        for n in 6..12 {
            let g = dumbbell(n).unwrap();
            assert_eq!(g.order(), n);
            assert_eq!(g.size(), n + 1);
            assert_eq!(g.pendant_count(), 0);
            assert_eq!(g.girth(), Some(3));
            assert!(g.is_connected());
        }
        let six = dumbbell(6).unwrap();
        assert_eq!(six.cut_vertices().unwrap().len(), 2);
    }

    #[test]
    fn star_with_chords_is_not_p_n_k() {
        for n in 5..9 {
            for k in 1..=n - 4 {
                let g = star_with_chords(n, k).unwrap();
                assert_eq!(g.pendant_count(), k);
                assert!(!isomorphic(&g, &p_n_k(n, k).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn spec_parsing() {
        let s: FamilySpec = "T_spider(9,3)".parse().unwrap();
        assert_eq!(s, FamilySpec::Spider { n: 9, k: 3 });
        assert_eq!(s.to_string(), "T_spider(9,3)");
        assert_eq!(
            FamilySpec::parse("c3_tail", &[5]).unwrap(),
            FamilySpec::C3Tail(5)
        );
        assert!(FamilySpec::parse("Path", &[1, 2]).is_err());
        assert!(FamilySpec::parse("Nope", &[1]).is_err());
        for spec in [
            FamilySpec::Tkld { k: 2, l: 1, d: 3 },
            FamilySpec::Dumbbell(7),
            FamilySpec::Pnk { n: 6, k: 2 },
        ] {
            assert_eq!(spec.build().unwrap().order(), spec.order());
        }
    }
}
