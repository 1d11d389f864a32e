use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::enumerate::{
    enumerate_connected_keyed, enumerate_trees_keyed, enumerate_unicyclic_keyed, parallel_map,
};
use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::Graph;
use crate::spectral::mu;

/// Two algebraic connectivities within this distance are tied.
pub const DEFAULT_TIE_TOL: f64 = 1e-9;

/// The graph classes that enumeration can certify.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GraphClass {
    /// Connected graphs of order `n` with exactly `k` pendant vertices.
    PendantCount {
        n: usize,
        k: usize,
    },
    /// Trees of order `n` with exactly `k` pendant vertices.
    TreesWithPendants {
        n: usize,
        k: usize,
    },
    /// Connected graphs of order `n` with no pendant vertex.
    PendantFree {
        n: usize,
    },
    /// Connected graphs of order `n` with exactly one cycle.
    Unicyclic {
        n: usize,
    },
    /// Trees of order `n` with the given diameter.
    TreesWithDiameter {
        n: usize,
        diameter: usize,
    },
    AllConnected {
        n: usize,
    },
}

impl GraphClass {
    pub fn order(&self) -> usize {
        match *self {
            GraphClass::PendantCount { n, .. }
            | GraphClass::TreesWithPendants { n, .. }
            | GraphClass::PendantFree { n }
            | GraphClass::Unicyclic { n }
            | GraphClass::TreesWithDiameter { n, .. }
            | GraphClass::AllConnected { n } => n,
        }
    }

    /// Membership decided from structure alone.
    pub fn contains(&self, g: &Graph) -> bool {
        if g.order() != self.order() || !g.is_connected() {
            return false;
        }
        match *self {
            GraphClass::PendantCount { k, .. } => g.pendant_count() == k,
            GraphClass::TreesWithPendants { k, .. } => g.is_tree() && g.pendant_count() == k,
            GraphClass::PendantFree { .. } => g.pendant_count() == 0,
            GraphClass::Unicyclic { .. } => g.is_unicyclic(),
            GraphClass::TreesWithDiameter { diameter, .. } => {
                g.is_tree() && g.diameter().ok() == Some(diameter)
            }
            GraphClass::AllConnected { .. } => true,
        }
    }

    pub fn id(&self) -> &'static str {
        match self {
            GraphClass::PendantCount { .. } => "H",
            GraphClass::TreesWithPendants { .. } => "T",
            GraphClass::PendantFree { .. } => "F",
            GraphClass::Unicyclic { .. } => "U",
            GraphClass::TreesWithDiameter { .. } => "TreesDiam",
            GraphClass::AllConnected { .. } => "Connected",
        }
    }

    /// Builds a class from an id and its parameters (`k` or diameter).
    pub fn parse(id: &str, n: usize, param: Option<usize>) -> Result<Self> {
        let need = |what: &str| {
            param.ok_or_else(|| Error::Domain(format!("class {id} needs a {what} parameter")))
        };
        let key = id.to_ascii_lowercase().replace(['-', '_'], "");
        Ok(match key.as_str() {
            "h" | "hnk" | "pendantcount" => GraphClass::PendantCount { n, k: need("k")? },
            "t" | "tnk" | "trees" => GraphClass::TreesWithPendants { n, k: need("k")? },
            "f" | "fn" | "pendantfree" => GraphClass::PendantFree { n },
            "u" | "un" | "unicyclic" => GraphClass::Unicyclic { n },
            "treesdiam" | "treesdiameter" => GraphClass::TreesWithDiameter {
                n,
                diameter: need("diameter")?,
            },
            "connected" | "allconnected" => GraphClass::AllConnected { n },
            _ => return Err(Error::Domain(format!("unknown class {id:?}"))),
        })
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphClass::PendantCount { n, k } => write!(f, "H(n={n},k={k})"),
            GraphClass::TreesWithPendants { n, k } => write!(f, "T(n={n},k={k})"),
            GraphClass::PendantFree { n } => write!(f, "F(n={n})"),
            GraphClass::Unicyclic { n } => write!(f, "U(n={n})"),
            GraphClass::TreesWithDiameter { n, diameter } => {
                write!(f, "TreesDiam(n={n},diameter={diameter})")
            }
            GraphClass::AllConnected { n } => write!(f, "Connected(n={n})"),
        }
    }
}

/// Members of the class with their canonical forms, sorted by canonical form.
pub fn class_members_keyed(c: &GraphClass, workers: usize) -> Result<Vec<(Vec<u8>, Graph)>> {
    let n = c.order();
    let source = match c {
        GraphClass::TreesWithPendants { .. } | GraphClass::TreesWithDiameter { .. } => {
            if n == 0 {
                return Ok(Vec::new());
            }
            enumerate_trees_keyed(n, workers)?
        }
        GraphClass::Unicyclic { .. } => enumerate_unicyclic_keyed(n, workers)?,
        _ => {
            if n == 0 {
                return Ok(Vec::new());
            }
            enumerate_connected_keyed(n, workers)?
        }
    };
    Ok(source.into_iter().filter(|(_, g)| c.contains(g)).collect())
}

/// One representative per isomorphism class of members; empty classes are not an error.
pub fn class_members(c: &GraphClass) -> Result<Vec<Graph>> {
    Ok(class_members_keyed(c, 1)?
        .into_iter()
        .map(|(_, g)| g)
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    Min,
    Max,
}

impl FromStr for Objective {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "min" => Ok(Objective::Min),
            "max" => Ok(Objective::Max),
            _ => Err(Error::Parse(format!(
                "objective must be min or max, got {s:?}"
            ))),
        }
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Objective::Min => "min",
            Objective::Max => "max",
        })
    }
}

/// A member of a class with its algebraic connectivity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Scored {
    pub canonical: String,
    #[serde(skip)]
    pub graph: Graph,
    pub mu: f64,
}

/// Extremizers of the algebraic connectivity over a class.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremalReport {
    pub class: GraphClass,
    pub objective: Objective,
    /// Canonical forms (graph6) of all members within the tie tolerance of the optimum.
    pub extremizers: Vec<String>,
    pub optimum: f64,
    pub claimed_family: Option<FamilySpec>,
    pub claimed_value: Option<f64>,
    /// Whether the claimed family's canonical form is among the extremizers.
    pub claimed_attains: Option<bool>,
    pub unique: bool,
    pub class_size: usize,
    pub tie_tol: f64,
    /// Every member, sorted by canonical form.
    pub members: Vec<Scored>,
}

impl ExtremalReport {
    /// Whether the extremizer set is exactly `{family}` up to isomorphism.
    pub fn uniquely_attained_by(&self, family: &Graph) -> Result<bool> {
        let form = canonical_string(family)?;
        Ok(self.extremizers == vec![form])
    }

    pub fn attained_by(&self, family: &Graph) -> Result<bool> {
        let form = canonical_string(family)?;
        Ok(self.extremizers.contains(&form))
    }

    pub fn extremizer_graphs(&self) -> Vec<&Graph> {
        self.members
            .iter()
            .filter(|m| self.extremizers.contains(&m.canonical))
            .map(|m| &m.graph)
            .collect()
    }
}

pub fn canonical_string(g: &Graph) -> Result<String> {
    Ok(String::from_utf8(canonical_form(g)?).expect("graph6 is ASCII"))
}

/// The family expected to be extremal for `(class, objective)`, when one is known.
pub fn claimed_family(c: &GraphClass, objective: Objective) -> Option<FamilySpec> {
    use Objective::*;
    match (*c, objective) {
        (GraphClass::PendantCount { n, k }, Max)
            if n >= 3 && k >= 1 && k < n && (n, k) != (3, 1) =>
        {
            Some(FamilySpec::Pnk { n, k })
        }
        (GraphClass::PendantCount { n, k: 1 }, Min) if n >= 4 => Some(FamilySpec::C3Tail(n)),
        (GraphClass::PendantCount { n, k }, Min)
        | (GraphClass::TreesWithPendants { n, k }, Min)
            if k >= 2 && k < n =>
        {
            Some(FamilySpec::Tkld {
                k: k.div_ceil(2),
                l: k / 2,
                d: n - k,
            })
        }
        (GraphClass::TreesWithPendants { n, k }, Max) if k >= 2 && k < n => {
            Some(FamilySpec::Spider { n, k })
        }
        (GraphClass::PendantFree { n }, Min) if n >= 6 => Some(FamilySpec::Dumbbell(n)),
        (GraphClass::PendantFree { n: 5 }, Min) => Some(FamilySpec::TwoCycles(5)),
        (GraphClass::PendantFree { n }, Min) if n >= 3 => Some(FamilySpec::Cycle(n)),
        (GraphClass::PendantFree { n }, Max) if n >= 3 => Some(FamilySpec::Complete(n)),
        (GraphClass::Unicyclic { n }, Max) if (3..=5).contains(&n) => Some(FamilySpec::Cycle(n)),
        (GraphClass::Unicyclic { n }, Max) if n >= 6 => Some(FamilySpec::Pnk { n, k: n - 3 }),
        (GraphClass::Unicyclic { n }, Min) if n >= 4 => Some(FamilySpec::C3Tail(n)),
        (GraphClass::Unicyclic { n: 3 }, Min) => Some(FamilySpec::Cycle(3)),
        (GraphClass::TreesWithDiameter { n, diameter }, Min) if diameter >= 2 && diameter < n => {
            let d = diameter - 1;
            Some(FamilySpec::Tkld {
                k: (n - d).div_ceil(2),
                l: (n - d) / 2,
                d,
            })
        }
        (GraphClass::TreesWithDiameter { n, diameter }, Max) if diameter >= 2 && diameter < n => {
            Some(FamilySpec::Broom { n, d: diameter + 1 })
        }
        (GraphClass::AllConnected { n }, Max) if n >= 2 => Some(FamilySpec::Complete(n)),
        (GraphClass::AllConnected { n }, Min) if n >= 2 => Some(FamilySpec::Path(n)),
        _ => None,
    }
}

/// Settings for [`extremal_mu`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremalConfig {
    pub workers: usize,
    pub tie_tol: f64,
}

impl Default for ExtremalConfig {
    fn default() -> Self {
        ExtremalConfig {
            workers: 1,
            tie_tol: DEFAULT_TIE_TOL,
        }
    }
}

/// Scores already-enumerated members and collects the extremizers.
pub fn extremal_from_members(
    c: &GraphClass,
    objective: Objective,
    members: &[(Vec<u8>, Graph)],
    config: &ExtremalConfig,
) -> Result<ExtremalReport> {
    if members.is_empty() {
        return Err(Error::Domain(format!("class {c} is empty")));
    }
    let scored = parallel_map(members, config.workers, |(form, g)| -> Result<Scored> {
        Ok(Scored {
            canonical: String::from_utf8(form.clone()).expect("graph6 is ASCII"),
            graph: g.clone(),
            mu: mu(g)?,
        })
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let optimum = match objective {
        Objective::Min => scored.iter().map(|s| s.mu).fold(f64::INFINITY, f64::min),
        Objective::Max => scored
            .iter()
            .map(|s| s.mu)
            .fold(f64::NEG_INFINITY, f64::max),
    };
    let extremizers: Vec<String> = scored
        .iter()
        .filter(|s| (s.mu - optimum).abs() <= config.tie_tol)
        .map(|s| s.canonical.clone())
        .collect();
    let claimed = claimed_family(c, objective);
    let (claimed_value, claimed_attains) = match claimed {
        Some(spec) => {
            let g = spec.build()?;
            let form = canonical_string(&g)?;
            (Some(mu(&g)?), Some(extremizers.contains(&form)))
        }
        None => (None, None),
    };
    Ok(ExtremalReport {
        class: *c,
        objective,
        unique: extremizers.len() == 1,
        extremizers,
        optimum,
        claimed_family: claimed,
        claimed_value,
        claimed_attains,
        class_size: scored.len(),
        tie_tol: config.tie_tol,
        members: scored,
    })
}

/// Computes the algebraic connectivity of every member and the extremizers for `objective`.
pub fn extremal_mu(
    c: &GraphClass,
    objective: Objective,
    config: &ExtremalConfig,
) -> Result<ExtremalReport> {
    let members = class_members_keyed(c, config.workers)?;
    extremal_from_members(c, objective, &members, config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn h41_is_c3_with_pendant() {
        let members = class_members(&GraphClass::PendantCount { n: 4, k: 1 }).unwrap();
        assert_eq!(members.len(), 1);
        assert!(crate::canon::isomorphic(&members[0], &families::c3_tail(4).unwrap()).unwrap());
        assert!(class_members(&GraphClass::PendantCount { n: 3, k: 1 })
            .unwrap()
            .is_empty());
    }

    #[test]
    fn star_is_the_only_tree_with_n_minus_one_pendants() {
        for n in 3..9 {
            let m = class_members(&GraphClass::TreesWithPendants { n, k: n - 1 }).unwrap();
            assert_eq!(m.len(), 1);
            assert!(crate::canon::isomorphic(&m[0], &families::star(n).unwrap()).unwrap());
        }
    }

    #[test]
    fn u6_max_tie() {
        let r = extremal_mu(
            &GraphClass::Unicyclic { n: 6 },
            Objective::Max,
            &ExtremalConfig::default(),
        )
        .unwrap();
        assert!(!r.unique);
        assert_eq!(r.extremizers.len(), 2);
        assert!(r.attained_by(&families::cycle(6).unwrap()).unwrap());
        assert!(r.attained_by(&families::p_n_k(6, 3).unwrap()).unwrap());
        assert!((r.optimum - 1.0).abs() < 1e-9);
    }

    #[test]
    fn empty_class_is_an_error_for_extremal() {
        let c = GraphClass::PendantCount { n: 3, k: 1 };
        assert!(extremal_mu(&c, Objective::Max, &ExtremalConfig::default()).is_err());
    }

    #[test]
    fn class_parsing() {
        assert_eq!(
            GraphClass::parse("H", 5, Some(2)).unwrap(),
            GraphClass::PendantCount { n: 5, k: 2 }
        );
        assert!(GraphClass::parse("H", 5, None).is_err());
        assert_eq!(
            GraphClass::parse("U", 5, None).unwrap(),
            GraphClass::Unicyclic { n: 5 }
        );
        assert!(GraphClass::parse("nope", 5, None).is_err());
        assert_eq!("MAX".parse::<Objective>().unwrap(), Objective::Max);
    }

    #[test]
    fn deterministic_across_workers() {
        let c = GraphClass::PendantCount { n: 6, k: 2 };
        let a = extremal_mu(
            &c,
            Objective::Min,
            &ExtremalConfig {
                workers: 1,
                tie_tol: 1e-9,
            },
        )
        .unwrap();
        let b = extremal_mu(
            &c,
            Objective::Min,
            &ExtremalConfig {
                workers: 3,
                tie_tol: 1e-9,
            },
        )
        .unwrap();
        assert_eq!(a, b);
    }
}
