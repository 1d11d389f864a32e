//! Registered checkers that certify each extremal statement by exhaustive
//! enumeration within the caps, or by seeded randomized property checks.
//!
//! A checker runs one case per order `n` (and per `k` or diameter where the
//! statement is parametrized). Orders where a statement says nothing are
//! recorded as vacuous rather than passed.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::classes::{
    canonical_string, extremal_from_members, ExtremalConfig, ExtremalReport, GraphClass, Objective,
    DEFAULT_TIE_TOL,
};
use super::enumerate::{
    enumerate_connected_keyed, enumerate_trees_keyed, enumerate_unicyclic_keyed,
    MAX_CONNECTED_ORDER, MAX_TREE_ORDER, MAX_UNICYCLIC_ORDER,
};
use super::random::{non_edges, random_connected, random_tree};
use crate::canon::isomorphic;
use crate::error::{Error, Result};
use crate::families::{self, FamilySpec};
use crate::graph::Graph;
use crate::perron::{characteristic_set_of, check_balance, perron_components_at, solve_balance};
use crate::spectral::{diameter_bound, mu};

/// Largest order for the purely numeric checkers.
pub const MAX_NUMERIC_ORDER: usize = 64;
/// Largest base order for the randomized property checkers.
pub const MAX_PROPERTY_ORDER: usize = 12;
/// Largest base tree order for the grafting checker.
pub const MAX_GRAFT_BASE_ORDER: usize = 10;
/// Absolute tolerance for the paper-quoted four-digit values.
pub const QUOTED_VALUE_TOL: f64 = 5e-4;
/// Slack allowed on one-sided inequalities.
pub const INEQUALITY_SLACK: f64 = 1e-10;

/// Statements with a registered checker. The wire ids (`PROP_2_1`, ...) are
/// the identifiers accepted on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TheoremId {
    /// Minimum over trees of fixed diameter is the double broom `T(⌈(n−d)/2⌉, ⌊(n−d)/2⌋, d)`.
    DiameterTreeMin,
    /// Maximum over trees of fixed diameter is the broom with a central hub.
    DiameterTreeMax,
    /// Grafting an edge from the shorter to the longer attached path never increases μ.
    Grafting,
    /// Pendants added at a non-cut vertex may be joined arbitrarily without changing μ.
    PendantCliqueEquality,
    /// Maximum over connected graphs with `k` pendants is one, attained by `P_n^k`.
    PendantClassMax,
    /// Uniqueness of that maximum: unique for `k = n−1, n−3`, not for `k <= n−4`.
    PendantClassMaxUniqueness,
    /// `P_n^{n−2}` uniquely maximizes μ over graphs with `n − 2` pendants.
    NearStarMax,
    /// `C_3` with a tail uniquely minimizes μ over graphs with one pendant.
    OnePendantMin,
    /// The double broom uniquely minimizes μ over graphs with `k >= 2` pendants.
    PendantClassMin,
    /// The balanced spider uniquely maximizes μ over trees with `k` pendants.
    SpiderMax,
    /// Two cycles sharing a vertex have smaller μ than the cycle.
    TwoCyclesBelowCycle,
    /// The triangle dumbbell uniquely minimizes μ over pendant-free graphs.
    PendantFreeMin,
    /// Maximum over unicyclic graphs.
    UnicyclicMax,
    /// `C_3` with a tail uniquely minimizes μ over unicyclic graphs.
    UnicyclicMin,
    /// Adding a pendant vertex never increases μ.
    PendantMonotone,
    /// Adding an edge never decreases μ.
    EdgeMonotone,
    /// A graph with a cut vertex has μ <= 1.
    CutVertexBound,
    /// A component that forms a clique with the base vertex has Perron value one.
    CliqueComponentPerron,
    /// At a non-cut vertex the single component has Perron value at least one.
    NonCutPerron,
}

impl TheoremId {
    pub const ALL: [TheoremId; 19] = [
        TheoremId::PendantMonotone,
        TheoremId::EdgeMonotone,
        TheoremId::DiameterTreeMin,
        TheoremId::DiameterTreeMax,
        TheoremId::Grafting,
        TheoremId::CutVertexBound,
        TheoremId::CliqueComponentPerron,
        TheoremId::NonCutPerron,
        TheoremId::PendantCliqueEquality,
        TheoremId::PendantClassMax,
        TheoremId::PendantClassMaxUniqueness,
        TheoremId::NearStarMax,
        TheoremId::OnePendantMin,
        TheoremId::PendantClassMin,
        TheoremId::SpiderMax,
        TheoremId::TwoCyclesBelowCycle,
        TheoremId::PendantFreeMin,
        TheoremId::UnicyclicMax,
        TheoremId::UnicyclicMin,
    ];

    pub fn code(&self) -> &'static str {
        match self {
            TheoremId::PendantMonotone => "LEMMA_1_1",
            TheoremId::EdgeMonotone => "LEMMA_1_2",
            TheoremId::DiameterTreeMin => "PROP_2_1",
            TheoremId::DiameterTreeMax => "PROP_2_2",
            TheoremId::Grafting => "PROP_2_3",
            TheoremId::CutVertexBound => "COR_3_2",
            TheoremId::CliqueComponentPerron => "LEMMA_3_1",
            TheoremId::NonCutPerron => "LEMMA_3_4",
            TheoremId::PendantCliqueEquality => "THM_3_5",
            TheoremId::PendantClassMax => "THM_4_2",
            TheoremId::PendantClassMaxUniqueness => "REMARK_4_3",
            TheoremId::NearStarMax => "THM_4_3",
            TheoremId::OnePendantMin => "THM_4_4",
            TheoremId::PendantClassMin => "THM_4_5",
            TheoremId::SpiderMax => "THM_4_7",
            TheoremId::TwoCyclesBelowCycle => "LEMMA_5_1",
            TheoremId::PendantFreeMin => "THM_5_2",
            TheoremId::UnicyclicMax => "THM_6_1",
            TheoremId::UnicyclicMin => "THM_6_2",
        }
    }

    /// Largest `n` the checker accepts.
    pub fn cap(&self) -> usize {
        match self {
            TheoremId::DiameterTreeMin | TheoremId::DiameterTreeMax | TheoremId::SpiderMax => {
                MAX_TREE_ORDER
            }
            TheoremId::PendantClassMax
            | TheoremId::PendantClassMaxUniqueness
            | TheoremId::NearStarMax
            | TheoremId::OnePendantMin
            | TheoremId::PendantClassMin
            | TheoremId::PendantFreeMin => MAX_CONNECTED_ORDER,
            TheoremId::UnicyclicMax | TheoremId::UnicyclicMin => MAX_UNICYCLIC_ORDER,
            TheoremId::TwoCyclesBelowCycle => MAX_NUMERIC_ORDER,
            TheoremId::Grafting => MAX_GRAFT_BASE_ORDER,
            TheoremId::PendantMonotone
            | TheoremId::EdgeMonotone
            | TheoremId::CutVertexBound
            | TheoremId::CliqueComponentPerron
            | TheoremId::NonCutPerron
            | TheoremId::PendantCliqueEquality => MAX_PROPERTY_ORDER,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for TheoremId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let want = s.trim().to_ascii_uppercase().replace(['-', '.'], "_");
        TheoremId::ALL
            .iter()
            .copied()
            .find(|t| t.code() == want)
            .ok_or_else(|| Error::Domain(format!("unknown theorem id {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Vacuous,
}

/// Outcome of one `(n, parameter)` case.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CaseResult {
    pub n: usize,
    /// `k`, diameter, or attached-path count, depending on the statement.
    pub param: Option<usize>,
    pub verdict: Verdict,
    pub detail: String,
    /// Edge list of a graph violating the statement.
    pub counterexample: Option<Graph>,
    pub class_size: Option<usize>,
    pub optimum: Option<f64>,
    pub extremizers: Vec<String>,
    /// Number of instances examined (randomized checkers).
    pub checked: usize,
}

impl CaseResult {
    fn new(n: usize, param: Option<usize>) -> Self {
        CaseResult {
            n,
            param,
            verdict: Verdict::Pass,
            detail: String::new(),
            counterexample: None,
            class_size: None,
            optimum: None,
            extremizers: Vec::new(),
            checked: 0,
        }
    }

    fn vacuous(n: usize, param: Option<usize>, why: &str) -> Self {
        let mut c = Self::new(n, param);
        c.verdict = Verdict::Vacuous;
        c.detail = why.to_string();
        c
    }

    /// Records a failure unless `ok`; only the first failure is kept.
    fn require(&mut self, ok: bool, msg: impl FnOnce() -> String, witness: Option<&Graph>) {
        if ok || self.verdict == Verdict::Fail {
            return;
        }
        self.verdict = Verdict::Fail;
        self.detail = msg();
        self.counterexample = witness.cloned();
    }

    fn with_report(mut self, r: &ExtremalReport) -> Self {
        self.class_size = Some(r.class_size);
        self.optimum = Some(r.optimum);
        self.extremizers = r.extremizers.clone();
        self
    }

    fn note(&mut self, text: impl AsRef<str>) {
        if self.verdict != Verdict::Fail {
            if !self.detail.is_empty() {
                self.detail.push_str("; ");
            }
            self.detail.push_str(text.as_ref());
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub theorem: &'static str,
    pub n_min: usize,
    pub n_max: usize,
    pub k: Option<usize>,
    pub verdict: Verdict,
    pub cases: Vec<CaseResult>,
}

impl VerificationReport {
    pub fn first_failure(&self) -> Option<&CaseResult> {
        self.cases.iter().find(|c| c.verdict == Verdict::Fail)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    /// Restrict parametrized statements to this `k` (or diameter).
    pub k: Option<usize>,
    pub workers: usize,
    pub tie_tol: f64,
    pub seed: u64,
    /// Random instances per order for the property checkers.
    pub cases_per_order: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            k: None,
            workers: 1,
            tie_tol: DEFAULT_TIE_TOL,
            seed: 0x5eed_f1ed,
            cases_per_order: 200,
        }
    }
}

/// Runs the checker for `id` over `n_min..=n_max`.
pub fn verify_theorem(
    id: TheoremId,
    n_min: usize,
    n_max: usize,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    if n_min > n_max {
        return Err(Error::Domain(format!("empty range {n_min}..={n_max}")));
    }
    if n_max > id.cap() {
        return Err(Error::CapExceeded {
            what: id.code(),
            order: n_max,
            cap: id.cap(),
        });
    }
    let checker = Checker { opts: *opts };
    let mut cases = Vec::new();
    for n in n_min..=n_max {
        let mut batch = match id {
            TheoremId::DiameterTreeMin => checker.diameter_trees(n, Objective::Min)?,
            TheoremId::DiameterTreeMax => checker.diameter_trees(n, Objective::Max)?,
            TheoremId::Grafting => vec![checker.grafting(n)?],
            TheoremId::PendantCliqueEquality => vec![checker.pendant_clique_equality(n)?],
            TheoremId::PendantClassMax | TheoremId::PendantClassMaxUniqueness => {
                checker.pendant_class_max(n)?
            }
            TheoremId::NearStarMax => vec![checker.near_star_max(n)?],
            TheoremId::OnePendantMin => vec![checker.one_pendant_min(n)?],
            TheoremId::PendantClassMin => checker.pendant_class_min(n)?,
            TheoremId::SpiderMax => checker.spider_max(n)?,
            TheoremId::TwoCyclesBelowCycle => vec![checker.two_cycles(n)?],
            TheoremId::PendantFreeMin => vec![checker.pendant_free_min(n)?],
            TheoremId::UnicyclicMax => vec![checker.unicyclic_max(n)?],
            TheoremId::UnicyclicMin => vec![checker.unicyclic_min(n)?],
            TheoremId::PendantMonotone => vec![checker.pendant_monotone(n)?],
            TheoremId::EdgeMonotone => vec![checker.edge_monotone(n)?],
            TheoremId::CutVertexBound => vec![checker.cut_vertex_bound(n)?],
            TheoremId::CliqueComponentPerron => vec![checker.clique_component(n)?],
            TheoremId::NonCutPerron => vec![checker.non_cut_perron(n)?],
        };
        cases.append(&mut batch);
    }
    let verdict = if cases.iter().any(|c| c.verdict == Verdict::Fail) {
        Verdict::Fail
    } else if cases.iter().any(|c| c.verdict == Verdict::Pass) {
        Verdict::Pass
    } else {
        Verdict::Vacuous
    };
    Ok(VerificationReport {
        theorem: id.code(),
        n_min,
        n_max,
        k: opts.k,
        verdict,
        cases,
    })
}

fn cos_form(num: f64, den: f64) -> f64 {
    2.0 * (1.0 - (num * PI / den).cos())
}

struct Checker {
    opts: VerifyOptions,
}

impl Checker {
    fn config(&self) -> ExtremalConfig {
        ExtremalConfig {
            workers: self.opts.workers,
            tie_tol: self.opts.tie_tol,
        }
    }

    fn params<I: IntoIterator<Item = usize>>(&self, all: I) -> Vec<usize> {
        all.into_iter()
            .filter(|&k| self.opts.k.is_none_or(|want| want == k))
            .collect()
    }

    fn rng(&self, n: usize) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.opts.seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }

    fn report(
        &self,
        class: GraphClass,
        objective: Objective,
        members: &[(Vec<u8>, Graph)],
    ) -> Result<ExtremalReport> {
        let selected: Vec<(Vec<u8>, Graph)> = members
            .iter()
            .filter(|(_, g)| class.contains(g))
            .cloned()
            .collect();
        extremal_from_members(&class, objective, &selected, &self.config())
    }

    /// Case asserting that `family` is the unique extremizer in `report`.
    fn unique_case(
        &self,
        n: usize,
        param: Option<usize>,
        report: &ExtremalReport,
        spec: FamilySpec,
    ) -> Result<CaseResult> {
        let family = spec.build()?;
        let mut case = CaseResult::new(n, param).with_report(report);
        let unique = report.uniquely_attained_by(&family)?;
        let witness = report
            .extremizer_graphs()
            .into_iter()
            .find(|g| !isomorphic(g, &family).unwrap_or(false))
            .cloned();
        case.require(
            unique,
            || {
                format!(
                    "{} {} over {}: expected unique extremizer {spec}, got {} extremizer(s) at {:.12}",
                    report.objective,
                    "mu",
                    report.class,
                    report.extremizers.len(),
                    report.optimum
                )
            },
            witness.as_ref().or(Some(&family)),
        );
        case.note(format!(
            "{spec} unique {} = {:.12}",
            report.objective, report.optimum
        ));
        Ok(case)
    }

    fn diameter_trees(&self, n: usize, objective: Objective) -> Result<Vec<CaseResult>> {
        if n < 3 {
            return Ok(vec![CaseResult::vacuous(
                n,
                None,
                "no tree of order < 3 has diameter >= 2",
            )]);
        }
        let trees = enumerate_trees_keyed(n, self.opts.workers)?;
        let mut out = Vec::new();
        for diameter in self.params(2..n) {
            let class = GraphClass::TreesWithDiameter { n, diameter };
            let report = self.report(class, objective, &trees)?;
            let d = diameter - 1;
            let spec = match objective {
                Objective::Min => FamilySpec::Tkld {
                    k: (n - d).div_ceil(2),
                    l: (n - d) / 2,
                    d,
                },
                Objective::Max => FamilySpec::Broom { n, d: d + 2 },
            };
            let mut case = self.unique_case(n, Some(diameter), &report, spec)?;
            let g = spec.build()?;
            case.require(
                g.diameter()? == diameter,
                || {
                    format!(
                        "{spec} has diameter {:?}, expected {diameter}",
                        g.diameter()
                    )
                },
                Some(&g),
            );
            out.push(case);
        }
        Ok(out)
    }

    fn grafting(&self, n: usize) -> Result<CaseResult> {
        if n == 0 {
            return Ok(CaseResult::vacuous(n, None, "empty base tree"));
        }
        let mut rng = self.rng(n);
        let mut case = CaseResult::new(n, None);
        for _ in 0..self.opts.cases_per_order {
            let base = random_tree(&mut rng, n);
            let v = rng.gen_range(0..n);
            let k = rng.gen_range(1..=3);
            let l = rng.gen_range(k..=3);
            let gkl = base.attach_paths(v, k, l)?;
            let grafted = gkl.graft()?;
            let expected = if k >= 2 {
                base.attach_paths(v, k - 1, l + 1)?.graph
            } else {
                base.attach_path(v, l + 1)?
            };
            case.require(
                isomorphic(&grafted.graph, &expected)?,
                || {
                    format!(
                        "graft of G_{{{k},{l}}} at {v} is not G_{{{},{}}}",
                        k - 1,
                        l + 1
                    )
                },
                Some(&gkl.graph),
            );
            case.require(
                grafted.graph.size() == gkl.graph.size()
                    && grafted.graph.order() == gkl.graph.order(),
                || "grafting changed order or size".into(),
                Some(&gkl.graph),
            );
            let (before, after) = (mu(&gkl.graph)?, mu(&grafted.graph)?);
            case.require(
                after <= before + INEQUALITY_SLACK,
                || {
                    format!(
                        "mu(G_{{{},{}}}) = {after} > mu(G_{{{k},{l}}}) = {before}",
                        k - 1,
                        l + 1
                    )
                },
                Some(&gkl.graph),
            );
            case.checked += 1;
        }
        Ok(case)
    }

    fn pendant_clique_equality(&self, n: usize) -> Result<CaseResult> {
        if n < 2 {
            return Ok(CaseResult::vacuous(
                n,
                None,
                "base graph needs two vertices",
            ));
        }
        let mut rng = self.rng(n);
        let mut case = CaseResult::new(n, None);
        let mut i = 0;
        while case.checked < self.opts.cases_per_order {
            i += 1;
            let g = random_connected(&mut rng, n, [0.2, 0.4, 0.6][i % 3]);
            let non_cut: Vec<usize> = (0..n).filter(|&v| !g.is_cut_vertex(v).unwrap()).collect();
            let v = *non_cut.choose(&mut rng).unwrap();
            let t = rng.gen_range(1..=4usize);
            let mut tilde = g.clone();
            for _ in 0..t {
                tilde = tilde.with_pendant(v)?;
            }
            let pendants: Vec<usize> = (n..n + t).collect();
            let pairs: Vec<(usize, usize)> = pendants
                .iter()
                .flat_map(|&a| {
                    pendants
                        .iter()
                        .filter(move |&&b| b > a)
                        .map(move |&b| (a, b))
                })
                .collect();
            let base_mu = mu(&tilde)?;
            for k in 0..=pairs.len() {
                let mut chosen = pairs.clone();
                chosen.shuffle(&mut rng);
                let mut hat = tilde.clone();
                for &(a, b) in &chosen[..k] {
                    hat = hat.with_edge(a, b)?;
                }
                let m = mu(&hat)?;
                case.require(
                    (m - base_mu).abs() <= 1e-9,
                    || format!("mu changed from {base_mu} to {m} after joining {k} pendant pairs"),
                    Some(&hat),
                );
            }
            // The balance parameter at v for the pendant graph also balances the
            // graph with all pendants joined, with the same value.
            let theta = solve_balance(&tilde, v)?.x;
            let mut star = tilde.clone();
            for &(a, b) in &pairs {
                star = star.with_edge(a, b)?;
            }
            let alpha = check_balance(&star, v, theta)?;
            case.require(
                alpha.is_some_and(|a| (a - base_mu).abs() <= 1e-8),
                || format!("balance replay gave {alpha:?}, expected {base_mu}"),
                Some(&star),
            );
            case.checked += 1;
        }
        Ok(case)
    }

    fn pendant_class_max(&self, n: usize) -> Result<Vec<CaseResult>> {
        if n < 3 {
            return Ok(vec![CaseResult::vacuous(
                n,
                None,
                "pendant classes need n >= 3",
            )]);
        }
        let ks = self.params((1..n).filter(|&k| k != n - 2 || (n, k) == (3, 1)));
        if ks.is_empty() {
            return Ok(vec![CaseResult::vacuous(n, self.opts.k, "no admissible k")]);
        }
        let members = enumerate_connected_keyed(n, self.opts.workers)?;
        let mut out = Vec::new();
        for k in ks {
            if (n, k) == (3, 1) {
                out.push(CaseResult::vacuous(
                    n,
                    Some(k),
                    "no graph of order 3 has one pendant vertex",
                ));
                continue;
            }
            let report =
                self.report(GraphClass::PendantCount { n, k }, Objective::Max, &members)?;
            let pnk = families::p_n_k(n, k)?;
            let mut case = CaseResult::new(n, Some(k)).with_report(&report);
            case.require(
                (report.optimum - 1.0).abs() <= self.opts.tie_tol,
                || format!("maximum is {} not 1", report.optimum),
                report.extremizer_graphs().first().copied(),
            );
            case.require(
                report.attained_by(&pnk)?,
                || "P_n^k does not attain the maximum".into(),
                Some(&pnk),
            );
            if k == n - 1 || k == n - 3 {
                case.require(
                    report.unique,
                    || "maximum is not unique".into(),
                    report.extremizer_graphs().get(1).copied(),
                );
                case.note("unique maximizer P_n^k");
            } else {
                let example = families::star_with_chords(n, k)?;
                case.require(
                    !report.unique && report.attained_by(&example)? && !isomorphic(&example, &pnk)?,
                    || "expected a second maximizer (star with chords)".into(),
                    Some(&example),
                );
                case.note(format!(
                    "{} maximizers incl. star with chords",
                    report.extremizers.len()
                ));
            }
            out.push(case);
        }
        Ok(out)
    }

    fn near_star_max(&self, n: usize) -> Result<CaseResult> {
        if n < 4 {
            return Ok(CaseResult::vacuous(n, None, "needs n >= 4"));
        }
        let members = enumerate_connected_keyed(n, self.opts.workers)?;
        let report = self.report(
            GraphClass::PendantCount { n, k: n - 2 },
            Objective::Max,
            &members,
        )?;
        let mut case =
            self.unique_case(n, Some(n - 2), &report, FamilySpec::Pnk { n, k: n - 2 })?;
        let broom = families::t_broom(n, 4)?;
        case.require(
            isomorphic(&broom, &families::p_n_k(n, n - 2)?)?,
            || "T^4_{n-4} is not isomorphic to P_n^{n-2}".into(),
            Some(&broom),
        );
        case.require(
            report
                .members
                .iter()
                .all(|m| m.graph.is_tree() && m.graph.diameter().ok() == Some(3)),
            || "class contains a graph that is not a tree of diameter 3".into(),
            None,
        );
        Ok(case)
    }

    fn one_pendant_min(&self, n: usize) -> Result<CaseResult> {
        if n < 4 {
            return Ok(CaseResult::vacuous(
                n,
                Some(1),
                "no graph of order < 4 has exactly one pendant",
            ));
        }
        let members = enumerate_connected_keyed(n, self.opts.workers)?;
        let report = self.report(
            GraphClass::PendantCount { n, k: 1 },
            Objective::Min,
            &members,
        )?;
        let mut case = self.unique_case(n, Some(1), &report, FamilySpec::C3Tail(n))?;
        if n == 4 {
            case.require(
                report.class_size == 1,
                || format!("class has {} members", report.class_size),
                None,
            );
        }
        if n == 5 {
            let c41 = families::cycle(4)?.with_pendant(0)?;
            let c32 = families::c3_tail(5)?;
            let (m41, m32) = (mu(&c41)?, mu(&c32)?);
            case.require(
                (m41 - 0.8299).abs() <= QUOTED_VALUE_TOL
                    && (m32 - 0.5188).abs() <= QUOTED_VALUE_TOL,
                || format!("mu(C_4^1) = {m41}, mu(C_3^2) = {m32}"),
                None,
            );
            for m in &report.members {
                if !isomorphic(&m.graph, &c32)? {
                    case.require(
                        m.mu >= m41 - self.opts.tie_tol,
                        || format!("member with mu {} below mu(C_4^1)", m.mu),
                        Some(&m.graph),
                    );
                }
            }
            case.note(format!("mu(C_4^1) = {m41:.4}, mu(C_3^2) = {m32:.4}"));
        }
        Ok(case)
    }

    fn pendant_class_min(&self, n: usize) -> Result<Vec<CaseResult>> {
        let ks = self.params(2..n);
        if n < 3 || ks.is_empty() {
            return Ok(vec![CaseResult::vacuous(
                n,
                self.opts.k,
                "no k with 2 <= k <= n-1",
            )]);
        }
        let members = enumerate_connected_keyed(n, self.opts.workers)?;
        let mut out = Vec::new();
        for k in ks {
            let report =
                self.report(GraphClass::PendantCount { n, k }, Objective::Min, &members)?;
            let spec = FamilySpec::Tkld {
                k: k.div_ceil(2),
                l: k / 2,
                d: n - k,
            };
            out.push(self.unique_case(n, Some(k), &report, spec)?);
        }
        Ok(out)
    }

    fn spider_max(&self, n: usize) -> Result<Vec<CaseResult>> {
        let ks = self.params(2..n);
        if n < 3 || ks.is_empty() {
            return Ok(vec![CaseResult::vacuous(
                n,
                self.opts.k,
                "no k with 2 <= k <= n-1",
            )]);
        }
        let trees = enumerate_trees_keyed(n, self.opts.workers)?;
        let mut out = Vec::new();
        for k in ks {
            let report = self.report(
                GraphClass::TreesWithPendants { n, k },
                Objective::Max,
                &trees,
            )?;
            let mut case = self.unique_case(n, Some(k), &report, FamilySpec::Spider { n, k })?;
            let spider = families::t_spider(n, k)?;
            let dk = families::spider_diameter(n, k)?;
            let (q, r) = ((n - 1) / k, (n - 1) % k);
            let mut ties = 0;
            for m in &report.members {
                let d = m.graph.diameter()?;
                let iso = isomorphic(&m.graph, &spider)?;
                case.require(
                    d >= dk,
                    || format!("tree with diameter {d} below the spider diameter {dk}"),
                    Some(&m.graph),
                );
                if d == dk && !iso {
                    ties += 1;
                }
                case.require(
                    m.mu <= diameter_bound(d) + 1e-12,
                    || {
                        format!(
                            "mu {} exceeds the diameter bound {}",
                            m.mu,
                            diameter_bound(d)
                        )
                    },
                    Some(&m.graph),
                );
            }
            if ties > 0 {
                case.note(format!("{ties} non-spider tree(s) also have diameter {dk}"));
            }
            if r == 0 {
                let want = cos_form(1.0, (2 * q + 1) as f64);
                let got = mu(&spider)?;
                case.require(
                    (got - want).abs() <= 1e-9,
                    || format!("mu(T_n,k) = {got}, expected {want}"),
                    Some(&spider),
                );
            }
            out.push(case);
        }
        Ok(out)
    }

    fn two_cycles(&self, n: usize) -> Result<CaseResult> {
        if n < 6 {
            return Ok(CaseResult::vacuous(n, None, "needs n >= 6"));
        }
        let g = families::two_cycles(n)?;
        let m = mu(&g)?;
        let mc = cos_form(2.0, n as f64);
        let mut case = CaseResult::new(n, None);
        case.optimum = Some(m);
        case.require(
            m < mc,
            || format!("mu = {m} not below mu(C_n) = {mc}"),
            Some(&g),
        );
        let pd = perron_components_at(&g, 0)?;
        if n % 2 == 1 {
            let want = cos_form(2.0, (n + 1) as f64);
            case.require(
                (m - want).abs() <= 1e-9,
                || format!("mu = {m}, expected {want}"),
                Some(&g),
            );
            case.require(
                pd.perron_indices().len() == 2,
                || "expected two Perron components".into(),
                Some(&g),
            );
        } else {
            let lower = cos_form(2.0, (n + 2) as f64);
            case.require(
                lower < m,
                || format!("mu = {m} not above {lower}"),
                Some(&g),
            );
            case.require(
                pd.perron_indices() == vec![1],
                || "expected only the larger Perron component".into(),
                Some(&g),
            );
        }
        case.checked = 1;
        Ok(case)
    }

    fn pendant_free_min(&self, n: usize) -> Result<CaseResult> {
        if n < 5 {
            return Ok(CaseResult::vacuous(n, None, "statement concerns n >= 5"));
        }
        if n == 5 {
            let g2 = families::two_cycles(5)?;
            let (m2, m1) = (mu(&g2)?, mu(&families::cycle(5)?)?);
            let mut case = CaseResult::new(5, None);
            case.require(
                (m2 - 1.0).abs() <= 1e-9 && (m1 - cos_form(2.0, 5.0)).abs() <= 1e-9 && m2 < m1,
                || format!("mu(two triangles) = {m2}, mu(C_5) = {m1}"),
                Some(&g2),
            );
            case.note(format!("mu(C_5) = {m1:.6} > 1 = mu(two triangles)"));
            return Ok(case);
        }
        let members = enumerate_connected_keyed(n, self.opts.workers)?;
        let report = self.report(GraphClass::PendantFree { n }, Objective::Min, &members)?;
        let mut case = self.unique_case(n, None, &report, FamilySpec::Dumbbell(n))?;
        let (md, mt) = (mu(&families::dumbbell(n)?)?, mu(&families::t22(n)?)?);
        case.require(
            (md - mt).abs() <= 1e-9,
            || format!("mu(dumbbell) = {md} differs from mu(T(2,2,n-4)) = {mt}"),
            None,
        );
        Ok(case)
    }

    fn unicyclic_max(&self, n: usize) -> Result<CaseResult> {
        if n < 4 {
            return Ok(CaseResult::vacuous(n, None, "U_3 has a single member"));
        }
        let members = enumerate_unicyclic_keyed(n, self.opts.workers)?;
        let report = self.report(GraphClass::Unicyclic { n }, Objective::Max, &members)?;
        if n <= 5 {
            return self.unique_case(n, None, &report, FamilySpec::Cycle(n));
        }
        if n > 6 {
            return self.unique_case(n, None, &report, FamilySpec::Pnk { n, k: n - 3 });
        }
        let mut case = CaseResult::new(n, None).with_report(&report);
        let mut want = vec![
            canonical_string(&families::cycle(6)?)?,
            canonical_string(&families::p_n_k(6, 3)?)?,
        ];
        want.sort();
        case.require(
            report.extremizers == want && (report.optimum - 1.0).abs() <= self.opts.tie_tol,
            || {
                format!(
                    "U_6 maximizers {:?}, expected C_6 and P_6^3",
                    report.extremizers
                )
            },
            None,
        );
        case.note("tie {C_6, P_6^3} at mu = 1");
        Ok(case)
    }

    fn unicyclic_min(&self, n: usize) -> Result<CaseResult> {
        if n < 4 {
            return Ok(CaseResult::vacuous(n, None, "U_3 has a single member"));
        }
        let members = enumerate_unicyclic_keyed(n, self.opts.workers)?;
        let report = self.report(GraphClass::Unicyclic { n }, Objective::Min, &members)?;
        let mut case = self.unique_case(n, None, &report, FamilySpec::C3Tail(n))?;
        match n {
            4 => {
                case.require(
                    report.class_size == 2,
                    || format!("|U_4| = {}", report.class_size),
                    None,
                );
                let (a, b) = (mu(&families::c3_tail(4)?)?, mu(&families::cycle(4)?)?);
                case.require(
                    (a - 1.0).abs() <= 1e-9 && a < b,
                    || format!("mu(C_3^1) = {a}, mu(C_4) = {b}"),
                    None,
                );
            }
            5 => {
                case.require(
                    report.class_size == 5,
                    || format!("|U_5| = {}", report.class_size),
                    None,
                );
                let h = families::cycle(3)?.with_pendant(0)?.with_pendant(1)?;
                let quoted = [
                    (families::c3_tail(5)?, 0.5188, QUOTED_VALUE_TOL),
                    (h, 0.6972, QUOTED_VALUE_TOL),
                    (
                        families::cycle(4)?.with_pendant(0)?,
                        0.8299,
                        QUOTED_VALUE_TOL,
                    ),
                    (families::p_n_k(5, 2)?, 1.0, 1e-9),
                ];
                for (g, want, tol) in &quoted {
                    let got = mu(g)?;
                    case.require(
                        (got - want).abs() <= *tol,
                        || format!("mu = {got}, quoted {want}"),
                        Some(g),
                    );
                }
                let c5 = mu(&families::cycle(5)?)?;
                case.require(c5 > 1.0, || format!("mu(C_5) = {c5}"), None);
                case.note("U_5 table reproduced");
            }
            _ => {
                let g2 = families::t_kld(2, 1, n - 3)?;
                let h = n / 2;
                // Labels along the long path, counted from the end opposite the fork.
                let edge = (n - 3 - h, n - 2 - h);
                let cs = characteristic_set_of(&g2)?;
                case.require(
                    cs.vertices.is_empty() && cs.edges == vec![edge],
                    || {
                        format!(
                            "characteristic set of T(2,1,n-3) is {:?}/{:?}, expected {edge:?}",
                            cs.vertices, cs.edges
                        )
                    },
                    Some(&g2),
                );
                let (m2, mt) = (mu(&g2)?, mu(&families::c3_tail(n)?)?);
                let bound = cos_form(1.0, (2 * (h - 1) + 1) as f64);
                let mc = cos_form(2.0, n as f64);
                case.require(
                    (m2 - mt).abs() <= 1e-9 && m2 < bound && bound < mc,
                    || {
                        format!(
                            "mu(G_2) = {m2}, mu(C_3^(n-3)) = {mt}, bound {bound}, mu(C_n) = {mc}"
                        )
                    },
                    Some(&g2),
                );
            }
        }
        Ok(case)
    }

    fn random_graph(&self, rng: &mut ChaCha8Rng, n: usize, i: usize) -> Graph {
        random_connected(rng, n, [0.15, 0.3, 0.5, 0.7][i % 4])
    }

    fn pendant_monotone(&self, n: usize) -> Result<CaseResult> {
        if n < 2 {
            return Ok(CaseResult::vacuous(n, None, "needs n >= 2"));
        }
        let mut rng = self.rng(n);
        let mut case = CaseResult::new(n, None);
        for i in 0..self.opts.cases_per_order {
            let g = self.random_graph(&mut rng, n, i);
            let v = rng.gen_range(0..n);
            let h = g.with_pendant(v)?;
            let (a, b) = (mu(&g)?, mu(&h)?);
            case.require(
                b <= a + INEQUALITY_SLACK,
                || format!("pendant at {v}: {a} -> {b}"),
                Some(&g),
            );
            case.checked += 1;
        }
        Ok(case)
    }

    fn edge_monotone(&self, n: usize) -> Result<CaseResult> {
        if n < 3 {
            return Ok(CaseResult::vacuous(
                n,
                None,
                "every connected graph of order < 3 is complete",
            ));
        }
        let mut rng = self.rng(n);
        let mut case = CaseResult::new(n, None);
        let mut i = 0;
        while case.checked < self.opts.cases_per_order {
            i += 1;
            let g = self.random_graph(&mut rng, n, i);
            let Some(&(u, v)) = non_edges(&g).choose(&mut rng) else {
                continue;
            };
            let h = g.with_edge(u, v)?;
            let (a, b) = (mu(&g)?, mu(&h)?);
            case.require(
                a <= b + INEQUALITY_SLACK,
                || format!("edge {{{u}, {v}}}: {a} -> {b}"),
                Some(&g),
            );
            case.checked += 1;
        }
        Ok(case)
    }

    fn cut_vertex_bound(&self, n: usize) -> Result<CaseResult> {
        if n < 3 {
            return Ok(CaseResult::vacuous(n, None, "no cut vertex below order 3"));
        }
        let mut rng = self.rng(n);
        let mut case = CaseResult::new(n, None);
        for i in 0..self.opts.cases_per_order {
            // Glue two random connected graphs at one vertex.
            let a = rng.gen_range(2..n);
            let b = n + 1 - a;
            let ga = self.random_graph(&mut rng, a, i);
            let gb = self.random_graph(&mut rng, b, i + 1);
            let mut edges = ga.edges().to_vec();
            edges.extend(gb.edges().iter().map(|&(x, y)| (x + a - 1, y + a - 1)));
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let g = Graph::from_edges(n, edges)?.relabel(&perm);
            case.require(
                g.is_cut_vertex(perm[a - 1])?,
                || "glued vertex is not a cut vertex".into(),
                Some(&g),
            );
            let m = mu(&g)?;
            case.require(
                m <= 1.0 + INEQUALITY_SLACK,
                || format!("mu = {m} > 1"),
                Some(&g),
            );
            case.checked += 1;
        }
        Ok(case)
    }

    fn clique_component(&self, n: usize) -> Result<CaseResult> {
        if n < 2 {
            return Ok(CaseResult::vacuous(n, None, "needs n >= 2"));
        }
        let mut rng = self.rng(n);
        let mut case = CaseResult::new(n, None);
        for i in 0..self.opts.cases_per_order {
            let g = self.random_graph(&mut rng, n, i);
            let v = rng.gen_range(0..n);
            let comps = g.components_at(v)?.components;
            let pick = rng.gen_range(0..comps.len());
            let mut closed = comps[pick].clone();
            closed.push(v);
            let h = complete_on(&g, &closed)?;
            let pd = perron_components_at(&h, v)?;
            let idx = pd.as_decomposition().component_of(comps[pick][0]).unwrap();
            let rho = pd.components[idx].perron_value;
            case.require(
                (rho - 1.0).abs() <= 1e-9,
                || format!("Perron value {rho} for a clique component"),
                Some(&h),
            );
            // With every component closed into a clique at a cut vertex, mu is one.
            if comps.len() >= 2 {
                let mut all = g.clone();
                for c in &comps {
                    let mut s = c.clone();
                    s.push(v);
                    all = complete_on(&all, &s)?;
                }
                let m = mu(&all)?;
                case.require(
                    (m - 1.0).abs() <= 1e-9,
                    || format!("mu = {m} with all components cliques"),
                    Some(&all),
                );
            }
            case.checked += 1;
        }
        Ok(case)
    }

    fn non_cut_perron(&self, n: usize) -> Result<CaseResult> {
        if n < 2 {
            return Ok(CaseResult::vacuous(n, None, "needs n >= 2"));
        }
        let mut rng = self.rng(n);
        let mut case = CaseResult::new(n, None);
        for i in 0..self.opts.cases_per_order {
            let g = self.random_graph(&mut rng, n, i);
            let non_cut: Vec<usize> = (0..n).filter(|&v| !g.is_cut_vertex(v).unwrap()).collect();
            let v = *non_cut.choose(&mut rng).unwrap();
            let rho = perron_components_at(&g, v)?.components[0].perron_value;
            case.require(
                rho >= 1.0 - INEQUALITY_SLACK,
                || format!("Perron value {rho} < 1 at non-cut vertex {v}"),
                Some(&g),
            );
            case.checked += 1;
        }
        Ok(case)
    }
}

fn complete_on(g: &Graph, vertices: &[usize]) -> Result<Graph> {
    let mut h = g.clone();
    for (i, &a) in vertices.iter().enumerate() {
        for &b in &vertices[i + 1..] {
            if !h.has_edge(a, b) {
                h = h.with_edge(a, b)?;
            }
        }
    }
    Ok(h)
}
