//! One function per subcommand; each prints its output and returns the exit code.

use std::path::Path;

use fiedler::extremal::{
    extremal_mu, verify_theorem, ExtremalConfig, GraphClass, Objective, TheoremId, Verdict,
    VerifyOptions,
};
use fiedler::perron::{
    characteristic_set_with, cut_vertex_characteristic, perron_components_at, solve_balance,
    PERRON_TIE_TOL,
};
use fiedler::{to_edge_list, to_graph6, FamilySpec, Graph, Spectrum};
use serde_json::{json, Value};

use crate::report::{format_float, Report};
use crate::{Common, Failure, Format};

type Outcome = Result<u8, Failure>;

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    fiedler::parse_graph(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit(common: &Common, report: &Report, text: impl FnOnce() -> String) {
    if common.json {
        print!("{}", report.to_json());
    } else {
        print!("{}", text());
    }
}

fn floats(xs: &[f64]) -> String {
    xs.iter()
        .map(|x| format!("{x:.12}"))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn compute(path: &Path, common: &Common) -> Outcome {
    let g = read_graph(path)?;
    let s = Spectrum::with_tolerance(&g, common.mult_tol)?;
    let results = json!({
        "order": g.order(),
        "size": g.size(),
        "mu": s.mu,
        "mu_multiplicity": s.mu_multiplicity,
        "fiedler": s.fiedler,
        "eigenvalues": s.eigenvalues,
    });
    let report = Report::new(
        "compute",
        json!({"file": path.display().to_string()}),
        results,
        json!({"mult_tol": common.mult_tol}),
    );
    emit(common, &report, || {
        format!(
            "order {}  size {}\nmu {}  multiplicity {}\nfiedler {}\neigenvalues {}\n",
            g.order(),
            g.size(),
            format_float(s.mu),
            s.mu_multiplicity,
            floats(&s.fiedler),
            floats(&s.eigenvalues)
        )
    });
    Ok(0)
}

pub fn family(id: &str, params: &[usize], format: Format, common: &Common) -> Outcome {
    let spec = FamilySpec::parse(id, params)?;
    let g = spec.build()?;
    let report = Report::new(
        "family",
        json!({"id": id, "params": params}),
        json!({
            "family": spec.to_string(),
            "order": g.order(),
            "size": g.size(),
            "graph6": to_graph6(&g),
            "edges": g.edges(),
        }),
        json!({}),
    );
    emit(common, &report, || match format {
        Format::Edgelist => to_edge_list(&g),
        Format::Graph6 => format!("{}\n", to_graph6(&g)),
    });
    Ok(0)
}

pub fn perron(path: &Path, v: usize, common: &Common) -> Outcome {
    let g = read_graph(path)?;
    let pd = perron_components_at(&g, v)?;
    let cut = pd.components.len() >= 2;
    let (characterization, balance) = if cut {
        (
            Some(cut_vertex_characteristic(&g, v)?),
            Some(solve_balance(&g, v)?),
        )
    } else {
        (None, None)
    };
    let report = Report::new(
        "perron",
        json!({"file": path.display().to_string(), "vertex": v}),
        json!({
            "cut_vertex": cut,
            "components": pd.components,
            "characteristic": characterization,
            "balance": balance,
        }),
        json!({"perron_tie_tol": PERRON_TIE_TOL}),
    );
    emit(common, &report, || {
        let mut out = format!("vertex {v}: {} component(s)\n", pd.components.len());
        for (i, c) in pd.components.iter().enumerate() {
            out.push_str(&format!(
                "  {i}: rho {}{}  {:?}\n",
                format_float(c.perron_value),
                if c.is_perron { " (Perron)" } else { "" },
                c.vertices
            ));
        }
        if let (Some(ch), Some(b)) = (&characterization, &balance) {
            out.push_str(&format!(
                "characteristic vertex: {}\nbalance x {}  mu {}\n",
                ch.is_characteristic,
                format_float(b.x),
                format_float(b.mu_est)
            ));
        }
        out
    });
    Ok(0)
}

pub fn charset(path: &Path, common: &Common) -> Outcome {
    let g = read_graph(path)?;
    let s = Spectrum::with_tolerance(&g, common.mult_tol)?;
    let cs = characteristic_set_with(&g, &s.fiedler, common.zero_tol)?;
    let report = Report::new(
        "charset",
        json!({"file": path.display().to_string()}),
        &cs,
        json!({"mult_tol": common.mult_tol, "zero_tol": common.zero_tol}),
    );
    emit(common, &report, || {
        let mut out = format!(
            "mu {}  multiplicity {}\n",
            format_float(cs.mu),
            cs.mu_multiplicity
        );
        if cs.mu_multiplicity > 1 {
            out.push_str("note: mu is not simple; the set depends on the Fiedler vector chosen\n");
        }
        out.push_str(&format!(
            "vertices {:?}\nedges {:?}\n",
            cs.vertices, cs.edges
        ));
        out
    });
    Ok(0)
}

pub struct VerifyArgs {
    pub n_min: usize,
    pub n_max: usize,
    pub k: Option<usize>,
    pub workers: usize,
    pub seed: u64,
    pub cases: usize,
}

pub fn verify(theorem: &str, args: VerifyArgs, common: &Common) -> Outcome {
    let id: TheoremId = theorem
        .parse()
        .map_err(|e: fiedler::Error| Failure::Usage(e.to_string()))?;
    let opts = VerifyOptions {
        k: args.k,
        workers: args.workers.max(1),
        tie_tol: common.tie_tol,
        seed: args.seed,
        cases_per_order: args.cases,
    };
    let report = verify_theorem(id, args.n_min, args.n_max, &opts)?;
    let out = Report::new(
        "verify",
        json!({
            "theorem": id.code(),
            "n_min": args.n_min,
            "n_max": args.n_max,
            "k": args.k,
            "seed": args.seed,
            "cases": args.cases,
        }),
        &report,
        json!({"tie_tol": common.tie_tol}),
    );
    emit(common, &out, || {
        let mut text = String::new();
        for c in &report.cases {
            let param = c.param.map(|p| format!(" param {p}")).unwrap_or_default();
            let verdict = match c.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "FAIL",
                Verdict::Vacuous => "vacuous",
            };
            text.push_str(&format!("n {}{param}: {verdict}", c.n));
            if !c.detail.is_empty() {
                text.push_str(&format!("  {}", c.detail));
            }
            text.push('\n');
            if let Some(g) = &c.counterexample {
                text.push_str(&to_edge_list(g));
            }
        }
        let overall = format!("{:?}", report.verdict).to_lowercase();
        text.push_str(&format!("{}: {overall}\n", id.code()));
        text
    });
    Ok(match report.verdict {
        Verdict::Pass => 0,
        Verdict::Fail => 1,
        Verdict::Vacuous => 2,
    })
}

pub fn census(
    class: &str,
    n: usize,
    param: Option<usize>,
    objective: Objective,
    workers: usize,
    common: &Common,
) -> Outcome {
    let c = GraphClass::parse(class, n, param)?;
    let config = ExtremalConfig {
        workers: workers.max(1),
        tie_tol: common.tie_tol,
    };
    let report = extremal_mu(&c, objective, &config)?;
    let mut table: Vec<Value> = report
        .members
        .iter()
        .map(|m| {
            json!({
                "graph6": m.canonical,
                "mu": m.mu,
                "extremal": report.extremizers.contains(&m.canonical),
            })
        })
        .collect();
    table.sort_by(|a, b| {
        let (x, y) = (a["mu"].as_f64().unwrap(), b["mu"].as_f64().unwrap());
        match objective {
            Objective::Min => x.total_cmp(&y),
            Objective::Max => y.total_cmp(&x),
        }
    });
    let out = Report::new(
        "census",
        json!({"class": class, "n": n, "param": param, "objective": objective}),
        json!({
            "class": c.to_string(),
            "class_size": report.class_size,
            "optimum": report.optimum,
            "extremizers": report.extremizers,
            "unique": report.unique,
            "claimed_family": report.claimed_family.map(|f| f.to_string()),
            "claimed_value": report.claimed_value,
            "claimed_attains": report.claimed_attains,
            "members": table,
        }),
        json!({"tie_tol": common.tie_tol}),
    );
    emit(common, &out, || {
        let mut text = format!(
            "{c}: {} member(s), {objective} mu {}\n",
            report.class_size,
            format_float(report.optimum)
        );
        if let Some(f) = report.claimed_family {
            text.push_str(&format!(
                "expected extremizer {f}: {}\n",
                if report.claimed_attains == Some(true) {
                    "attains"
                } else {
                    "does not attain"
                }
            ));
        }
        for row in &table {
            text.push_str(&format!(
                "{} {:<12} {}\n",
                if row["extremal"].as_bool().unwrap() {
                    "*"
                } else {
                    " "
                },
                row["graph6"].as_str().unwrap(),
                format_float(row["mu"].as_f64().unwrap())
            ));
        }
        text
    });
    Ok(0)
}
