use std::path::Path;
use std::process::{Command, Output};

use fiedler::families;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fiedler"))
        .args(args)
        .env_remove("SPECTRAL_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn compute_reports_mu_of_triangle_with_tail() {
    let dir = tempfile::tempdir().unwrap();
    let g = families::c3_tail(5).unwrap();
    let file = write(dir.path(), "g.txt", &fiedler::to_edge_list(&g));
    let o = run(&["compute", &file, "--json"]);
    assert!(o.status.success(), "{o:?}");
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["command"], "compute");
    let m = v["results"]["mu"].as_f64().unwrap();
    assert!((m - 0.5188).abs() < 5e-4);
    // Seventeen significant digits recover the library value exactly.
    assert_eq!(m.to_bits(), fiedler::mu(&g).unwrap().to_bits());
    assert_eq!(v["tolerances"]["mult_tol"].as_f64(), Some(1e-9));
}

#[test]
fn json_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "g.g6", "IheA@GUAo\n");
    let a = run(&["charset", &file, "--json"]);
    let b = run(&["charset", &file, "--json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_str(&stdout(&a)).unwrap();
    // Petersen graph: mu = 2 with multiplicity 5.
    assert_eq!(v["results"]["mu_multiplicity"], 5);
    assert!((v["results"]["mu"].as_f64().unwrap() - 2.0).abs() < 1e-9);
}

#[test]
fn family_graph6_round_trips() {
    let o = run(&["family", "T_spider", "9", "3", "--format", "graph6"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let g = fiedler::parse_graph6(text.trim()).unwrap();
    assert!(fiedler::isomorphic(&g, &families::t_spider(9, 3).unwrap()).unwrap());
    let o = run(&["family", "P_n_k", "6", "2"]);
    let g = fiedler::parse_edge_list(&stdout(&o)).unwrap();
    assert_eq!(g, families::p_n_k(6, 2).unwrap());
}

#[test]
fn verify_exit_codes() {
    let o = run(&["verify", "THM_5_2", "--n-min", "6", "--n-max", "8"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = run(&["verify", "THM_6_1", "--n-min", "3", "--n-max", "3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["verify", "THM_5_2", "--n-min", "6", "--n-max", "11"]);
    assert_eq!(o.status.code(), Some(2));
    // Even diameters admit several maximizers; the tree is printed as an edge list.
    let o = run(&[
        "verify", "PROP_2_2", "--n-min", "7", "--n-max", "7", "--k", "4",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("7 6\n"));
}

#[test]
fn verify_json_report() {
    let o = run(&[
        "verify",
        "LEMMA_5_1",
        "--n-min",
        "6",
        "--n-max",
        "9",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["results"]["verdict"], "pass");
    assert_eq!(v["results"]["cases"].as_array().unwrap().len(), 4);
}

#[test]
fn census_lists_the_unicyclic_tie() {
    let o = run(&["census", "U", "--n", "6", "--objective", "max", "--json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["results"]["class_size"], 13);
    assert_eq!(v["results"]["extremizers"].as_array().unwrap().len(), 2);
    assert_eq!(v["results"]["claimed_attains"], true);
}

#[test]
fn workers_from_environment() {
    let a = run(&[
        "census",
        "H",
        "--n",
        "7",
        "--k",
        "2",
        "--objective",
        "min",
        "--json",
    ]);
    let b = Command::new(env!("CARGO_BIN_EXE_fiedler"))
        .args([
            "census",
            "H",
            "--n",
            "7",
            "--k",
            "2",
            "--objective",
            "min",
            "--json",
        ])
        .env("SPECTRAL_WORKERS", "4")
        .output()
        .unwrap();
    assert!(b.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn error_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(
        run(&["verify", "THM_9_9", "--n-min", "1", "--n-max", "2"])
            .status
            .code(),
        Some(64)
    );
    let bad = write(dir.path(), "bad.txt", "3 2\n0 1\n");
    assert_eq!(run(&["compute", &bad]).status.code(), Some(65));
    let loops = write(dir.path(), "loop.txt", "2 1\n1 1\n");
    assert_eq!(run(&["compute", &loops]).status.code(), Some(65));
    let missing = dir.path().join("none.txt");
    assert_eq!(
        run(&["compute", missing.to_str().unwrap()]).status.code(),
        Some(65)
    );
    assert_eq!(
        run(&["census", "U", "--n", "11", "--objective", "min"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn perron_at_cut_vertex() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(
        dir.path(),
        "p.txt",
        &fiedler::to_edge_list(&families::path(5).unwrap()),
    );
    let o = run(&["perron", &file, "--vertex", "2", "--json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["results"]["cut_vertex"], true);
    assert_eq!(v["results"]["characteristic"]["is_characteristic"], true);
    let m = v["results"]["balance"]["mu_est"].as_f64().unwrap();
    assert!((m - fiedler::mu(&families::path(5).unwrap()).unwrap()).abs() < 1e-8);
}
