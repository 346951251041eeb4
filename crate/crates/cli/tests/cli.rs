use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

const FIGURE1_GOLDEN: &str = include_str!("../../core/tests/golden/figure1_k55.txt");
const EXTREMAL_R5_GOLDEN: &str = include_str!("../../core/tests/golden/extremal_r5.txt");

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bipramsey")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = run(&all);
    let value = serde_json::from_slice(&out.stdout).expect("JSON report");
    (out.status.code().expect("exit code"), value)
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn construct_figure1_matches_golden() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("f.txt");
    let result = run(&["construct", "figure1", "--out", out.to_str().unwrap()]);
    assert_eq!(result.status.code(), Some(0));
    assert_eq!(fs::read_to_string(out).unwrap(), FIGURE1_GOLDEN);
}

#[test]
fn construct_extremal_5_matches_golden() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("e.txt");
    let (code, report) = json(&["construct", "extremal", "5", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(report["payload"]["p4_free"], true);
    assert_eq!(fs::read_to_string(out).unwrap(), EXTREMAL_R5_GOLDEN);
}

#[test]
fn construct_kinds() {
    let (code, report) = json(&["construct", "blowup", "figure1", "2"]);
    assert_eq!(code, 0);
    assert_eq!((report["payload"]["m"].as_u64(), report["payload"]["n"].as_u64()), (Some(10), Some(10)));
    let (_, report) = json(&["construct", "biequiv", "4", "5"]);
    assert_eq!(report["payload"]["biequivalence"], true);
    assert_eq!(report["payload"]["largest_biclique"]["x_vertices"].as_array().unwrap().len(), 2);
    let (code, report) = json(&["construct", "complete-star", "5"]);
    assert_eq!(code, 0);
    assert_eq!(report["payload"]["t"], 6);
    let (code, report) = json(&["construct", "double", "6"]);
    assert_eq!(code, 0);
    assert_eq!(report["payload"]["r"], 6);
    let (code, report) = json(&["construct", "extremal", "0"]);
    assert_eq!(code, 2);
    assert_eq!(report["status"], "ERROR");
}

#[test]
fn analyze_figure1_and_k22() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "f.txt", FIGURE1_GOLDEN);
    let (code, report) = json(&["analyze", &f]);
    assert_eq!(code, 0);
    assert_eq!(report["payload"]["p4"], Value::Null);
    let comps = report["payload"]["components"].as_array().unwrap();
    for color in 0..4 {
        assert_eq!(comps.iter().filter(|c| c["color"] == color).count(), 3);
    }
    let k22 = write(dir.path(), "k22.txt", "2 2 1\n0 0\n0 0\n");
    let (code, report) = json(&["analyze", &k22]);
    assert_eq!(code, 0);
    assert_eq!(report["payload"]["p4"]["color"], 0);
}

#[test]
fn malformed_input_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "2 2 1\n0 0\n0\n");
    let out = run(&["analyze", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stdout).contains("status: ERROR"));
    assert_eq!(run(&["analyze", "/nonexistent/file"]).status.code(), Some(2));
}

#[test]
fn search_statuses_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.txt");
    let (code, report) = json(&["search", "3", "3", "3", "--out", w.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(report["payload"]["status"], "FOUND");
    assert!(fs::read_to_string(&w).unwrap().starts_with("3 3 3\n"));
    let (code, report) = json(&["search", "4", "4", "3"]);
    assert_eq!(code, 1);
    assert_eq!(report["status"], "NOT_FOUND");
    assert_eq!(report["payload"]["status"], "EXHAUSTED");
    let (code, report) = json(&["search", "6", "6", "4", "--budget", "500"]);
    assert_eq!(code, 3);
    assert_eq!(report["status"], "BUDGET_EXCEEDED");
    let (code, report) = json(&["search", "3", "3", "3", "--count-iso", "--symmetry", "colors"]);
    assert_eq!(code, 0);
    assert_eq!(report["payload"]["symmetry_mode"], "colors");
    assert!(report["payload"]["count"].as_u64().unwrap() >= 1);
}

#[test]
fn search_6_6_4_is_exhausted() {
    let (code, report) = json(&["search", "6", "6", "4", "--workers", "2"]);
    assert_eq!(code, 1);
    assert_eq!(report["payload"]["status"], "EXHAUSTED");
    assert_eq!(report["payload"]["pruning_rules"].as_array().unwrap().len(), 4);
}

#[test]
fn star_arboricity_and_ramsey_f() {
    let (code, report) = json(&["star-arboricity", "5", "5"]);
    assert_eq!(code, 0);
    assert_eq!(report["payload"]["value"], 4);
    let (code, report) = json(&["ramsey-f", "3"]);
    assert_eq!(code, 0);
    assert_eq!(report["payload"]["value"], 4);
    let (code, report) = json(&["ramsey-f", "5", "--budget", "1000"]);
    assert_eq!(code, 3);
    assert_eq!(report["payload"]["value"], Value::Null);
    assert_eq!(report["payload"]["witness_source"], "construction");
}

#[test]
fn balanced_witness_round_trips_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    let c = write(dir.path(), "c.txt", "3 4 3\n0 1 2 0\n1 1 2 2\n2 0 0 1\n");
    let cert = dir.path().join("cert.json");
    let (code, report) = json(&["balanced", &c, "--out", cert.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(report["payload"]["bar_met"], true);
    let (code, report) = json(&["verify", &c, cert.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(report["payload"]["kind"], "balanced");
}

#[test]
fn balanced_reports_four_color_failure() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "f.txt", FIGURE1_GOLDEN);
    let (code, report) = json(&["balanced", &f]);
    assert_eq!(code, 1);
    assert_eq!(report["payload"]["bar_met"], false);
    assert_eq!(report["payload"]["max_min_side"], 1);
    let one = write(dir.path(), "one.txt", "2 3 1\n0 0 0\n0 0 0\n");
    let (code, report) = json(&["balanced", &one]);
    assert_eq!(code, 0);
    assert_eq!(report["payload"]["witness"]["x_set"], serde_json::json!([0, 1]));
}

#[test]
fn verify_p4_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let k22 = write(dir.path(), "k22.txt", "2 2 1\n0 0\n0 0\n");
    let good = write(dir.path(), "good.json", r#"{"kind":"p4","color":0,"x1":0,"y1":0,"x2":1,"y2":1}"#);
    let (code, _) = json(&["verify", &k22, &good]);
    assert_eq!(code, 0);
    let bad = write(dir.path(), "bad.json", r#"{"kind":"p4","color":0,"x1":0,"y1":0,"x2":0,"y2":1}"#);
    let out = run(&["verify", &k22, &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stdout).contains("distinct vertices"));
}

#[test]
fn reports_are_deterministic_apart_from_timing() {
    let strip = |mut v: Value| {
        v["wall_time_ms"] = Value::Null;
        v["payload"]["wall_time"] = Value::Null;
        v
    };
    let (_, a) = json(&["search", "5", "5", "4"]);
    let (_, b) = json(&["search", "5", "5", "4"]);
    assert_eq!(strip(a), strip(b));
}
