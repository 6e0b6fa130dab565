//! End-to-end tests for the command-line binary.

use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_finspinor"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_matrix(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

const SL2: &str = "[[[1,0],[0.5,0.25]],[[0,0],[1,0]]]";
const DET2: &str = "[[[2,0],[0,0]],[[0,0],[1,0]]]";
const CYCLIC3: &str = "[[[0,0],[0,0],[1,0]],[[1,0],[0,0],[0,0]],[[0,0],[1,0],[0,0]]]";

#[test]
fn verify_output_is_byte_identical_for_equal_config() {
    let args = ["verify", "--n", "2", "--trials", "5", "--seed", "9"];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success(), "{first:?}");
    assert_eq!(first.stdout, second.stdout);
    let doc: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(doc["pass"], serde_json::Value::Bool(true));
    assert_eq!(doc["generator"], "chacha8");
    assert!(doc["properties"].as_array().unwrap().len() > 10);
}

#[test]
fn distinct_seeds_change_the_measurements() {
    let a = run(&["verify", "--n", "2", "--trials", "5", "--seed", "1"]);
    let b = run(&["verify", "--n", "2", "--trials", "5", "--seed", "2"]);
    assert!(a.status.success() && b.status.success());
    assert_ne!(a.stdout, b.stdout);
}

#[test]
fn non_unimodular_matrix_exits_with_code_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_matrix(dir.path(), "det2.json", DET2);
    let out = run(&["lmap", "--matrix", &path]);
    assert_eq!(out.status.code(), Some(3), "{out:?}");
}

#[test]
fn malformed_json_exits_with_code_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_matrix(dir.path(), "garbage.json", "not json");
    let out = run(&["lmap", "--matrix", &path]);
    assert_eq!(out.status.code(), Some(2), "{out:?}");
}

#[test]
fn dimension_flag_must_match_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_matrix(dir.path(), "sl2.json", SL2);
    let out = run(&["lmap", "--matrix", &path, "--n", "3"]);
    assert_eq!(out.status.code(), Some(2), "{out:?}");
}

#[test]
fn degenerate_corner_pivot_exits_with_code_4() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_matrix(dir.path(), "cyclic.json", CYCLIC3);
    let out = run(&["decompose", "--matrix", &path]);
    assert_eq!(out.status.code(), Some(4), "{out:?}");
}

#[test]
fn lmap_of_shear_matches_known_entries() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_matrix(dir.path(), "sl2.json", SL2);
    let out = run(&["lmap", "--matrix", &path]);
    assert!(out.status.success(), "{out:?}");
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["n"], 2);
    assert_eq!(doc["dim"], 4);
    let det = doc["det"].as_f64().unwrap();
    assert!((det - 1.0).abs() < 1e-9);
    let row0: Vec<f64> = doc["matrix"][0]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_f64().unwrap())
        .collect();
    assert!(row0.iter().all(|v| v.is_finite()));
}

#[test]
fn form_at_n_2_is_the_minkowski_metric() {
    let out = run(&["form", "--n", "2", "--trials", "25"]);
    assert!(out.status.success(), "{out:?}");
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["nonzeros"], 4);
    assert_eq!(doc["coefficients"]["0,0"], 1.0);
    assert_eq!(doc["coefficients"]["1,1"], -1.0);
    assert_eq!(doc["coefficients"]["2,2"], -1.0);
    assert_eq!(doc["coefficients"]["3,3"], -1.0);
    assert!(doc["check"]["max_deviation"].as_f64().unwrap() < 1e-12);
}

#[test]
fn basis_csv_has_header_and_complete_rows() {
    let out = run(&["basis", "--n", "2", "--format", "csv"]);
    assert!(out.status.success(), "{out:?}");
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("kind,index,row,col,re,im"));
    // Two kinds, four members each, four entries per 2x2 member.
    assert_eq!(lines.count(), 2 * 4 * 4);
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&[
        "verify",
        "--n",
        "3",
        "--trials",
        "5",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{out:?}");
    assert!(out.stdout.is_empty());
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["n"], 3);
    assert_eq!(doc["pass"], serde_json::Value::Bool(true));
}

#[test]
fn decompose_reports_small_residual_for_valid_input() {
    let dir = tempfile::tempdir().unwrap();
    // Unimodular by construction: unit-triangular times unit-diagonal.
    let path = write_matrix(
        dir.path(),
        "sl3.json",
        "[[[1,0],[0.5,0.25],[0.125,0]],[[0,0],[1,0],[0.5,-0.125]],[[0,0],[0,0],[1,0]]]",
    );
    let out = run(&["decompose", "--matrix", &path]);
    assert!(out.status.success(), "{out:?}");
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(doc["residual"].as_f64().unwrap() < 1e-12);
    assert_eq!(doc["branch"], "principal");
    assert_eq!(doc["factors"]["d1"]["rows"], 3);
}
