use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use uncertainty_bounds::cli::{parse_csv, CSV_HEADER};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn ubounds(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ubounds"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn close(v: &Value, key: &str, want: f64) {
    let got = v[key].as_f64().unwrap_or_else(|| panic!("{key} missing"));
    assert!((got - want).abs() < 1e-12, "{key}: {got} vs {want}");
}

#[test]
fn bounds_triviality_instance() {
    let out = ubounds(&["bounds", fixture("triviality.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    close(&v, "t1", 0.0);
    close(&v, "t2", 0.0);
    close(&v, "mpur", 1.0);
    assert_eq!(v["hrsur_trivial"], Value::Bool(true));
    assert_eq!(v["l1_candidate"]["kind"], "analytic_optimum");
}

#[test]
fn bounds_quarter_turn() {
    for file in ["qubit_quarter_turn.json", "qubit_quarter_turn_perp.json"] {
        let out = ubounds(&["bounds", "--compact", fixture(file).to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(out.stdout.iter().filter(|&&b| b == b'\n').count(), 1);
        let v = json(&out);
        close(&v, "t1", 1.0);
        close(&v, "t2", 2.0);
        close(&v, "l1", 1.0);
        close(&v, "l2", 2.0);
    }
    let v = json(&ubounds(&["bounds", fixture("qubit_quarter_turn_perp.json").to_str().unwrap()]));
    assert_eq!(v["l2_candidate"]["kind"], "user_supplied");
}

#[test]
fn bounds_common_eigenvector() {
    let v = json(&ubounds(&["bounds", fixture("common_eigenvector.json").to_str().unwrap()]));
    assert_eq!(v["common_eigenvector"], Value::Bool(true));
    close(&v, "mpur", 0.0);
    close(&v, "sum_var", 0.0);
}

#[test]
fn bounds_error_codes() {
    let out = ubounds(&["bounds", fixture("non_hermitian.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("A: matrix is not Hermitian"), "{err}");

    let out = ubounds(&["bounds", fixture("malformed.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let out = ubounds(&["bounds", fixture("not_orthogonal_perp.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let out = ubounds(&["bounds", fixture("does_not_exist.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn sweep_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let out = ubounds(&["sweep", "--points", "8", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with(CSV_HEADER));
    let rows = parse_csv(&text).unwrap();
    assert_eq!(rows.len(), 8);
    assert_eq!(rows[0].alpha, 0.0);
    assert_eq!((rows[2].t1, rows[2].t2, rows[2].l1, rows[2].l2), (1.0, 2.0, 1.0, 2.0));

    let stdout = ubounds(&["sweep", "--points", "8"]);
    assert_eq!(String::from_utf8(stdout.stdout).unwrap(), text);
}

#[test]
fn sweep_usage_and_io_errors() {
    assert_eq!(ubounds(&["sweep", "--points", "1"]).status.code(), Some(2));
    let out = ubounds(&["sweep", "--out", "/nonexistent-dir/x.csv"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn random_usage_errors() {
    assert_eq!(ubounds(&["random", "--count", "0"]).status.code(), Some(2));
    assert_eq!(ubounds(&["random", "--dims", "1"]).status.code(), Some(2));
    assert_eq!(ubounds(&["random", "--dims", "2,65"]).status.code(), Some(2));
    assert_eq!(ubounds(&["random", "--tol", "0"]).status.code(), Some(2));
    assert_eq!(ubounds(&["random", "--bogus"]).status.code(), Some(2));
}

#[test]
fn random_small_run() {
    let out = ubounds(&["random", "--count", "20", "--dims", "2,5", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["violations"], 0);
    assert_eq!(v["instances"], 20);
    assert!(v["min_slacks"]["hrsur_product"].as_f64().unwrap() >= -1e-9);
}

#[test]
fn random_reports_violations_with_replay() {
    // A negative tolerance is rejected, but a tolerance far below round-off
    // turns round-off into violations and exercises the failure path.
    let out = ubounds(&["random", "--count", "10", "--tol", "1e-300"]);
    assert_eq!(out.status.code(), Some(3));
    let v = json(&out);
    assert!(v["violations"].as_u64().unwrap() > 0);
    let replay = &v["first_violations"][0]["replay"];
    assert!(replay["A"].is_array() && replay["xi_perp"].is_array());

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("replay.json");
    std::fs::write(&path, serde_json::to_string(replay).unwrap()).unwrap();
    assert_eq!(ubounds(&["bounds", path.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn montecarlo_runs() {
    let file = fixture("qubit_quarter_turn.json");
    let out = ubounds(&["montecarlo", "--file", file.to_str().unwrap(), "--samples", "100000"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["violation"], Value::Bool(false));
    assert_eq!(v["consistent"], Value::Bool(true));

    let out = ubounds(&["montecarlo", "--file", file.to_str().unwrap(), "--samples", "1"]);
    assert_eq!(out.status.code(), Some(2));

    let file = fixture("common_eigenvector.json");
    let out = ubounds(&["montecarlo", "--file", file.to_str().unwrap(), "--samples", "1000"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["estimate_sum"]["var_hat"], 0.0);

    let out = ubounds(&["montecarlo", "--file", fixture("non_hermitian.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}
