#![allow(clippy::excessive_precision)]

use std::process::{Command, Output};

fn bskernel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bskernel"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Value column of the single data row of a CSV eval.
fn eval_value(args: &[&str]) -> f64 {
    let o = bskernel(args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,value,abs_error_est,terms_used"));
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    row[1].parse().unwrap()
}

#[test]
fn eval_kernel_at_exponential_order() {
    let v = eval_value(&["eval", "S", "--nu", "-0.5", "--x", "1"]);
    assert!((v - std::f64::consts::E).abs() < 1e-15);
}

#[test]
fn eval_kernel_at_origin() {
    assert_eq!(eval_value(&["eval", "S", "--nu", "0.7", "--x", "0"]), 1.0);
}

#[test]
fn eval_degenerate_left_operator() {
    let v = eval_value(&[
        "eval",
        "msm-left",
        "--alpha",
        "0",
        "--alpha-prime",
        "0",
        "--beta",
        "0",
        "--beta-prime",
        "0",
        "--gamma",
        "1",
        "--rho",
        "2",
        "--kind",
        "monomial",
        "--x",
        "3",
    ]);
    assert_eq!(v, 4.5);
}

#[test]
fn eval_quadrature_method_agrees_with_closed_form() {
    let base = [
        "eval",
        "msm-left",
        "--alpha",
        "0.4",
        "--alpha-prime",
        "0",
        "--beta",
        "0.3",
        "--beta-prime",
        "0.2",
        "--gamma",
        "0.9",
        "--rho",
        "1.5",
        "--kind",
        "bs-kernel",
        "--nu",
        "0.25",
        "--lambda",
        "0.8",
        "--x",
        "1.3",
    ];
    let closed = eval_value(&base);
    let mut q = base.to_vec();
    q.extend(["--method", "quadrature"]);
    let quad = eval_value(&q);
    assert!(
        ((closed - quad) / closed).abs() < 1e-8,
        "{closed} vs {quad}"
    );
}

#[test]
fn eval_other_functions() {
    let l = eval_value(&["eval", "L", "--nu", "1", "--x", "0.5"]);
    assert!((l - 0.053_942_182_623_522_663).abs() < 1e-15);
    let w = eval_value(&[
        "eval", "wright", "--upper", "1:1", "--lower", "1:1", "--x", "1",
    ]);
    assert!((w - std::f64::consts::E).abs() < 1e-15);
    let d = eval_value(&[
        "eval",
        "density",
        "--gamma",
        "1",
        "--delta",
        "2",
        "--beta",
        "1",
        "--a",
        "1",
        "--pathway-alpha",
        "2",
        "--x",
        "0",
    ]);
    assert!((d - 1.0 / std::f64::consts::PI).abs() < 1e-15);
    let p = eval_value(&[
        "eval",
        "pathway",
        "--eta",
        "1",
        "--a",
        "1",
        "--pathway-alpha",
        "0",
        "--sigma",
        "1",
        "--kind",
        "monomial",
        "--x",
        "2",
    ]);
    assert!((p - 2.0).abs() < 1e-15);
}

#[test]
fn table_rows_and_cross_check() {
    let o = bskernel(&["table", "S", "--nu", "0", "--x", "0:2:3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let rows: Vec<Vec<f64>> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(|c| c.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 3);
    assert_eq!(
        rows.iter().map(|r| r[0]).collect::<Vec<_>>(),
        vec![0.0, 1.0, 2.0]
    );
    assert_eq!(rows[0][1], 1.0);
    let i0 = eval_value(&["eval", "I", "--nu", "0", "--x", "1"]);
    let l0 = eval_value(&["eval", "L", "--nu", "0", "--x", "1"]);
    assert!(((rows[1][1] - (i0 + l0)) / rows[1][1]).abs() < 1e-14);
}

#[test]
fn table_single_row_and_json() {
    let o = bskernel(&["table", "S", "--nu", "0", "--x", "0.5:9:1"]);
    assert_eq!(stdout(&o).lines().count(), 2);

    let o = bskernel(&[
        "--format", "json", "table", "S", "--nu", "0", "--x", "0:1:2",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    let keys: Vec<&str> = rows[0]
        .as_object()
        .unwrap()
        .keys()
        .map(|k| k.as_str())
        .collect();
    let mut csv_keys = vec!["x", "value", "abs_error_est", "terms_used"];
    csv_keys.sort();
    let mut keys = keys;
    keys.sort();
    assert_eq!(keys, csv_keys);
}

#[test]
fn csv_uses_seventeen_significant_digits() {
    let o = bskernel(&["eval", "S", "--nu", "-0.5", "--x", "1"]);
    let text = stdout(&o);
    let value = text
        .lines()
        .nth(1)
        .unwrap()
        .split(',')
        .nth(1)
        .unwrap()
        .to_string();
    let mantissa = value.split('e').next().unwrap().replace(['.', '-'], "");
    assert_eq!(mantissa.len(), 17, "{value}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(bskernel(&["eval", "S", "--x", "1"]).status.code(), Some(2));
    assert_eq!(
        bskernel(&["eval", "nope", "--x", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        bskernel(&["table", "S", "--nu", "0", "--x", "0:1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        bskernel(&["table", "S", "--nu", "0", "--x", "0:1:0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(bskernel(&["verify", "nonexistent"]).status.code(), Some(2));
    assert_eq!(
        bskernel(&["eval", "msm-left", "--alpha", "0", "--x", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        bskernel(&["eval", "S", "--nu", "-2", "--x", "1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_exit_codes() {
    let o = bskernel(&["verify", "kernel-identities"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["suite"], "kernel-identities");

    let o = bskernel(&["--tol", "1e-300", "verify", "kernel-identities"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_reports_are_deterministic_and_honor_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("grid.json");
    std::fs::write(&cfg, r#"{"grids": {"seed": 99, "termwise_samples": 5}}"#).unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let cfg_s = cfg.to_str().unwrap();
    for (out, threads) in [(&a, "1"), (&b, "3")] {
        let o = bskernel(&[
            "verify",
            "msm-theorems",
            "--seed-grid",
            cfg_s,
            "--threads",
            threads,
            "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(
            o.status.code(),
            Some(0),
            "{}",
            String::from_utf8_lossy(&o.stderr)
        );
    }
    let read = |p: &std::path::Path| {
        let mut v: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap();
        v["wall_ms"] = 0.into();
        v
    };
    let (ra, rb) = (read(&a), read(&b));
    assert_eq!(ra, rb);
    assert_eq!(ra["config"]["grids"]["seed"], 99);
    let t1 = ra["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["id"] == "T1.termwise")
        .unwrap();
    assert_eq!(t1["n_points"], 5 * 3 * 4);

    let o = bskernel(&["--format", "csv", "verify", "wright"]);
    assert!(stdout(&o).starts_with("id,status,max_rel_dev,tolerance,n_points,worst_point"));
}

#[test]
fn bad_seed_grid_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.json");
    std::fs::write(&cfg, "{").unwrap();
    let o = bskernel(&["verify", "wright", "--seed-grid", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}
