use std::process::{Command, Output};

use mzv_core::cli::{CountOutput, EvalOutput, ExpandOutput, Report, Status};
use mzv_core::word_algebra::{expand_power_closed_form, ProductKind, WordPoly};

fn mzv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mzv"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn expand_text() {
    let o = mzv(&["expand", "--n", "2", "--k", "2", "--kind", "harmonic"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2*z2 z2 + 1*z4");

    let o = mzv(&["expand", "--n", "2", "--k", "1", "--kind", "star"]);
    assert_eq!(stdout(&o).trim(), "1*z2");
}

#[test]
fn expand_json_round_trips() {
    let o = mzv(&[
        "expand", "--n", "2", "--k", "3", "--kind", "star", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out: ExpandOutput = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(out.schema, 1);
    let coeffs: Vec<&str> = out.terms.iter().map(|t| t.coeff.num.as_str()).collect();
    assert_eq!(coeffs, ["6", "-3", "-3", "1"]);
    let poly = WordPoly::from_records(&out.terms).unwrap();
    assert_eq!(
        poly,
        expand_power_closed_form(2, 3, ProductKind::Star).unwrap()
    );
}

#[test]
fn verify_targets_pass_with_defaults() {
    for target in [
        "proposition",
        "main",
        "theorem3",
        "corollary",
        "hurwitz",
        "tvalues",
    ] {
        let o = mzv(&["verify", target, "--format", "json", "--trunc", "20000"]);
        assert_eq!(o.status.code(), Some(0), "{target}: {}", stdout(&o));
        let report: Report = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(report.status, Status::Pass);
        assert_eq!(report.recomputed_status(), Status::Pass);
        assert!(!report.details.is_empty());
    }
}

// Truncated sums obey the identities exactly, so only rounding separates the
// two sides; a zero tolerance exposes it.
#[test]
fn verify_failure_exits_one() {
    let o = mzv(&[
        "verify", "main", "--trunc", "10", "--tol", "0", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let report: Report = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report.status, Status::Fail);
    assert_eq!(report.recomputed_status(), Status::Fail);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["expand", "--n", "0", "--k", "2", "--kind", "harmonic"][..],
        &["expand", "--n", "2", "--k", "2", "--kind", "other"],
        &["eval", "zeta", "2,0"],
        &["eval", "zeta", "2,1"],
        &["eval", "hurwitz", "2", "--x", "-1"],
        &["verify", "theorem3", "--k", "4", "--ell", "4"],
        &["verify", "main", "--n", "1"],
        &["frobnicate"],
    ] {
        let o = mzv(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
    let o = mzv(&["eval", "zeta", "2,1"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("not admissible"));
}

#[test]
fn eval_json() {
    let o = mzv(&[
        "eval", "zeta", "2", "--trunc", "1000000", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out: EvalOutput = serde_json::from_str(&stdout(&o)).unwrap();
    let value: f64 = out.value.parse().unwrap();
    let pi = std::f64::consts::PI;
    assert!((value - pi * pi / 6.0).abs() < 2e-6);
    assert_eq!(out.inputs["alpha"], "2");
}

#[test]
fn count_json() {
    let o = mzv(&["count", "--k", "4", "--ell", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let out: CountOutput = serde_json::from_str(&stdout(&o)).unwrap();
    let counts: Vec<&str> = out.rows.iter().map(|r| r.count.as_str()).collect();
    assert_eq!(counts, ["1", "14", "36", "24"]);
    assert_eq!(out.total, "75");
    let split = out.split.unwrap();
    assert!(split.equal);
    assert_eq!(split.rhs, "75");
}

#[test]
fn parallel_output_is_identical() {
    let args = ["verify", "hurwitz", "--trunc", "5000", "--format", "json"];
    let serial = mzv(&args);
    let mut with_flag = args.to_vec();
    with_flag.push("--parallel");
    for _ in 0..3 {
        assert_eq!(stdout(&mzv(&with_flag)), stdout(&serial));
    }
}
