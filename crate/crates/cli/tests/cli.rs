use std::process::Command;

use serde_json::json;
use skein_cli::{cmd_expand, cmd_verify, CliError, Family, Suite, VerificationReport};
use skein_core::handlebody::Basis;
use skein_core::torusknot::Convention;

fn skein() -> Command {
    Command::new(env!("CARGO_BIN_EXE_skein"))
}

#[test]
fn families_suite_passes() {
    let r = cmd_verify(Suite::Families, 1, 12, None).unwrap();
    assert!(r.all_passed(), "{r}");
    assert_eq!(r.checks.len(), 3 * 12 + 13);
}

#[test]
fn handle_slide_suite_passes() {
    let r = cmd_verify(Suite::HandleSlide, 4, 12, None).unwrap();
    assert!(r.all_passed(), "{r}");
    assert_eq!(r.checks.len(), 6 + 8 + 10 + 12);
}

#[test]
fn qtorus_suite_passes() {
    let r = cmd_verify(Suite::Qtorus, 4, 11, None).unwrap();
    assert!(r.all_passed(), "{r}");
}

#[test]
fn handle_slide_under_rt_reports_residuals() {
    let r = cmd_verify(Suite::HandleSlide, 1, 3, Some(Convention::Rt)).unwrap();
    assert!(!r.all_passed());
    let bad = r.failures().next().unwrap();
    let residual = bad.residual.as_ref().unwrap();
    assert_eq!(residual["convention"], "rt");
    assert!(!residual["terms"].as_array().unwrap().is_empty());
}

#[test]
fn bad_arguments() {
    assert!(matches!("knots".parse::<Suite>(), Err(CliError::UnknownSuite(_))));
    assert!(matches!(cmd_verify(Suite::All, 0, 3, None), Err(CliError::NonPositiveBound("p-max", 0))));
    assert!(matches!(cmd_verify(Suite::All, 2, -1, None), Err(CliError::NonPositiveBound("n-max", -1))));
    assert!(matches!("Z".parse::<Family>(), Err(CliError::UnknownFamily(_))));
}

#[test]
fn ordering_is_independent_of_thread_count() {
    let run = |threads| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        let r = pool.install(|| cmd_verify(Suite::All, 2, 6, None).unwrap());
        r.checks.iter().map(|c| (c.suite, c.check.clone(), c.p, c.n)).collect::<Vec<_>>()
    };
    assert_eq!(run(1), run(4));
}

#[test]
fn report_json_round_trip() {
    let r = cmd_verify(Suite::T1Factor, 3, 1, None).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["suite"], "t1-factor");
    assert_eq!(v["grid"], json!({"p_max": 3, "n_max": 1, "convention": null}));
    assert_eq!(
        v["checks"][0],
        json!({"suite": "t1-factor", "check": "t1-factor", "p": 1, "n": null, "pass": true, "residual": null})
    );
    let back: VerificationReport = serde_json::from_value(v).unwrap();
    assert_eq!(back, r);
}

#[test]
fn expand_examples() {
    let x = cmd_expand(Family::X, 0, Basis::Monomial, None, Convention::Kbsm).unwrap();
    assert_eq!(
        x,
        json!({"basis": "monomial", "terms": [[0, 1, 0, {"t": [[4, "-1"]]}], [1, 0, 1, {"t": [[2, "-1"]]}]]})
    );
    let r = cmd_expand(Family::Reduce, 2, Basis::Chebyshev, Some(1), Convention::Kbsm).unwrap();
    assert_eq!(r["terms"], json!([[2, 0, {"t": [[4, "-1"]]}], [2, 1, {"t": [[2, "-1"]]}]]));
    let s = cmd_expand(Family::Sigma, 1, Basis::Chebyshev, None, Convention::Kbsm).unwrap();
    assert_eq!(s["basis"], "chebyshev");
}

#[test]
fn expand_rejects_out_of_domain() {
    let err = cmd_expand(Family::Sigma, 0, Basis::Chebyshev, None, Convention::Kbsm).unwrap_err();
    assert!(matches!(err, CliError::Skein(_)));
    assert!(matches!(
        cmd_expand(Family::Xi, -1, Basis::Monomial, None, Convention::Kbsm),
        Err(CliError::IndexOutOfRange(-1))
    ));
    assert!(matches!(
        cmd_expand(Family::Reduce, 3, Basis::Chebyshev, None, Convention::Rt),
        Err(CliError::MissingKnotParameter)
    ));
}

#[test]
fn binary_exit_codes() {
    let ok = skein().args(["verify", "--suite", "t1-factor", "--p-max", "2"]).output().unwrap();
    assert!(ok.status.success());
    assert!(String::from_utf8_lossy(&ok.stdout).contains("2/2 checks passed"));

    let fail = skein()
        .args(["verify", "--suite", "handle-slide", "--p-max", "1", "--n-max", "2", "--convention", "rt"])
        .output()
        .unwrap();
    assert_eq!(fail.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&fail.stdout).contains("residual"));

    let usage = skein().args(["verify", "--suite", "nope"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
    let domain = skein().args(["expand", "sigma", "0"]).output().unwrap();
    assert_eq!(domain.status.code(), Some(2));
}

#[test]
fn binary_writes_json_report() {
    let dir = std::env::temp_dir().join(format!("skein-report-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = skein()
        .args(["verify", "--suite", "rt-recursion", "--p-max", "2", "--n-max", "4", "--jobs", "2", "--json"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let report: VerificationReport = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report.suite, Suite::RtRecursion);
    assert!(report.all_passed());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_expand_prints_json() {
    let out = skein().args(["expand", "reduce", "2", "--p", "1", "--basis", "chebyshev"]).output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["p"], 1);
    assert_eq!(v["convention"], "kbsm");
}
