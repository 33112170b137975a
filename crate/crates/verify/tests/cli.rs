use std::process::Command;

use picard_verify::{Report, Status};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_picard-verify"))
}

#[test]
fn unknown_suite_is_rejected() {
    let out = bin().args(["--suites", "exact,weyl"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown suite \"weyl\""));
}

#[test]
fn empty_selection_is_an_error() {
    let out = bin().args(["--suites", ","]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no suites selected"));
}

#[test]
fn bad_theta_radius_is_an_error() {
    let out = bin().args(["--suites", "theta", "--theta-n", "0"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn group_suite_writes_a_sorted_report() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let cache = dir.path().join("c.bin");
    let out = bin()
        .args(["--suites", "group,exact", "--seed", "7"])
        .arg("--report")
        .arg(&report)
        .arg("--cache")
        .arg(&cache)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.lines().any(|l| l.starts_with("PASS") && l.contains("weyl.order")));

    let r: Report = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(r.header.seed, 7);
    assert_eq!(r.header.config["suites"], serde_json::json!(["exact", "group"]));
    let ids: Vec<&str> = r.checks.iter().map(|c| c.check_id.as_str()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    let order = r.get("weyl.order").unwrap();
    assert_eq!((order.status, order.actual.clone()), (Status::Pass, serde_json::json!(51840)));
    assert!(r.checks.iter().all(|c| !c.citation.is_empty()));
    assert!(cache.exists());
}

#[test]
fn boundary_suite_reports_the_incidence() {
    let out = bin().args(["--suites", "boundary"]).output().unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    let line = stdout.lines().find(|l| l.contains("boundary.incidence")).unwrap();
    assert!(line.starts_with("PASS"));
    assert!(line.contains(r#""lines":45"#) && line.contains(r#""cuspsPerLine":3"#));
}

#[test]
fn a_failing_check_gives_a_nonzero_exit() {
    // The invariant-identity check in the variety suite expects the opposite
    // sign of the exact scalar and fails.
    let out = bin().args(["--suites", "variety"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.lines().any(|l| l.starts_with("FAIL") && l.contains("variety.F.invariant_identity")));
    assert!(stdout.lines().any(|l| l.starts_with("SKIP") && l.contains("variety.F.full_invariance")));
}
