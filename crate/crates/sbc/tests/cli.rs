//! The binary's exit codes and report shapes.

use std::process::{Command, Output};

use serde_json::Value;

fn sbc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sbc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON report")
}

#[test]
fn classify_at_five() {
    let out = sbc(&["classify", "--prime", "5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let records = v["records"].as_array().unwrap();
    assert_eq!(records.len(), 59);
    let count = |s: &str| records.iter().filter(|r| r["structure"] == s).count();
    assert_eq!((count("M1"), count("Cp3")), (48, 11));
    assert_eq!(v["counts"]["hgs"]["M1"]["p3"], 3000);
    assert_eq!(v["counts"]["all_match"], true);
}

#[test]
fn theta_filter() {
    let out = sbc(&["classify", "--prime", "5", "--theta", "p3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["records"].as_array().unwrap().len(), 4);
    assert_eq!(v["theta"], "p3");
}

#[test]
fn csv_columns_are_fixed() {
    let out = sbc(&[
        "classify", "--prime", "5", "--theta", "p3", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("id,theta,structure,autbr_order,orbit_size,socle_order,ann_order")
    );
    assert_eq!(lines.next(), Some("r=p3/t3=0/s=1,p3,M1,40,300,1,1"));
    assert_eq!(lines.count(), 3);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["classify", "--prime", "4"],
        vec!["classify", "--prime", "3"],
        vec!["brace", "--prime", "5", "--id", "r=p9/none"],
        vec!["oracle", "--prime", "7"],
        vec!["classify", "--theta", "p4"],
        vec!["frobnicate"],
    ] {
        assert_eq!(sbc(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn out_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = sbc(&[
        "ybe",
        "--prime",
        "5",
        "--id",
        "r=1/trivial",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["braid"], true);
    assert_eq!(v["involutive"], false);
}

#[test]
fn ybe_of_a_theta_p3_brace() {
    let out = sbc(&["ybe", "--prime", "5", "--id", "r=p3/t3=1/s=delta"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["braid"], true);
    assert_eq!(v["nondegenerate"], true);
    assert_eq!(v["involutive"], false);
    assert!(v["solution"].is_null());
}

#[test]
fn full_ybe_lists_every_pair() {
    let out = sbc(&["ybe", "--prime", "5", "--id", "r=p/caseC", "--full-ybe"]);
    let v = json(&out);
    let sol = v["solution"].as_array().unwrap();
    assert_eq!(sol.len(), 125 * 125);
    assert_eq!(
        sol[0],
        serde_json::json!([[0, 0, 0], [0, 0, 0], [0, 0, 0], [0, 0, 0]])
    );
}

#[test]
fn brace_export() {
    let out = sbc(&["brace", "--prime", "5", "--id", "r=p2/I/s=0,t=1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["additive"], "M1");
    assert_eq!(v["multiplicative"], "M1");
    assert_eq!(v["psi"].as_array().unwrap().len(), 125);
    let socle = v["socle"].as_array().unwrap();
    assert_eq!(socle.len(), 5);
    assert!(socle.iter().all(|x| x[1] == 0 && x[2] == 0));
    assert_eq!(
        v["generators"][0],
        serde_json::json!({"n": [1, 0, 0], "alpha": {"b1": 0, "b2": 0, "A": [1, 0, 0, 1]}})
    );
}

#[test]
fn count_reports_closed_forms() {
    let out = sbc(&["count", "--prime", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["closed_form"]["braces"]["Cp3"]["p2"], 9);
    assert_eq!(v["hgs"]["Cp3"]["p"], 18600);
    assert!(v["oracle"].is_null());
}

#[test]
fn seed_variable_is_ignored() {
    let plain = sbc(&["classify", "--prime", "5", "--theta", "p"]);
    let seeded = Command::new(env!("CARGO_BIN_EXE_sbc"))
        .args(["classify", "--prime", "5", "--theta", "p"])
        .env("SBC_SEED", "12345")
        .output()
        .unwrap();
    assert_eq!(plain.stdout, seeded.stdout);
}
