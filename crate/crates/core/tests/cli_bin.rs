//! End-to-end checks of the installed binary: flags, outputs, exit codes.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_wright-psa"))
}

#[test]
fn eigs_dde_only() {
    let out = bin().args(["eigs", "--alpha", "2"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("lambda+"));
    assert!(text.contains("1.6736864137408"));
}

#[test]
fn eigs_census_n1_reports_zero_unstable() {
    let out = bin()
        .args(["eigs", "--alpha", "2", "--n", "1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("0 unstable eigenvalue(s)"), "got: {text}");
}

#[test]
fn eigs_census_n10_writes_json() {
    let dir = std::env::temp_dir().join("wright_psa_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("eigs.json");
    let out = bin()
        .args(["eigs", "--alpha", "2", "--n", "10", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(json["psa_unstable_count"], 2);
    let re_lo = json["lambda_psa"]["plus"]["re"][0].as_f64().unwrap();
    let re_hi = json["lambda_psa"]["plus"]["re"][1].as_f64().unwrap();
    assert!(re_lo <= 0.172816002828147 && 0.172816002828167 <= re_hi);
}

#[test]
fn validate_rejects_alpha_outside_range_with_exit_14() {
    let out = bin()
        .args(["validate", "dde", "--alpha", "20", "--n", "10"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(14));
}

#[test]
fn validate_rejects_bad_tail_threshold_with_exit_14() {
    let out = bin()
        .args([
            "validate", "psa", "--alpha", "2", "--n", "10", "--trunc", "25", "--tail-m", "20",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(14));
}

#[test]
fn infeasible_tail_threshold_exits_11() {
    // tail-m = 300 gives Re(lambda) m < ||D||: the sweep thresholds cannot hold
    let out = bin()
        .args([
            "validate", "psa", "--alpha", "2", "--n", "10", "--trunc", "25", "--tail-m", "300",
        ])
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(11),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn coeffs_writes_csv_with_defining_rows() {
    let dir = std::env::temp_dir().join("wright_psa_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("xhat.csv");
    let out = bin()
        .args([
            "coeffs", "--alpha", "2", "--n", "10", "--trunc", "25", "--out",
        ])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "beta1,beta2,re_lo,re_hi,im_lo,im_hi");
    // (25+1)(25+2)/2 = 351 data rows; the zero row and the scale row
    assert_eq!(text.lines().count(), 352);
    assert!(text.lines().any(|l| l.starts_with("0,0,0.0,0.0,")));
    assert!(text.lines().any(|l| l.starts_with("1,0,0.02,0.02,")));
}
