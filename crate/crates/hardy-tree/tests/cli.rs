//! End-to-end CLI checks: output formats, exit codes, document round trips.

use std::io::Write;
use std::process::{Command, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hardy-tree"))
}

fn write_temp(name: &str, contents: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("hardy-tree-test-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn scenario_list_names_all_scenarios() {
    let out = bin().args(["scenario", "list"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let names: Vec<&str> = text.lines().collect();
    assert_eq!(names.len(), 7);
    assert!(names.contains(&"sharp-growth"));
    assert!(names.contains(&"point-mass-operator"));
}

#[test]
fn unknown_scenario_exits_4() {
    let out = bin()
        .args(["scenario", "run", "not-a-scenario"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown scenario"));
}

#[test]
fn invalid_json_exits_2() {
    let path = write_temp("bad.json", "{ this is not json");
    let out = bin()
        .args(["means", "--input", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invalid_document_exits_2() {
    let path = write_temp("baddoc.json", r#"{"kind": "mystery", "q": 2}"#);
    let out = bin()
        .args(["norm", "--input", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown kind"));
}

#[test]
fn cap_overflow_exits_3() {
    let out = bin()
        .args(["scenario", "run", "proper-inclusion", "--cap", "2", "--q", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("enumeration cap"));
}

#[test]
fn means_csv_and_json() {
    let doc = r#"{"kind": "radial", "q": 3, "values": [[1.0, 0.0], [0.5, 0.0], [0.25, 0.0]]}"#;
    let path = write_temp("radial.json", doc);
    let out = bin()
        .args([
            "means",
            "--input",
            path.to_str().unwrap(),
            "--p",
            "2",
            "--depth",
            "4",
            "--format",
            "csv",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,mean,method");
    assert_eq!(lines[1], "0,1,closed-form");
    assert_eq!(lines[3], "2,0.25,closed-form");
    assert_eq!(lines[5], "4,0,closed-form");

    let out = bin()
        .args(["means", "--input", path.to_str().unwrap(), "--p", "inf", "--depth", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["q"], serde_json::json!(3));
    assert_eq!(v["means"][1]["mean"], serde_json::json!(0.5));
}

#[test]
fn norm_with_membership() {
    let doc = r#"{"kind": "radial", "q": 2, "values": [[1.0, 0.0]], "tail": "bounded", "lower": 1.0, "bound": 1.0, "limsup": 1.0}"#;
    let path = write_temp("const.json", doc);
    let out = bin()
        .args([
            "norm",
            "--input",
            path.to_str().unwrap(),
            "--p",
            "2",
            "--depth",
            "6",
            "--space",
            "little",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["norm"]["value"], serde_json::json!(1.0));
    assert_eq!(v["norm"]["exact"], serde_json::json!(true));
    // the declared tail keeps the means at 1, so the function misses T_{p,0}
    assert_eq!(v["membership"]["verdict"], serde_json::json!("not-in-space"));
}

#[test]
fn op_analyze_reads_stdin() {
    let doc = r#"{"kind": "radial", "q": 2, "values": [[1.0, 0.0], [0.5, 0.0], [0.25, 0.0]], "tail": "vanishing"}"#;
    let mut child = bin()
        .args(["op-analyze", "--input", "-", "--depth", "5"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(doc.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["operator_norm"]["value"], serde_json::json!(1.0));
    assert_eq!(v["operator_norm"]["exact"], serde_json::json!(true));
    assert_eq!(v["bounded"], serde_json::json!("yes"));
    assert_eq!(v["compact"], serde_json::json!("yes"));
    assert_eq!(v["essential_norm_bound"], serde_json::json!(0.0));
    assert_eq!(v["isometry"], serde_json::json!("no"));
    assert!(v["spectrum"]["values"].as_array().unwrap().len() >= 3);
}

#[test]
fn finite_document_norm_matches_closed_form() {
    // scaled point mass at level 2 of the q = 3 tree: 12^(1/2) has unit norm
    let amp = 12f64.sqrt();
    let doc = format!(
        r#"{{"kind": "finite", "q": 3, "entries": [[2, 5, {amp}, 0.0]]}}"#
    );
    let path = write_temp("point.json", &doc);
    let out = bin()
        .args(["norm", "--input", path.to_str().unwrap(), "--p", "2", "--depth", "3"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let value = v["norm"]["value"].as_f64().unwrap();
    assert!((value - 1.0).abs() < 1e-12);
    assert_eq!(v["norm"]["attained_level"], serde_json::json!(2));
}

#[test]
fn scenario_text_format_reports_assertions() {
    let out = bin()
        .args(["scenario", "run", "sharp-growth", "--q", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("scenario sharp-growth (q = 2)"));
    assert!(text.contains("PASS"));
    assert!(!text.contains("FAIL"));
}
