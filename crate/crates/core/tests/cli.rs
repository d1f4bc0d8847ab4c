//! Behavior of the command-line front end: exit codes, output formats, and
//! the parameter-file interface.

use std::process::{Command, Output};

fn urkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_urkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn check_passes_with_exit_zero() {
    let out = urkit(&["check", "--sweep", "50"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("check_kg_ratio"));
}

#[test]
fn injected_fault_exits_one() {
    let out = urkit(&["check", "--sweep", "50", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("check_injected_fault"));
}

#[test]
fn malformed_params_exit_two() {
    let dir = std::env::temp_dir().join("urkit-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.params");
    std::fs::write(&path, "nonsense = 1\n").unwrap();
    let out = urkit(&["cosmic", "--params", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let missing = urkit(&["cosmic", "--params", "/no/such/file.params"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn unknown_flag_exits_two() {
    let out = urkit(&["check", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn custom_params_are_recomputed() {
    let dir = std::env::temp_dir().join("urkit-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("small.params");
    std::fs::write(&path, "r = 1e30\nlambda_nucleon = 1e10\n").unwrap();
    let out = urkit(&["cosmic", "--params", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("1e60"), "total urs (1e10^... ) from R/lambda = 1e20 cubed");
    assert!(!text.contains("(fiducial)"));
}

#[test]
fn records_are_valid_json_lines() {
    let out = urkit(&["multiplicity", "--n", "8", "--format", "records"]);
    assert_eq!(out.status.code(), Some(0));
    for line in stdout(&out).lines() {
        let v: serde_json::Value = serde_json::from_str(line).expect("each line parses");
        for key in ["check", "inputs", "value", "expected", "tolerance", "verdict"] {
            assert!(v.get(key).is_some(), "missing field {key}");
        }
    }
}

#[test]
fn seed_is_echoed() {
    let out = urkit(&["tetrad", "--sweep", "10", "--seed", "12345"]);
    assert!(stdout(&out).contains("seed=12345"));
}

#[test]
fn multiplicity_rejects_zero() {
    let out = urkit(&["multiplicity", "--n", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn lie_reports_discrepancy_without_failing() {
    let out = urkit(&["lie", "--format", "records"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let closure_line = text
        .lines()
        .find(|l| l.contains("\"lie_tetrad_closure\""))
        .expect("closure record present");
    let v: serde_json::Value = serde_json::from_str(closure_line).unwrap();
    assert_eq!(v["verdict"], "discrepancy");
    assert!(v["value"].as_str().unwrap().contains("31"));
    assert!(v["expected"].as_str().unwrap().contains("12"));
}
