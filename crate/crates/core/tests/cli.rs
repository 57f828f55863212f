//! End-to-end runs of the `nilhecke` binary.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn nilhecke(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nilhecke"))
        .args(args)
        .env("NILHECKE_SEED", "7")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn key_identity_over_presets() {
    for preset in ["A1xA1", "A2", "I2_5", "A3"] {
        let out = nilhecke(&["key-identity", "--preset", preset]);
        assert_eq!(out.status.code(), Some(0), "{preset}");
        let v = json(&out);
        assert_eq!(v["holds"], true);
        for pair in v["pairs"].as_array().unwrap() {
            assert_eq!(pair["holds"], true);
        }
    }
}

#[test]
fn certify_then_check() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("cert.json");
    let out = nilhecke(&["certify", "--preset", "B2", "--out", path(&file)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["verified"], true);

    let check = nilhecke(&["check-cert", path(&file)]);
    assert_eq!(check.status.code(), Some(0));
    let v = json(&check);
    assert_eq!(v["ok"], true);
    assert_eq!(v["residual"], Value::Array(vec![]));
}

#[test]
fn corrupted_certificate_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("cert.json");
    assert_eq!(nilhecke(&["certify", "--preset", "A2", "--out", path(&file)]).status.code(), Some(0));

    let mut cert: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    let q = &mut cert["terms"][0]["q"];
    *q = Value::String("17".into());
    std::fs::write(&file, serde_json::to_string_pretty(&cert).unwrap()).unwrap();

    let check = nilhecke(&["check-cert", path(&file)]);
    assert_eq!(check.status.code(), Some(1));
    let v = json(&check);
    assert_eq!(v["ok"], false);
    assert!(!v["residual"].as_array().unwrap().is_empty());
}

#[test]
fn certificate_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for f in [&a, &b] {
        assert_eq!(nilhecke(&["certify", "--preset", "I2_5", "--out", path(f)]).status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn group_from_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("group.json");
    std::fs::write(&file, r#"{"coxeter_matrix": [[1, 5], [5, 1]], "field": "golden"}"#).unwrap();
    let out = nilhecke(&["key-identity", "--group", path(&file)]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["pairs"][0]["m"], 5);
}

#[test]
fn oracle_finds_the_braid_generator() {
    let out = nilhecke(&["oracle", "--preset", "A2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["member"], true);
    assert_eq!(v["combination_rechecked"], true);
    for letter in v["single_letters"].as_array().unwrap() {
        assert_eq!(letter["not_in_ideal"], true);
    }
}

#[test]
fn oracle_exhausted_caps_is_a_failure() {
    let out = nilhecke(&["oracle", "--preset", "A2", "--word-cap", "1", "--degree-cap", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["member"], false);
}

#[test]
fn demo_descent_reports_the_sign_module() {
    let out = nilhecke(&["demo-descent"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let sign = v["fixtures"]
        .as_array()
        .unwrap()
        .iter()
        .find(|f| f["name"] == "a1_sign")
        .expect("a1_sign fixture");
    assert_eq!(sign["descends_everywhere"], false);
    assert_eq!(sign["ok"], true);
}

#[test]
fn selftest_on_one_preset() {
    let out = nilhecke(&["selftest", "--preset", "A2", "--degree-cap", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["seed"], 7);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(nilhecke(&["certify", "--preset", "Z9"]).status.code(), Some(2));
    assert_eq!(nilhecke(&["no-such-verb"]).status.code(), Some(2));
    assert_eq!(nilhecke(&["certify", "--pair", "1"]).status.code(), Some(2));
    assert_eq!(nilhecke(&["check-cert", "/nonexistent/cert.json"]).status.code(), Some(2));
    let bad_seed = Command::new(env!("CARGO_BIN_EXE_nilhecke"))
        .args(["selftest", "--preset", "A1"])
        .env("NILHECKE_SEED", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(bad_seed.status.code(), Some(2));
}
