use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_piwtilt"))
        .args(args)
        .env_remove("PIWTILT_MAX_DEGREE")
        .output()
        .expect("binary runs")
}

fn json(command: &str, quiver: &str, word: &str, extra: &[&str]) -> Value {
    let q = fixture(quiver);
    let mut args = vec![command, q.to_str().unwrap(), "--word", word, "--format", "json"];
    args.extend_from_slice(extra);
    let out = run(&args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    validate(command, &v);
    v
}

fn validate(command: &str, v: &Value) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("../../schema/{command}.schema.json"));
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator.iter_errors(v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{command}: {errors:?}");
}

#[test]
fn analyze_reports_word_conditions() {
    let v = json("analyze", "triangle.json", "3,2,1,3,2,3", &[]);
    assert_eq!(v["c_ending_q0"], true);
    assert_eq!(v["c_starting_q0"], false);
    assert_eq!(v["last"]["1"], 3);
    let v = json("analyze", "wild.json", "4,1,2,3,2,3,1,2,4", &[]);
    assert_eq!(v["diamond"], true);
    assert_eq!(v["c_ending_q0"], false);
    assert_eq!(v["c_starting_q0"], false);
}

#[test]
fn analyze_suppresses_fields_for_non_reduced_words() {
    let v = json("analyze", "triangle.json", "1,1", &[]);
    assert_eq!(v["reduced"], false);
    assert_eq!(v.as_object().unwrap().len(), 2);
}

#[test]
fn pi_dimension_tables() {
    let v = json("pi", "a2.json", "1,2", &["--radical"]);
    assert_eq!(v["dim"], 3);
    assert_eq!(v["degree_dims"], serde_json::json!([3]));
    let v = json("pi", "triangle.json", "3,2,1,2,3,2", &[]);
    let col = v["columns"].as_array().unwrap().iter().find(|c| c["vertex"] == "1").unwrap();
    assert_eq!(col["dim"], 4);
    assert_eq!(v["modules"].as_array().unwrap().len(), 6);
}

#[test]
fn pi_empty_word_warns() {
    let q = fixture("triangle.json");
    let out = run(&["pi", q.to_str().unwrap(), "--word", "", "--format", "json"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["dim"], 0);
}

#[test]
fn qw_arrow_lists_and_dot() {
    let v = json("qw", "triangle.json", "1,2,3,1,3,2,1", &[]);
    assert_eq!(v["arrows"].as_array().unwrap().len(), 14);
    let v = json("qw", "triangle.json", "1,2,3,1,3,2,1", &["--underline"]);
    assert_eq!(v["arrows"].as_array().unwrap().len(), 5);
    let v = json("qw", "triangle.json", "2", &[]);
    assert!(v["arrows"].as_array().unwrap().is_empty());

    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("qw.dot");
    json("qw", "triangle.json", "1,2,3,1,3,2,1", &["--dot", dot.to_str().unwrap()]);
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("digraph"));
    assert_eq!(text.matches("->").count(), 14);
}

#[test]
fn check_verdicts() {
    let v = json("check", "triangle.json", "3,2,1,2,3,2", &[]);
    assert_eq!(v["verdict"]["verdict"], "not-tilting");
    assert_eq!(v["verdict"]["witness"]["from"], 4);
    assert_eq!(v["verdict"]["witness"]["to"], 1);

    let v = json("check", "triangle.json", "1,2,3,1,3,2,1", &["--stable"]);
    assert_eq!(v["verdict"]["verdict"], "tilting");
    let certs = v["verdict"]["certificates"].as_array().unwrap();
    assert!(certs.contains(&"c-starting".into()));
    assert_eq!(v["end"]["stable_dim"], 7);

    let v = json("check", "triangle.json", "3,1,2,3,1,3", &[]);
    let certs = v["verdict"]["certificates"].as_array().unwrap();
    assert!(certs.contains(&"coxeter-subword".into()));
    assert!(certs.contains(&"numeric-minus-one".into()));
}

#[test]
fn prime_field_gives_the_same_verdict() {
    let a = json("check", "triangle.json", "3,2,1,2,3,2", &["--field", "fp:7"]);
    let b = json("check", "triangle.json", "3,2,1,2,3,2", &[]);
    assert_eq!(a["verdict"], b["verdict"]);
    assert_ne!(a["field"], b["field"]);
}

#[test]
fn verify_suite_and_expression_independence() {
    let v = json("verify", "triangle.json", "3,2,1,2,3,2", &["--against", "3,2,1,3,2,3"]);
    assert_eq!(v["against"]["same_element"], true);
    assert_eq!(v["against"]["identical_tables"], true);
    assert_eq!(v["end_resolution"]["status"], "not-applicable");
    assert_eq!(v["projfac"]["equal"], true);

    let v = json("verify", "a2.json", "1,2", &[]);
    let isos = v["hom_ideal_iso"].as_array().unwrap();
    assert_eq!(isos.len(), 3);
    assert!(isos.iter().all(|r| r["equal"] == true));
}

#[test]
fn output_is_deterministic() {
    let q = fixture("triangle.json");
    let args = ["check", q.to_str().unwrap(), "--word", "3,2,1,3,2,3", "--format", "json", "--stable"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn exit_codes() {
    let t = fixture("triangle.json");
    let t = t.to_str().unwrap();
    // unknown vertex, bad prime, missing file, malformed quiver
    assert_eq!(run(&["pi", t, "--word", "1,4"]).status.code(), Some(2));
    assert_eq!(run(&["check", t, "--word", "1,2", "--field", "fp:8"]).status.code(), Some(2));
    assert_eq!(run(&["pi", "/nonexistent.json", "--word", "1"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("cyclic.json");
    std::fs::write(&bad, r#"{"vertices":["1","2"],"arrows":[{"from":"1","to":"2"},{"from":"2","to":"1"}]}"#).unwrap();
    assert_eq!(run(&["analyze", bad.to_str().unwrap(), "--word", "1"]).status.code(), Some(2));
    assert_eq!(run(&["pi", t, "--word", "1,1"]).status.code(), Some(2));
    assert_eq!(run(&["check", t, "--word", "1", "--ext-window", "0"]).status.code(), Some(2));
    // degree cap
    assert_eq!(run(&["pi", t, "--word", "1,2,3,1,2,1", "--max-degree", "0"]).status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_piwtilt"))
        .args(["pi", t, "--word", "1,2,3,1,2,1"])
        .env("PIWTILT_MAX_DEGREE", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}
