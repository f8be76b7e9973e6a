use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_lefschetz-locus"));
    cmd.env_remove("LL_PRIME").env_remove("RUST_LOG");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn hilbert_of_the_basic_fixture() {
    let out = run(&["hilbert", "--a", "2,2,3", "--b", "0", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["hilbert"], serde_json::json!([1, 3, 4, 3, 1]));
    assert_eq!(v["prime"], 65521);
    assert_eq!(v["seed"], 1);
    assert_eq!(v["tool"], "lefschetz-locus");
}

#[test]
fn locus_matches_and_is_reproducible() {
    let args = ["locus", "--a", "1,1,1,2", "--b", "0,0", "--seed", "3"];
    let (first, second) = (run(&args), run(&args));
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let v = json(&first);
    assert_eq!(v["verdict"], "match");
    assert_eq!((v["codim"].as_i64(), v["degree"].as_u64()), (Some(2), Some(3)));
    assert_eq!(v["jumping"]["exceptions"], 0);
}

#[test]
fn monomial_matrix_needs_generality() {
    let matrix = scratch("monomial.json", r#"[["x1^3", "x2^4", "x3^4"]]"#);
    let out = run(&["locus", "--a", "3,4,4", "--b", "0", "--matrix", matrix.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["verdict"], "generality-required");
    assert_eq!(v["explicit_matrix"], true);
    assert_eq!((v["expected"].as_i64(), v["codim"].as_i64()), (Some(2), Some(1)));
}

#[test]
fn job_files_drive_the_same_run() {
    let job = scratch("job.json", r#"{"a": [2, 2, 2, 3], "b": [0, 1], "seed": 4}"#);
    let from_job = run(&["hilbert", "--job", job.to_str().unwrap()]);
    let from_flags = run(&["hilbert", "--a", "2,2,2,3", "--b", "0,1", "--seed", "4"]);
    assert_eq!(from_job.status.code(), Some(0));
    assert_eq!(from_job.stdout, from_flags.stdout);
    let bad = scratch("bad-job.json", r#"{"a": [2, 2, 3], "b": [0], "colour": 1}"#);
    assert_eq!(run(&["hilbert", "--job", bad.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn prime_comes_from_the_environment() {
    let out = bin()
        .args(["hilbert", "--a", "2,2,3", "--b", "0"])
        .env("LL_PRIME", "32003")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["prime"], 32003);
    let out = bin().args(["hilbert", "--a", "2,2,3", "--b", "0"]).env("LL_PRIME", "32004").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn line_reports_a_jumping_line() {
    let matrix = scratch("monomial-line.json", r#"[["x1^3", "x2^4", "x3^4"]]"#);
    let m = matrix.to_str().unwrap();
    let out = run(&["line", "--a", "3,4,4", "--b", "0", "--matrix", m, "--line", "0,0,1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["lefschetz"], false);
    assert_eq!(v["jumping"], true);
    assert_eq!(v["oracle_agrees"], true);
}

#[test]
fn errors_exit_with_one() {
    assert_eq!(run(&["line", "--a", "2,2,3", "--b", "0", "--line", "0,0,0"]).status.code(), Some(1));
    assert_eq!(run(&["hilbert", "--a", "2,2,3"]).status.code(), Some(1));
    assert_eq!(run(&["hilbert", "--a", "3,2,2", "--b", "0"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    let out = run(&["line", "--a", "2,2,3", "--b", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
}

#[test]
fn survey_table_goes_to_stderr() {
    let out = run(&["survey", "--grid", "ci", "--pretty"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["rows"].as_array().unwrap().len(), 10);
    assert_eq!(v["mismatches"], 0);
    assert!(!out.stderr.is_empty());
}
