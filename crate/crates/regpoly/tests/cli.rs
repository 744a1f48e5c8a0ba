use std::io::Write as _;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn regpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_regpoly"))
        .args(args)
        .env_remove("REGPOLY_MAX_COSETS")
        .output()
        .expect("binary runs")
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_regpoly"))
        .args(args)
        .env_remove("REGPOLY_MAX_COSETS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("bad JSON ({e}): {}", stdout(o)))
}

fn corpus(name: &str) -> String {
    format!("{}/corpus/{name}.pres", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn construct_lambda() {
    let o = regpoly(&["--json", "construct", "lambda", "6", "3", "3"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["report"]["order"], 240);
    assert_eq!(v["report"]["kind"], "regular");
    assert!(v["certificates"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["expected"] == c["computed"]));
}

#[test]
fn construct_chiral_torus() {
    let o = regpoly(&["--json", "construct", "torus44", "1", "2"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["report"]["kind"], "rotation");
    assert_eq!(v["report"]["is_chiral"], true);
    assert_eq!(v["report"]["flags"], 40);
}

#[test]
fn construct_amalgam() {
    let o = regpoly(&["construct", "amalgam", "coxeter:4,3", "torus36:1,1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("group order       288"));
}

#[test]
fn construct_with_extra_relator() {
    let o = regpoly(&["--json", "construct", "coxeter", "3", "5", "--relator", "(r0 r1 r2)^5"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["report"]["order"], 60);
}

#[test]
fn infinite_group_hits_the_limit() {
    let o = with_stdin(&["analyze", "-"], "rank 4\nschlafli 4 3 4\n");
    assert_eq!(code(&o), 2);
    let o = with_stdin(
        &["--json", "--max-cosets", "1000", "analyze", "-"],
        "rank 3\nschlafli 4 4\n",
    );
    assert_eq!(code(&o), 2);
    assert_eq!(json(&o)["exit_code"], 2);
}

#[test]
fn non_c_group_fails() {
    let o = regpoly(&["--json", "analyze", &corpus("identified-mirrors")]);
    assert_eq!(code(&o), 1);
    let v = json(&o);
    assert_eq!(v["c_group"], false);
    assert_eq!(v["witness"]["i"], serde_json::json!([0]));
    assert_eq!(v["witness"]["j"], serde_json::json!([2]));
}

#[test]
fn clean_analysis() {
    let o = regpoly(&["analyze", &corpus("chiral-3-3-8")]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("chiral polytope of rank 4"));
}

#[test]
fn input_errors() {
    assert_eq!(code(&regpoly(&["analyze", "/definitely/not/here.pres"])), 3);
    assert_eq!(code(&with_stdin(&["analyze", "-"], "rank 3\nrel (r0 r9)^2\n")), 3);
    assert_eq!(code(&regpoly(&["construct", "torus44", "1"])), 3);
    assert_eq!(code(&regpoly(&["construct", "lambda", "6", "4"])), 3);
    assert_eq!(code(&regpoly(&["frobnicate"])), 3);
    assert_eq!(code(&regpoly(&["--max-cosets", "0", "list"])), 3);
    assert_eq!(code(&regpoly(&["--help"])), 0);
}

#[test]
fn max_cosets_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_regpoly"))
        .args(["construct", "coxeter", "3", "3", "3"])
        .env("REGPOLY_MAX_COSETS", "50")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
}

#[test]
fn verify_table3_rank_8() {
    let o = regpoly(&["verify", "table3", "--rank", "8"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("rank 8 cc: at least 207360"), "{out}");
    assert!(out.contains("rank 8 cr: at least 564480"), "{out}");
}

#[test]
fn verify_suites_pass() {
    for suite in ["table2", "table3", "props"] {
        let o = regpoly(&["--json", "verify", suite]);
        assert_eq!(code(&o), 0, "{suite}: {}", stdout(&o));
        let v = json(&o);
        assert_eq!(v["passed"], true);
        assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    }
}

#[test]
fn list_names_the_corpus() {
    let o = regpoly(&["--json", "list"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["corpus"].as_array().unwrap().len(), 35);
}
