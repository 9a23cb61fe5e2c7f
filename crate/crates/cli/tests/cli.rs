use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn ramify() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_ramify"));
    c.env_remove("RAMIFY_PRECISION");
    c
}

fn run(args: &[&str]) -> Output {
    ramify().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn emit(dir: &Path, name: &str) -> PathBuf {
    let o = run(&["catalog", "--emit", name]);
    assert!(o.status.success());
    let path = dir.join(format!("{name}.json"));
    std::fs::write(&path, &o.stdout).unwrap();
    path
}

fn report(path: &Path, extra: &[&str]) -> Output {
    let mut args = vec!["report", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    run(&args)
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn catalog_lists_the_examples() {
    let o = run(&["catalog", "--list"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().count() >= 8);
    let o = run(&["catalog", "--emit", "no_such_entry"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("UnknownName"));
}

#[test]
fn flagship_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = emit(dir.path(), "e4_case3");
    let o = report(&path, &[]);
    assert!(o.status.success(), "{}", stderr(&o));
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["schema"], "ramify/1");
    assert_eq!(doc["extension"]["case"], "III");
    assert_eq!(doc["conductors"]["ksw"], 5);
    assert_eq!(doc["conductors"]["sw"], serde_json::json!({"num": 6, "den": 1}));
    assert_eq!(doc["depth"]["d_k"], serde_json::json!({"num": 7, "den": 2}));
    assert_eq!(doc["input"]["sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn artin_schreier_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = emit(dir.path(), "e1_artin_schreier");
    let o = report(&path, &[]);
    assert!(o.status.success());
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["extension"]["case"], "I");
    assert_eq!(doc["conductors"]["ksw"], 2);
}

#[test]
fn starved_precision_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = emit(dir.path(), "e4_case3");
    let o = report(&path, &["--precision", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("precision exhausted"));
    assert!(stderr(&o).contains("--precision"));
    assert!(o.stdout.is_empty());
    let o = ramify().args(["report", path.to_str().unwrap()]).env("RAMIFY_PRECISION", "2").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = ramify().args(["report", path.to_str().unwrap(), "--precision", "64"]).env("RAMIFY_PRECISION", "2").output().unwrap();
    assert!(o.status.success());
}

#[test]
fn validation_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let not_root = write(
        dir.path(),
        "not_root.json",
        r#"{"base": {"kind": "laurent", "var": "t", "residue": {"kind": "finite", "p": 3}},
            "minpoly": {"0": {"1": -1}, "3": 1},
            "action": {"explicit": [{"1": 1}, {"0": 1, "1": 1}, {"0": 2, "1": 1}]},
            "group": "cyclic:3"}"#,
    );
    let o = report(&not_root, &[]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("NotARoot"), "{}", stderr(&o));

    let malformed = write(dir.path(), "bad.json", "{\n  \"base\": [1,\n");
    let o = report(&malformed, &[]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line"));

    let missing = write(dir.path(), "missing.json", r#"{"base": {"kind": "padic", "p": 3}, "group": "cyclic:3"}"#);
    let o = report(&missing, &[]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("$.minpoly"));

    let o = run(&["report", dir.path().join("absent.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn unknown_suite_is_rejected() {
    let o = run(&["check", "--catalog", "--suite", "nope"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("unknown suite"));
}

#[test]
fn full_catalog_suite_passes() {
    let o = run(&["check", "--catalog", "--suite", "all"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn flagship_suites() {
    let dir = tempfile::tempdir().unwrap();
    let path = emit(dir.path(), "e4_case3");
    let o = run(&["check", path.to_str().unwrap(), "--suite", "theorem1"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("PASS") && l.contains("theorem1.hilbert_iff_herbrand")));
    let o = run(&["check", path.to_str().unwrap(), "--suite", "hyodo"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("STRICT") && l.contains("hyodo.first_inequality") && l.contains("slack=1/4")));
}

#[test]
fn reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let path = emit(dir.path(), "e4_case3");
    let a = report(&path, &[]);
    let b = report(&path, &["--json"]);
    assert_eq!(a.stdout, b.stdout);
    let out = dir.path().join("out.json");
    let c = report(&path, &["--out", out.to_str().unwrap()]);
    assert!(c.status.success());
    assert_eq!(std::fs::read(&out).unwrap(), a.stdout);
    // re-emitting gives the file that was reported
    let again = emit(dir.path(), "e4_case3");
    assert_eq!(std::fs::read(&again).unwrap(), std::fs::read(&path).unwrap());
}

#[test]
fn every_emission_reports() {
    let dir = tempfile::tempdir().unwrap();
    let list = stdout(&run(&["catalog", "--list"]));
    for name in list.lines().map(|l| l.split_whitespace().next().unwrap()) {
        let path = emit(dir.path(), name);
        let o = report(&path, &["--table"]);
        assert!(o.status.success(), "{name}: {}", stderr(&o));
        assert!(stdout(&o).contains("ksw"));
    }
}
