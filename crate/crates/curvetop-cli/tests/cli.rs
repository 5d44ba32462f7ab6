//! The `curvetop` binary: exit codes, input forms and output formats.

use std::path::PathBuf;
use std::process::{Command, Output};

fn curvetop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_curvetop")).args(args).output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    curvetop(args).status.code().expect("exit code")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("curvetop-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

fn stdout(args: &[&str]) -> String {
    let out = curvetop(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn json_for_the_circle() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["analyze", "--expr", "x^2 + y^2 - 1"])).unwrap();
    assert_eq!(v["n_special"], 2);
    // The JSON list always carries the vertical-line decorations.
    let want = serde_json::json!([[0, 0], [[1, 0], [[0, 0], [0, 2], [0, 0]]], [2, 0], [[1, 0], [[0, 0], [2, 0], [0, 0]]], [0, 0]]);
    assert_eq!(v["list"], want);
    assert_eq!(v["components"], 1);
    assert_eq!(v["euler_characteristic"], 0);
    assert_eq!(v["graph"]["vertices"].as_array().unwrap().len(), v["graph"]["edges"].as_array().unwrap().len());
    for key in ["alpha", "m", "crit", "left", "right", "vline"] {
        assert!(v["fibers"][0].get(key).is_some(), "fiber field {key}");
    }
    assert_eq!(v["between"][1]["count"], 2);
}

#[test]
fn list_text_and_other_formats() {
    assert_eq!(stdout(&["analyze", "--expr", "y^2 - x^3", "--format", "list-text"]).trim(), "[0,[1,[[0,0],[0,2],[0,0]]],2]");
    assert!(stdout(&["analyze", "--expr", "x*y - 1", "--format", "dot"]).contains("graph"));
    assert!(stdout(&["analyze", "--expr", "x*y - 1", "--format", "svg"]).contains("<svg"));
}

#[test]
fn text_and_json_input_files() {
    let text = scratch("node.txt", "y^2 - x^2*(x+1)\n");
    let json = scratch("node.json", r#"{"terms": [[0, 2, "1"], [3, 0, "-1"], [2, 0, "-1"]]}"#);
    let out = scratch("node.out", "");
    let a = stdout(&["analyze", "--input", text.to_str().unwrap(), "--format", "list-text"]);
    assert_eq!(code(&["analyze", "--input", json.to_str().unwrap(), "--format", "list-text", "--out", out.to_str().unwrap()]), 0);
    assert_eq!(a, std::fs::read_to_string(&out).unwrap());
    assert_eq!(a.trim(), "[0,[1,[[0,0],[0,2],[0,0]]],2,[1,[[0,0],[2,2],[0,0]]],2]");
    for p in [text, json, out] {
        std::fs::remove_file(p).ok();
    }
}

#[test]
fn stats_go_to_stderr() {
    let out = curvetop(&["analyze", "--expr", "x^2 + y^2 - 1", "--stats", "--format", "list-text"]);
    assert!(out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("special values    2"), "{err}");
    assert!(!String::from_utf8(out.stdout).unwrap().contains("special"));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["analyze", "--expr", "x^2 + 0.5"]), 2);
    assert_eq!(code(&["analyze", "--expr", "2x"]), 2);
    assert_eq!(code(&["analyze", "--input", "/nonexistent/curve.txt"]), 2);
    assert_eq!(code(&["analyze", "--expr", "(x^2 + y^2 - 1)^2"]), 3);
    assert_eq!(code(&["analyze", "--expr", "x^70 + y"]), 5);
    assert_eq!(code(&["analyze", "--expr", "x^3 + y", "--max-degree", "2"]), 5);
    assert_eq!(code(&["analyze", "--expr", "x^3 + y", "--max-degree", "3"]), 0);
}
