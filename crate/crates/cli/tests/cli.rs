//! End-to-end runs of the `lascoux` binary.

use std::io::Write;
use std::process::{Command, Output};

use lascoux_cli::format::{expansion_from_json, parse_expansion, parse_pair, parse_polynomial};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lascoux"))
        .args(args)
        .env("LASCOUX_WORKERS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("lascoux-cli-{}-{name}", std::process::id()));
    std::fs::File::create(&path)
        .and_then(|mut f| f.write_all(contents.as_bytes()))
        .expect("temp file written");
    path
}

#[test]
fn lascoux_prints_a_polynomial_that_parses_back() {
    let out = run(&["lascoux", "--alpha", "0,2,1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(
        text.trim(),
        "x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x2^2*x3 + b*x1^2*x2^2 + 2*b*x1^2*x2*x3 \
         + 2*b*x1*x2^2*x3 + b^2*x1^2*x2^2*x3"
    );
    let p = parse_polynomial(&text, 3).unwrap();
    assert_eq!(p.to_string(), text.trim());

    let key = run(&["lascoux", "--alpha", "0,2,1", "--beta0"]);
    assert_eq!(stdout(&key).trim(), "x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x2^2*x3");
}

#[test]
fn expand_text_and_json_agree() {
    let text = run(&["expand", "--alpha", "1,0,2", "--w", "321", "--n", "3"]);
    assert!(text.status.success());
    let e = parse_expansion(&stdout(&text)).unwrap();
    assert_eq!(e.total_multiplicity(), 19u32.into());
    assert!(stdout(&text).starts_with("L_(1,1,4) : 1\n"));
    assert!(stdout(&text).ends_with("b^3 L_(3,2,4) : 1\n"));

    let json = run(&["expand", "--alpha", "1,0,2", "--w", "3,2,1", "--n", "3", "--json"]);
    assert!(json.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(expansion_from_json(&value).unwrap(), e);
}

#[test]
fn expand_without_verification_gives_the_same_answer() {
    let checked = run(&["expand", "--alpha", "0,1", "--w", "21"]);
    let unchecked = run(&["expand", "--alpha", "0,1", "--w", "21", "--no-verify"]);
    assert!(checked.status.success() && unchecked.status.success());
    assert_eq!(stdout(&checked), stdout(&unchecked));
}

#[test]
fn grothendieck_expansion_of_the_longest_element() {
    let out = run(&["grothendieck", "--w", "321"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "L_(2,1) : 1");
}

#[test]
fn insert_reports_trace_letter_and_tableau() {
    let path = temp_file("insert.txt", "1 2 3 5\n2 5 6\n3 6\n6 7\n8\n");
    let out = run(&["insert", "--tableau", path.to_str().unwrap(), "--cell", "4,2", "--alpha", "0"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "trace: IR, DR, D, NR\nm: 3\nP':\n1 2 3 5\n2 5 6\n3 7\n6 8\n8\n"
    );
    let bad = run(&["insert", "--tableau", path.to_str().unwrap(), "--cell", "1,1", "--alpha", "0"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn psi_and_its_inverse_round_trip() {
    let path = temp_file("pair.txt", "1 2\n3\n\n3 2,1\n2,1\n");
    let out = run(&["psi", "--pair", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "(21313, 11223)");

    let back = run(&["psi", "--inverse", "(21313, 11223)"]);
    assert!(back.status.success());
    let pair = parse_pair(&stdout(&back)).unwrap();
    assert_eq!(pair, parse_pair("1 2\n3\n\n3 2,1\n2,1\n").unwrap());
}

#[test]
fn verify_suite_passes() {
    let out = run(&["verify", "--suite", "setops", "--seed", "3", "--trials", "200"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.lines().filter(|l| l.starts_with("PASS")).count() >= 17);
    assert!(!text.contains("FAIL"));
}

#[test]
fn bad_input_is_a_usage_error() {
    assert_eq!(run(&["expand", "--alpha", "1,x", "--w", "21"]).status.code(), Some(2));
    assert_eq!(run(&["expand", "--alpha", "1", "--w", "22"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
    let bad_workers = Command::new(env!("CARGO_BIN_EXE_lascoux"))
        .args(["lascoux", "--alpha", "1"])
        .env("LASCOUX_WORKERS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad_workers.status.code(), Some(2));
}
