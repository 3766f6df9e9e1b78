use std::fs;
use std::process::Command;

use serde_json::Value;
use vsl_cli::{run, EXAMPLE_NAMES, EXIT_CHECK_FAILED, EXIT_INPUT, EXIT_OK};
use vsl_core::evaluator::ResultDocument;

fn vsl(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let argv = std::iter::once("vsl").chain(args.iter().copied());
    let code = run(argv, &mut out);
    (code, String::from_utf8(out).unwrap())
}

fn example_file(dir: &tempfile::TempDir, name: &str) -> String {
    let (code, text) = vsl(&["examples", name]);
    assert_eq!(code, EXIT_OK);
    let path = dir.path().join(format!("{name}.vsl"));
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn eval_prints_the_example_values() {
    let dir = tempfile::tempdir().unwrap();
    let path = example_file(&dir, "example1");
    let (code, out) = vsl(&["eval", &path]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("bracket: A^12 - A^6 - A^4 - 2 A^2 - A^-2"), "{out}");
    assert!(out.contains("R: A^12 h - A^4 h - A^6 - 2 A^2 - A^-2"));
    assert!(out.contains("phi: A^12 - A^4"));
    assert!(out.contains("psi: -A^6 - 2 A^2 - A^-2"));
    assert!(out.contains("k: 1"));
}

#[test]
fn json_output_follows_the_schema() {
    let dir = tempfile::tempdir().unwrap();
    let path = example_file(&dir, "example1");
    let (code, out) = vsl(&["eval", "--output", "json", &path]);
    assert_eq!(code, EXIT_OK);
    let value: Value = serde_json::from_str(&out).unwrap();
    for key in ["k", "c", "s", "v", "writhe", "bracket", "r", "phi", "psi"] {
        assert!(value.get(key).is_some(), "missing {key}");
    }
    assert_eq!(value["r"][0], serde_json::json!([-2, 0, "-1"]));
    let doc: ResultDocument = serde_json::from_value(value).unwrap();
    assert_eq!(doc.r.to_string(), "A^12 h - A^4 h - A^6 - 2 A^2 - A^-2");
    assert_eq!((doc.k, doc.c, doc.s, doc.v, doc.writhe), (1, 1, 1, 2, -1));
}

#[test]
fn states_dump_has_one_row_per_state() {
    let dir = tempfile::tempdir().unwrap();
    let path = example_file(&dir, "example1");
    let (code, out) = vsl(&["states", &path]);
    assert_eq!(code, EXIT_OK);
    let rows: Vec<Vec<&str>> = out
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim_start().starts_with("mask"))
        .map(|l| l.split_whitespace().collect())
        .collect();
    assert_eq!(rows.len(), 4);
    let columns: Vec<&[&str]> = rows.iter().map(|r| &r[1..7]).collect();
    assert_eq!(columns[0], ["1", "0", "1", "0", "1", "1"]);
    assert_eq!(columns[1], ["0", "1", "1", "0", "1", "-1"]);
    assert_eq!(columns[2], ["1", "0", "0", "1", "1", "-1"]);
    assert_eq!(columns[3], ["0", "1", "0", "1", "2", "-1"]);

    let (_, json) = vsl(&["states", "--output", "json", &path]);
    let value: Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value.as_array().unwrap().len(), 4);

    let trefoil = example_file(&dir, "trefoil");
    let (_, json) = vsl(&["states", "--output", "json", &trefoil]);
    let value: Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value.as_array().unwrap().len(), 8);
}

#[test]
fn written_examples_all_validate() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("examples");
    let (code, listing) = vsl(&["examples", "--write", target.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(listing.lines().count(), EXAMPLE_NAMES.len());
    for path in listing.lines() {
        let (code, out) = vsl(&["validate", path]);
        assert_eq!(code, EXIT_OK, "{path}: {out}");
    }
}

#[test]
fn check_passes_for_all_moves_and_single_moves() {
    let (code, out) = vsl(&["check", "--seed", "3"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 10);
    let (code, out) = vsl(&["check", "V3c"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("PASS V3c"));
}

#[test]
fn errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(vsl(&["eval", "missing.vsl"]).0, EXIT_INPUT);
    let bad = dir.path().join("bad.vsl");
    fs::write(&bad, "crossing 1 P a b c d\n").unwrap();
    let (code, out) = vsl(&["validate", bad.to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
    assert!(out.contains("error"), "{out}");
    assert_eq!(vsl(&["check", "R9"]).0, EXIT_INPUT);
    assert_eq!(vsl(&["examples", "nope"]).0, EXIT_INPUT);
    assert_eq!(vsl(&["frobnicate"]).0, EXIT_INPUT);
}

#[test]
fn state_budget_is_enforced() {
    let dir = tempfile::tempdir().unwrap();
    let path = example_file(&dir, "trefoil");
    assert_eq!(vsl(&["eval", "--max-states", "4", &path]).0, EXIT_INPUT);
    assert_eq!(vsl(&["eval", "--max-states", "8", &path]).0, EXIT_OK);
}

#[test]
fn binary_exit_codes() {
    let exe = env!("CARGO_BIN_EXE_vsl");
    let status = Command::new(exe).args(["eval", "missing.vsl"]).output().unwrap();
    assert_eq!(status.status.code(), Some(EXIT_INPUT));
    assert!(String::from_utf8_lossy(&status.stderr).contains("missing.vsl"));
    let listing = Command::new(exe).arg("examples").output().unwrap();
    assert_eq!(listing.status.code(), Some(EXIT_OK));
    assert_ne!(EXIT_CHECK_FAILED, EXIT_OK);
}
