//! The `qcalc` binary: exit codes, diagnostics and output stability.

mod common;

use std::io::Write;
use std::process::{Command, Output};

fn qcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcalc")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn temp_workspace(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".qws").tempfile().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn exit_code_matrix() {
    let f = common::fixture_path();
    let cases: &[(&[&str], i32)] = &[
        (&["validate", &f], 0),
        (&["presheaves", &f, "X"], 0),
        (&["check", &f, "X", "--property", "m-cocomplete"], 0),
        (&["check", &f, "X", "--property", "cocomplete"], 1),
        (&["check", &f, "X", "--property", "cauchy-complete"], 1),
        (&["check", &f, "Star", "--property", "cocomplete"], 0),
        (&["check", &f, "X", "--property", "skeletal"], 0),
        (&["cauchy", &f, "X"], 0),
        (&["morita", &f, "X", "X"], 0),
        (&["morita", &f, "X", "D"], 1),
        (&["dist", &f, "Mu", "--property", "free-extension"], 0),
        (&["dist", &f, "Id", "--property", "phat-hom"], 0),
        (&["dist", &f, "Id", "--property", "left-adjoint"], 0),
        (&["check", &f, "Nope", "--property", "skeletal"], 2),
        (&["validate", "/nonexistent/file.qws"], 3),
        (&["check", &f, "X"], 3),
        (&["frobnicate"], 3),
        (&["--help"], 0),
        (&["--version"], 0),
    ];
    for (args, want) in cases {
        let o = qcalc(args);
        assert_eq!(code(&o), *want, "qcalc {args:?}\nstdout: {}\nstderr: {}", stdout(&o), stderr(&o));
    }
}

#[test]
fn paper_reports_the_single_mismatch() {
    let o = qcalc(&["paper"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.contains("cells compared: 36, mismatches: 1"), "{out}");
    assert!(out.contains("expected q, computed p"), "{out}");
    assert!(out.contains("real line closed forms: pass"), "{out}");
}

#[test]
fn parse_error_reports_line_and_column() {
    let f = temp_workspace("lattice L\n  elements a b\n  leq a b\nend\nlattice L\n  elements c\nend\n");
    let o = qcalc(&["validate", f.path().to_str().unwrap()]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("line 5, column 9"), "{}", stderr(&o));

    let f = temp_workspace("lattice L\n  elements a b\n  leq a b\n");
    let o = qcalc(&["validate", f.path().to_str().unwrap()]);
    assert_eq!(code(&o), 3, "{}", stderr(&o));
}

#[test]
fn validation_error_exits_two() {
    let text = "lattice L\n  elements a b\n  leq a b\nend\n\
                quantaloid Q\n  objects *\n  hom * * L\n  unit * a\n  compose * * * builtin meet\nend\n";
    let f = temp_workspace(text);
    let o = qcalc(&["validate", f.path().to_str().unwrap()]);
    assert_eq!(code(&o), 2, "{}", stderr(&o));
    assert!(stderr(&o).contains("line 5"), "{}", stderr(&o));
}

#[test]
fn empty_workspace_is_valid() {
    let f = temp_workspace("");
    let o = qcalc(&["validate", f.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
}

#[test]
fn json_output_is_deterministic() {
    let f = common::fixture_path();
    for args in [
        vec!["presheaves", &f, "X", "--format", "json"],
        vec!["check", &f, "X", "--property", "cocomplete", "--format", "json"],
        vec!["cauchy", &f, "X", "--format", "json"],
        vec!["--format", "json", "laws", "--builtin", "--suite", "theorem4", "--random", "10", "--seed", "3"],
    ] {
        let a = qcalc(&args);
        let b = qcalc(&args);
        assert_eq!(stdout(&a), stdout(&b), "{args:?}");
        serde_json::from_str::<serde_json::Value>(&stdout(&a)).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    }
}

#[test]
fn laws_replay_seeded_corpus() {
    let o = qcalc(&["laws", "--builtin", "--suite", "theorem4", "--random", "20", "--seed", "42"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn search_cap_override_is_an_error() {
    let o = Command::new(env!("CARGO_BIN_EXE_qcalc"))
        .args(["presheaves", &common::fixture_path(), "X"])
        .env("QCALC_SEARCH_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2, "{}", stdout(&o));
    assert!(stderr(&o).contains("above the cap of 3"), "{}", stderr(&o));
}
