//! End-to-end checks of the `valence` binary: outputs and exit codes.

mod common;

use std::path::Path;
use std::process::{Command, Output};

use common::bundled_path;

fn valence(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_valence"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn path(name: &str) -> String {
    bundled_path(name).to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn member_exit_codes() {
    let ok = valence(&["member", &path("fig1_left"), "aabb"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout(&ok), "ACCEPTED\n");
    let no = valence(&["member", &path("fig1_left"), "ba"]);
    assert_eq!(no.status.code(), Some(1));
    assert_eq!(stdout(&no), "REJECTED\n");
    let exact = valence(&["member", "--exact", &path("fig1_right_fg"), "abab"]);
    assert_eq!(exact.status.code(), Some(0));
}

#[test]
fn member_exact_needs_stack_register() {
    let o = valence(&["member", "--exact", &path("z_ab"), "ab"]);
    assert_eq!(o.status.code(), Some(64));
    assert!(stderr(&o).starts_with("valence: "));
}

#[test]
fn dyck_and_minima() {
    let o = valence(&["dyck", "--one-sided", "x^-1 x"]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "NO\n".into()));
    let o = valence(&["dyck", "--two-sided", "x^-1 x"]);
    assert_eq!(stdout(&o), "YES\n");
    let o = valence(&["minima", "x x^-1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).is_empty());
    let o = valence(&["pad", "x x^-1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains('#'));
    let o = valence(&["pad", "x^-1 x"]);
    assert_eq!(o.status.code(), Some(65));
}

#[test]
fn enum_lists_words_in_order() {
    let o = valence(&["enum", &path("fig1_left"), "--max-len", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "ε\nab\naabb\nabab\n");
    let seq = valence(&["enum", "--sequential", &path("fig1_left"), "--max-len", "4"]);
    assert_eq!(stdout(&seq), stdout(&o));
}

#[test]
fn pad_construct_reproduces_bundled_documents() {
    for (register, name) in [("fg", "fig1_right_fg"), ("poly", "fig1_right_poly")] {
        let o = valence(&["pad-construct", "--register", register, &path("fig1_left")]);
        assert_eq!(o.status.code(), Some(0));
        let expect = std::fs::read_to_string(bundled_path(name)).unwrap();
        assert_eq!(stdout(&o), expect, "{name}");
    }
}

#[test]
fn compare_padded_with_original() {
    let o = valence(&["compare", &path("fig1_left"), &path("fig1_right_fg"), "--max-len", "8"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = valence(&[
        "compare", &path("fig1_left"), &path("fig1_right_fg"), "--max-len", "6", "--register", "poly",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = valence(&["compare", &path("fig1_left"), &path("equal_counts_fg"), "--max-len", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "> ba\n");
}

#[test]
fn product_and_transducer_roundtrip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = |n: &str| dir.path().join(n).to_string_lossy().into_owned();

    let o = valence(&["product", &path("z_ab"), &path("z_bc"), "-o", &out("p.json")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = valence(&["enum", &out("p.json"), "--max-len", "6"]);
    assert_eq!(stdout(&o), "ε\nabc\naabbcc\n");

    let o = valence(&["to-transducer", &path("fig1_left"), "-o", &out("t.json")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = valence(&["from-transducer", &out("t.json"), "--monoid", "polycyclic", "-o", &out("b.json")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = valence(&["compare", &path("fig1_left"), &out("b.json"), "--max-len", "8"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn normalize_and_grammar() {
    let o = valence(&["normalize", &path("fig1_right_fg")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"kind\": \"valence\""));
    let o = valence(&["to-grammar", &path("fig1_left")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("S -> "));
}

#[test]
fn error_exit_codes() {
    assert_eq!(valence(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(valence(&["member"]).status.code(), Some(64));
    assert_eq!(valence(&["--help"]).status.code(), Some(0));

    let missing = valence(&["member", "/nonexistent/a.json", "ab"]);
    assert_eq!(missing.status.code(), Some(66));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    let text = std::fs::read_to_string(bundled_path("fig1_left"))
        .unwrap()
        .replace("\"initial\": \"q\"", "\"initial\": \"z\"");
    std::fs::write(&bad, text).unwrap();
    let o = valence(&["member", &bad.to_string_lossy(), "ab"]);
    assert_eq!(o.status.code(), Some(65));
    assert!(stderr(&o).contains("initial"), "{}", stderr(&o));

    let o = valence(&["member", &path("fig1_left"), "abc"]);
    assert_eq!(o.status.code(), Some(65));
}

#[test]
fn every_bundled_document_loads() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("automata");
    for entry in std::fs::read_dir(dir).unwrap() {
        let p = entry.unwrap().path();
        let f = p.to_string_lossy();
        let o = valence(&["enum", &f, "--max-len", "3"]);
        assert_eq!(o.status.code(), Some(0), "{}: {}", p.display(), stderr(&o));
        let first = stdout(&o).lines().next().unwrap_or("ε").to_string();
        let o = valence(&["member", &f, &first]);
        assert_eq!(o.status.code(), Some(0), "{}: {first}", p.display());
        let o = valence(&["compare", &f, &f, "--max-len", "5"]);
        assert_eq!(o.status.code(), Some(0), "{}", p.display());
    }
}
