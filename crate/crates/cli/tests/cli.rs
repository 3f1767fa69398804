use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn softtop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_softtop")).args(args).output().unwrap()
}

fn run(args: &[&str]) -> (i32, String) {
    let out = softtop(args);
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn topology_checks() {
    assert_eq!(run(&["check-topology", &fixture("p-space.json")]), (0, "valid\n".into()));
    let (code, out) = run(&["check-topology", &fixture("missing-absolute.json")]);
    assert_eq!(code, 1);
    assert!(out.contains("axiom 1"), "{out}");
}

#[test]
fn malformed_input_exits_with_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"universe\": [\"a\"],\n \"params\": 3}").unwrap();
    let out = softtop(&["check-topology", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(softtop(&["check-topology", "/nonexistent.json"]).status.code(), Some(2));
    assert_eq!(softtop(&["suite", "--prop", "bogus"]).status.code(), Some(2));
}

#[test]
fn continuity_reports_both_notions() {
    let (code, out) = run(&["check-continuity", &fixture("identity-point.json")]);
    assert_eq!(code, 0);
    assert!(out.contains("soft continuous: true"));
    assert!(out.contains("inverse images open: false (preimage of {(e1,{}),(e2,{v})} is not open)"), "{out}");
}

#[test]
fn connectedness_and_paths() {
    let (code, out) = run(&["check-connected", &fixture("p-space.json"), "--subset", "1,3"]);
    assert_eq!(code, 0);
    assert!(out.contains("soft connected: true"));
    assert_eq!(run(&["check-path", &fixture("jump-1-3.json")]).0, 0);
    assert_eq!(run(&["check-path", &fixture("constant-2.json")]).0, 0);
}

#[test]
fn groups_and_morphisms() {
    assert_eq!(run(&["check-group", &fixture("z4-coset.json")]).0, 0);
    let (code, out) = run(&["check-group", &fixture("z4-sierpinski.json")]);
    assert_eq!(code, 1);
    assert!(out.contains("multiplication"), "{out}");
    assert_eq!(run(&["check-morphism", &fixture("z4-mod-2.json")]).0, 0);
    assert_eq!(run(&["check-morphism", &fixture("z2-into-z4.json")]).0, 1);
}

#[test]
fn products_are_valid_documents() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out) = run(&["product", &fixture("z2-discrete.json"), &fixture("z2-discrete.json")]);
    assert_eq!(code, 0);
    let p = dir.path().join("square.json");
    std::fs::write(&p, out).unwrap();
    assert_eq!(run(&["check-group", p.to_str().unwrap()]).0, 0);
}

#[test]
fn enumeration_counts() {
    let (code, out) = run(&["enumerate", "--universe", "2", "--params", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 4);
    assert_eq!(run(&["enumerate", "--universe", "3", "--params", "1"]).1.lines().count(), 29);
    assert_eq!(softtop(&["enumerate", "--universe", "5", "--params", "1"]).status.code(), Some(2));
}

#[test]
fn search_exit_codes() {
    let (code, out) = run(&["search", "--prop", "not-thm-3.4", "--seed", "3", "--budget", "10"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("not-thm-3.4 ") && out.contains(" FAILS "), "{out}");
    let (code, out) = run(&["search", "--prop", "thm-5.11", "--seed", "3", "--budget", "10"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("exhausted"));
}

#[test]
fn thread_count_does_not_change_reports() {
    let one = Command::new(env!("CARGO_BIN_EXE_softtop"))
        .args(["suite", "--prop", "thm-3.4", "--prop", "oracle-path", "--seed", "5"])
        .env("SOFTTOP_THREADS", "1")
        .output()
        .unwrap();
    let many = Command::new(env!("CARGO_BIN_EXE_softtop"))
        .args(["suite", "--prop", "thm-3.4", "--prop", "oracle-path", "--seed", "5"])
        .env("SOFTTOP_THREADS", "4")
        .output()
        .unwrap();
    assert!(one.status.success());
    assert_eq!(one.stdout, many.stdout);
}
