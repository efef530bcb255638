use std::process::{Command, Output};

fn quandle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quandle"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn build_r4() {
    let out = quandle(&["build", "--family", "dihedral", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["order"], 4);
    assert_eq!(json["rhd"], serde_json::json!([[0, 2, 0, 2], [3, 1, 3, 1], [2, 0, 2, 0], [1, 3, 1, 3]]));
    assert_eq!(stdout(&quandle(&["build", "dihedral(4)"])), stdout(&out));
}

#[test]
fn build_s4_generalized_alexander() {
    let out = quandle(&["build", "--family", "gen_alexander", "--group", "S4", "--phi", "inner:(12)"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["order"], 24);
    // quoted element names are accepted too
    let quoted = quandle(&["build", "--family", "gen_alexander", "--group", "S4", "--phi", "inner:\"(12)\""]);
    assert_eq!(stdout(&quoted), stdout(&out));
}

#[test]
fn raw_table_with_broken_idempotency() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"order":2,"names":["a","b"],"rhd":[[1,1],[0,0]]}"#).unwrap();
    let out = quandle(&["build", "--family", "raw", "--raw-path", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("idempotency"), "{}", stderr(&out));
}

#[test]
fn raw_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r5.json");
    let out = quandle(&["build", "dihedral(5)", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let spec = format!("raw({})", path.display());
    let summary = stdout(&quandle(&["analyze", &spec]));
    assert!(summary.ends_with("summary: 1 component, size 5, complete, degrees 5/5\n"), "{summary}");
}

#[test]
fn analyze_examples() {
    let r5 = stdout(&quandle(&["analyze", "--family", "dihedral", "--n", "5"]));
    assert!(r5.contains("summary: 1 component, size 5, complete, degrees 5/5\n"), "{r5}");

    let d6 = stdout(&quandle(&["analyze", "--family", "gen_alexander", "--group", "D6", "--t", "inner:r"]));
    assert!(
        d6.contains("summary: 4 components, size 3, diameter 2, degrees 2/2, not symmetric\n"),
        "{d6}"
    );

    let t7 = stdout(&quandle(&["analyze", "trivial(7)"]));
    assert!(t7.contains("summary: edgeless, 7 components\n"), "{t7}");

    let json: serde_json::Value =
        serde_json::from_str(&stdout(&quandle(&["analyze", "dihedral(4)", "--json", "--export", "json"]))).unwrap();
    assert_eq!(json["components"].as_array().unwrap().len(), 2);
    assert!(json["export"].as_str().unwrap().starts_with("{\"n\":4"));
}

#[test]
fn export_formats() {
    let dot = stdout(&quandle(&["export", "dihedral(3)"]));
    assert!(dot.starts_with("digraph cayley {\n"));
    assert_eq!(dot.matches("->").count(), 9);
    let adj = stdout(&quandle(&["export", "dihedral(4)", "--format", "adjlist"]));
    assert_eq!(adj, "0: 0 2\n1: 1 3\n2: 0 2\n3: 1 3\n");
    let bad = quandle(&["export", "dihedral(4)", "--format", "svg"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verify_dihedral_range() {
    let out = quandle(&["verify", "--check", "dihedral", "--range", "2..12"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS dihedral_quandle")).count(), 11);
    assert!(text.ends_with("11 reports: 11 passed, 0 failed\n"));
}

#[test]
fn verify_s4_example() {
    let out = quandle(&["verify", "--check", "s4_example", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["passed"], 1);
    assert_eq!(json["reports"][0]["theorem_id"], "s4_example");
}

#[test]
fn verify_defaults_pass() {
    let out = quandle(&["verify"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains(" passed, 0 failed\n"));
}

#[test]
fn verify_injected_failure() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("suite.json");
    std::fs::write(
        &path,
        r#"{"checks":["quandle_axioms"],"raw_tables":[{"label":"bad","rhd":[[0,2,0],[2,1,1],[1,0,2]]}]}"#,
    )
    .unwrap();
    let out = quandle(&["verify", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL quandle_axioms bad: self-distributivity fails"));
}

#[test]
fn output_is_reproducible() {
    for args in [
        &["verify", "--check", "dihedral_inner", "--range", "2..6"][..],
        &["verify", "--check", "takasaki", "--json"][..],
        &["analyze", "gen_alexander(S4; inner:(12))", "--export", "dot"][..],
    ] {
        assert_eq!(quandle(args).stdout, quandle(args).stdout, "{args:?}");
    }
}

#[test]
fn isomorphic_verdicts() {
    let out = quandle(&[
        "isomorphic",
        "alexander(Z4xZ4; matrix:[[0,1],[3,2]])",
        "alexander(Z4xZ4; matrix:[[1,2],[2,1]])",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("isomorphic\n"));

    let out = quandle(&["isomorphic", "dihedral(4)", "trivial(4)", "--json"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["isomorphic"], false);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["analyze", "dihedral(x)"][..],
        &["build", "--family", "alexander", "--group", "Z4"][..],
        &["build", "--family", "alexander", "--group", "S3", "--phi", "id"][..],
        &["build", "--family", "alexander", "--group", "Z4xZ4", "--phi", "matrix:[[2,0],[0,2]]"][..],
        &["build", "--family", "gen_alexander", "--group", "S4", "--phi", "inner:(15)"][..],
        &["verify", "--check", "nonsense"][..],
        &["verify", "--config", "/nonexistent/suite.json"][..],
        &["bogus"][..],
    ] {
        let out = quandle(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", stderr(&out));
    }
}

#[test]
fn seed_is_accepted() {
    let out = quandle(&["--seed", "7", "analyze", "dihedral(3)"]);
    assert_eq!(out.status.code(), Some(0));
}
