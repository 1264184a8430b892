//! End-to-end tests for the `fiedler` binary: exit codes, file round trips,
//! and byte-identical output across repeated invocations.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_fiedler");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("spawn fiedler")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn generate(dir: &Path, m: usize, k: usize) -> String {
    let path = dir.join(format!("fam_{m}_{k}.txt"));
    let path = path.to_str().unwrap().to_string();
    let out = run(&[
        "generate", "--m", &m.to_string(), "--base", "cycle", "--cone",
        &k.to_string(), "--out", &path,
    ]);
    assert!(out.status.success(), "generate failed: {out:?}");
    path
}

#[test]
fn generate_then_spectrum_bisect_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let path = generate(dir.path(), 3, 0);

    let spec = run(&["spectrum", &path]);
    assert!(spec.status.success());
    let text = stdout(&spec);
    assert!(text.contains("0.837722339832"), "lambda2 missing: {text}");

    let bisect = run(&["bisect", &path]);
    assert!(bisect.status.success());
    assert!(stdout(&bisect).contains("cut = 9"), "{}", stdout(&bisect));

    let oracle = run(&["oracle", &path]);
    assert!(oracle.status.success());
    assert!(stdout(&oracle).contains("cut = 6"), "{}", stdout(&oracle));
}

#[test]
fn generated_file_parses_back_with_matching_order() {
    let dir = tempfile::tempdir().unwrap();
    let path = generate(dir.path(), 4, 2);
    let text = fs::read_to_string(&path).unwrap();
    let first = text.lines().find(|l| !l.starts_with('#')).unwrap();
    assert_eq!(first.trim(), "n 18");
    let edge_lines = text
        .lines()
        .filter(|l| !l.starts_with('#') && !l.starts_with('n'))
        .count();
    // four 4-cycles, two matchings, the 4x4 join, then cones over 16 and 17
    assert_eq!(edge_lines, 16 + 8 + 16 + 16 + 17);
}

#[test]
fn verify_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let json1 = dir.path().join("a.json");
    let json2 = dir.path().join("b.json");
    let args = |out: &Path| {
        vec![
            "verify".to_string(),
            "--m-list".into(),
            "13,14".into(),
            "--k-list".into(),
            "0,1".into(),
            "--base".into(),
            "cycle".into(),
            "--json".into(),
            out.to_str().unwrap().into(),
        ]
    };
    let run1 = Command::new(BIN).args(args(&json1)).output().unwrap();
    let run2 = Command::new(BIN).args(args(&json2)).output().unwrap();
    assert!(run1.status.success());
    assert_eq!(run1.stdout, run2.stdout);
    assert_eq!(fs::read(&json1).unwrap(), fs::read(&json2).unwrap());
    let body = fs::read_to_string(&json1).unwrap();
    assert!(body.contains("\"spectral_cut\": 169"), "{body}");
}

#[test]
fn verify_csv_has_header_and_rows() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("report.csv");
    let out = run(&[
        "verify", "--m-list", "13", "--k-list", "0,1,2", "--base", "cycle",
        "--csv", csv.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let body = fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = body.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[0].starts_with("n,m,k,lambda2_numeric"));
}

#[test]
fn export_writes_dot() {
    let dir = tempfile::tempdir().unwrap();
    let path = generate(dir.path(), 3, 1);
    let dot = dir.path().join("fam.dot");
    let out = run(&["export", &path, "--dot", dot.to_str().unwrap()]);
    assert!(out.status.success());
    let body = fs::read_to_string(&dot).unwrap();
    assert!(body.starts_with("graph {"));
    assert!(body.contains("0 -- "));
}

#[test]
fn invalid_input_exits_with_code_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "4\n0 0\n").unwrap();
    let out = run(&["spectrum", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());

    let missing = run(&["bisect", "/nonexistent/graph.txt"]);
    assert_eq!(missing.status.code(), Some(1));

    let badgen = run(&[
        "generate", "--m", "1", "--base", "cycle", "--cone", "0", "--out",
        dir.path().join("x.txt").to_str().unwrap(),
    ]);
    assert_eq!(badgen.status.code(), Some(1));
}
