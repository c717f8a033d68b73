use std::path::Path;
use std::process::{Command, Output};

use homcode_core::report::AnalysisReport;
use homcode_core::verify::SuiteSummary;
use homcode_core::Rational;

fn homcode(args: &[&str], cache: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homcode"))
        .args(args)
        .env("HOMCODE_CACHE_DIR", cache)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn lambda_both_methods() {
    let dir = tempfile::tempdir().unwrap();
    let out = homcode(
        &["lambda", "S3", "C6", "--method", "both", "--json"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let report: AnalysisReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report.lambda_brute, Some(Rational::new(1, 2)));
    let verdict = report.formula_verdict.unwrap();
    assert!(verdict.applicable);
    assert_eq!(verdict.value, Rational::new(1, 2));
    assert!(!report.discrepancy);
}

#[test]
fn lambda_a5_brute_text() {
    let dir = tempfile::tempdir().unwrap();
    let out = homcode(
        &["lambda", "A5", "A5", "--method", "brute", "--no-cache"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("lambda (brute force) = 1/10"), "{text}");
    assert!(text.contains("witness phi"));
}

#[test]
fn formula_outside_its_range_warns() {
    let dir = tempfile::tempdir().unwrap();
    let out = homcode(
        &["lambda", "A5", "A5", "--method", "formula", "--json"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("warning"));
    let report: AnalysisReport = serde_json::from_str(&stdout(&out)).unwrap();
    let verdict = report.formula_verdict.unwrap();
    assert!(!verdict.applicable);
    assert_eq!(verdict.value, Rational::ZERO);
    assert!(report.lambda_brute.is_none());
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let code = |args: &[&str]| homcode(args, dir.path()).status.code();
    assert_eq!(code(&["lambda", "S3", "C1"]), Some(3));
    assert_eq!(code(&["lambda", "S3", "X9"]), Some(1));
    assert_eq!(code(&["lambda", "S3"]), Some(1));
    assert_eq!(code(&["frobnicate"]), Some(1));
    assert_eq!(code(&["lambda", "A7", "C2"]), Some(2));
    assert_eq!(code(&["homs", "E256", "S4xC2", "--count"]), Some(2));
    assert_eq!(code(&["--help"]), Some(0));
}

#[test]
fn cached_results_are_identical() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["lambda", "D6", "S4", "--json"];
    let first = homcode(&args, dir.path());
    assert_eq!(first.status.code(), Some(0));
    let entries = std::fs::read_dir(dir.path()).unwrap().count();
    assert_eq!(entries, 1);
    let second = homcode(&args, dir.path());
    assert_eq!(stdout(&first), stdout(&second));
    let uncached = homcode(&["lambda", "D6", "S4", "--json", "--no-cache"], dir.path());
    assert_eq!(stdout(&first), stdout(&uncached));
}

#[test]
fn group_documents() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = dir.path().join("c5.json");
    std::fs::write(&c5, r#"{"degree": 5, "generators": [[1,2,3,4,5]]}"#).unwrap();
    let c2 = dir.path().join("c2.json");
    std::fs::write(&c2, r#"{"cayley": [[0,1],[1,0]]}"#).unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"degree": 3, "generators": [[1,1,2]]}"#).unwrap();
    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, "{\"degree\": 3,\n \"generators\": [[1,2]\n").unwrap();

    let out = homcode(
        &["homs", c5.to_str().unwrap(), "C10", "--count"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "5");
    let out = homcode(&["homs", c2.to_str().unwrap(), "C2", "--list"], dir.path());
    assert_eq!(stdout(&out), "[0, 0]\n[0, 1]\n");

    let out = homcode(&["analyze", bad.to_str().unwrap()], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("permutation"), "{}", stderr(&out));
    let out = homcode(&["analyze", broken.to_str().unwrap()], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("line"), "{}", stderr(&out));
}

#[test]
fn analyze_reports() {
    let dir = tempfile::tempdir().unwrap();
    let json = |name: &str| -> serde_json::Value {
        let out = homcode(&["analyze", name, "--json"], dir.path());
        assert_eq!(out.status.code(), Some(0));
        serde_json::from_str(&stdout(&out)).unwrap()
    };
    let s3 = json("S3");
    assert_eq!(s3["normal_indices"], serde_json::json!([2, 6]));
    assert_eq!(
        (s3["solvable"].as_bool(), s3["nilpotent"].as_bool()),
        (Some(true), Some(false))
    );
    let a5 = json("A5");
    assert_eq!(a5["normal_indices"], serde_json::json!([60]));
    assert_eq!(a5["solvable"], false);
    let c12 = json("C12");
    assert_eq!(c12["normal_indices"], serde_json::json!([2, 3, 4, 6, 12]));
    assert_eq!(c12["abelian"], true);
}

#[test]
fn homs_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = homcode(&["homs", "C2", "C2", "--list", "--json"], dir.path());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["count"], 2);
    assert_eq!(doc["homomorphisms"], serde_json::json!([[0, 0], [0, 1]]));
    let out = homcode(&["homs", "C2", "C2"], dir.path());
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "verify",
        "--suite",
        "props",
        "--max-order",
        "24",
        "--seed",
        "7",
        "--json",
        "--jobs",
        "2",
    ];
    let a = homcode(&args, dir.path());
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    let b = homcode(&args, dir.path());
    assert_eq!(stdout(&a), stdout(&b));
    let summary: SuiteSummary = serde_json::from_str(&stdout(&a)).unwrap();
    assert!(summary.is_success());
    assert_eq!(summary.config.seed, 7);

    let out = homcode(&["verify", "--suite", "simple"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("lambda-A5-A6"));
    assert_eq!(
        homcode(&["verify", "--suite", "bogus"], dir.path())
            .status
            .code(),
        Some(1)
    );
}
