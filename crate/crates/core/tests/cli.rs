use std::process::{Command, Output};

use maxtori::verify::{Report, CACHE_DIR_ENV};

fn verify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verify"))
        .args(args)
        .env_remove(CACHE_DIR_ENV)
        .output()
        .expect("run verify")
}

#[test]
fn passing_suite_exits_zero() {
    let out = verify(&["octonion"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS  octonion_alternativity"));
}

#[test]
fn failing_check_exits_one() {
    let out = verify(&["octonion", "--corrupt-octonion-table", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let report: Report = serde_json::from_slice(&out.stdout).unwrap();
    let alt = report.check("octonion_alternativity").unwrap();
    assert!(alt.detail.is_some());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(verify(&["e9"]).status.code(), Some(2));
    assert_eq!(verify(&["g2", "--format", "yaml"]).status.code(), Some(2));
    assert_eq!(verify(&[]).status.code(), Some(2));
}

#[test]
fn json_is_reproducible() {
    let a = verify(&["g2", "--format", "json", "--seed", "7"]);
    let b = verify(&["g2", "--format", "json", "--seed", "7", "--parallel", "1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn cache_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_verify"))
            .args(["f4", "--format", "json"])
            .env(CACHE_DIR_ENV, dir.path())
            .output()
            .unwrap()
    };
    let cold = run();
    assert_eq!(cold.status.code(), Some(0));
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().file_name()).collect();
    assert_eq!(files.len(), 1, "{files:?}");
    assert!(files[0].to_string_lossy().starts_with("f4-"));
    let warm = run();
    assert_eq!(cold.stdout, warm.stdout);
}
