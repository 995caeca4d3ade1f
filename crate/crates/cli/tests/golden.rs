//! Golden-file tests: every case in `golden/cases.tsv` runs in-process and
//! through the built binary, and both must match the stored output byte for
//! byte. Set `UPDATE_GOLDEN=1` to rewrite the stored outputs.

use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};
use std::io::Write;

use torus_af_cli::run;

struct Case {
    name: String,
    args: Vec<String>,
    exit: i32,
    payload: String,
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn cases() -> Vec<Case> {
    let text = std::fs::read_to_string(golden_dir().join("cases.tsv")).unwrap();
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let cols: Vec<&str> = l.splitn(4, '\t').collect();
            Case {
                name: cols[0].to_owned(),
                args: cols[1].split_whitespace().map(str::to_owned).collect(),
                exit: cols[2].parse().unwrap(),
                payload: cols[3].to_owned(),
            }
        })
        .collect()
}

fn argv(case: &Case) -> Vec<String> {
    std::iter::once("torus-af".to_owned()).chain(case.args.iter().cloned()).collect()
}

#[test]
fn every_case_matches_its_golden_output() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut failures = Vec::new();
    for case in cases() {
        let out = run(&argv(&case), &case.payload);
        let path = golden_dir().join(format!("{}.stdout", case.name));
        if update {
            std::fs::write(&path, &out.stdout).unwrap();
        }
        let expected = std::fs::read_to_string(&path).unwrap_or_default();
        if out.code != case.exit || out.stdout != expected {
            failures.push(format!("{}: exit {} (want {}), stdout:\n{}", case.name, out.code, case.exit, out.stdout));
        }
        if out.code != 0 {
            assert!(out.stdout.contains("\"error\""), "{}", case.name);
            assert!(!out.stderr.is_empty(), "{}", case.name);
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn repeated_runs_are_byte_identical() {
    for case in cases() {
        let first = run(&argv(&case), &case.payload);
        let second = run(&argv(&case), &case.payload);
        assert_eq!(first, second, "{}", case.name);
    }
}

#[test]
fn binary_agrees_with_library() {
    for case in cases() {
        let mut child = Command::new(env!("CARGO_BIN_EXE_torus-af"))
            .args(&case.args)
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::piped())
            .spawn()
            .unwrap();
        child.stdin.take().unwrap().write_all(case.payload.as_bytes()).unwrap();
        let out = child.wait_with_output().unwrap();
        let lib = run(&argv(&case), &case.payload);
        assert_eq!(out.status.code(), Some(lib.code), "{}", case.name);
        assert_eq!(String::from_utf8(out.stdout).unwrap(), lib.stdout, "{}", case.name);
        assert_eq!(String::from_utf8(out.stderr).unwrap(), lib.stderr, "{}", case.name);
    }
}

#[test]
fn input_file_matches_stdin() {
    let case = cases().into_iter().find(|c| c.name == "equiv_sqrt2").unwrap();
    let path = std::env::temp_dir().join(format!("torus-af-golden-{}.json", std::process::id()));
    std::fs::write(&path, &case.payload).unwrap();
    let mut args = argv(&case);
    args.extend(["--input".to_owned(), path.display().to_string()]);
    let from_file = run(&args, "");
    std::fs::remove_file(&path).unwrap();
    assert_eq!(from_file, run(&argv(&case), &case.payload));
}

#[test]
fn usage_errors_exit_with_one() {
    for args in [vec!["torus-af"], vec!["torus-af", "frobnicate"], vec!["torus-af", "bratteli", "--format", "svg"]] {
        let out = run(&args, "{}");
        assert_eq!(out.code, 1, "{args:?}");
        assert!(out.stdout.contains("usage_error"));
    }
    let out = run(&["torus-af", "equiv", "--input", "/nonexistent/payload.json"], "");
    assert_eq!(out.code, 1);
    let out = run(&["torus-af", "equiv"], "[1, 2]");
    assert_eq!(out.code, 1);
    let out = run(&["torus-af", "--help"], "");
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("pipeline"));
}
