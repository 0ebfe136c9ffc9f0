//! End-to-end tests of the binary: exit codes, output shapes, JSON
//! round-tripping, and byte-level determinism.

use mod2cohom_cli::report::{render_json, ReportDocument};
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mod2cohom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn dims_of_z2_are_all_one() {
    let out = run(&["dims", "Z/2", "--max-degree", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    for n in 0..=4 {
        assert!(
            text.contains(&format!("{n}     1        1         1    1")),
            "{text}"
        );
    }
    assert!(text.contains("PASS"));
}

#[test]
fn witness_separates_z2_from_z4() {
    let out = run(&["witness", "Z/2", "Z/4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("graded dimensions up to degree 10: equal"));
    assert!(text.contains("squaring rank on degree 1: 1 vs 0"));
    assert!(text.contains("NOT isomorphic"));
}

#[test]
fn verify_passes_for_the_mixed_group() {
    let out = run(&["verify", "Z/2 x Z/4", "--bar-max-degree", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("overall: PASS"));
}

#[test]
fn ring_echoes_the_canonical_form() {
    let out = run(&["ring", "Z/4 * Z/2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("group: Z/2 x Z/4"));
    assert!(text.contains("x1^2 = y1"));
    assert!(text.contains("x2^2 = 0"));
}

#[test]
fn malformed_specs_exit_2_with_token_and_position() {
    let out = run(&["dims", "Z/2 x Q/3"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr_of(&out);
    assert!(err.contains("Q/3"), "{err}");
    assert!(err.contains("position 6"), "{err}");
}

#[test]
fn unknown_subcommands_exit_2() {
    let out = run(&["frobnicate", "Z/2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_overruns_exit_3() {
    let out = run(&[
        "verify",
        "Z/8",
        "--bar-max-degree",
        "4",
        "--budget-mib",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr_of(&out).contains("exceeding the budget"));
}

#[test]
fn free_groups_cannot_be_bar_verified() {
    let out = run(&["verify", "Z x Z/2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("free rank"));
}

#[test]
fn relation_matrix_files_are_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("relations.txt");
    std::fs::write(&path, "2 2\n2 0\n0 4\n").unwrap();
    let spec = format!("@{}", path.display());
    let out = run(&["ring", &spec]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("group: Z/2 x Z/4"));

    let out = run(&["ring", "@/nonexistent/path.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_reports_round_trip_byte_identically() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    for args in [
        vec!["dims", "Z/2 x Z/4", "--max-degree", "5"],
        vec!["ring", "Z x Z/6"],
        vec!["steenrod", "Z/2", "--max-degree", "4"],
        vec!["homology", "Z/2 x Z/4", "--max-degree", "4"],
        vec!["filtration", "Z/8", "-n", "4"],
        vec!["witness", "Z/2", "Z/4"],
        vec!["verify", "Z/4", "--bar-max-degree", "2"],
    ] {
        let mut full = args.clone();
        let path_str = path.display().to_string();
        full.extend(["--json", &path_str]);
        let out = run(&full);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", stderr_of(&out));
        let bytes = std::fs::read(&path).unwrap();
        let doc: ReportDocument = serde_json::from_slice(&bytes).unwrap();
        assert_eq!(doc.schema, "mod2cohom/1");
        assert_eq!(
            render_json(&doc).into_bytes(),
            bytes,
            "{args:?}: reparse and re-render changed the bytes"
        );
    }
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["dims", "Z/2 x Z/4 x Z/8", "--max-degree", "6"],
        vec!["verify", "Z/2 x Z/4", "--bar-max-degree", "3"],
        vec!["witness", "Z/2", "Z/4"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert_eq!(first.status.code(), second.status.code());
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
}

#[test]
fn dims_skips_the_bar_column_for_infinite_groups() {
    let out = run(&["dims", "Z", "--max-degree", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains('-'), "bar cells are absent: {text}");
    assert!(text.contains("PASS"));
}
