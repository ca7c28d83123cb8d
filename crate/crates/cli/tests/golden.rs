//! Golden-file tests: identical inputs and flags produce byte-identical
//! reports, and the exit-status contract holds for every subcommand.

use std::path::PathBuf;
use std::process::{Command, Output};

fn workspace_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .canonicalize()
        .expect("workspace root exists")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edgeclass"))
        .args(args)
        .current_dir(workspace_root())
        .output()
        .expect("binary runs")
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn assert_golden(args: &[&str], name: &str, expected_code: i32) {
    let output = run(args);
    let stdout = String::from_utf8(output.stdout).expect("utf-8");
    assert_eq!(
        stdout,
        golden(name),
        "stdout drifted from {name} for `edgeclass {}`",
        args.join(" ")
    );
    assert_eq!(
        output.status.code(),
        Some(expected_code),
        "exit code for `edgeclass {}`",
        args.join(" ")
    );
}

#[test]
fn check_paper_g1_text() {
    assert_golden(
        &["check-paper", "bundles/g1-candidate.bundle"],
        "check-paper-g1.txt",
        0,
    );
}

#[test]
fn check_paper_g2_text() {
    assert_golden(
        &["check-paper", "bundles/g2-candidate.bundle"],
        "check-paper-g2.txt",
        0,
    );
}

#[test]
fn check_paper_g1_json() {
    assert_golden(
        &["check-paper", "--format", "json", "bundles/g1-candidate.bundle"],
        "check-paper-g1.json",
        0,
    );
}

#[test]
fn classify_k4_class_one_with_witness() {
    assert_golden(&["classify", "bundles/k4-plane.bundle"], "classify-k4.txt", 0);
}

#[test]
fn classify_c5_class_two_by_certificate() {
    assert_golden(&["classify", "bundles/c5.bundle"], "classify-c5.txt", 0);
}

#[test]
fn classify_petersen_class_two_by_search() {
    assert_golden(
        &["classify", "bundles/petersen.bundle"],
        "classify-petersen.txt",
        0,
    );
}

#[test]
fn certify_petersen_is_inconclusive_with_status_one() {
    assert_golden(
        &["certify", "bundles/petersen.bundle"],
        "certify-petersen.txt",
        1,
    );
}

#[test]
fn certify_g2_fires() {
    assert_golden(&["certify", "bundles/g2-candidate.bundle"], "certify-g2.txt", 0);
}

#[test]
fn chromatic_index_multiple_inputs_keep_order() {
    assert_golden(
        &[
            "chromatic-index",
            "bundles/petersen.bundle",
            "bundles/k4-plane.bundle",
        ],
        "chromatic-index-multi.txt",
        0,
    );
}

#[test]
fn verify_drawing_multiple_inputs() {
    assert_golden(
        &[
            "verify-drawing",
            "bundles/k4-plane.bundle",
            "bundles/k5-one-crossing.bundle",
        ],
        "verify-drawing-multi.txt",
        0,
    );
}

#[test]
fn verify_drawing_without_drawing_fails() {
    assert_golden(
        &["verify-drawing", "bundles/petersen.bundle"],
        "verify-drawing-missing.txt",
        1,
    );
}

#[test]
fn color_emits_a_coloring_bundle() {
    assert_golden(&["color", "bundles/k4-plane.bundle"], "color-k4.txt", 0);
}

#[test]
fn regularize_emits_the_reduced_bundle() {
    assert_golden(
        &["regularize", "bundles/g1-candidate.bundle"],
        "regularize-g1.txt",
        0,
    );
}

#[test]
fn reports_are_deterministic_across_runs() {
    let first = run(&["check-paper", "bundles/g1-candidate.bundle"]);
    let second = run(&["check-paper", "bundles/g1-candidate.bundle"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn missing_input_exits_two() {
    let output = run(&["classify", "bundles/no-such-file.bundle"]);
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("no-such-file.bundle"), "{stderr}");
}

#[test]
fn parse_error_exits_two_with_line_diagnostic() {
    let dir = std::env::temp_dir().join("edgeclass-golden-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.bundle");
    std::fs::write(&path, "graph 2\nedge 0 0\n").unwrap();
    let output = run(&["certify", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("line 2"), "{stderr}");
    assert!(stderr.contains("loop edge"), "{stderr}");
}

#[test]
fn budget_exceeded_exits_one_with_bounds() {
    let output = run(&[
        "chromatic-index",
        "--max-search-edges",
        "5",
        "bundles/petersen.bundle",
    ]);
    assert_eq!(output.status.code(), Some(1));
    let stdout = String::from_utf8(output.stdout).unwrap();
    assert!(stdout.contains("[3, 4]"), "{stdout}");
    assert!(stdout.contains("FAIL"), "{stdout}");
}

#[test]
fn json_format_with_multiple_inputs_is_an_array() {
    let output = run(&[
        "verify-drawing",
        "--format",
        "json",
        "bundles/k4-plane.bundle",
        "bundles/k5-one-crossing.bundle",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let value: serde_json::Value =
        serde_json::from_slice(&output.stdout).expect("valid JSON array");
    let reports = value.as_array().expect("array of reports");
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[0]["result"], "pass");
    assert_eq!(
        reports[1]["title"],
        "drawing verification: bundles/k5-one-crossing.bundle"
    );
}

#[test]
fn output_flag_writes_the_report_file() {
    let dir = std::env::temp_dir().join("edgeclass-golden-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.txt");
    let output = run(&[
        "classify",
        "bundles/k4-plane.bundle",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(0));
    assert!(output.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, golden("classify-k4.txt"));
}
