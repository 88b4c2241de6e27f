//! End-to-end runs of the command-line binary: exit-code contract and
//! line-delimited JSON output.

use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_planar-center")
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().expect("binary runs")
}

fn stdout_lines(out: &Output) -> Vec<serde_json::Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).unwrap_or_else(|e| panic!("bad JSON line `{l}`: {e}")))
        .collect()
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&[]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn fixtures_verify_all_passes() {
    let out = run(&["fixtures", "--verify-all"]);
    assert_eq!(out.status.code(), Some(0));
    for line in stdout_lines(&out) {
        assert_eq!(line["pass"], true, "{line}");
    }
}

#[test]
fn failing_input_exits_one_with_diagnostics() {
    let dir = std::env::temp_dir().join("planar-center-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let g9 = dir.join("g9.json");
    let dump = run(&["fixtures", "--dump", "g9"]);
    std::fs::write(&g9, &dump.stdout).unwrap();

    let out = run(&["check", g9.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let lines = stdout_lines(&out);
    let qef = &lines[0];
    assert_eq!(qef["pass"], false);
    assert_eq!(qef["failing_vertex"], 8);

    // synthesize on a failing input also reports the vertex and exits 1
    let out = run(&["synthesize", g9.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_lines(&out)[0]["failing_vertex"], 8);
}

#[test]
fn passing_input_synthesizes_and_exits_zero() {
    let dir = std::env::temp_dir().join("planar-center-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("host-input.json");
    let dump = run(&["fixtures", "--dump", "k3-k2bar"]);
    std::fs::write(&path, &dump.stdout).unwrap();

    let out = run(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&["synthesize", path.to_str().unwrap(), "--alpha", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let report = &stdout_lines(&out)[0];
    assert_eq!(report["radius"], 3);
    assert_eq!(report["is_center_subset"], true);

    let out = run(&["synthesize", path.to_str().unwrap(), "--exact-center"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_lines(&out)[0]["is_exact_center"], true);
}

#[test]
fn augmentation_reports_unknown_planarity() {
    let dir = std::env::temp_dir().join("planar-center-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("p5.json");
    let dump = run(&["fixtures", "--dump", "p5-qcc"]);
    std::fs::write(&path, &dump.stdout).unwrap();
    let out = run(&["synthesize", path.to_str().unwrap(), "--augment"]);
    assert_eq!(out.status.code(), Some(0));
    let line = &stdout_lines(&out)[0];
    assert_eq!(line["planarity"], "unknown");
    assert_eq!(line["center"], line["embedding"]);
}

#[test]
fn enumerate_lists_graphs_on_request() {
    let out = run(&["enumerate", "--order", "5", "--graphs"]);
    assert_eq!(out.status.code(), Some(0));
    let lines = stdout_lines(&out);
    assert_eq!(lines[0]["graph"]["n"], 5);
    assert!(lines[0]["graph"]["rotations"].is_array());
}

#[test]
fn enumerate_census_contract() {
    let out = run(&["enumerate", "--order", "8", "--census"]);
    assert_eq!(out.status.code(), Some(0));
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 15); // 14 rows plus the summary
    let summary = &lines[14]["summary"];
    assert_eq!(summary["classes"], 14);
    assert_eq!(summary["qef_failures"], 0);
}

#[test]
fn census_csv_is_written() {
    let dir = std::env::temp_dir().join("planar-center-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let csv = dir.join("census6.csv");
    let out = run(&["enumerate", "--order", "6", "--census", "--csv", csv.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("code,order,diam,radius,center_size,qef_pass,case_histogram")
    );
    assert_eq!(lines.count(), 2);
}

#[test]
fn export_round_trips() {
    let dir = std::env::temp_dir().join("planar-center-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("gstar.json");
    let dump = run(&["fixtures", "--dump", "g-star"]);
    std::fs::write(&path, &dump.stdout).unwrap();

    let out = run(&["export", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let j = &stdout_lines(&out)[0];
    assert_eq!(j["n"], 10);

    let out = run(&["export", path.to_str().unwrap(), "--format", "dot"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("graph {"));
}

#[test]
fn analyze_emits_profile_then_faces() {
    let dir = std::env::temp_dir().join("planar-center-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("h1.json");
    let dump = run(&["fixtures", "--dump", "h1"]);
    std::fs::write(&path, &dump.stdout).unwrap();
    let out = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let lines = stdout_lines(&out);
    assert_eq!(lines[0]["radius"], 2);
    assert_eq!(lines[0]["diameter"], 3);
    // one configuration line per face
    assert_eq!(lines.len(), 1 + 12);
    assert!(lines[1]["case"].is_string());
}
