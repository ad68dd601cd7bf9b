//! End-to-end checks of the command-line binary: exit codes, report
//! formats, and byte-identical determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dominoflip"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn enumerate_reports_torus_census() {
    let out = run(&[
        "enumerate",
        "--topology",
        "torus",
        "--vrows",
        "4",
        "--vcols",
        "4",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["schema"], "v1");
    assert_eq!(doc["count"], 272);
    assert_eq!(doc["matchings"].as_array().unwrap().len(), 272);
}

#[test]
fn spectrum_accepts_paper_names() {
    let out = run(&["spectrum", "--paper-name", "C:1,10"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["spectrum"], serde_json::json!([2, 4, 5]));
    assert_eq!(doc["gaps"], serde_json::json!([3]));
    assert_eq!(doc["continuous"], false);

    let out12 = run(&["spectrum", "--paper-name", "C:1,12"]);
    let doc12: serde_json::Value = serde_json::from_str(&stdout(&out12)).unwrap();
    assert_eq!(doc12["spectrum"], serde_json::json!([2, 4, 5, 6]));
    assert_eq!(doc12["gaps"], serde_json::json!([3]));
}

#[test]
fn invalid_topology_exits_with_code_2() {
    let out = run(&[
        "enumerate",
        "--topology",
        "torus",
        "--vrows",
        "2",
        "--vcols",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(2));

    let missing = run(&["enumerate"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn budget_exceeded_exits_with_code_3() {
    let out = run(&[
        "spectrum",
        "--paper-name",
        "C:1,10",
        "--budget-matchings",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["authoritative"], false);
    assert_eq!(doc["matchings"], 5);
}

#[test]
fn flipgraph_dot_export_of_unit_square() {
    let out = run(&[
        "flipgraph",
        "--topology",
        "rectangle",
        "--vrows",
        "2",
        "--vcols",
        "2",
        "--format",
        "dot",
    ]);
    assert!(out.status.success());
    let dot = stdout(&out);
    assert!(dot.contains("m0 -- m1"));
    assert_eq!(dot.matches(" -- ").count(), 1);
}

#[test]
fn ascii_tiling_export_has_one_char_per_cell() {
    let out = run(&[
        "enumerate",
        "--paper-name",
        "T:5,8",
        "--budget-matchings",
        "1",
        "--format",
        "ascii-tiling",
    ]);
    // budget binds, so exit code 3, but the diagram is still produced
    assert_eq!(out.status.code(), Some(3));
    let body = stdout(&out);
    let rows: Vec<&str> = body.lines().filter(|l| !l.starts_with('#') && !l.is_empty()).collect();
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| r.len() == 8));
}

#[test]
fn forcing_csv_has_witness_column() {
    let out = run(&[
        "forcing",
        "--topology",
        "rectangle",
        "--vrows",
        "2",
        "--vcols",
        "2",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let csv = stdout(&out);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "matching_id,forcing_number,witness");
    assert_eq!(lines.len(), 3);
}

#[test]
fn unsupported_format_pairing_fails() {
    let out = run(&[
        "enumerate",
        "--topology",
        "rectangle",
        "--vrows",
        "2",
        "--vcols",
        "2",
        "--format",
        "dot",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let dir = std::env::temp_dir().join(format!("dominoflip-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let write_report = |name: &str| -> PathBuf {
        let path = dir.join(name);
        let out = bin()
            .args([
                "spectrum",
                "--paper-name",
                "C:3,3",
                "--out",
                path.to_str().unwrap(),
            ])
            .output()
            .unwrap();
        assert!(out.status.success());
        path
    };
    let a = std::fs::read(write_report("a.json")).unwrap();
    let b = std::fs::read(write_report("b.json")).unwrap();
    assert_eq!(a, b);
    let _ = std::fs::remove_dir_all(&dir);
}
