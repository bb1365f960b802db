use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use nsn_core::{compute_nsn_from_intervals, generators, NsnOptions};
use serde_json::Value;
use tempfile::TempDir;

fn nsn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nsn")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn gen_figure1(dir: &TempDir) -> PathBuf {
    let path = dir.path().join("fig1.intervals");
    let o = nsn(&["gen", "--kind", "figure1", "-o", s(&path)]);
    assert_eq!(o.status.code(), Some(0));
    path
}

#[test]
fn figure1_text_and_json() {
    let dir = TempDir::new().unwrap();
    let fig = gen_figure1(&dir);
    let o = nsn(&["nsn", s(&fig)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "S(G) = 2\n");
    assert!(o.stderr.is_empty());

    let o = nsn(&["nsn", s(&fig), "--format", "json", "--witness", "--trace"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    for k in &keys {
        assert!(["nsn", "witness", "method", "arrangement", "pieces", "errors"].contains(k), "{k}");
    }
    assert_eq!(v["nsn"], 2);
    assert_eq!(v["method"], "interval-dp");
    assert_eq!(v["arrangement"].as_array().unwrap().len(), 5);
    assert_eq!(v["pieces"].as_array().unwrap().len(), 15);
}

#[test]
fn complete_graph_json() {
    let dir = TempDir::new().unwrap();
    let k5 = write(&dir, "k5.intervals", "a 0 5\nb 0 5\nc 1 4\nd 2 3\ne 0 9\n");
    let o = nsn(&["nsn", s(&k5), "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v, serde_json::json!({ "nsn": 1, "method": "interval-dp" }));
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let c4 = write(&dir, "c4.edges", "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n");
    let o = nsn(&["nsn", s(&c4)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not-chordal"));
    let o = nsn(&["nsn", s(&c4), "--format", "json"]);
    assert_eq!(o.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["errors"][0].as_str().unwrap().contains("not-chordal"));

    let split = write(&dir, "split.intervals", "a 0 1\nb 5 6\n");
    assert_eq!(nsn(&["nsn", s(&split)]).status.code(), Some(3));

    let big = dir.path().join("big.intervals");
    nsn(&["gen", "--n", "200", "--seed", "1", "-o", s(&big)]);
    assert_eq!(nsn(&["oracle", s(&big)]).status.code(), Some(5));

    let bad = write(&dir, "bad.intervals", "a 0 1\nb 2\n");
    let o = nsn(&["nsn", s(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains(":2:"));
    assert_eq!(nsn(&["nsn", "/no/such/file"]).status.code(), Some(1));
    assert_eq!(nsn(&["gen", "--n", "0"]).status.code(), Some(1));
    assert_eq!(nsn(&["oracle", s(&bad), "--max-n", "25"]).status.code(), Some(1));
    assert_eq!(nsn(&["frobnicate"]).status.code(), Some(1));
}

#[test]
fn format_override() {
    let dir = TempDir::new().unwrap();
    let p5 = write(&dir, "p5.txt", "p edge 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n");
    assert_eq!(stdout(&nsn(&["oracle", s(&p5)])), "S(G) = 1\nwitness: {3}\n");
    let o = nsn(&["nsn", s(&p5), "--input-format", "intervals"]);
    assert_eq!(o.status.code(), Some(1));
    let iv = write(&dir, "path.edges", "1 0 1\n2 1 2\n3 2 3\n");
    assert_eq!(stdout(&nsn(&["nsn", s(&iv), "--input-format", "intervals"])), "S(G) = 0\n");
}

#[test]
fn oracle_lists_minimal_strategies() {
    let dir = TempDir::new().unwrap();
    let fig = gen_figure1(&dir);
    let o = nsn(&["oracle", s(&fig), "--minimal", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["nsn"], 2);
    assert_eq!(v["minimal"], serde_json::json!([["2"], ["3"], ["4"], ["5"], ["6"]]));
}

#[test]
fn generated_files_round_trip() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("r.intervals");
    let o = nsn(&["gen", "--kind", "random-intervals", "--n", "8", "--seed", "1", "-o", s(&path)]);
    assert_eq!(o.status.code(), Some(0));
    let first = std::fs::read_to_string(&path).unwrap();
    nsn(&["gen", "--kind", "random-intervals", "--n", "8", "--seed", "1", "-o", s(&path)]);
    assert_eq!(first, std::fs::read_to_string(&path).unwrap());

    let spec = generators::GeneratorSpec::random(8, 1, 100);
    let rep = generators::generate(&spec).unwrap();
    let o = nsn(&["nsn", s(&path), "--format", "json"]);
    match compute_nsn_from_intervals(&rep, &NsnOptions::default()) {
        Ok(res) => {
            let v: Value = serde_json::from_slice(&o.stdout).unwrap();
            assert_eq!(v["nsn"], res.value);
        }
        Err(nsn_core::Error::Disconnected) => assert_eq!(o.status.code(), Some(3)),
        Err(e) => panic!("{e}"),
    }
}

#[test]
fn validate_reports() {
    let o = nsn(&["validate", "--trials", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dp_vs_oracle"]["checked"], 0);
    assert_eq!(v["passed"], true);

    let o = nsn(&["validate", "--trials", "30", "--n", "4..8", "--seed", "11", "--general-graphs"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["recursive_formula"]["general"]["agreed"], 30);
    assert!(v["minimality_characterization"]["disagreements"].is_array());

    let o = nsn(&["validate", "--trials", "5", "--format", "text"]);
    assert!(stdout(&o).starts_with("dp vs oracle: 5/5 agree"));
    assert_eq!(nsn(&["validate", "--n", "4..40"]).status.code(), Some(5));
}

#[test]
fn bench_rows() {
    let o = nsn(&["bench", "--sizes", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 3, "{text}");
    assert!(text.ends_with("fitted exponent: n/a\n"));

    let o = nsn(&["bench", "--sizes", "20", "--trials", "3", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rows"][0]["trials"], 3);
    assert!(v["rows"][0]["min_secs"].as_f64() <= v["rows"][0]["max_secs"].as_f64());
}

#[test]
fn trace_and_witness_text() {
    let dir = TempDir::new().unwrap();
    let fig = gen_figure1(&dir);
    let text = stdout(&nsn(&["nsn", s(&fig), "--witness", "--trace", "--threads", "2"]));
    assert!(text.contains("witness: {5}"));
    assert!(text.contains("A3 = {2, 4, 5, 6}"));
    assert!(text.contains("P(1,5) noncomplete {1, 2, 3, 4, 5, 6, 7, 8} value 2 choice 5 (1,1) (2,2) (5,5)"));
}
