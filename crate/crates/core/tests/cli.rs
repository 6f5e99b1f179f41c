use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn rigidlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rigidlab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const K4: &str = r#"{"vertices": 4, "edges": [[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]}"#;
const K5_MINUS_E: &str = r#"{"vertices": 5, "edges": [[1,2],[1,3],[1,4],[1,5],[2,3],[2,4],[2,5],[3,4],[3,5]]}"#;

fn double_banana() -> String {
    let mut edges = Vec::new();
    for banana in [[1, 2, 3, 4, 5], [1, 2, 6, 7, 8]] {
        for a in 0..5 {
            for b in a + 1..5 {
                if (banana[a], banana[b]) != (1, 2) {
                    edges.push(format!("[{},{}]", banana[a], banana[b]));
                }
            }
        }
    }
    format!(r#"{{"vertices": 8, "edges": [{}]}}"#, edges.join(","))
}

#[test]
fn analyze_reports() {
    let dir = TempDir::new().unwrap();
    let out = rigidlab(&["analyze", s(&write(&dir, "k4.json", K4))]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("rigid: true") && text.contains("isostatic: true"), "{text}");

    let out = rigidlab(&["analyze", s(&write(&dir, "db.json", &double_banana()))]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("rigid: false") && text.contains("flex_dim: 7"), "{text}");

    let out = rigidlab(&["analyze", s(&write(&dir, "bad.json", "{\"vertices\": 3,\n \"edges\": [[1,2]"))]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn henneberg_commands() {
    let dir = TempDir::new().unwrap();
    let k5e = write(&dir, "k5e.json", K5_MINUS_E);
    let out_path = dir.path().join("ext.json");
    let out = rigidlab(&["henneberg", s(&k5e), "--x", "1,2,3,4,5", "--f", "1-4,2-4", "--out", s(&out_path)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("rigid: false"));
    let written = rigidlab::io::parse_graph(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!((written.vertex_count(), written.edge_count()), (6, 12));

    let k4 = write(&dir, "k4.json", K4);
    let out = rigidlab(&["henneberg", s(&k4), "--x", "1,2,3,4", "--f", "1-2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("rigid: true"));

    let out = rigidlab(&["henneberg", s(&k4), "--x", "1,2,3", "--f", "1-2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn admissible_commands() {
    let out = rigidlab(&["admissible", "--builtin", "example1", "--samples", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("admissible: true") && text.contains("classification: RankOneForm"), "{text}");

    let out = rigidlab(&["admissible", "--builtin", "constructed:42", "--samples", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("classification: AllAffine"));

    let dir = TempDir::new().unwrap();
    let config = write(&dir, "p.json", r#"{"dim": 3, "points": [[3,-1,4],[1,5,-9],[2,6,5],[-3,5,8],[9,7,-9]]}"#);
    let space = write(
        &dir,
        "s.json",
        r#"{"basis": [[[1,0,2,0,3],[0,4,0,1,0],[5,0,0,2,1]], [[0,1,0,3,0],[2,0,1,0,7],[0,3,0,0,1]]]}"#,
    );
    let out = rigidlab(&["admissible", "--config", s(&config), "--subspace", s(&space), "--samples", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("admissible: false"));

    let doubled = write(&dir, "d.json", r#"{"dim": 3, "points": [[1,2,3],[1,2,3],[2,6,5],[-3,5,8],[9,7,-9]]}"#);
    let out = rigidlab(&["admissible", "--config", s(&doubled), "--builtin", "example2:1"]);
    assert_eq!(out.status.code(), Some(4));

    let out = rigidlab(&["admissible", "--builtin", "example1", "--subspace", s(&space)]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn implied_and_conic() {
    let dir = TempDir::new().unwrap();
    let db = write(&dir, "db.json", &double_banana());
    let out = rigidlab(&["implied", s(&db), "--pair", "1,2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("implied: true"));
    let out = rigidlab(&["implied", s(&db), "--pair", "3,6"]);
    assert_eq!(out.status.code(), Some(1));
    let out = rigidlab(&["implied", s(&db), "--k4", "1,2,3,4,5"]);
    assert_eq!(out.status.code(), Some(0));

    let out = rigidlab(&["conic"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).matches("skew_only: true").count(), 3);
    let out = rigidlab(&["conic", "--edges", "1-2,2-3"]);
    assert_eq!(out.status.code(), Some(1));
    let out = rigidlab(&["conic", "--edges", "1-9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_battery() {
    let out = rigidlab(&["verify", "--samples", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert_eq!(stdout(&out).matches("[PASS]").count(), 12);
    let out = rigidlab(&["verify", "--samples", "2", "--inject-fault"]);
    assert_ne!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("[FAIL]"));
}

#[test]
fn output_is_deterministic() {
    let run = || stdout(&rigidlab(&["--format", "jsonl", "--seed", "9", "admissible", "--builtin", "example2:3", "--samples", "4"]));
    let first = run();
    assert_eq!(first, run());
    for line in first.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v.get("record").is_some());
    }
    let other = stdout(&rigidlab(&["--format", "jsonl", "--seed", "10", "admissible", "--builtin", "example2:3", "--samples", "4"]));
    assert_ne!(first, other);
}

#[test]
fn help_and_usage() {
    let out = rigidlab(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for code in ["0  ", "1  ", "2  ", "3  ", "4  "] {
        assert!(text.contains(code), "{text}");
    }
    assert_eq!(rigidlab(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(rigidlab(&["analyze", "/nonexistent/graph.json"]).status.code(), Some(2));
    assert_eq!(rigidlab(&["--tol", "-1", "conic"]).status.code(), Some(2));
}

#[test]
fn float_backend() {
    let out = rigidlab(&["--backend", "float", "admissible", "--builtin", "example1", "--samples", "5"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("backend: float"));
}
