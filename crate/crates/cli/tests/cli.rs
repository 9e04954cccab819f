use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn knspatial(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knspatial"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn structured(args: &[&str]) -> (Option<i32>, Value) {
    let mut all = vec!["--format", "structured"];
    all.extend_from_slice(args);
    let out = knspatial(&all);
    let text = String::from_utf8(out.stdout).unwrap();
    let v = serde_json::from_str(&text).unwrap_or_else(|e| {
        panic!("{e}: {text}\nstderr: {}", String::from_utf8_lossy(&out.stderr))
    });
    (out.status.code(), v)
}

fn path(dir: &TempDir, name: &str) -> PathBuf {
    dir.path().join(name)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn build_standard(dir: &TempDir, n: u32) -> PathBuf {
    let file = path(dir, &format!("k{n}.json"));
    let (code, _) = structured(&["build", "standard", "--n", &n.to_string(), "-o", s(&file)]);
    assert_eq!(code, Some(0));
    file
}

fn verdicts(v: &Value) -> Vec<(String, bool)> {
    v["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| {
            assert!(x.get("expected").is_some() && x.get("actual").is_some());
            (x["name"].as_str().unwrap().to_string(), x["pass"].as_bool().unwrap())
        })
        .collect()
}

#[test]
fn build_standard_k7_has_35_crossings() {
    let dir = TempDir::new().unwrap();
    let file = path(&dir, "k7.json");
    let (code, v) = structured(&["build", "standard", "--n", "7", "-o", s(&file)]);
    assert_eq!(code, Some(0));
    assert_eq!(v["inputs"]["crossings"], 35);
    assert_eq!(v["provenance"]["builder"], "standard");
    assert!(file.exists());
}

#[test]
fn build_twist_records_its_parameters() {
    let dir = TempDir::new().unwrap();
    let file = path(&dir, "t.json");
    let (code, v) = structured(&["build", "twist", "--n", "7", "--k", "1", "--l", "0", "--s", "2", "-o", s(&file)]);
    assert_eq!(code, Some(0));
    let p = &v["provenance"]["params"];
    assert_eq!((p["n"].as_u64(), p["k"].as_u64(), p["l"].as_u64(), p["s"].as_u64()), (Some(7), Some(1), Some(0), Some(2)));
    let (code, v) = structured(&["report", s(&file)]);
    assert_eq!(code, Some(0));
    assert_eq!(v["report"]["sum_a2_hamiltonian"], 41);
}

#[test]
fn build_random_and_points() {
    let dir = TempDir::new().unwrap();
    let file = path(&dir, "r.json");
    let (code, v) = structured(&["build", "random", "--n", "6", "--seed", "42", "-o", s(&file)]);
    assert_eq!(code, Some(0));
    assert_eq!(v["provenance"]["seed"], 42);
    let (code, _) = structured(&["report", s(&file)]);
    assert_eq!(code, Some(0));

    let pts = path(&dir, "p.txt");
    std::fs::write(&pts, "6\n1 1 1\n2 4 8\n3 9 27\n4 16 64\n5 25 125\n6 36 216\n").unwrap();
    let file = path(&dir, "p.json");
    let (code, v) = structured(&["build", "points", s(&pts), "-o", s(&file)]);
    assert_eq!(code, Some(0));
    assert_eq!(v["inputs"]["crossings"], 15);
}

#[test]
fn report_on_standard_k7() {
    let dir = TempDir::new().unwrap();
    let file = build_standard(&dir, 7);
    let (code, v) = structured(&["report", s(&file)]);
    assert_eq!(code, Some(0));
    assert_eq!(v["report"]["sum_a2_hamiltonian"], 1);
    assert_eq!(v["report"]["residue"], 1);
    assert_eq!(v["report"]["residue_modulus"], 2);
    let names: Vec<String> = verdicts(&v).into_iter().map(|(n, p)| {
        assert!(p, "{n}");
        n
    }).collect();
    assert!(names.iter().any(|n| n == "identity"));
    assert!(names.iter().any(|n| n.starts_with("congruence")));
}

#[test]
fn report_on_standard_k6_checks_parity() {
    let dir = TempDir::new().unwrap();
    let file = build_standard(&dir, 6);
    let (code, v) = structured(&["report", s(&file)]);
    assert_eq!(code, Some(0));
    assert!(verdicts(&v).iter().any(|(n, p)| n.starts_with("sachs") && *p));
    let (code, v) = structured(&["verify", "sachs", s(&file)]);
    assert_eq!(code, Some(0));
    assert_eq!(verdicts(&v).len(), 1);
}

#[test]
fn corrupted_file_fails_with_a_diagnostic() {
    let dir = TempDir::new().unwrap();
    let file = build_standard(&dir, 6);
    let text = std::fs::read_to_string(&file).unwrap();
    std::fs::write(&file, &text[..text.len() / 2]).unwrap();
    let out = knspatial(&["report", s(&file)]);
    assert_ne!(out.status.code(), Some(0));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("parse") && err.contains("line"), "{err}");
}

#[test]
fn verify_twists_small_cases() {
    let (code, v) = structured(&["verify", "twists", "--n", "6", "--max-s", "1"]);
    assert_eq!(code, Some(0));
    let all = verdicts(&v);
    assert_eq!(all.len(), 6 * 2);
    assert!(all.iter().all(|(_, p)| *p));
}

#[test]
fn brute_force_guardrail() {
    let out = knspatial(&["verify", "twists", "--n", "12", "--max-s", "0"]);
    assert_ne!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--force"));
}

#[test]
fn verify_identity_and_congruence() {
    let dir = TempDir::new().unwrap();
    let file = build_standard(&dir, 8);
    let (code, v) = structured(&["verify", "identity", s(&file)]);
    assert_eq!(code, Some(0));
    assert_eq!(verdicts(&v), vec![("identity".to_string(), true)]);
    let (code, v) = structured(&["verify", "congruence", s(&file)]);
    assert_eq!(code, Some(0));
    assert_eq!(v["verdicts"][0]["expected"], "3");
    assert_eq!(v["verdicts"][0]["actual"], "3");
    let (code, v) = structured(&["verify", "congruence", s(&file), "--modulus", "4"]);
    assert_eq!(code, Some(0));
    assert!(verdicts(&v).is_empty());
}

#[test]
fn realize_and_verify() {
    let dir = TempDir::new().unwrap();
    let file = path(&dir, "m.json");
    let (code, v) = structured(&["realize", "--n", "7", "--m", "-1", "--verify", "-o", s(&file)]);
    assert_eq!(code, Some(0));
    assert_eq!(v["report"]["sum_a2_hamiltonian"], -1);
    assert_eq!(v["verdicts"][0]["expected"], "-1");
    assert_eq!(v["provenance"]["builder"], "realize");

    let (code, v) = structured(&["realize", "--n", "8", "--m", "3", "--verify", "-o", s(&file)]);
    assert_eq!(code, Some(0));
    assert_eq!(v["report"]["sum_a2_hamiltonian"], 3);
}

#[test]
fn realize_rejects_inadmissible_targets() {
    let dir = TempDir::new().unwrap();
    let out = knspatial(&["realize", "--n", "7", "--m", "2", "-o", s(&path(&dir, "x.json"))]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("m must be ≡ 1 (mod 2)"), "{err}");
    assert!(err.contains("1 and 3"), "{err}");
}

#[test]
fn knot_and_link_queries() {
    let dir = TempDir::new().unwrap();
    let file = build_standard(&dir, 6);
    let (code, v) = structured(&["knot", "a2", s(&file), "--cycle", "1,2,3,4,5,6"]);
    assert_eq!(code, Some(0));
    assert_eq!(v["inputs"]["a2"], 0);
    let (code, v) = structured(&["link", "lk", s(&file), "--pair", "1,3,5/2,4,6"]);
    assert_eq!(code, Some(0));
    assert_eq!(v["inputs"]["lk"].as_i64().unwrap().abs(), 1);
    let out = knspatial(&["link", "lk", s(&file), "--pair", "1,2,3/3,4,5"]);
    assert_ne!(out.status.code(), Some(0));
}

#[test]
fn reports_are_deterministic_and_worker_independent() {
    let dir = TempDir::new().unwrap();
    let file = build_standard(&dir, 7);
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("timing_ms");
        v.as_object_mut().unwrap().remove("command");
        v
    };
    let (_, a) = structured(&["report", s(&file), "--workers", "1"]);
    let (_, b) = structured(&["report", s(&file), "--workers", "3"]);
    let (_, c) = structured(&["report", s(&file), "--workers", "1"]);
    assert_eq!(strip(a.clone()), strip(b));
    assert_eq!(strip(a).to_string(), strip(c).to_string());
}

#[test]
fn table_output_is_readable() {
    let dir = TempDir::new().unwrap();
    let file = build_standard(&dir, 6);
    let out = knspatial(&["report", s(&file)]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("sum a2 (Hamiltonian)"));
    assert!(text.contains("PASS  identity"));
}
