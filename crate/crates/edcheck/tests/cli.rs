use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use edcheck::cache::decode_element;
use edcheck_core::group::{cache_key, named, Normalization};
use edcheck_core::FiniteField;
use serde_json::Value;

fn edcheck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edcheck"))
        .args(args)
        .env_remove("RUST_LOG")
        .output()
        .expect("binary runs")
}

fn json_without_timing(out: &[u8]) -> Value {
    let mut v: Value = serde_json::from_slice(out).expect("valid JSON");
    v.as_object_mut().unwrap().remove("timing");
    v
}

#[test]
fn list_names_every_scenario() {
    let out = edcheck(&["list"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for name in edcheck::scenarios::names() {
        assert!(text.contains(name), "{name} missing from list");
    }
    assert!(text.contains("claim:"));
}

#[test]
fn usage_errors_exit_with_2() {
    for args in [
        &["run", "unknown-name"][..],
        &["run", "psl211-census", "--format", "xml"],
        &["run"],
        &["frobnicate"],
        &[],
    ] {
        let out = edcheck(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn unusable_cache_directory_is_a_configuration_error() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("not-a-dir");
    fs::write(&file, "x").unwrap();
    let out = edcheck(&["run", "psl211-census", "--cache", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_report_schema() {
    let out = edcheck(&["run", "psl211-census", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["scenario"], "psl211-census");
    assert_eq!(v["status"], "pass");
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    for c in checks {
        for key in ["label", "expected", "computed", "citation"] {
            assert!(c[key].is_string(), "{key} in {c}");
        }
        assert_eq!(c["expected"], c["computed"]);
    }
    for w in v["witnesses"].as_array().unwrap() {
        assert!(w["label"].is_string() && w["value"].is_string());
    }
    assert!(v["timing"]["elapsed_ms"].is_u64());
}

#[test]
fn out_file_and_text_format() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.txt");
    let out = edcheck(&["run", "sl28-ogr-obstruction", "--out", path.to_str().unwrap(), "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "sl28-ogr-obstruction: pass\n");
    let text = fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("scenario: sl28-ogr-obstruction\nstatus:   pass\n"));
    assert!(text.contains("N-fixed point on G_iso(4, U)"));
}

fn cache_file(dir: &Path, field: FiniteField, norm: Normalization) -> std::path::PathBuf {
    let gens = named::sl2_generators(field);
    dir.join(format!("{}.txt", cache_key(field, 2, norm, &gens)))
}

#[test]
fn cache_round_trip_and_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let f11 = FiniteField::prime(11).unwrap();
    let args = ["run", "psl211-weil", "--format", "json", "--cache", d];

    let first = edcheck(&args);
    assert_eq!(first.status.code(), Some(0));
    let sl2 = cache_file(dir.path(), f11, Normalization::Matrix);
    let psl2 = cache_file(dir.path(), f11, Normalization::ModSign);
    let stored = fs::read_to_string(&sl2).unwrap();
    assert_eq!(stored.lines().count(), 1320);
    assert_eq!(fs::read_to_string(&psl2).unwrap().lines().count(), 660);
    for line in stored.lines() {
        assert_eq!(line.len(), 4);
        assert!(line.chars().all(|c| c.is_ascii_digit() || c == 'a'));
        assert!(decode_element(f11, 2, line).is_some());
    }
    assert_eq!(stored.lines().next(), Some("1001"));

    let second = edcheck(&args);
    assert_eq!(second.status.code(), Some(0));
    assert!(!String::from_utf8_lossy(&second.stderr).contains("corrupt"));
    assert_eq!(json_without_timing(&first.stdout), json_without_timing(&second.stdout));

    // swapping two elements breaks BFS order without breaking the syntax
    let mut lines: Vec<&str> = stored.lines().collect();
    lines.swap(5, 6);
    fs::write(&sl2, lines.join("\n") + "\n").unwrap();
    fs::write(&psl2, "not a matrix\n").unwrap();
    let third = edcheck(&args);
    assert_eq!(third.status.code(), Some(0));
    let stderr = String::from_utf8_lossy(&third.stderr);
    assert_eq!(stderr.matches("corrupt").count(), 2, "{stderr}");
    assert_eq!(json_without_timing(&first.stdout), json_without_timing(&third.stdout));
    assert_eq!(fs::read_to_string(&sl2).unwrap(), stored);
}

#[test]
fn f8_cache_uses_binary_digits() {
    let dir = tempfile::tempdir().unwrap();
    let out = edcheck(&["run", "sl28-principal-series", "--cache", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let stored = fs::read_to_string(cache_file(dir.path(), FiniteField::f8(), Normalization::Matrix)).unwrap();
    assert_eq!(stored.lines().count(), 504);
    assert!(stored.lines().all(|l| l.len() == 12 && l.chars().all(|c| c == '0' || c == '1')));
}

#[test]
fn all_is_deterministic() {
    let a = edcheck(&["run", "all", "--format", "json"]);
    let b = edcheck(&["run", "all", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stdout));
    assert_eq!(b.status.code(), Some(0));
    let (a, b) = (json_without_timing(&a.stdout), json_without_timing(&b.stdout));
    assert_eq!(a["status"], "pass");
    assert_eq!(a, b);
    let labels: Vec<&str> = a["checks"].as_array().unwrap().iter().map(|c| c["label"].as_str().unwrap()).collect();
    for name in edcheck::SCENARIOS.iter().map(|s| s.name) {
        assert!(labels.iter().any(|l| l.starts_with(&format!("{name}: "))), "{name}");
    }
}
