//! End-to-end runs of the `cdindex` binary against known outputs.

use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cdindex"))
        .args(args)
        .env_remove("CDINDEX_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn boolean_index_rank_five() {
    assert_eq!(
        stdout(&["index", "boolean", "--rank", "5"]).trim(),
        "c^4 + 3c^2d + 5cdc + 3dc^2 + 4d^2"
    );
}

#[test]
fn cubical_index_rank_five() {
    assert_eq!(
        stdout(&["index", "cubical", "--rank", "5"]).trim(),
        "c^4 + 6c^2d + 16cdc + 14dc^2 + 20d^2"
    );
}

#[test]
fn methods_print_identical_json() {
    for rank in [1, 4, 9] {
        let r = rank.to_string();
        let ghat = stdout(&["index", "boolean", "--rank", &r, "--json"]);
        for m in ["purtill", "phi"] {
            assert_eq!(stdout(&["index", "boolean", "--rank", &r, "--method", m, "--json"]), ghat);
        }
    }
}

#[test]
fn subspace_index() {
    assert_eq!(
        stdout(&["index", "subspace", "--rank", "3"]).trim(),
        "aa + (q + q^2)ab + (q + q^2)ba + q^3bb"
    );
}

#[test]
fn beta_and_gamma_values() {
    assert_eq!(stdout(&["beta", "(6,1,1)"]).trim(), "5005");
    assert_eq!(stdout(&["beta", "(1,1,1,0,1)"]).trim(), "360360");
    assert_eq!(stdout(&["beta", "cdc"]).trim(), "5");
    assert_eq!(stdout(&["gamma", "cd"]).trim(), "4");
    assert_eq!(stdout(&["gamma", "dc"]).trim(), "6");
}

#[test]
fn decompose_c_cubed() {
    assert_eq!(
        stdout(&["decompose", "c^3"]).trim(),
        "1/8 (1·1·1·1) - 1/4 (1·d) - 1/4 (d·1)"
    );
}

#[test]
fn divisibility_scan_finds_thirteen_classes() {
    let text = stdout(&["scan", "divisibility", "--rank", "13", "--modulus", "1001"]);
    assert!(text.contains("note: 13 classes"), "{text}");
    assert!(text.contains("(1,1,6)         5005"));
    let json = stdout(&["scan", "divisibility", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v[0]["table"]["rows"].as_array().unwrap().len(), 13);
}

#[test]
fn verify_suites_pass() {
    for suite in ["core", "coalgebra", "dual", "lattice", "oracle", "cubical"] {
        let out = run(&["verify", "--suite", suite, "--max-degree", "5"]);
        assert!(out.status.success(), "{suite}: {}", String::from_utf8_lossy(&out.stdout));
    }
}

#[test]
fn conjecture_scans_exit_zero() {
    // The cubical suite carries a failing report-only check.
    let out = run(&["scan", "cubical", "--max-degree", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("cc-d-base-equality"));
}

#[test]
fn oracle_compare() {
    let text = stdout(&["oracle", "--poset", "cube", "--rank", "4", "--compare"]);
    assert!(text.contains("cd-index: c^3 + 4cd + 6dc"), "{text}");
    assert!(text.contains("compare: matches the algebraic index"));
    assert!(text.contains("eulerian: yes"));
}

#[test]
fn oracle_reads_poset_files() {
    let dir = tempfile::tempdir().unwrap();
    // A rank-2 poset with three atoms is not Eulerian.
    let path = dir.path().join("p.txt");
    std::fs::write(&path, "0 < a\n0 < b\n0 < c\na < 1\nb < 1\nc < 1\n").unwrap();
    let spec = format!("file:{}", path.display());
    let out = run(&["oracle", "--poset", &spec]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(out.status.success(), "{text}");
    assert!(text.contains("eulerian: no"), "{text}");
    assert_eq!(code(&["oracle", "--poset", &spec, "--compare"]), 2);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["beta", "cx"]), 3);
    assert_eq!(code(&["index", "boolean", "--rank", "400"]), 4);
    assert_eq!(code(&["oracle", "--poset", "boolean", "--rank", "30"]), 7);
    assert_eq!(code(&["oracle", "--poset", "file:/does/not/exist"]), 5);
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg");
    std::fs::write(&cfg, "speed = 3\n").unwrap();
    assert_eq!(code(&["--config", cfg.to_str().unwrap(), "beta", "c"]), 6);
}

#[test]
fn config_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let cfg = dir.path().join("cfg");
    std::fs::write(&cfg, format!("max_rank = 8\ncache_dir = {}\n", cache.display())).unwrap();
    let c = cfg.to_str().unwrap();
    assert_eq!(code(&["--config", c, "index", "boolean", "--rank", "9"]), 4);
    let first = stdout(&["--config", c, "index", "boolean", "--rank", "8"]);
    assert!(cache.join("boolean_rank_8.json").exists());
    // A second run starts from the cached tables.
    assert_eq!(stdout(&["--config", c, "index", "boolean", "--rank", "8"]), first);

    let other = dir.path().join("env");
    let out = Command::new(env!("CARGO_BIN_EXE_cdindex"))
        .args(["index", "cubical", "--rank", "3"])
        .env("CDINDEX_CACHE", &other)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(other.join("cubical_rank_3.json").exists());
}

#[test]
fn export_files() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("t.csv");
    let p = csv.to_str().unwrap();
    stdout(&["export", "--what", "table", "--rank", "4", "--format", "csv", "--out", p]);
    assert_eq!(
        std::fs::read_to_string(&csv).unwrap(),
        "list,word,coefficient\n\"(0,1)\",dc,2\n\"(1,0)\",cd,2\n(3),c^3,1\n"
    );
    let json = dir.path().join("r.json");
    let p = json.to_str().unwrap();
    stdout(&["--jobs", "2", "export", "--what", "report", "--scan", "maxima", "--max-degree", "8", "--out", p]);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(v["scan"], "maxima");
    assert!(Path::new(p).exists());
}

#[test]
fn reports_do_not_depend_on_jobs() {
    let one = stdout(&["--jobs", "1", "scan", "balance", "--max-degree", "9", "--json"]);
    let four = stdout(&["--jobs", "4", "scan", "balance", "--max-degree", "9", "--json"]);
    assert_eq!(one, four);
}
