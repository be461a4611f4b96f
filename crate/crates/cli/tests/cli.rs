use std::process::{Command, Output};

use serde_json::Value;

fn golden(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_golden"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = golden(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    stdout(&out)
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    serde_json::from_str(&ok(&full)).unwrap()
}

#[test]
fn fibonomial_triangle() {
    assert_eq!(ok(&["table", "fibonomial", "--to", "4"]), "1\n1 1\n1 1 1\n1 2 2 1\n1 3 6 3 1\n");
    let doc = json(&["table", "fibonomial", "--to", "2"]);
    assert_eq!(doc["rows"], serde_json::json!([["1"], ["1", "1"], ["1", "1", "1"]]));
}

#[test]
fn fibonacci_and_divisor_tables() {
    assert_eq!(ok(&["table", "fibonacci", "--to", "5", "--format", "csv"]), "n,value\n0,0\n1,1\n2,1\n3,2\n4,3\n5,5\n");
    let doc = json(&["table", "fib-divisor", "--k", "2", "--to", "4"]);
    let values: Vec<&str> = doc["values"].as_array().unwrap().iter().map(|v| v["value"].as_str().unwrap()).collect();
    assert_eq!(values, ["0", "1", "3", "8", "21"]);
    let neg = ok(&["table", "fibonacci", "--from", "-3", "--to", "-1", "--format", "csv"]);
    assert_eq!(neg, "n,value\n-3,2\n-2,-1\n-1,1\n");
}

#[test]
fn expansions() {
    assert!(ok(&["expand", "2"]).contains("polynomial: x^2 - x - 1\n"));
    assert!(ok(&["expand", "0"]).contains("polynomial: 1\n"));
    let p6 = json(&["expand", "6", "--form", "P", "--factors"]);
    assert_eq!(p6["factors"], serde_json::json!(["x^2 - x - 1", "x^2 + 4x - 1", "x^2 - 11x - 1"]));
    assert_eq!(p6["scale"], "1/240");
    let a = json(&["expand", "4", "--a", "1/2"]);
    let b = json(&["expand", "4", "--a", "1/2", "--form", "product"]);
    assert_eq!(a["coefficients"], b["coefficients"]);
    let csv = ok(&["expand", "2", "--a", "-1", "--format", "csv"]);
    assert_eq!(csv, "degree,coefficient\n2,1\n1,1\n0,-1\n");
}

#[test]
fn carlitz_commands() {
    assert_eq!(json(&["carlitz", "charpoly", "--order", "3"])["coefficients"], serde_json::json!(["1", "-2", "-2", "1"]));
    assert_eq!(ok(&["carlitz", "power", "--order", "2", "--k", "5", "--format", "csv"]), "3,5\n5,8\n");
    assert_eq!(ok(&["carlitz", "build", "--order", "2", "--format", "csv"]), "0,1\n1,1\n");
    let inv = json(&["carlitz", "invariants", "--order", "3", "--k", "2"]);
    assert_eq!(inv["trace"], "8");
    assert_eq!(inv["det"], "1");
    assert_eq!(inv["det_expected"], "1");
    assert_eq!(inv["charpoly_matches"], true);
    let inv0 = json(&["carlitz", "invariants", "--order", "4", "--k", "0"]);
    assert_eq!(inv0["trace"], Value::Null);
    assert_eq!(inv0["det"], "1");
}

#[test]
fn verify_examples() {
    for args in [
        &["verify", "--suite", "carlitz", "--max-n", "10", "--max-k", "8"][..],
        &["verify", "--suite", "all", "--max-n", "1"][..],
        &["verify", "--suite", "analytic", "--max-degree", "12"][..],
    ] {
        let out = golden(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert!(stdout(&out).lines().all(|l| !l.starts_with("FAIL")));
    }
}

#[test]
fn report_schema() {
    let doc = json(&["verify", "--suite", "ring,pascal", "--max-n", "5", "--max-k", "3"]);
    let obj = doc.as_object().unwrap();
    let mut keys: Vec<_> = obj.keys().map(String::as_str).collect();
    keys.sort();
    assert_eq!(keys, ["checks", "duration_ms", "params", "suite"]);
    assert_eq!(doc["suite"], "ring,pascal");
    assert_eq!(doc["params"]["max_n"], 5);
    let checks = doc["checks"].as_array().unwrap();
    let names: Vec<&str> = checks.iter().map(|c| c["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    for c in checks {
        assert_eq!(c["failures"], 0);
        assert!(c["counterexample"].is_null());
        assert!(c["cases"].as_u64().unwrap() > 0);
    }
    assert_eq!(doc["params"]["ranges"]["pascal.golden_pascal"], "2 <= n <= 5, 1 <= k <= n-1");
}

#[test]
fn csv_report() {
    let csv = ok(&["verify", "--suite", "binomial", "--max-n", "3", "--format", "csv"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("name,cases,failures,status,counterexample"));
    assert!(lines.all(|l| l.ends_with(",0,pass,")));
}

#[test]
fn writes_to_out_file() {
    let dir = std::env::temp_dir().join(format!("golden-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = golden(&["verify", "--suite", "ring", "--max-n", "3", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["suite"], "ring");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn operational_errors_exit_2() {
    let cases: &[&[&str]] = &[
        &["carlitz", "build", "--order", "17"],
        &["carlitz", "build", "--order", "0"],
        &["table", "fibonacci", "--to", "61"],
        &["expand", "61"],
        &["expand", "2", "--a", "1.5"],
        &["expand", "2", "--a", "1/0"],
        &["verify", "--suite", "carlitz", "--max-n", "17"],
        &["verify", "--suite", "ring", "--max-n", "61"],
        &["verify", "--suite", "nonsense"],
        &["verify", "--out", "/nonexistent-dir/report.json", "--suite", "ring", "--max-n", "1"],
        &["frobnicate"],
    ];
    for args in cases {
        assert_eq!(golden(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn caps_can_be_raised() {
    ok(&["carlitz", "charpoly", "--order", "18", "--order-cap", "18"]);
    ok(&["table", "fibonacci", "--from", "99", "--to", "100", "--n-cap", "100"]);
    ok(&["verify", "--suite", "ring", "--max-n", "80", "--n-cap", "80"]);
}

#[test]
fn seed_changes_cases_not_verdict() {
    let a = json(&["verify", "--suite", "ring", "--max-n", "2", "--seed", "7"]);
    let b = json(&["verify", "--suite", "ring", "--max-n", "2", "--seed", "8"]);
    assert_eq!(a["checks"], b["checks"]);
    assert_ne!(a["params"]["seed"], b["params"]["seed"]);
}
