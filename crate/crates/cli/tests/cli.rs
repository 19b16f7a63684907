use std::process::{Command, Output};

use serde_json::Value;

fn lyness(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lyness")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Runs with `--format json`, checks the round trip and returns the payload.
fn json(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = lyness(&full);
    let text = stdout(&out);
    let line = text.trim_end();
    let v: Value = serde_json::from_str(line).unwrap_or_else(|e| panic!("{e}: {text}"));
    assert_eq!(serde_json::to_string(&v).unwrap(), line, "round trip");
    (out.status.code().unwrap(), v)
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|s| s.as_str().unwrap().to_string()).collect()
}

#[test]
fn iterate_nine_cycle() {
    let (code, v) = json(&["iterate", "--a", "7", "--x0", "3/2", "--x1", "5/7", "--steps", "10"]);
    assert_eq!(code, 0);
    let terms = strings(&v["payload"]["terms"]);
    assert_eq!(
        terms,
        ["3/2", "5/7", "36/7", "17/1", "14/3", "35/51", "28/17", "63/5", "119/10", "3/2", "5/7"]
    );
}

#[test]
fn iterate_integer_orbit() {
    let out = lyness(&["iterate", "--a", "1", "--x0", "1", "--x1", "1", "--steps", "6"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1/1\n1/1\n2/1\n3/1\n2/1\n1/1\n1/1\n");
}

#[test]
fn iterate_forbidden_set() {
    let (code, v) = json(&["iterate", "--a", "2", "--x0", "0", "--x1", "1", "--steps", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["payload"]["truncated"]["step"], 0);
    assert_eq!(strings(&v["payload"]["terms"]), ["0/1", "1/1"]);
}

#[test]
fn parse_errors_exit_two() {
    assert_eq!(lyness(&["iterate", "--a", "1.5", "--x0", "1", "--x1", "1"]).status.code(), Some(2));
    assert_eq!(lyness(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(lyness(&["curve", "add", "--a", "7", "--p", "1:2", "--q", "1:0:0"]).status.code(), Some(2));
    assert_eq!(lyness(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn domain_errors_are_reported() {
    let (code, v) = json(&["curve", "add", "--a", "7", "--h", "258/7", "--p", "1,1", "--q", "1:0:0"]);
    assert_eq!(code, 2);
    assert_eq!(v["status"], "error");
    assert_eq!(v["error"]["code"], 2);
    let (code, _) = json(&["mobius", "--matrix", "1,2,2,4"]);
    assert_eq!(code, 2);
}

#[test]
fn period_command() {
    let (code, v) = json(&["period", "--a", "3/2", "--x0", "-2", "--x1", "3/5"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["period"], 10);
    assert_eq!(v["payload"]["status"], "periodic");
}

#[test]
fn growth_guard_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_lyness"))
        .args(["period", "--a", "2", "--x0", "1", "--x1", "1"])
        .env("LYNESS_MAX_BITS", "64")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("growth guard"));
}

#[test]
fn curve_operations() {
    let (_, v) = json(&["curve", "add", "--a", "7", "--p", "3/2,5/7", "--q", "1:0:0"]);
    assert_eq!(v["payload"]["sum"], "5:36:7");
    assert_eq!(v["payload"]["h"], "258/7");
    let (_, v) = json(&["curve", "mul", "--a", "7", "--h", "258/7", "--p", "1:0:0", "--k", "9"]);
    assert_eq!(v["payload"]["result"], "1:-1:0");
    let (_, v) = json(&["curve", "order", "--a", "7", "--h", "258/7", "--p", "1:0:0"]);
    assert_eq!(v["payload"]["order"], 9);
    let (_, v) = json(&["curve", "neg", "--a", "7", "--h", "258/7", "--p", "1:0:0"]);
    assert_eq!(v["payload"]["neg"], "0:1:0");
    let (_, v) = json(&["curve", "classify", "--a", "2", "--h", "27/2"]);
    assert_eq!(v["payload"]["class"], "RationalCubic");
}

#[test]
fn conversions() {
    let (code, v) = json(&["convert", "--to", "tate", "--a", "7", "--h", "258/7", "--point", "1:0:0"]);
    assert_eq!(code, 0);
    assert!(v["payload"]["b"].is_string() && v["payload"]["point"].is_string());
    let (code, v) = json(&["convert", "--to", "weierstrass", "--a", "7", "--point", "3/2,5/7"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["h"], "258/7");
    let (code, _) = json(&["convert", "--to", "tate", "--a", "7", "--h", "6"]);
    assert_eq!(code, 2, "h = a - 1 is not elliptic");
}

#[test]
fn family_torsion_mobius() {
    let (_, v) = json(&["family", "--period", "8", "--u", "2"]);
    assert_eq!((v["payload"]["a"].as_str(), v["payload"]["x0"].as_str()), (Some("3/7"), Some("3/5")));
    let (_, v) = json(&["torsion", "--a", "7"]);
    assert_eq!(v["payload"]["h"], "258/7");
    assert_eq!(v["payload"]["points"].as_array().unwrap().len(), 9);
    let (_, v) = json(&["mobius", "--matrix", "-1,-1/3,1,0"]);
    assert_eq!(v["payload"]["period"], 6);
    let (_, v) = json(&["mobius", "--matrix", "1,-3/7,1,0"]);
    assert_eq!(v["payload"]["class"], "non-periodic");
}

#[test]
fn nine_command() {
    let (_, v) = json(&["nine", "--kmin", "1", "--kmax", "1"]);
    let seed = &v["payload"]["seeds"][0];
    assert_eq!((seed["a"].as_str(), seed["positive"].as_bool()), (Some("391/370"), Some(false)));
    let (_, v) = json(&["nine", "--kmin", "0", "--kmax", "0"]);
    assert!(v["payload"]["seeds"].as_array().unwrap().is_empty());
    let (_, v) = json(&["nine", "--kmin", "1", "--kmax", "3", "--positive-only"]);
    let seeds = v["payload"]["seeds"].as_array().unwrap();
    assert!(!seeds.is_empty());
    assert!(seeds.iter().all(|s| s["positive"] == true));
}

#[test]
fn verify_suites() {
    let (code, v) = json(&["verify", "--suite", "table2"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["checks"].as_array().unwrap().len(), 9);
    let (code, v) = json(&["verify", "--suite", "kq", "--seed", "7"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["seed"], 7);
    for suite in ["table1", "torsion9", "pipeline", "nonelliptic"] {
        assert_eq!(json(&["verify", "--suite", suite]).0, 0, "{suite}");
    }
}

#[test]
fn verify_all_reports_fourteen_criteria() {
    let (code, v) = json(&["verify", "--suite", "all"]);
    let checks = v["payload"]["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 14);
    // The multiplication regression cannot pass, so the suite exits 1.
    assert_eq!(code, 1);
    let failed: Vec<&str> = checks.iter().filter(|c| c["passed"] == false).map(|c| c["id"].as_str().unwrap()).collect();
    assert_eq!(failed, ["2"]);
}
