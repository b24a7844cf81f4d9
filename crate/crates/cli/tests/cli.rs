use std::process::{Command, Output};

use serde_json::Value;

fn cyclo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclo"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = cyclo(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn csv_rows(args: &[&str]) -> Vec<Vec<String>> {
    let mut full = args.to_vec();
    full.extend(["--format", "csv"]);
    let out = cyclo(&full);
    assert!(out.status.success(), "{args:?}");
    let mut r = csv::Reader::from_reader(out.stdout.as_slice());
    r.records()
        .map(|rec| rec.unwrap().iter().map(String::from).collect())
        .collect()
}

#[test]
fn coefficient_queries() {
    assert_eq!(json(&["coeff", "--n", "105", "--k", "7", "--eps", "1"])["value"], -2);
    assert_eq!(json(&["coeff", "--n", "1", "--k", "0", "--eps", "1"])["value"], 1);
    assert_eq!(json(&["coeff", "--n", "6", "--k", "3", "--eps", "-1"])["value"], -1);
    let all = json(&["coeff", "--n", "30", "--k", "5", "--eps", "-1", "--engine", "all"]);
    assert_eq!(all["agree"], true);
    assert_eq!(all["schema"], "cyclo.coeff/v1");
}

#[test]
fn series_output() {
    let s = json(&["coeff", "--n", "6", "--eps", "-1", "--series", "4", "--engine", "all"]);
    assert_eq!(s["values"]["gt"], serde_json::json!([1, 1, 0, -1, -1]));
    assert_eq!(s["agree"], true);
}

#[test]
fn tables_reproduce() {
    let t1 = csv_rows(&["table", "--id", "1"]);
    assert!(t1.contains(&vec!["1".into(), "23".into(), "A".into(), "4".into()]));
    let t2 = json(&["table", "--id", "2"]);
    let rows = t2["rows"].as_array().unwrap();
    let e16 = rows.iter().find(|r| r["row_key"] == "16").unwrap();
    assert_eq!(e16["value"], "733/4032");
    let t6 = csv_rows(&["table", "--id", "6"]);
    assert!(t6.contains(&vec!["6".into(), "11".into(), "f".into(), "-25/96".into()]));
    assert!(t6.contains(&vec!["6".into(), "11".into(), "g".into(), "1/16".into()]));
}

#[test]
fn verify_suites() {
    let t = json(&["verify", "--suite", "tables"]);
    assert_eq!(t["passed"], true);
    let e = json(&["verify", "--suite", "engines", "--kmax", "20", "--nmax", "500"]);
    assert_eq!(e["passed"], true);
    assert_eq!(e["suites"][0]["report"]["disagreements"], serde_json::json!([]));
}

#[test]
fn identity_suite_reports_seesaw_violations() {
    let r = json(&["verify", "--suite", "identities", "--kmax", "40"]);
    assert_eq!(r["passed"], true, "{}", r["suites"][0]["report"]["failures"]);
    let report = &r["suites"][0]["report"];
    // (-1)^k (e_k - e_{k+1}) <= 0 exactly at these k below 41
    assert_eq!(report["seesaw_violations"], serde_json::json!([33, 34]));
    assert_eq!(report["seesaw_values"][1], "-18059/4626720");
}

#[test]
fn kmin_queries() {
    let m = json(&["kmin", "--v", "-2"]);
    assert_eq!(m["entries"][0]["k_min"], 7);
    assert_eq!(m["entries"][0]["n"], "105");
    assert_eq!(json(&["kmin", "--v", "0"])["entries"][0]["k_min"], 1);
    let r = json(&["kmin", "--range", "-70", "70"]);
    assert!(r["max_k_min"].as_u64().unwrap() <= 105);
    assert_eq!(r["entries"].as_array().unwrap().len(), 141);
}

#[test]
fn kmin_ceiling_is_reported() {
    let out = cyclo(&["kmin", "--v", "5", "--ceiling", "20"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["entries"][0]["error"].as_str().unwrap().contains("20"));
}

#[test]
fn bench_runs() {
    let b = json(&["bench", "--k", "20", "--engine", "divisor,partition", "--repeat", "1"]);
    assert_eq!(b["timings"].as_array().unwrap().len(), 2);
    let c = csv_rows(&["bench", "--k", "13", "--repeat", "1"]);
    assert_eq!(c.len(), 5);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(cyclo(&["coeff", "--n", "0", "--k", "1"]).status.code(), Some(2));
    assert_eq!(cyclo(&["coeff", "--n", "5", "--eps", "2"]).status.code(), Some(2));
    assert_eq!(cyclo(&["table", "--id", "7"]).status.code(), Some(2));
    assert_eq!(cyclo(&["average", "--k", "4", "--route", "prime"]).status.code(), Some(2));
    assert_eq!(cyclo(&["kmin"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let a = cyclo(&["table", "--id", "4", "--format", "csv"]);
    let b = cyclo(&["table", "--id", "4", "--format", "csv"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.contains(&b'\r'));
}

#[test]
fn rationals_round_trip() {
    let d = json(&["density", "--k", "7"]);
    for entry in d["scaled"].as_array().unwrap() {
        let s = entry["value"].as_str().unwrap();
        let r: cyclo_core::Rat = s.parse().unwrap();
        assert_eq!(r.to_string(), s);
    }
    let q: cyclo_core::Rat = d["zero_density"]["q"].as_str().unwrap().parse().unwrap();
    assert_eq!(q, cyclo_core::Rat::frac(1315, 2688));
}

#[test]
fn averages_and_empirical() {
    let a = json(&["average", "--k", "10"]);
    assert_eq!(a["e"], "31/160");
    assert_eq!(a["g"], "23/96");
    let p = json(&["average", "--k", "13", "--route", "prime"]);
    assert_eq!(p["e"], "13/288");
    let e = json(&["empirical", "--k", "1", "--x", "10", "--v", "1"]);
    assert_eq!(e["avg"], "3/10");
}
