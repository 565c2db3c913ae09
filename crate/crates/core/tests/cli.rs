use std::process::{Command, Output};

fn sptlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sptlab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_csv() {
    let o = sptlab(&["compute", "--stat", "spt", "--upto", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "n,value\n0,0\n1,1\n2,3\n3,5\n4,10\n5,14\n");
}

#[test]
fn compute_json_with_rationals() {
    let o = sptlab(&["compute", "--stat", "eta_k", "--k", "4", "--upto", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[4]["n"], 4);
    assert_eq!(v[4]["value"], "6");
}

#[test]
fn compute_requires_k_for_moments() {
    let o = sptlab(&["compute", "--stat", "M_k", "--upto", "4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_printed_failure_is_expected() {
    let o = sptlab(&["verify", "--identity", "thm2", "--variant", "printed", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["identity"], "thm2");
    assert_eq!(v["variant"], "printed");
    assert_eq!(v["order"], 200);
    assert_eq!(v["status"], "fail");
    assert_eq!(v["first_failure"]["n"], 1);
    assert_eq!(v["first_failure"]["diff"], "-1/6");
    assert!(v["runtime_ms"].is_u64());
}

#[test]
fn verify_pass_has_null_failure() {
    let o = sptlab(&["verify", "--identity", "thm1", "--order", "30", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["variant"], "n/a");
    assert!(v["first_failure"].is_null());
}

#[test]
fn verify_custom_parameters() {
    let o = sptlab(&["verify", "--identity", "eq2_specialized", "--order", "12", "--params", "3,1/4,5,-2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = sptlab(&["verify", "--identity", "eq2_specialized", "--order", "12", "--params", "1,2,3,4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(sptlab(&["verify", "--identity", "bogus_id"]).status.code(), Some(2));
    assert_eq!(sptlab(&["verify", "--identity", "eq8", "--variant", "printed"]).status.code(), Some(2));
    assert_eq!(sptlab(&["verify", "--identity", "eq10", "--variant", "draft"]).status.code(), Some(2));
    assert_eq!(sptlab(&["compute", "--upto", "3"]).status.code(), Some(2));
    assert_eq!(sptlab(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(sptlab(&["congruence", "--stat", "eta4", "--mod", "0", "--stride", "3", "--upto", "30"]).status.code(), Some(2));
}

#[test]
fn congruence_pass_and_fail() {
    let o = sptlab(&["congruence", "--stat", "SPT_plus", "--mod", "7", "--stride", "7", "--upto", "140"]);
    assert_eq!(o.status.code(), Some(0));
    let o = sptlab(&["congruence", "--stat", "SPT_plus", "--mod", "5", "--stride", "5", "--upto", "50", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "fail");
}

#[test]
fn verify_all_small_order() {
    let o = sptlab(&["verify-all", "--order", "12", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 21);
    let printed_fails = reports
        .iter()
        .filter(|r| r["variant"] == "printed")
        .all(|r| r["status"] == "fail");
    assert!(printed_fails);
}

#[test]
fn table_csv() {
    let o = sptlab(&["table", "--kind", "rank", "--upto", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "n,m,count\n0,0,1\n1,0,1\n2,-1,1\n2,1,1\n3,-2,1\n3,0,1\n3,2,1\n");
    let gf = sptlab(&["table", "--kind", "crank", "--upto", "12"]);
    let enumerated = sptlab(&["table", "--kind", "crank-oracle", "--upto", "12"]);
    let rows_from = |o: &Output, n: usize| -> Vec<String> {
        stdout(o).lines().filter(|l| l.starts_with(&format!("{n},"))).map(String::from).collect()
    };
    for n in 2..=12 {
        assert_eq!(rows_from(&gf, n), rows_from(&enumerated, n), "crank row {n}");
    }
}
