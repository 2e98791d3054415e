//! End-to-end tests of the `verlie` binary.

use std::process::{Command, Output};

fn verlie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verlie")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn fusion_of_two_l2() {
    let o = verlie(&["fusion", "--p", "5", "--i", "2", "--j", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "L1 + L3");
}

#[test]
fn fusion_table_lists_every_pair() {
    let o = verlie(&["fusion", "--p", "5"]);
    assert_eq!(stdout(&o).lines().count(), 10);
    let o = verlie(&["fusion", "--p", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["products"].as_array().unwrap().len(), 10);
}

#[test]
fn braiding_of_l2_at_p3() {
    let o = verlie(&["braid", "--p", "3", "--i", "2"]);
    assert_eq!(stdout(&o).trim(), "[-1]");
}

#[test]
fn free_lie_degree_two_on_l3() {
    let o = verlie(&["flie", "--p", "5", "--k", "3", "--degree", "2"]);
    assert_eq!(stdout(&o).trim(), "L3");
}

#[test]
fn rank_one_over_the_unit_does_not_stabilize() {
    let o = verlie(&[
        "contragredient",
        "--p",
        "5",
        "--torus",
        "one",
        "--k",
        "2",
        "--a",
        "1",
        "--b",
        "1",
        "--max-degree",
        "6",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("not stabilized within the truncation"));
    assert!(text.contains("g[ 3] = L2"));
}

#[test]
fn cartan_json_is_canonical() {
    let o = verlie(&["contragredient", "--p", "5", "--torus", "cartan", "--cartan", "2,-1;-1,2", "--format", "json"]);
    let text = stdout(&o);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["top_degree"], 2);
    assert_eq!(serde_json::to_string(&v).unwrap(), text.trim());
}

#[test]
fn gl_chain_text_has_multidegrees() {
    let o = verlie(&["contragredient", "--p", "5", "--torus", "gl_chain", "--simples", "1,2,1"]);
    let text = stdout(&o);
    assert!(text.contains("stabilized, top degree 2"));
    assert!(text.contains("g[1, 1] = L1"));
}

#[test]
fn scan_summary() {
    let o = verlie(&["scan", "--p", "5", "--k", "2", "--max-degree", "6", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["has_top_degrees_1_2_3"], true);
    assert_eq!(v["rows"].as_array().unwrap().len(), 24);
}

#[test]
fn exit_codes() {
    assert_eq!(verlie(&["fusion", "--p", "4", "--i", "1", "--j", "1"]).status.code(), Some(2));
    assert_eq!(verlie(&["fusion", "--p", "5", "--bogus"]).status.code(), Some(2));
    assert_eq!(
        verlie(&["contragredient", "--p", "5", "--torus", "sl2", "--k", "2", "--atilde", "0", "--btilde", "1"])
            .status
            .code(),
        Some(2)
    );
    let budget = ["contragredient", "--p", "5", "--torus", "one", "--k", "3", "--budget", "3"];
    assert_eq!(verlie(&budget).status.code(), Some(3));
}

#[test]
fn verify_reports_known_failures() {
    let o = verlie(&["verify", "--criterion", "1,4"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.lines().next().unwrap().starts_with("PASS  1"));
    assert!(text.contains("FAIL  4"));
    assert_eq!(verlie(&["verify", "--criterion", "4", "--allow-known"]).status.code(), Some(0));
    assert_eq!(verlie(&["verify", "--criterion", "2", "--allow-known"]).status.code(), Some(0));
}
