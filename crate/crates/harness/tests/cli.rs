use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_closurelab"))
        .args(args)
        .env_remove("CLOSURELAB_BUDGET_NODES")
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = cli(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn closure_of_a5() {
    let v = json(&["closure", "--catalog", "A5", "--action", "natural", "--k", "4", "--json"]);
    assert_eq!(v["command"], "closure");
    assert_eq!(v["result"]["order"], 60);
    assert_eq!(v["result"]["equals_group"], true);
    assert_eq!(v["group"]["name"], "A5");
    assert_eq!(v["group"]["order"], 60);
    assert_eq!(v["action"]["provenance"], "natural");
    assert!(v["budget"]["elapsed_ms"].is_null());
    let v = json(&["closure", "--catalog", "A5", "--k", "3", "--json"]);
    assert_eq!(v["result"]["order"], 120);
}

#[test]
fn m24_base() {
    let out = cli(&["base", "--catalog", "M24", "--exact"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("base size 7 (minimal)"), "{text}");
    let v = json(&["base", "--catalog", "M24", "--json"]);
    assert_eq!(v["result"]["size"], 7);
    assert_eq!(v["result"]["exhaustive"], true);
}

#[test]
fn verify_passes() {
    let out = cli(&["verify", "--suite", "eq1-monotone"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().ends_with("suite eq1-monotone: pass\n"));
    let v = json(&["verify", "--suite", "intro-identity", "--json"]);
    assert_eq!(v["result"]["pass"], true);
    assert_eq!(v["result"]["claims"].as_array().unwrap().len(), 3);
}

#[test]
fn usage_errors_exit_1() {
    let out = cli(&["closure", "--catalog", "A5", "--k", "3", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("Usage"));
    assert_eq!(cli(&["verify", "--suite", "nope"]).status.code(), Some(1));
    assert_eq!(cli(&["order"]).status.code(), Some(1));
    assert_eq!(cli(&["order", "--catalog", "X9"]).status.code(), Some(1));
    assert_eq!(cli(&["order", "--catalog", "A5", "--action", "projective"]).status.code(), Some(1));
    assert_eq!(cli(&["--help"]).status.code(), Some(0));
}

#[test]
fn budget_exhaustion_exits_3() {
    let out = cli(&["closure", "--catalog", "S6", "--action", "ksubsets:3", "--k", "2", "--budget-nodes", "1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8(out.stderr).unwrap().contains("lower bound"));
    let out = Command::new(env!("CARGO_BIN_EXE_closurelab"))
        .args(["closure", "--catalog", "S6", "--action", "ksubsets:3", "--k", "2"])
        .env("CLOSURELAB_BUDGET_NODES", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn json_is_reproducible() {
    let args = ["spectrum", "--catalog", "A6", "--action", "ksubsets:2", "--json"];
    let a = cli(&args).stdout;
    let b = cli(&args).stdout;
    assert_eq!(a, b);
    let v: Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["result"]["minimal_k"], 4);
}

#[test]
fn large_orders_are_strings() {
    let v = json(&["order", "--catalog", "S25", "--json"]);
    assert_eq!(v["result"]["order"], "15511210043330985984000000");
    let v = json(&["order", "--catalog", "M24", "--json"]);
    assert_eq!(v["result"]["order"], 244823040);
}

#[test]
fn group_files_and_cosets() {
    let mut g = tempfile::NamedTempFile::new().unwrap();
    writeln!(g, "degree 5\n(1 2 3 4 5)\n(1 2 3)").unwrap();
    let mut h = tempfile::NamedTempFile::new().unwrap();
    writeln!(h, "degree 5\n# a Sylow 5-subgroup\n(1 2 3 4 5)").unwrap();
    let gp = g.path().to_str().unwrap();
    let v = json(&["order", "--group-file", gp, "--json"]);
    assert_eq!(v["result"]["order"], 60);
    let action = format!("cosets:{}", h.path().to_str().unwrap());
    let v = json(&["base", "--group-file", gp, "--action", &action, "--json"]);
    assert_eq!(v["action"]["degree"], 12);
    assert_eq!(v["result"]["size"], 2);
    let v = json(&["blocks", "--group-file", gp, "--action", &action, "--json"]);
    let systems = v["result"]["systems"].as_array().unwrap();
    assert_eq!(systems.len(), 1);
    assert_eq!(systems[0]["blocks"], 6);
    assert_eq!(systems[0]["maximal"], true);
}

#[test]
fn actions_and_small_commands() {
    let v = json(&["base", "--catalog", "S6", "--action", "partitions:2x3", "--json"]);
    assert_eq!(v["result"]["size"], 4);
    let v = json(&["order", "--catalog", "S4", "--action", "partitions:2x2", "--json"]);
    assert_eq!(v["result"]["order"], 6);
    assert_eq!(v["result"]["faithful"], false);
    let v = json(&["primitive", "--catalog", "D8", "--json"]);
    assert_eq!(v["result"]["primitive"], false);
    let v = json(&["primitive", "--catalog", "PSL(3,2)", "--action", "projective", "--json"]);
    assert_eq!(v["result"]["primitive"], true);
    let v = json(&["orbits", "--catalog", "A5", "--action", "ksubsets:2", "--json"]);
    assert_eq!(v["result"]["orbits"].as_array().unwrap().len(), 1);
    let v = json(&["ktrans", "--catalog", "A5", "--max-degree", "12", "--json"]);
    assert_eq!(v["result"]["k"], 4);
    assert_eq!(v["result"]["certified"], true);
    let out = cli(&["catalog", "--list"]);
    assert!(String::from_utf8(out.stdout).unwrap().contains("M24"));
}

#[test]
fn csv_tables() {
    let out = cli(&["spectrum", "--catalog", "A5", "--csv"]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "group,action,k,order,closed\nA5,natural,1,120,false\nA5,natural,2,120,false\nA5,natural,3,120,false\nA5,natural,4,60,true\n"
    );
    let out = cli(&["base", "--catalog", "S5", "--action", "ksubsets:2", "--csv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "group,action,degree,b,exhaustive\nS5,ksubsets:2,10,3,true\n");
}
