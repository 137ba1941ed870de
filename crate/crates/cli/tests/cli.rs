use std::process::{Command, Output};

use serde_json::{json, Value};

fn chromaq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chromaq"))
        .args(args)
        .env_remove("CHROMAQ_MAX_N")
        .output()
        .expect("binary runs")
}

fn data(out: &Output, command: &str) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let doc: Value = serde_json::from_slice(&out.stdout).expect("JSON document");
    assert_eq!(doc["command"], command);
    assert_eq!(doc["version"], env!("CARGO_PKG_VERSION"));
    doc["data"].clone()
}

#[test]
fn list_three() {
    let d = data(&chromaq(&["list", "--n", "3"]), "list");
    assert_eq!(d, json!([[1, 2, 3], [1, 3, 3], [2, 2, 3], [2, 3, 3], [3, 3, 3]]));
}

#[test]
fn expand_path_power_sums() {
    let d = data(&chromaq(&["expand", "--poset", "2,3,3", "--basis", "p", "--json"]), "expand");
    assert_eq!(d, json!({"3": [1, 1, 1], "2,1": [1, 2, 1], "1,1,1": [1, 4, 1]}));
}

#[test]
fn expand_path_other_bases() {
    let e = data(&chromaq(&["expand", "--poset", "2,3,3", "--basis", "e"]), "expand");
    assert_eq!(e, json!({"3": [1, 1, 1], "2,1": [0, 1]}));
    let f = data(&chromaq(&["expand", "--poset", "2,3,3", "--basis", "F"]), "expand");
    assert_eq!(f["n"], 3);
    assert_eq!(f["terms"][0], json!({"S": [], "coef": [1, 2, 1]}));
}

#[test]
fn char_both_methods() {
    let d = data(&chromaq(&["char", "--lambda", "2,1", "--mu", "3", "--method", "both"]), "char");
    assert_eq!(d, json!({"roichman": -1, "mn": -1, "agree": true}));
}

#[test]
fn char_table_csv() {
    let out = chromaq(&["char", "--n", "3", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "lambda,mu,value,agree");
    assert_eq!(lines.len(), 10);
    assert!(lines.contains(&"\"2,1\",\"1,1,1\",2,true"));
}

#[test]
fn verify_passes_and_is_deterministic() {
    let a = chromaq(&["verify", "--n", "4", "--jobs", "1"]);
    let b = chromaq(&["verify", "--n", "4", "--jobs", "3"]);
    assert_eq!(a.stdout, b.stdout);
    let d = data(&a, "verify");
    assert_eq!(d["passed"], true);
    assert_eq!(d["suites"].as_array().unwrap().len(), 5);
}

#[test]
fn verify_five_exits_zero() {
    let out = chromaq(&["verify", "--n", "5", "--suite", "routes,oracle,symmetry,bijection,characters"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn report_is_byte_identical() {
    let a = chromaq(&["report", "--n", "4"]);
    let b = chromaq(&["report", "--n", "4", "--jobs", "2"]);
    assert_eq!(a.stdout, b.stdout);
    let d = data(&a, "report");
    assert_eq!(d.as_array().unwrap().len(), 14);
    assert!(d.as_array().unwrap().iter().all(|r| r["flags"]["route_agreement"] == true));
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("chromaq-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("list.json");
    let out = chromaq(&["list", "--n", "2", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["data"], json!([[1, 2], [2, 2]]));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["bogus"][..],
        &["expand", "--poset", "3,2,3"],
        &["expand", "--poset", "x"],
        &["char", "--lambda", "2,1"],
        &["verify", "--n", "2", "--suite", "nope"],
        &["report", "--n", "2", "--format", "csv"],
        &["list", "--n", "2", "--jobs", "0"],
    ] {
        assert_eq!(chromaq(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn resource_caps_exit_three() {
    assert_eq!(chromaq(&["list", "--n", "9"]).status.code(), Some(3));
    let capped = Command::new(env!("CARGO_BIN_EXE_chromaq"))
        .args(["expand", "--poset", "1,2,3,4"])
        .env("CHROMAQ_MAX_N", "3")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(3));
    let raised = Command::new(env!("CARGO_BIN_EXE_chromaq"))
        .args(["list", "--n", "9"])
        .env("CHROMAQ_MAX_N", "9")
        .output()
        .unwrap();
    assert_eq!(data(&raised, "list").as_array().unwrap().len(), 4862);
}
