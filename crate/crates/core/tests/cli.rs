use std::process::Command;

use serde_json::Value;
use weylgraded::cli::run_command;

fn run(args: &[&str]) -> (i32, String) {
    run_command(std::iter::once("weylgraded").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, out) = run(&full);
    assert_eq!(code, 0, "{out}");
    serde_json::from_str(&out).unwrap()
}

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_weylgraded"))
}

#[test]
fn pic_commands() {
    let v = json(&["pic", "eval", "S^2 * i{0,2}"]);
    assert_eq!(v["element"]["a"], 1);
    assert_eq!(v["element"]["b"], 2);
    assert_eq!(v["element"]["J"], serde_json::json!([0, 2]));
    assert_eq!(json(&["pic", "eval", "w * w"])["element"]["expression"], "e");
    assert_eq!(json(&["pic", "eval", "i{0} * S"])["element"]["J"], serde_json::json!([-1]));
    assert_eq!(json(&["pic", "inv", "S * i{0}"])["element"], Value::Null);
    assert_eq!(json(&["pic", "inv", "S * i{0}"])["expression"], "S^-1 * i{1}");
    assert_eq!(json(&["pic", "pow", "S^3 * i{1} * w", "4"])["expression"], "e");
    assert_eq!(json(&["pic", "conj", "S^2", "i{2}"])["expression"], "S^2 * i{0,2}");
}

#[test]
fn canonical_and_classes() {
    let v = json(&["pic", "canonical", "S^2 * i{0,2}"]);
    assert_eq!(v["pair"], serde_json::json!({"J": [], "n": 2}));
    assert_eq!(v["conjugator"]["expression"], "i{2}");
    assert_eq!(v["verified"], true);
    let v = json(&["classify", "canonical", "S^-2 * i{0}"]);
    assert_eq!(v["pair"], serde_json::json!({"J": [1], "n": 2}));
    assert_eq!(v["necklace"], serde_json::json!({"J": [0], "n": 2}));
    assert_eq!(json(&["classify", "same-class", "S^2*i{0}", "S^2*i{1}"])["same_class"], true);
    assert_eq!(json(&["classify", "same-class", "S", "S^2"])["same_class"], false);
    let (code, out) = run(&["classify", "canonical", "i{0,5}"]);
    assert_eq!(code, 1);
    assert!(out.contains("not generative"), "{out}");
}

#[test]
fn necklaces() {
    assert_eq!(run(&["necklace", "count", "4"]), (0, "6".into()));
    assert_eq!(json(&["necklace", "count", "6"])["count"], 14);
    let classes = json(&["necklace", "enum", "3"]);
    assert_eq!(classes.as_array().unwrap().len(), 4);
    assert_eq!(run(&["necklace", "count", "0"]).0, 1);
}

#[test]
fn ring_pieces_table() {
    let (code, out) = run(&["ring", "pieces", "--J", "0", "--n", "1", "--min", "-2", "--max", "2"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        lines,
        [
            "S_-2 = (z)·y^2·k[z]",
            "S_-1 = (z)·y·k[z]",
            "S_0 = k[z]",
            "S_1 = (z)·y^-1·k[z]",
            "S_2 = (z)·y^-2·k[z]",
        ]
    );
    let v = json(&["ring", "pieces", "--J", "0", "--n", "2", "--min", "1", "--max", "1"]);
    assert_eq!(v["1"]["p"], -2);
    assert_eq!(v["1"]["h"]["num"], serde_json::json!(["0", "1", "1"]));
    let v = json(&["ring", "present", "--J", "0", "--n", "2"]);
    assert_eq!(v["f"], serde_json::json!(["1", "1"]));
    assert_eq!(v["fJ"], serde_json::json!(["0", "1"]));
    assert_eq!(v["relations"].as_array().unwrap().len(), 4);
    assert_eq!(json(&["ring", "oracle", "--J", "0,1", "--n", "2"])["agrees"], true);
    assert_eq!(json(&["ring", "verify", "--J", "0,2", "--n", "3"])["closure"], true);
    assert_eq!(run(&["ring", "present", "--J", "3", "--n", "2"]).0, 1);
}

#[test]
fn module_commands() {
    assert_eq!(json(&["mod", "dset", "i{0,3}A"])["dset"]["exceptions"], serde_json::json!([0, 3]));
    assert_eq!(json(&["mod", "dset", "A<3>"])["dset"]["exceptions"], serde_json::json!([0, 1, 2]));
    assert_eq!(json(&["mod", "hom", "A", "i{0}A"])["generator"]["num"], serde_json::json!(["0", "1"]));
    let v = json(&["mod", "coker", "i{0,3}A", "A"]);
    assert_eq!(v["support"], serde_json::json!([{"point": "-3", "count": 1}, {"point": "0", "count": 1}]));
    assert_eq!(v["factors"][0]["simple"], serde_json::json!({"kind": "X", "n": 0}));
    let v = json(&["mod", "lattice", "i{1}A"]);
    assert_eq!(v["gens"]["2"]["num"], serde_json::json!(["1"]));
    assert_eq!(run(&["mod", "dset", "B"]).0, 1);
}

#[test]
fn k0_commands() {
    let v = json(&["k0", "normalize", "i{1,3}A + i{0,1,2}A"]);
    assert_eq!(v["chain"], serde_json::json!([{"J": [1], "shift": 0}, {"J": [0, 1, 2, 3], "shift": 0}]));
    let v = json(&["k0", "iso", "i{1,3}A + i{0,1,2}A + i{0}A", "i{0,1,2,3}A + i{0,1}A + A"]);
    assert_eq!(v["isomorphic"], true);
    assert_eq!(json(&["k0", "iso", "i{0}A", "A"])["isomorphic"], false);
    let v = json(&["k0", "witness", "1,3"]);
    assert_eq!(v["adds"], serde_json::json!([3, 1]));
    assert_eq!(v["result"], serde_json::json!([4, 2, 0]));
    assert_eq!(v["verified"], true);
    assert_eq!(run(&["k0", "witness", "0,2"]).0, 1);
    assert_eq!(json(&["k0", "theta", "i{0,3}A - A"])["theta"]["J"], serde_json::json!([0, 3]));
    assert_eq!(json(&["k0", "theta", "2 i{0,3}A - 2A"])["theta"]["expression"], "e");
    assert_eq!(json(&["k0", "theta", "0"])["theta"]["expression"], "e");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&[]).0, 2);
    assert_eq!(run(&["pic", "eval", ""]).0, 2);
    assert_eq!(run(&["pic", "eval", "S * * w"]).0, 2);
    assert_eq!(run(&["ring", "pieces", "--n", "x"]).0, 2);
    let (code, out) = run(&["--json", "pic", "eval", "S^"]);
    assert_eq!(code, 2);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v["error"].as_str().unwrap().contains("position 2"));
}

#[test]
fn expression_round_trip_through_cli() {
    for text in ["S^-3 * i{-2,4} * w", "S", "i{7}", "w", "e"] {
        let v = json(&["pic", "eval", text]);
        let printed = v["element"]["expression"].as_str().unwrap().to_string();
        let again = json(&["pic", "eval", &printed]);
        assert_eq!(v["element"], again["element"]);
    }
}

#[test]
fn binary_exit_codes_and_streams() {
    let out = binary().args(["necklace", "count", "6"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "14");
    let out = binary().args(["classify", "canonical", "w"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
    let out = binary().args(["pic", "eval", "S^x"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_suite_with_window_cap() {
    let out = binary()
        .args(["--json", "verify", "--suite", "all", "--window", "9", "--seed", "3"])
        .env("WEYLGRADED_MAX_WINDOW", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["window"], 1);
    assert_eq!(v["seed"], 3);
    assert_eq!(v["ok"], true);
    assert_eq!(v["suites"].as_array().unwrap().len(), 7);
    assert_eq!(v["failed"], 0);
}

#[test]
fn verify_single_suite_and_unknown() {
    let (code, out) = run(&["verify", "--suite", "rings", "--window", "2"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("[rings]"));
    assert_eq!(run(&["verify", "--suite", "bogus"]).0, 1);
}
