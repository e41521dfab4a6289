use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twistclass"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&full)).unwrap()
}

#[test]
fn group_info() {
    let v = json(&["group", "S3"]);
    assert_eq!(v["command"], "group");
    assert_eq!(v["result"]["order"], 6);
    assert_eq!(v["result"]["center"], serde_json::json!(["e"]));
    assert_eq!(v["result"]["class_sizes"], serde_json::json!([1, 2, 3]));

    let v = json(&["group", "prop14"]);
    assert_eq!(v["result"]["order"], 8);
    assert_eq!(v["result"]["center"].as_array().unwrap().len(), 2);
    assert_eq!(v["result"]["nilpotency_class"], 2);

    let v = json(&["group", "A5"]);
    assert_eq!(v["result"]["simple"], true);
    assert_eq!(v["result"]["abelian"], false);
}

#[test]
fn inner_twist_in_s3() {
    let v = json(&["twisted-class", "--group", "S3", "--inner", "(12)"]);
    assert_eq!(
        v["result"]["class"],
        serde_json::json!(["e", "(123)", "(132)"])
    );
    assert_eq!(v["result"]["subgroup"], true);
    assert_eq!(v["result"]["index"], 2);
    assert_eq!(v["inputs"]["inner"], "(12)");
}

#[test]
fn cycle_rotations_resolve_to_the_same_element() {
    let a = json(&["twisted-class", "--group", "A4", "--inner", "(12)(34)"]);
    let b = json(&["twisted-class", "--group", "A4", "--inner", "(43)(21)"]);
    assert_eq!(a["result"], b["result"]);
}

#[test]
fn a4_witness() {
    let v = json(&["twisted-class", "--group", "A4", "--inner", "(12)(34)"]);
    assert_eq!(v["result"]["subgroup"], false);
    assert_eq!(
        v["result"]["class"],
        serde_json::json!(["e", "(13)(24)", "(14)(23)"])
    );
    let w = &v["result"]["witness"];
    assert_eq!(w["kind"], "not_closed");
    assert_eq!(w["product"], "(12)(34)");
}

#[test]
fn swap_reidemeister_number() {
    let v = json(&["reidemeister", "--group", "prop14", "--map", "x->y, y->x"]);
    assert_eq!(v["result"]["reidemeister"], 3);
    assert_eq!(
        v["result"]["classes"][0],
        serde_json::json!(["e", "[x,y]", "xy", "xy[x,y]"])
    );
    let text = stdout(&["reidemeister", "--group", "prop14", "--map", "x->y,y->x"]);
    assert!(text.contains("R = 3"), "{text}");
}

#[test]
fn map_images_may_contain_commas() {
    let v = json(&[
        "twisted-class",
        "--group",
        "prop14",
        "--map",
        "x->y[x,y], y->x",
    ]);
    assert_eq!(v["result"]["subgroup"], false);
}

#[test]
fn scan_and_series() {
    let v = json(&["scan", "--group", "Q8"]);
    assert_eq!(v["result"]["all_subgroups"], true);
    let v = json(&["scan", "--group", "S3"]);
    assert_eq!(v["result"]["all_subgroups"], false);

    let v = json(&["series", "--group", "prop14", "--chain", "x,y,x"]);
    assert_eq!(
        v["result"]["chosen"],
        serde_json::json!(["x", "[x,y]", "e"])
    );
    assert_eq!(v["result"]["terminal"]["kind"], "reached_trivial");
    assert_eq!(v["result"]["terminal"]["central"], "[x,y]");

    let v = json(&["series", "--group", "S4"]);
    assert_eq!(v["result"]["terminal"]["kind"], "class_not_subgroup");
}

#[test]
fn endo_table_counts() {
    let v = json(&["endo-table", "--group", "prop14"]);
    let maps = v["result"]["maps"].as_array().unwrap();
    assert_eq!(maps.len(), 36);
    assert_eq!(
        maps.iter().filter(|m| m["kind"] == "automorphism").count(),
        8
    );
}

#[test]
fn verify_paper_passes() {
    let out = run(&["verify-paper", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let claims = v["claims"].as_array().unwrap();
    assert!(!claims.is_empty());
    for c in claims {
        assert_eq!(c["pass"], true, "{c}");
        for key in ["anchor", "expected", "actual"] {
            assert!(c[key].is_string());
        }
    }
}

#[test]
fn only_filters_to_one_topic() {
    let v = json(&["verify-paper", "--only", "example3"]);
    assert_eq!(v["result"]["topics"], serde_json::json!(["wreath"]));
    assert!(v["claims"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["anchor"].as_str().unwrap().starts_with("wreath")));
}

#[test]
fn json_round_trips() {
    let text = stdout(&["endo-table", "--group", "S3", "--format", "json"]);
    let v: Value = serde_json::from_str(&text).unwrap();
    let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(again, v);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["claims", "command", "inputs", "result"]);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["verify-paper"][..],
        &["endo-table", "--group", "prop14", "--format", "csv"],
        &["scan", "--group", "A4", "--format", "json"],
    ] {
        assert_eq!(stdout(args), stdout(args));
    }
}

#[test]
fn csv_claims_have_header() {
    let text = stdout(&["verify-paper", "--only", "s3", "--format", "csv"]);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("anchor,expected,actual,pass"));
    assert!(lines.all(|l| l.ends_with(",true")));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["group", "T9"][..],
        &["twisted-class", "--group", "S3", "--inner", "(14)"],
        &[
            "twisted-class",
            "--group",
            "S3",
            "--inner",
            "(12)",
            "--map",
            "s1->s2",
        ],
        &["reidemeister", "--group", "prop14", "--map", "x->y"],
        &["verify-paper", "--only", "nothing"],
        &["frobnicate"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}
