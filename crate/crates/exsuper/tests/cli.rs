use std::process::{Command, Output};

use serde_json::Value;

fn exsuper(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_exsuper"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

#[test]
fn classify_reports_the_clause() {
    let out = exsuper(&[
        "classify", "--type", "g3", "--char", "5", "--weight", "2,0,5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["finite"], true);
    assert_eq!(v["method_b"]["clause"], "ThmG3(3)(i)");
    assert_eq!(v["agree"], true);
}

#[test]
fn classify_infinite_has_a_witness() {
    let out = exsuper(&[
        "classify", "--type", "d", "--char", "7", "--zeta", "1", "--weight", "0,1,0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["finite"], false);
    assert_eq!(v["method_a"]["verdict"], "INFINITE");
    assert!(v["method_a"]["witness"]["node"].as_u64().unwrap() >= 1);
    assert_eq!(v["method_b"]["clause"], Value::Null);
}

#[test]
fn f4_in_characteristic_three_is_refused() {
    let out = exsuper(&[
        "classify", "--type", "f4", "--char", "3", "--weight", "0,0,0,0",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn invalid_inputs_exit_two_without_output() {
    let cases: &[&[&str]] = &[
        &["classify", "--type", "e8", "--char", "5", "--weight", "0"],
        &[
            "classify", "--type", "g3", "--char", "9", "--weight", "0,0,0",
        ],
        &["classify", "--type", "g3", "--char", "5", "--weight", "0,0"],
        &[
            "classify", "--type", "g3", "--char", "5", "--weight", "-1,0,0",
        ],
        &[
            "classify", "--type", "g3", "--char", "5", "--zeta", "1", "--weight", "0,0,0",
        ],
        &[
            "classify", "--type", "d", "--char", "5", "--zeta", "4", "--weight", "0,0,0",
        ],
        &[
            "classify", "--type", "d", "--char", "5", "--zeta", "0", "--weight", "0,0,0",
        ],
        &[
            "classify", "--type", "d", "--char", "5", "--weight", "0,0,0",
        ],
        &["classify", "--type", "g3", "--weight", "0,0,0"],
        &["list", "--type", "g3", "--char", "5", "--box", "-1,2,2"],
        &["sweep", "--type", "g3", "--char", "5"],
        &["chi", "--type", "g3", "--char", "5", "--weight", "3,0,0"],
    ];
    for args in cases {
        let out = exsuper(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn chain_nodes() {
    let out = exsuper(&[
        "chain", "--type", "d", "--char", "5", "--zeta", "1", "--weight", "1,0,0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let nodes = v["nodes"].as_array().unwrap();
    assert_eq!(nodes.len(), 4);
    assert_eq!(nodes[0]["weight"], serde_json::json!([1, 0, 0]));
    assert_eq!(nodes[0]["branch"], Value::Null);
    for n in &nodes[1..] {
        assert_eq!(n["weight"], serde_json::json!([0, 1, 1]));
    }
    assert_eq!(nodes[1]["branch"], "reflected");
    assert_eq!(nodes[2]["branch"], "fixed");
}

#[test]
fn chain_accepts_non_dominant_weights() {
    let out = exsuper(&["chain", "--type", "g3", "--char", "7", "--weight", "-1,0,0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["nodes"][0]["dominant"], false);
}

#[test]
fn list_is_sorted_and_matches_classify() {
    let out = exsuper(&["list", "--type", "g3", "--char", "5", "--box", "3,3,3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let listed: Vec<Vec<i64>> = serde_json::from_value(v).unwrap();
    let mut sorted = listed.clone();
    sorted.sort();
    assert_eq!(listed, sorted);
    assert!(listed.contains(&vec![0, 0, 0]));
    assert!(listed.iter().all(|w| w.len() == 3));
}

#[test]
fn verify_clean_run() {
    let out = exsuper(&[
        "verify", "--type", "d", "--char", "3", "--zeta", "1", "--box", "9,9,9",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["type"], "d");
    assert_eq!(v["total_weights"], 1000);
    assert_eq!(v["mismatches"], serde_json::json!([]));
    for key in ["ctx", "box", "finite_count", "elapsed"] {
        assert!(v.get(key).is_some(), "{key}");
    }
}

#[test]
fn verify_with_mismatches_exits_one() {
    let out = exsuper(&["verify", "--type", "f4", "--char", "5", "--box", "4,4,2,2"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    let m = &v["mismatches"][0];
    for key in [
        "lambda",
        "verdict_a",
        "verdict_b",
        "witness_node",
        "clause",
        "chain",
    ] {
        assert!(m.get(key).is_some(), "{key}");
    }
}

#[test]
fn verify_char0_uses_the_stated_lists() {
    let out = exsuper(&["verify", "--type", "g3", "--char", "0", "--box", "6,6,6"]);
    assert_eq!(out.status.code(), Some(0));
    let out = exsuper(&["verify", "--type", "d", "--char", "0", "--box", "4,4,4"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn sweep_counts_reports() {
    let out = exsuper(&["sweep", "--type", "d", "--char", "5", "--box", "6,6,6"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["reports"].as_array().unwrap().len(), 3);
    assert_eq!(v["symmetry"].as_array().unwrap().len(), 3);
}

#[test]
fn chi_top_term() {
    let out = exsuper(&["chi", "--type", "g3", "--weight", "3,0,0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["top"]["weight"], serde_json::json!([3, 0, 0]));
    assert_eq!(v["top"]["coefficient"], 1);
    assert!(!v["support"].as_array().unwrap().is_empty());
}

#[test]
fn output_is_stable_and_can_go_to_a_file() {
    let args = [
        "list", "--type", "d", "--char", "7", "--zeta", "3", "--box", "8,8,8",
    ];
    let a = exsuper(&args);
    let b = exsuper(&args);
    assert_eq!(a.stdout, b.stdout);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("list.json");
    let mut with_out: Vec<&str> = args.to_vec();
    let p = path.to_str().unwrap();
    with_out.extend(["--out", p]);
    let c = exsuper(&with_out);
    assert_eq!(c.status.code(), Some(0));
    assert!(c.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), a.stdout);
}

#[test]
fn failed_run_writes_no_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("x.json");
    let p = path.to_str().unwrap();
    let out = exsuper(&[
        "classify", "--type", "f4", "--char", "3", "--weight", "0,0,0,0", "--out", p,
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!path.exists());
}
