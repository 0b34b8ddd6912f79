use std::fs;
use std::process::{Command, Output};

use diamond_cone::extraction::{enumerate_quasistandard, push, shapes_below};
use diamond_cone::{FormalCombination, HookShape, HookTableau, Signature};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diamond-cone"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

const T12: &str = r#"{"shape":{"m":1,"n":2,"a":[2],"a_prime":[1]},"plus":[[1,2]],"minus":[[3]]}"#;

#[test]
fn count() {
    let v = json(&[
        "count",
        "--m",
        "1",
        "--n",
        "2",
        "--shape",
        r#"{"a":[2],"a_prime":[1]}"#,
    ]);
    assert_eq!(v, serde_json::json!({ "ss": 8 }));
}

#[test]
fn enumerate_parses_back() {
    let v = stdout(&[
        "enumerate",
        "--m",
        "1",
        "--n",
        "2",
        "--shape",
        r#"{"a":[2],"a_prime":[1]}"#,
    ]);
    let list: Vec<HookTableau> = serde_json::from_str(&v).unwrap();
    assert_eq!(list.len(), 8);
    assert!(list.iter().all(HookTableau::is_semistandard));
}

#[test]
fn push_and_pull() {
    let t: HookTableau = serde_json::from_str(T12).unwrap();
    let u: HookTableau = serde_json::from_str(&stdout(&["push", "--tableau", T12])).unwrap();
    assert_eq!(u, push(&t));
    let u_text = serde_json::to_string(&u).unwrap();
    let back: HookTableau = serde_json::from_str(&stdout(&[
        "pull",
        "--tableau",
        &u_text,
        "--shape",
        r#"{"m":1,"n":2,"a":[2],"a_prime":[1]}"#,
    ]))
    .unwrap();
    assert_eq!(back, t);
}

#[test]
fn classical_push() {
    let t = r#"{"shape":{"m":4,"n":0,"a":[2,2,1,0],"a_prime":[]},"plus":[[1,1,2,2,3],[2,3,4],[4],[]],"minus":[]}"#;
    let u: HookTableau = serde_json::from_str(&stdout(&["push", "--tableau", t])).unwrap();
    assert_eq!(u.plus(), &[vec![2, 2, 3], vec![3, 4], vec![4], vec![]]);
    assert_eq!(u.shape().a(), &[1, 1, 1, 0]);
}

#[test]
fn quasistandard_flag() {
    let v = json(&["quasistandard", "--tableau", T12]);
    assert_eq!(v, serde_json::json!({ "quasistandard": false }));
}

#[test]
fn sjdt_trace_ends_with_result() {
    let text = stdout(&["sjdt", "--trace", "--tableau", T12]);
    let lines: Vec<Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert!(lines.len() >= 2);
    assert!(lines[..lines.len() - 1]
        .iter()
        .all(|l| l.get("frame").is_some()));
    let last: HookTableau =
        serde_json::from_value(lines.last().unwrap()["result"].clone()).unwrap();
    assert_eq!(last, push(&serde_json::from_str(T12).unwrap()));
    let plain: HookTableau = serde_json::from_str(&stdout(&["sjdt", "--tableau", T12])).unwrap();
    assert_eq!(plain, last);
}

#[test]
fn straighten_and_star() {
    let w = r#"{"shape":{"m":1,"n":1,"a":[2],"a_prime":[]},"plus":[[2,1]],"minus":[]}"#;
    let c: FormalCombination =
        serde_json::from_str(&stdout(&["straighten", "--tableau", w])).unwrap();
    assert!(c.iter().all(|(t, _)| t.is_semistandard()));
    let s = r#"{"shape":{"m":1,"n":1,"a":[1],"a_prime":[]},"plus":[[1]],"minus":[]}"#;
    let t = r#"{"shape":{"m":1,"n":1,"a":[2],"a_prime":[]},"plus":[[1,2]],"minus":[]}"#;
    let p: FormalCombination =
        serde_json::from_str(&stdout(&["star", "--tableau", s, "--tableau", t])).unwrap();
    assert_eq!(p.len(), 1);
}

#[test]
fn file_input() {
    let path = std::env::temp_dir().join(format!("diamond-cone-{}.json", std::process::id()));
    fs::write(&path, T12).unwrap();
    let from_file = stdout(&["push", "--tableau", path.to_str().unwrap()]);
    fs::remove_file(&path).unwrap();
    assert_eq!(from_file, stdout(&["push", "--tableau", T12]));
}

#[test]
fn exit_codes() {
    let bad = run(&[
        "count",
        "--m",
        "2",
        "--n",
        "1",
        "--shape",
        r#"{"a":[0,0],"a_prime":[1]}"#,
    ]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).starts_with("error: "));
    assert_eq!(
        run(&["count", "--shape", r#"{"a":[1],"a_prime":[]}"#])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["count", "--m", "1", "--n", "1", "--shape", "{not json"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_small() {
    let v = json(&["verify", "all", "--max-boxes", "0"]);
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 10);
    assert!(reports.iter().all(|r| r["pass"] == Value::Bool(true)));
    let one = json(&["verify", "kac-dimension", "--max-boxes", "3"]);
    assert_eq!(one[0]["name"], "kac-dimension");
}

fn cone_nodes(args: &[&str]) -> Vec<HookTableau> {
    serde_json::from_value(json(args)["nodes"].clone()).unwrap()
}

#[test]
fn cone_sizes() {
    assert_eq!(
        cone_nodes(&[
            "cone",
            "--m",
            "1",
            "--n",
            "2",
            "--shape",
            r#"{"a":[2],"a_prime":[1]}"#
        ])
        .len(),
        8
    );
    let zero = cone_nodes(&[
        "cone",
        "--m",
        "1",
        "--n",
        "1",
        "--shape",
        r#"{"a":[0],"a_prime":[]}"#,
    ]);
    assert_eq!(zero.len(), 1);
    assert_eq!(zero[0].boxes(), 0);
}

#[test]
fn cone_matches_quasistandard_inventory() {
    let l = HookShape::new(Signature::new(2, 1).unwrap(), vec![1, 1], vec![]).unwrap();
    let mut inventory: Vec<HookTableau> = shapes_below(&l)
        .iter()
        .flat_map(enumerate_quasistandard)
        .collect();
    inventory.sort();
    let nodes = cone_nodes(&[
        "cone",
        "--m",
        "2",
        "--n",
        "1",
        "--shape",
        r#"{"a":[1,1],"a_prime":[]}"#,
    ]);
    assert_eq!(nodes, inventory);
}

#[test]
fn cone_dot() {
    let dot = stdout(&[
        "cone",
        "--dot",
        "--m",
        "1",
        "--n",
        "2",
        "--shape",
        r#"{"a":[2],"a_prime":[1]}"#,
    ]);
    assert!(dot.starts_with("digraph cone {"));
    assert!(dot.trim_end().ends_with('}'));
    assert_eq!(
        dot.lines()
            .filter(|l| l.contains("[label=") && !l.contains("->"))
            .count(),
        8
    );
    assert!(dot.contains("n0 [label=\"0\"]"));
    assert!(dot.contains("-> "));
}
