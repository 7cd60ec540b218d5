//! End-to-end tests of the `ybx` binary: subcommand output, exit codes,
//! and the JSON input path.

use std::io::Write;
use std::process::{Command, Output};

fn ybx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ybx"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn temp_json(content: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new()
        .suffix(".json")
        .tempfile()
        .expect("temp file");
    f.write_all(content.as_bytes()).expect("write");
    f
}

#[test]
fn validate_cycle3_reports_class_three() {
    let out = ybx(&["validate", "--builtin", "cycle:3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("involutive: ok"));
    assert!(text.contains("nondegenerate: ok"));
    assert!(text.contains("ybe: ok"));
    assert!(text.contains("class: 3"));
}

#[test]
fn validate_trivial4_is_class_one() {
    let out = ybx(&["validate", "--builtin", "trivial:4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("class: 1"));
}

#[test]
fn validate_json_flag_emits_json() {
    let out = ybx(&["validate", "--builtin", "involution:2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["valid"], serde_json::json!(true));
    assert_eq!(v["class"], serde_json::json!(2));
}

#[test]
fn malformed_json_exits_with_parse_code() {
    let f = temp_json("{\"n\": 2,\n  nope");
    let out = ybx(&["validate", "--input", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line"), "{}", stderr(&out));
}

#[test]
fn missing_file_exits_with_io_code() {
    let out = ybx(&["validate", "--input", "/nonexistent/instance.json"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn invalid_table_exits_with_verification_code() {
    // x xor y breaks the rc-law
    let f = temp_json(r#"{"n": 2, "kind": "rc", "table": [[0,1],[1,0]]}"#);
    let out = ybx(&["validate", "--input", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("rc-law: FAIL"));
}

#[test]
fn unknown_builtin_exits_with_parse_code() {
    let out = ybx(&["validate", "--builtin", "nonsense:3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn report_cycle3_matches_published_values() {
    let out = ybx(&["report", "--builtin", "cycle:3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("class p: 3"));
    assert!(text.contains("|W| = p^n: 27"));
    assert!(text.contains("ac=bb, ba=cc, cb=aa"));
    assert!(text.contains("abc=1 (bca=1, cab=1 cyclically redundant)"));
}

#[test]
fn report_involution2_is_order_four() {
    let out = ybx(&["report", "--builtin", "involution:2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("class p: 2"));
    assert!(text.contains("|W| = p^n: 4"));
}

#[test]
fn report_trivial_notes_degeneracy() {
    let out = ybx(&["report", "--builtin", "trivial:3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("|W| = p^n: 1"));
    assert!(text.contains("degenerate"));
}

#[test]
fn report_json_carries_delta() {
    let out = ybx(&["report", "--builtin", "cycle:3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["delta"], serde_json::json!([2, 2, 2]));
    assert_eq!(v["w_order"], serde_json::json!(27));
}

#[test]
fn graph_emits_dot_with_27_nodes_and_passes_iso_check() {
    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("lattice.dot");
    let out = ybx(&[
        "graph",
        "--builtin",
        "cycle:3",
        "--check-iso",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stderr(&out).contains("cayley = hasse: ok"));
    let dot = std::fs::read_to_string(&path).expect("dot written");
    assert!(dot.starts_with("digraph divisors {"));
    assert_eq!(dot.matches("label=").count(), 27 + 54);
    assert!(dot.contains("\"0_0_0\" -> \"1_0_0\" [label=\"a\", color=\"red\"]"));
}

#[test]
fn graph_cayley_flag_writes_the_germ_graph() {
    let out = ybx(&["graph", "--builtin", "involution:2", "--cayley"]);
    assert_eq!(out.status.code(), Some(0));
    let dot = stdout(&out);
    assert!(dot.starts_with("digraph cayley {"));
    assert_eq!(dot.matches("->").count(), 4);
}

#[test]
fn graph_on_class_one_is_unsupported() {
    let out = ybx(&["graph", "--builtin", "trivial:2"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn verify_cycle3_passes_all_groups() {
    let out = ybx(&["verify", "--builtin", "cycle:3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    for tag in ["VAL", "L2.3", "L3.1", "L3.2", "L3.3", "L3.4", "L3.5", "T1.2"] {
        assert!(text.contains(&format!("{tag} ")), "missing group {tag}");
    }
    assert!(text.contains("all groups passed"));
}

#[test]
fn verify_corrupted_table_fails_at_validation() {
    let f = temp_json(r#"{"n": 3, "kind": "rc", "table": [[1,2,0],[1,2,0],[1,0,2]]}"#);
    let out = ybx(&["verify", "--input", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("VAL validation: FAIL"));
    assert!(text.contains("skipped (validation failed)"));
}

#[test]
fn verify_accepts_solution_instances() {
    // the flip solution on two letters
    let f = temp_json(
        r#"{"n": 2, "kind": "solution", "table": [[[0,0],[1,0]],[[0,1],[1,1]]]}"#,
    );
    let out = ybx(&["verify", "--input", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("all groups passed"));
}

#[test]
fn verify_passes_on_every_enumerated_size_two_table() {
    for table in ["[[0,1],[0,1]]", "[[1,0],[1,0]]"] {
        let f = temp_json(&format!(r#"{{"n": 2, "kind": "rc", "table": {table}}}"#));
        let out = ybx(&["verify", "--input", f.path().to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "table {table}: {}", stderr(&out));
        assert!(stdout(&out).contains("all groups passed"));
    }
}

#[test]
fn enumerate_lists_both_size_two_tables() {
    let out = ybx(&["enumerate", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("total: 2 valid tables of size 2"));
    assert!(text.contains("\"table\":[[0,1],[0,1]]"));
    assert!(text.contains("\"table\":[[1,0],[1,0]]"));
}

#[test]
fn enumerate_respects_the_env_cap() {
    let out = Command::new(env!("CARGO_BIN_EXE_ybx"))
        .args(["enumerate", "3"])
        .env("YBX_MAX_ENUM_N", "2")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("cap"));
}

#[test]
fn enumerate_json_is_an_array_with_classes() {
    let out = ybx(&["enumerate", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let arr = v.as_array().expect("array");
    assert_eq!(arr.len(), 2);
    let classes: Vec<u64> = arr.iter().map(|e| e["class"].as_u64().unwrap()).collect();
    assert_eq!(classes, vec![1, 2]);
}

#[test]
fn rc_and_solution_inputs_agree() {
    // same instance through both kinds: cycle:3 as rc and as its solution
    let rc = temp_json(r#"{"n": 3, "kind": "rc", "table": [[1,2,0],[1,2,0],[1,2,0]]}"#);
    let out_rc = ybx(&["report", "--input", rc.path().to_str().unwrap(), "--json"]);
    assert_eq!(out_rc.status.code(), Some(0), "{}", stderr(&out_rc));
    // R(x, w) = (f⁻¹(w), f(x)) for the 3-cycle f
    let sol = temp_json(
        r#"{"n": 3, "kind": "solution",
            "table": [[[2,1],[0,1],[1,1]],[[2,2],[0,2],[1,2]],[[2,0],[0,0],[1,0]]]}"#,
    );
    let out_sol = ybx(&["report", "--input", sol.path().to_str().unwrap(), "--json"]);
    assert_eq!(out_sol.status.code(), Some(0), "{}", stderr(&out_sol));
    let v_rc: serde_json::Value = serde_json::from_str(&stdout(&out_rc)).unwrap();
    let v_sol: serde_json::Value = serde_json::from_str(&stdout(&out_sol)).unwrap();
    for key in ["class", "delta", "w_order", "presentation_g", "presentation_w"] {
        assert_eq!(v_rc[key], v_sol[key], "field {key} differs");
    }
}
