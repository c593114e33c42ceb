//! End-to-end tests of the `garr` binary: formats, schemas, exit codes
//! and checkpoint/resume behavior.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn garr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_garr"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn garr_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_garr"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn classify_builtin_json() {
    let out = garr(&["classify", "cycle:4", "--out", "json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["schema"], "garr/report/v1");
    assert_eq!(v["chordal"], false);
    assert_eq!(v["weakly_chordal"], true);
    assert_eq!(v["predicted_pd_min"], 1);
    assert_eq!(v["predicted_pd_max"], 1);
}

#[test]
fn classify_antihole_predicts_at_least_two() {
    let out = garr(&["classify", "antihole:6", "--out", "json"]);
    let v = stdout_json(&out);
    assert_eq!(v["predicted_pd_min"], 2);
    assert_eq!(v["predicted_pd_max"], serde_json::Value::Null);
    assert!(v["witness_cycle"].is_array());
}

#[test]
fn pd_consistency_and_betti() {
    let out = garr(&["pd", "cycle:5", "--out", "json", "--betti"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["pd"], 2);
    assert_eq!(v["consistent"], true);
    assert!(v["betti"]["betti"].is_array());

    let out = garr(&["pd", "complete:5"]);
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.contains("pd(D(A(G))) = 0"));
    assert!(text.contains("CONSISTENT"));
}

#[test]
fn stdin_edge_list_and_graph6() {
    let out = garr_stdin(&["classify", "-"], "1 2\n2 3\n3 4\n1 4\n");
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("weakly chordal: true"));

    // C_5 in graph6 ("DUW" encodes a 5-cycle under the colex convention).
    let g = graph_core::Graph::standard(graph_core::StandardKind::Cycle, 5).unwrap();
    let g6 = graph_core::to_graph6(&g);
    let out = garr_stdin(&["pd", "-", "--format", "graph6", "--out", "json"], &g6);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(stdout_json(&out)["pd"], 2);
}

#[test]
fn dot_output() {
    let out = garr(&["classify", "path:3", "--out", "dot"]);
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.contains("graph g {"));
    assert!(text.contains("1 -- 2;"));
}

#[test]
fn exit_code_2_on_parse_error() {
    let out = garr_stdin(&["classify", "-"], "1 2\nnot an edge\n");
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).to_string();
    assert!(err.contains(":2:"), "error names line 2: {err}");
}

#[test]
fn exit_code_3_on_resource_limit() {
    // 10 vertices exceeds the pd command's limit.
    let mut edges = String::new();
    for v in 2..=10 {
        edges.push_str(&format!("1 {v}\n"));
    }
    let out = garr_stdin(&["pd", "-"], &edges);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn exit_code_4_on_non_weakly_chordal_sequence() {
    let out = garr(&["sequence", "cycle:5"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("chordless cycle"));

    let out = garr(&["sequence", "cycle:6"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn sequence_check_b_json() {
    let out = garr(&["sequence", "cycle:4", "--check-b", "--out", "json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["schema"], "garr/sequence/v1");
    assert_eq!(v["added"].as_array().unwrap().len(), 1);
    assert_eq!(v["b_checks"][0]["surjective"], true);

    let out = garr(&["sequence", "complete:4", "--out", "json"]);
    let v = stdout_json(&out);
    assert_eq!(v["added"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_suite_exit_codes() {
    let out = garr(&["verify", "identities", "--ell", "6"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("0 failed"));

    let out = garr(&["verify", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_json_failure_schema() {
    let out = garr(&["verify", "saito", "--ell", "4", "--out", "json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["schema"], "garr/verify/v1");
    assert_eq!(v["failed"], 0);
}

#[test]
fn search_small_n_has_no_hits_and_resumes() {
    let dir = std::env::temp_dir().join(format!("garr-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let ckpt = dir.join("n4.jsonl");
    let ckpt_str = ckpt.to_str().unwrap();

    let out = garr(&["search-counterexamples", "--n", "4", "--resume", ckpt_str, "--out", "json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["candidates"], 11);
    assert_eq!(v["hits"].as_array().unwrap().len(), 0);
    let lines = std::fs::read_to_string(&ckpt).unwrap().lines().count();
    assert_eq!(lines, 11);

    // Second run restores everything from the checkpoint and recomputes
    // nothing; output is identical.
    let out2 = garr(&["search-counterexamples", "--n", "4", "--resume", ckpt_str, "--out", "json"]);
    assert_eq!(stdout_json(&out2), v);
    assert_eq!(
        std::fs::read_to_string(&ckpt).unwrap().lines().count(),
        11,
        "checkpoint must not grow on resume"
    );
    assert!(String::from_utf8_lossy(&out2.stderr).contains("11 restored"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn search_n6_finds_nothing() {
    let out = garr(&["search-counterexamples", "--n", "6", "--out", "json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["hits"].as_array().unwrap().len(), 0);
}
