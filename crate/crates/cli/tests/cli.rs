use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn qindex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qindex")).args(args).output().unwrap()
}

fn qindex_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_qindex"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("qindex-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn q_of_c7_is_four() {
    let g6 = stdout(&qindex(&["construct", "cycle", "7"]));
    let out = qindex(&["q", g6.trim()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["q"].as_f64(), Some(4.0));
    assert_eq!(json(&out)["schema"], 1);
}

#[test]
fn graphs_from_stdin_and_files() {
    let out = qindex_stdin(&["oddgirth"], "Dhc\n");
    assert_eq!(json(&out)["odd_girth"], 5);
    let edges = temp_file("c5.txt", "0 1\n1 2\n2 3\n3 4\n4 0\n");
    let out = qindex(&["oddgirth", "--file", edges.to_str().unwrap()]);
    assert_eq!(json(&out)["odd_girth"], 5);
    let g6 = temp_file("k33.g6", ">>graph6<<EFz_\n");
    let out = qindex(&["oddgirth", "--file", g6.to_str().unwrap()]);
    assert_eq!(json(&out)["bipartite"], true);
    assert!(json(&out)["odd_girth"].is_null());
}

#[test]
fn construct_formats() {
    let out = stdout(&qindex(&["construct", "cycle-star", "1", "8", "--format", "edges"]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "8");
    assert_eq!(lines.len(), 9);
    let g6 = stdout(&qindex(&["construct", "blow-up-cycle", "7", "2,1,1,1,1,1,1"]));
    let out = qindex(&["q", g6.trim()]);
    assert!(json(&out)["q"].as_f64().unwrap() > 4.0);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(qindex(&["q", "not a graph"]).status.code(), Some(2));
    assert_eq!(qindex(&["construct", "cycle", "2"]).status.code(), Some(2));
    assert_eq!(qindex(&["search", "--k", "2"]).status.code(), Some(2));
    assert_eq!(qindex(&["search", "--order", "10", "--k", "2"]).status.code(), Some(2));
    assert_eq!(qindex(&["certify", "--theorem", "1.3", "--n", "7", "--k", "1"]).status.code(), Some(2));
    assert_eq!(qindex(&["lemmas", "--suite", "9.9"]).status.code(), Some(2));
    // perron needs a connected graph
    assert_eq!(qindex(&["perron", "C?"]).status.code(), Some(2));
}

#[test]
fn charpoly_of_graph_and_matrix() {
    let out = qindex(&["charpoly", "A_"]);
    let v = json(&out);
    assert_eq!(v["polynomial"], "x^2 - 2x");
    assert_eq!(v["largest_real_root"].as_f64(), Some(2.0));
    let m = temp_file("g.json", "[[3,2,1,0],[2,2,0,0],[1,0,2,1],[0,0,1,1]]");
    let out = qindex(&["charpoly", "--matrix", m.to_str().unwrap()]);
    let coeffs: Vec<i64> = json(&out)["coefficients"].as_array().unwrap().iter().map(|c| c.as_i64().unwrap()).collect();
    // g(x) with n - 2k = 4
    assert_eq!(coeffs, [0, -8, 17, -8, 1]);
}

#[test]
fn quotient_reports_equitability() {
    let g6 = stdout(&qindex(&["construct", "g0", "9", "2"]));
    let part = temp_file("g0.json", "[[0,1],[2,3,4],[5,6],[7,8]]");
    let out = qindex(&["quotient", g6.trim(), "--partition", part.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["equitable"], true);
    assert_eq!(v["matrix"][0], serde_json::json!(["4", "3", "1", "0"]));
    assert!(v["difference"].as_f64().unwrap() < 1e-8);
    let bad = temp_file("bad.json", "[[0],[1,2,3,4,5,6,7,8]]");
    let out = qindex(&["quotient", g6.trim(), "--partition", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["equitable"], false);
}

#[test]
fn bounds_and_perron() {
    let out = qindex(&["bounds", "EFz_"]);
    let v = json(&out);
    assert_eq!(v["regular"], true);
    assert_eq!(v["edge_bound_tightness"], "tight");
    assert_eq!(out.status.code(), Some(0));
    let out = qindex(&["perron", "Dhc"]);
    let v = json(&out);
    assert_eq!(v["positive"], true);
    assert_eq!(v["entries"].as_array().unwrap().len(), 5);
}

#[test]
fn certify_order_reports_construction() {
    let expected = stdout(&qindex(&["construct", "order-extremal", "8", "2"]));
    let out = qindex(&["certify", "--theorem", "1.3", "--n", "8", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["pass"], true);
    let maximizer = v["search"]["maximizers"][0].as_str().unwrap().to_string();
    let same = qindex(&["q", &maximizer]);
    let constructed = qindex(&["q", expected.trim()]);
    assert_eq!(json(&same)["q"], json(&constructed)["q"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("PASS"));
}

#[test]
fn certify_size_boundary_case() {
    let out = qindex(&["certify", "--theorem", "1.4", "--m", "7", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["search"]["maximizers"].as_array().unwrap().len(), 1);
    assert_eq!(v["search"]["max_q"].as_f64(), Some(4.0));
}

#[test]
fn lemmas_suite_prints_identity() {
    let out = qindex(&["lemmas", "--suite", "3.3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("x(x-3)(x^2-"));
    assert_eq!(text.lines().last(), Some("PASS"));
}

#[test]
fn edge_bounds_subcommand() {
    let out = qindex(&["edge-bounds", "--n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["max_edges_triangle_free"], 6);
    assert_eq!(v["max_edges_non_bipartite"], 5);
}
