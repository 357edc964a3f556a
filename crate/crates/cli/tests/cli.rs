use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn cliquevec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cliquevec")).args(args).output().expect("binary runs")
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cliquevec"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = cliquevec(&full);
    (serde_json::from_slice(&o.stdout).expect("valid JSON"), o.status.code().unwrap())
}

#[test]
fn validate_examples() {
    let o = cliquevec(&["validate", "10,14,11,3", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "valid (b = 4,1,2,3)");

    let o = cliquevec(&["validate", "4,4", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("invalid"));
    assert!(stdout(&o).contains("b_1 = 0 not positive"));

    let o = cliquevec(&["validate", "3,3,1", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("k = 4 exceeds d = 3"));
}

#[test]
fn transforms() {
    assert_eq!(stdout(&cliquevec(&["c2b", "4,4"])).trim(), "0,4");
    assert_eq!(stdout(&cliquevec(&["c2b", "3,3,1"])).trim(), "1,1,1");
    assert_eq!(stdout(&cliquevec(&["b2c", "4,1,2,3"])).trim(), "10,14,11,3");
    assert_eq!(stdout(&cliquevec(&["c2b", "-1,5,-3"])).trim(), "-9,11,-3");
    assert_eq!(stdout(&cliquevec(&["b2c", "-9,11,-3"])).trim(), "-1,5,-3");
    let (v, _) = json(&["c2b", "10,14,11,3"]);
    assert_eq!(v["b"], serde_json::json!([4, 1, 2, 3]));
}

#[test]
fn realize_k3() {
    let o = cliquevec(&["realize", "3,3,1", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("# word SSS"));
    let graph: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(graph, ["3", "0 1", "0 2", "1 2"]);

    let (v, code) = json(&["realize", "3,3,1", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["word"], "SSS");
    assert_eq!(v["graph6"], "Bw");
}

#[test]
fn realize_rejects_with_reason() {
    let o = cliquevec(&["realize", "10,14,11,3", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("b_1 = 4"));
}

#[test]
fn realize_pipes_into_cliques() {
    for (vector, k) in [("10,14,11,3", "0"), ("6,12,10,3", "2"), ("3,3,1", "3"), ("7", "0")] {
        for format in ["edge-list", "graph6"] {
            let o = cliquevec(&["realize", vector, k, "--output-format", format]);
            assert_eq!(o.status.code(), Some(0), "{vector} {k}");
            let back = with_stdin(&["cliques", "-"], &stdout(&o));
            assert_eq!(back.status.code(), Some(0));
            assert_eq!(stdout(&back).trim(), vector);
            let kappa = with_stdin(&["connectivity", "-"], &stdout(&o));
            assert!(stdout(&kappa).trim().parse::<usize>().unwrap() >= k.parse().unwrap());
        }
    }
}

#[test]
fn graph_commands() {
    let o = cliquevec(&["chordal", "--g6", "Dhc"]);
    assert_eq!(stdout(&o).trim(), "not chordal");
    let (v, _) = json(&["chordal", "--g6", "Bw"]);
    assert_eq!(v["chordal"], true);
    assert_eq!(v["elimination_order"].as_array().unwrap().len(), 3);

    let (v, _) = json(&["cliques", "--g6", "Dhc"]);
    assert_eq!(v["clique_vector"], serde_json::json!([5, 5]));
    assert_eq!(v["method"], "enumeration");

    assert_eq!(stdout(&cliquevec(&["connectivity", "--g6", "Bw"])).trim(), "3");
    assert_eq!(stdout(&cliquevec(&["connectivity", "--classical", "--g6", "Bw"])).trim(), "2");
    let o = with_stdin(&["connectivity", "-"], "4\n0 1\n1 2\n2 3\n0 3\n");
    assert_eq!(stdout(&o).trim(), "2");
}

#[test]
fn graph_from_file() {
    let path = std::env::temp_dir().join(format!("cliquevec-cli-{}.txt", std::process::id()));
    std::fs::write(&path, "3\n0 1\n1 2\n").unwrap();
    let o = cliquevec(&["cliques", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(stdout(&o).trim(), "3,2");
}

#[test]
fn word_conversions() {
    let (v, _) = json(&["word", "DDDSSDSDDS"]);
    assert_eq!(v["b"], serde_json::json!([4, 1, 2, 3]));
    assert_eq!(v["c"], serde_json::json!([10, 14, 11, 3]));
    assert_eq!(v["connectivity"], 0);

    let (v, _) = json(&["word", "--b", "4,1,2,3"]);
    assert_eq!(v["word"], "DDDSSDSDDS");

    let (v, _) = json(&["word", "--g6", "Bw"]);
    assert_eq!(v["word"], "SSS");

    let o = cliquevec(&["word", "--g6", "Dhc"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "not a threshold graph");
}

#[test]
fn enumerate_and_count() {
    let o = cliquevec(&["enumerate", "6", "3", "1"]);
    let text = stdout(&o);
    assert_eq!(text.lines().collect::<Vec<_>>(), ["1,1,4", "1,2,3", "1,3,2", "1,4,1", "# count 4"]);
    let (v, _) = json(&["enumerate", "9", "4", "1"]);
    assert_eq!(v["count"], "21");
    assert_eq!(v["b_vectors"].as_array().unwrap().len(), 21);
    assert_eq!(stdout(&cliquevec(&["enumerate", "40", "20", "2", "--count"])).trim(), "15905368710");
}

#[test]
fn betti_outputs() {
    let (v, _) = json(&["betti", "--g6", "Dhc"]);
    assert_eq!(v["connectivity"], 2);
    assert_eq!(v["linear_strand"][0], serde_json::json!([1, 2, 5]));

    let (v, _) = json(&["betti", "--full", "--g6", "Dhc"]);
    assert_eq!(v["table"]["entries"], serde_json::json!([[0, 0, 1], [1, 2, 5], [2, 3, 5], [3, 5, 1]]));
    assert_eq!(v["two_linear"], false);
    assert_eq!(v["depth"], 2);

    let text = stdout(&cliquevec(&["betti", "--full", "--g6", "Dhc"]));
    assert!(text.contains("total: 1 5 5 1"));
}

#[test]
fn verify_reports() {
    let (v, code) = json(&["verify", "main", "--nmax", "4", "--jobs", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["pass"], true);
    assert_eq!(v["graphs_scanned"], 1 + 2 + 8 + 64);

    let path = std::env::temp_dir().join(format!("cliquevec-report-{}.json", std::process::id()));
    let o = cliquevec(&["verify", "counting", "--nmax", "7", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS"));
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(report["theorem"], "counting");
}

#[test]
fn malformed_input_exits_2() {
    for args in [
        &["validate", "4,x", "0"][..],
        &["validate", "0,4", "0"],
        &["c2b", ""],
        &["chordal", "--g6", "B!"],
        &["cliques", "/nonexistent/graph.txt"],
        &["word", "SSD"],
        &["verify", "lemma"],
        &["verify", "main", "--nmax", "9"],
        &["frobnicate"],
        &["cliques"],
    ] {
        assert_eq!(cliquevec(args).status.code(), Some(2), "{args:?}");
    }
    let (v, code) = json(&["validate", "4,x", "0"]);
    assert_eq!(code, 2);
    assert!(v["error"].as_str().unwrap().contains("x"));
}
