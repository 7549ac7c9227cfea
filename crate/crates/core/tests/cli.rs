use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unigraphs")).args(args).env_remove("UNIGRAPHS_JOBS").output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_unigraphs"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn enumerate_and_count() {
    let o = run(&["enumerate", "2,2,2,1,1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 2);

    let o = run(&["enumerate", "2,2,2,1,1", "--class", "bipartite"]);
    assert_eq!(stdout(&o).lines().count(), 1);

    let o = run(&["enumerate", "2^9", "--limit", "3"]);
    assert_eq!(stdout(&o).lines().count(), 3);
}

#[test]
fn realize_json() {
    let o = run(&["realize", "3,3,3,3,3,1", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["degseq"], "3^5,1");
    assert!(v["g6"].as_str().unwrap().starts_with('E'));
}

#[test]
fn yes_no_queries_and_strict() {
    // P5 is a unigraph? No: K3+K2 shares its degree sequence.
    let o = run(&["unigraph", "DhC"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "false");
    let o = run(&["unigraph", "DhC", "--strict"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["unigraph", "DhC", "--class", "bipartite", "--strict"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "true");

    let o = run_stdin(&["hereditary"], "C~\nDhC\n");
    assert_eq!(stdout(&o), "true\nfalse\n");
}

#[test]
fn graphs_from_a_file() {
    let dir = std::env::temp_dir().join(format!("unigraphs-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("graphs.g6");
    std::fs::write(&path, "Bw\nC~\n").unwrap();
    let o = run(&["check", path.to_str().unwrap(), "--class", "bipartite"]);
    assert_eq!(stdout(&o), "false\nfalse\n");
    let o = run(&["complement", path.to_str().unwrap()]);
    assert_eq!(stdout(&o), "B?\nC?\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn compose_then_decompose() {
    // P3 with its centre as the clique, on top of a single edge.
    let o = run(&["compose", "BW:2", "--tail", "A_"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let g = stdout(&o).trim().to_string();
    let o = run(&["decompose", &g]);
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("term ")));
    assert!(text.lines().last().unwrap().starts_with("tail "));

    let o = run(&["decompose", &g, "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v[0]["terms"].is_array());
}

#[test]
fn rao_commands() {
    let o = run(&["rao-contains", "2,2,1,1,1,1", "(2,1,1|2,1,1)"]);
    assert_eq!(stdout(&o).trim(), "true");
    let o = run(&["rao-minimal", "(2,2|1,1,1,1)"]);
    assert_eq!(stdout(&o).trim(), "true");
    let o = run(&["rao-minimal", "--max-n", "6"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().any(|l| l.starts_with("(2,2|1,1,1,1)")));
}

#[test]
fn mine_and_verify() {
    let o = run(&["mine", "--class", "bipartite", "--max-n", "5", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["forbidden"].as_array().unwrap().len(), 2);

    let o = run(&["verify", "split-forbidden", "--max-n", "6", "--strict"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("counterexamples=0"));

    let o = run(&["verify", "kpartite-equivalence:3", "--max-n", "6", "--strict", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["realize", "9,1"]).status.code(), Some(2));
    assert_eq!(run(&["realize", "x"]).status.code(), Some(2));
    assert_eq!(run(&["canon", "not graph6"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "no-such-theorem"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "1^24"]).status.code(), Some(3));
    assert_eq!(run(&["mine", "--max-n", "11"]).status.code(), Some(3));
    assert_eq!(run(&["unigraph", "Bw", "--class", "bipartite"]).status.code(), Some(2));
}

#[test]
fn canon_is_label_independent() {
    // Two labelings of P4.
    let a = stdout(&run(&["canon", "Ch"]));
    let b = stdout(&run(&["canon", "CR"]));
    assert_eq!(a, b);
}
