//! End-to-end tests of the binary: exit codes, output shapes, determinism.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pintersect"))
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("wait")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn gen(spec: &str) -> String {
    let out = bin().args(["gen", spec]).output().expect("gen");
    assert!(out.status.success(), "gen {spec} failed");
    stdout_of(&out)
}

#[test]
fn decide_no_exits_one() {
    let star4 = gen("K_{1,4}");
    let out = run_with_stdin(&["decide", "--d", "3", "--p", "2", "-"], &star4);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_of(&out).trim(), "NO");
}

#[test]
fn decide_yes_writes_a_certificate() {
    let edgeless = gen("~K_3");
    let out = run_with_stdin(&["decide", "--d", "0", "--p", "1", "-"], &edgeless);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("YES"));
    // empty-vector certificate: header then three empty vector rows
    assert_eq!(lines.next(), Some("0 1 3"));
}

#[test]
fn decide_with_budget_one_is_indeterminate() {
    let c5 = gen("C_5");
    let out = run_with_stdin(
        &["decide", "--d", "3", "--p", "2", "--budget", "1", "-"],
        &c5,
    );
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout_of(&out).starts_with("INDETERMINATE"));
}

#[test]
fn parse_errors_exit_two() {
    let out = run_with_stdin(&["decide", "--d", "1", "--p", "1", "-"], "!!!not graph6\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn theta_of_complete_graph_is_threshold() {
    let k5 = gen("K_5");
    let out = run_with_stdin(&["theta", "--p", "2", "-"], &k5);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).starts_with("theta=2"));
}

#[test]
fn theta_of_edgeless_is_zero() {
    let e4 = gen("~K_4");
    let out = run_with_stdin(&["theta", "--p", "3", "-"], &e4);
    assert!(stdout_of(&out).starts_with("theta=0"));
}

#[test]
fn multi_graph_inputs_are_line_prefixed() {
    let mut input = gen("K_{1,3}");
    input.push_str(&gen("K_{1,4}"));
    let out = run_with_stdin(&["decide", "--d", "3", "--p", "2", "-"], &input);
    assert_eq!(out.status.code(), Some(1), "worst outcome wins");
    let text = stdout_of(&out);
    assert!(text.contains("1: YES"), "{text}");
    assert!(text.contains("2: NO"), "{text}");
}

#[test]
fn recognize_self_pattern_holds() {
    // the split pattern for d=3: clique on the first three vertices plus
    // one degree-2 vertex per pair
    let pattern = "E}h_\n";
    let out = run_with_stdin(
        &["recognize", "--theorem", "3", "--d", "3", "--with-solver", "-"],
        pattern,
    );
    let text = stdout_of(&out);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(text.contains("result=HOLDS"), "{text}");
    assert!(text.contains("cond=i outcome=HOLDS"), "{text}");
}

#[test]
fn recognize_rejects_isolated_vertices() {
    let input = gen("K_2+~K_1");
    let out = run_with_stdin(&["recognize", "--theorem", "2", "--d", "2", "-"], &input);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("isolated"));
}

#[test]
fn recognize_failure_exits_one() {
    let c4 = gen("C_4");
    let out = run_with_stdin(&["recognize", "--theorem", "2", "--d", "3", "-"], &c4);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_of(&out).contains("witness=C_4"));
}

#[test]
fn reduce_complete_graph_to_a_point() {
    let k7 = gen("K_7");
    let out = run_with_stdin(&["reduce", "-"], &k7);
    assert_eq!(stdout_of(&out).trim(), "@");
}

#[test]
fn family_lists_members_with_names() {
    let out = bin()
        .args(["family", "--theorem", "3", "--d", "3"])
        .output()
        .unwrap();
    let text = stdout_of(&out);
    assert_eq!(text.lines().count(), 17);
    assert!(text.lines().all(|l| l.contains(" name=")));
    assert!(text.contains("name=K_{1,3}"));
    assert!(text.contains("name=~K_4"));
}

#[test]
fn gen_round_trips_through_decide() {
    let g6 = gen("K_{2,3}+e");
    assert_eq!(g6.trim().len(), 3, "five-vertex graph6 token");
    let out = run_with_stdin(&["theta", "--p", "1", "-"], &g6);
    assert!(stdout_of(&out).starts_with("theta="));
}

#[test]
fn gen_enumerate_counts_classes() {
    let out = bin().args(["gen", "--enumerate", "4"]).output().unwrap();
    assert_eq!(stdout_of(&out).lines().count(), 11);
}

#[test]
fn catalog_is_deterministic_and_annotated() {
    let run = || {
        let out = bin()
            .args(["enumerate-mfis", "--d", "2", "--p", "1", "--max-n", "5"])
            .output()
            .unwrap();
        assert!(out.status.success());
        stdout_of(&out)
    };
    let first = run();
    assert_eq!(first, run(), "byte-identical across runs");
    assert!(first.starts_with("# mfis d=2 p=1 max_n=5"));
    assert!(first.contains("name=K_{1,3}"));
}

#[test]
fn verify_star_confirms() {
    let out = bin()
        .args(["verify-star", "--d", "2", "--p", "1"])
        .output()
        .unwrap();
    assert_eq!(stdout_of(&out).trim(), "MFIS confirmed k=3");
    assert!(out.status.success());
}

#[test]
fn suite_runs_a_single_criterion() {
    let out = bin().args(["suite", "counting-identities"]).output().unwrap();
    assert!(out.status.success());
    assert!(stdout_of(&out).starts_with("PASS counting-identities"));
}

#[test]
fn suite_rejects_unknown_names() {
    let out = bin().args(["suite", "bogus"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn edge_list_format_is_accepted() {
    let out = run_with_stdin(
        &["theta", "--p", "1", "--format", "edgelist", "-"],
        "3 2\n0 1\n1 2\n",
    );
    assert!(stdout_of(&out).starts_with("theta=2"), "path needs two cliques");
}

#[test]
fn certificate_file_output(){
    let dir = std::env::temp_dir().join(format!("pintersect-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cert_path = dir.join("cert.txt");
    let k3 = gen("K_3");
    let out = run_with_stdin(
        &[
            "theta",
            "--p",
            "1",
            "--out",
            cert_path.to_str().unwrap(),
            "-",
        ],
        &k3,
    );
    assert!(stdout_of(&out).starts_with("theta=1"));
    let cert = std::fs::read_to_string(&cert_path).unwrap();
    assert!(cert.starts_with("1 1 3"));
    std::fs::remove_dir_all(&dir).unwrap();
}
