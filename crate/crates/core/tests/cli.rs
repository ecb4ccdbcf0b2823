use std::io::Write;
use std::process::{Command, Output, Stdio};

use smbd::graph::to_graph6;
use smbd::Graph;

fn smbd(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_smbd"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn solve_and_formula_agree_on_a_path() {
    let p7 = "n 7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n";
    let solved = json(&smbd(&["solve", "--game", "both"], p7));
    assert_eq!(solved["gamma_smb"], "inf");
    assert_eq!(solved["gamma_smb_prime"], 3);
    assert_eq!(solved["method"], "solver");
    let formula = json(&smbd(&["formula"], p7));
    assert_eq!(formula["gamma_smb_prime"], 3);
    assert_eq!(formula["family"], "path");
}

#[test]
fn open_stars_report_an_interval() {
    let g = to_graph6(&Graph::subdivided_star(&[2, 2, 2, 2]));
    let v = json(&smbd(&["formula", "--format", "graph6"], &g));
    assert_eq!(v["status"], "OPEN");
    assert!(v["gamma_smb_prime"].is_null());
}

#[test]
fn exit_codes() {
    assert_eq!(smbd(&["solve"], "0 1\n").status.code(), Some(2));
    assert_eq!(
        smbd(&["solve", "--format", "graph6"], "F???\n")
            .status
            .code(),
        Some(2)
    );
    let big = to_graph6(&Graph::path(20));
    assert_eq!(
        smbd(&["solve", "--format", "graph6"], &big).status.code(),
        Some(3)
    );
    assert_eq!(smbd(&["z-family", "2", "5"], "").status.code(), Some(2));
}

#[test]
fn verify_is_deterministic_across_jobs() {
    let one = smbd(
        &[
            "verify", "--max-n", "10", "--family", "trees", "--jobs", "1",
        ],
        "",
    );
    let four = smbd(
        &[
            "verify", "--max-n", "10", "--family", "trees", "--jobs", "4",
        ],
        "",
    );
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
    // header plus one row per tree
    assert_eq!(String::from_utf8_lossy(&one.stdout).lines().count(), 202);
    assert!(String::from_utf8_lossy(&one.stderr).contains("0 discrepancies"));
}

#[test]
fn z_family_emits_its_star() {
    let v = json(&smbd(&["z-family", "3", "2", "--emit", "json"], ""));
    assert_eq!(v["order"], 9);
    assert_eq!(v["expected"], 4);
}

#[test]
fn play_session_runs_to_the_end() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p3.txt");
    std::fs::write(&path, "n 3\n0 1\n1 2\n").unwrap();
    let out = smbd(
        &[
            "play",
            path.to_str().unwrap(),
            "--human",
            "staller",
            "--first",
            "s",
        ],
        "1\n2\n",
    );
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(out.status.success(), "{text}");
    assert!(text.contains("staller wins in 2 moves"), "{text}");
}
