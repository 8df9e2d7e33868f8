use std::io::Write;
use std::process::{Command, Output, Stdio};

use mvrank::cli::{Outcome, Report};
use mvrank::corpus::atlas;
use mvrank::graph::{parse_graph6, write_graph6};
use mvrank::rank::Value;

fn mvrank(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_mvrank"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    if let Some(text) = stdin {
        child
            .stdin
            .take()
            .unwrap()
            .write_all(text.as_bytes())
            .unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn report(out: &Output) -> Report {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn mvr_report_round_trips() {
    let out = mvrank(&["mvr", "Ch"], None);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    match &r.outcome {
        Outcome::Mvr { value, .. } => assert_eq!(*value, Value::Exact(3)),
        other => panic!("{other:?}"),
    }
    let again: Report = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
    assert_eq!(again, r);

    let out = mvrank(&["mvr", "--complement", "Ch"], None);
    assert!(matches!(
        report(&out).outcome,
        Outcome::Mvr {
            value: Value::Exact(3),
            ..
        }
    ));
}

#[test]
fn critical_exit_codes() {
    assert_eq!(mvrank(&["critical", "Ch"], None).status.code(), Some(0));
    assert_eq!(mvrank(&["critical", "Dhc"], None).status.code(), Some(1));
    let text = mvrank(&["--format", "text", "critical", "Bw"], None);
    assert!(!text.stdout.is_empty());
}

#[test]
fn scan_reads_stdin() {
    let lines: Vec<String> = atlas(4).iter().map(write_graph6).collect();
    let out = mvrank(&["scan", "--jobs", "1"], Some(&lines.join("\n")));
    assert_eq!(out.status.code(), Some(0));
    match report(&out).outcome {
        Outcome::Scan { report } => {
            assert_eq!(report.graphs_checked, 11);
            // the one equality case is P4, in the atlas labeling
            assert_eq!(report.equality_cases.len(), 1);
            let p4 = parse_graph6(&report.equality_cases[0]).unwrap();
            let mut degrees = p4.degree_sequence();
            degrees.sort();
            assert_eq!((p4.size(), degrees), (3, vec![1, 1, 2, 2]));
        }
        other => panic!("{other:?}"),
    }
    let out = mvrank(&["scan"], Some("Ch\nnot-a-graph\n"));
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_only_rejects_a_corrupted_representation() {
    let out = mvrank(&["represent", "Ch"], None);
    assert_eq!(out.status.code(), Some(0));
    let Outcome::Represent {
        representation: Some(rep),
        ..
    } = report(&out).outcome
    else {
        panic!("no representation");
    };
    let dir = std::env::temp_dir().join(format!("mvrank-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("good.json");
    std::fs::write(&good, serde_json::to_string(&rep).unwrap()).unwrap();
    let out = mvrank(
        &["represent", "Ch", "--verify-only", good.to_str().unwrap()],
        None,
    );
    assert_eq!(out.status.code(), Some(0));

    let mut json: serde_json::Value = serde_json::to_value(&rep).unwrap();
    let first = json["vectors"][0].clone();
    json["vectors"][1] = first;
    let bad = dir.join("bad.json");
    std::fs::write(&bad, json.to_string()).unwrap();
    let out = mvrank(
        &["represent", "Ch", "--verify-only", bad.to_str().unwrap()],
        None,
    );
    assert_eq!(out.status.code(), Some(1));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bad_input_exits_two() {
    let out = mvrank(&["mvr", "C~~"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte 2"));
    assert_eq!(mvrank(&["frobnicate"], None).status.code(), Some(2));
    assert_eq!(
        mvrank(&["--tolerance", "1", "mvr", "Ch"], None)
            .status
            .code(),
        Some(2)
    );
}
