use std::io::Write;
use std::process::{Command, Output, Stdio};

use longcycle_core::InvariantProfile;
use longcycle_verifier::{CheckReport, Outcome};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_longcycle"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn profiles(text: &str) -> Vec<InvariantProfile> {
    text.lines()
        .map(|l| {
            let v: serde_json::Value = serde_json::from_str(l).unwrap();
            serde_json::from_value(v["profile"].clone()).unwrap()
        })
        .collect()
}

#[test]
fn invariant_of_five_cycle() {
    let o = run(&["invariant", "--json"], "Dhc\n");
    assert!(o.status.success());
    let p = &profiles(&stdout(&o))[0];
    assert_eq!((p.circumference, p.dc, p.cc), (5, 5, 5));
}

#[test]
fn generated_theta_piped_into_invariant() {
    let g = run(&["generate", "theta", "4,4,3,3"], "");
    assert!(g.status.success());
    let o = run(&["invariant", "--json"], &stdout(&g));
    let p = &profiles(&stdout(&o))[0];
    assert_eq!((p.girth, p.cc), (Some(6), 8));
}

#[test]
fn blank_line_ends_input_and_sets_are_optional() {
    let o = run(&["invariant", "--json", "--sets"], "Dhc\nBw\n\nnot read\n");
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 2);
    assert!(text.contains("cover_sets"));
    let plain = run(&["invariant"], "Bw\n");
    assert!(stdout(&plain).contains("c=3"));
}

#[test]
fn malformed_graph6_reports_offset() {
    let o = run(&["invariant"], "Dhc\nD?\u{1}\n");
    assert_eq!(o.status.code(), Some(65));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 2") && err.contains("byte 2"), "{err}");
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(run(&["check"], "").status.code(), Some(64));
    assert_eq!(run(&["invariant", "--bogus"], "").status.code(), Some(64));
    assert_eq!(run(&["generate", "no-such-family"], "").status.code(), Some(64));
    assert_eq!(run(&["check", "no-such-check"], "").status.code(), Some(64));
    assert_eq!(run(&["search", "b"], "").status.code(), Some(64));
    assert_eq!(run(&["enumerate", "--n", "5", "--shard", "4/4"], "").status.code(), Some(64));
}

#[test]
fn enumerate_counts_and_shards() {
    let o = run(&["enumerate", "--n", "6", "--count-only"], "");
    assert_eq!(stdout(&o).trim(), "156");
    let parts: usize = (0..3)
        .map(|i| {
            let o = run(&["enumerate", "--n", "6", "--shard", &format!("{i}/3")], "");
            stdout(&o).lines().count()
        })
        .sum();
    assert_eq!(parts, 156);
    let o = run(&["enumerate", "--n", "6", "--connected", "--free", "p4,2k2", "--format", "edges"], "");
    assert!(stdout(&o).lines().all(|l| l.starts_with("6 ")));
}

#[test]
fn bipartite_check_json() {
    let o = run(&["check", "bipartite-cc", "--n", "9", "--json"], "");
    assert_eq!(o.status.code(), Some(0));
    let r: CheckReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.outcome, Outcome::Pass);
    assert!(r.universe_size > 0);
    assert_eq!(r.details["equality_class_size"], 7);
}

#[test]
fn budget_exhaustion_exits_2() {
    let o = run(&["check", "degree-cc", "--n", "6", "--budget", "1"], "");
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["search", "b", "--budget", "5", "--seed", "3", "--json"], "");
    assert_eq!(o.status.code(), Some(2));
    let r: CheckReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.seed, Some(3));
}

#[test]
fn certify_and_search() {
    let o = run(&["generate", "bipartite", "--i", "3", "--n", "10", "--certify"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"mismatches\": []"));
    let o = run(&["search", "a"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().next().unwrap().starts_with('F'));
}
