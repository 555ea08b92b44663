use std::io::Write;
use std::process::{Command, Output, Stdio};

const FIG8: &str = "1:0:0123 1:2:1203 1:3:1032 1:1:3021;0:0:0123 0:3:1320 0:1:2013 0:2:1032";
const TREFOIL: &str = "1:0:0123 1:1:0123 1:3:0231 1:2:3102;0:0:0123 0:1:0123 0:3:2130 0:2:0312";
const SOLID_TORUS: &str = "- - 0:3:1230 0:2:3012";

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cusphyp"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn batch_in_input_order() {
    let batch = format!("# fixtures\nsolid\t{SOLID_TORUS}\n\nfig8\t{FIG8}\ntrefoil\t{TREFOIL}\n");
    let o = run(&["--batch", "--jobs", "3", "-"], &batch);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        lines,
        [
            "solid: NOT_HYPERBOLIC",
            "fig8: HYPERBOLIC",
            "trefoil: NOT_HYPERBOLIC",
            "summary: HYPERBOLIC=1 NOT_HYPERBOLIC=2 PRECONDITION_FAILED=0 RESOURCE_EXCEEDED=0 ERROR=0"
        ]
    );
}

#[test]
fn empty_batch() {
    let o = run(&["--batch", "-"], "# nothing here\n\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "summary: HYPERBOLIC=0 NOT_HYPERBOLIC=0 PRECONDITION_FAILED=0 RESOURCE_EXCEEDED=0 ERROR=0");
}

#[test]
fn budget_exhaustion_exits_with_two() {
    let batch = format!("solid\t{SOLID_TORUS}\nfig8\t{FIG8}\n");
    let o = run(&["--batch", "--max-tets", "3", "-"], &batch);
    assert_eq!(o.status.code(), Some(2));
    let out = stdout(&o);
    assert!(out.contains("solid: NOT_HYPERBOLIC"));
    assert!(out.contains("fig8: RESOURCE_EXCEEDED"));
}

#[test]
fn malformed_permutation_names_its_line() {
    let batch = format!("fig8\t{FIG8}\nbad\t1:0:0124 1:2:1203 1:3:1032 1:1:3021;{}\n", FIG8.split(';').nth(1).unwrap());
    let o = run(&["--batch", "-"], &batch);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("fig8: HYPERBOLIC"));
    let bad = out.lines().find(|l| l.starts_with("bad:")).unwrap();
    assert!(bad.contains("ERROR") && bad.contains("line 2"), "{bad}");
}

#[test]
fn duplicate_names_and_missing_tabs_are_errors() {
    let batch = format!("a\t{FIG8}\na\t{FIG8}\nno tab here\n");
    let o = run(&["--batch", "-"], &batch);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("ERROR=2"));
}

#[test]
fn precondition_failures_are_not_errors() {
    let o = run(&["-"], "- - - -\n");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("stdin: PRECONDITION_FAILED (non_torus_boundary)"));
}

#[test]
fn json_certificate_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("trefoil.tri");
    std::fs::write(&path, TREFOIL.replace(';', "\n")).unwrap();
    let o = run(&["--format", "json", "--certificate", path.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    let v: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(v["name"], "trefoil");
    assert_eq!(v["status"], "NOT_HYPERBOLIC");
    assert_eq!(v["certificate"]["branch"], "annulus");
    let summary: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(summary["summary"]["NOT_HYPERBOLIC"], 1);

    // The certificate's triangulation is itself a valid input.
    let inner = dir.path().join("inner.tri");
    std::fs::write(&inner, v["certificate"]["triangulation"].as_str().unwrap()).unwrap();
    let again = run(&[inner.to_str().unwrap()], "");
    assert!(stdout(&again).starts_with("inner: NOT_HYPERBOLIC"));
}

#[test]
fn certificates_only_on_request() {
    let o = run(&["--format", "json", "-"], &TREFOIL.replace(';', "\n"));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).lines().next().unwrap()).unwrap();
    assert!(v.get("certificate").is_none());
    assert!(v["trace"].is_array());
}

#[test]
fn signatures_are_accepted() {
    let o = run(&["-"], "cPcbbbiht\n");
    assert!(stdout(&o).starts_with("stdin: HYPERBOLIC"));
}

#[test]
fn oracle_dump_goes_to_stderr() {
    let o = run(&["--oracle-dump", "-"], &FIG8.replace(';', "\n"));
    let err = String::from_utf8(o.stderr.clone()).unwrap();
    assert!(err.contains("closed_faults=") && err.contains("annulus_faults="), "{err}");
    assert!(!stdout(&o).contains("candidates"));
}
