//! End-to-end runs of the `rootrefine` binary: output shape and exit codes.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rootrefine"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&ok(args)).expect("valid JSON")
}

fn code(args: &[&str]) -> Option<i32> {
    run(args).status.code()
}

#[test]
fn sqfree_splits_repeated_factors() {
    let text = ok(&["sqfree", "--poly", "(x-1)^2*(x+2)"]);
    assert!(text.contains("(x + 2)^1"), "{text}");
    assert!(text.contains("(x - 1)^2"), "{text}");
    let doc = json(&["sqfree", "--poly", "(x-1)^2*(x+2)", "--format", "json"]);
    assert_eq!(doc["factors"].as_array().unwrap().len(), 2);
}

#[test]
fn lmcd_splits_on_second_derivative() {
    let doc = json(&["lmcd", "--poly", "x^3+3*x^2+2*x", "--format", "json"]);
    let factors: Vec<&str> = doc["factors"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    assert_eq!(factors, ["x + 1", "x^2 + 2*x"]);
}

#[test]
fn isolate_and_mci() {
    let plain = json(&["isolate", "--poly", "x^3 - 20*x + 7", "--format", "json"]);
    assert_eq!(plain["intervals"].as_array().unwrap().len(), 3);
    let text = ok(&["isolate", "--poly", "7,-20,0,1", "--mci"]);
    assert_eq!(text.lines().count(), 3, "{text}");
    assert_eq!(code(&["isolate", "--poly", "x^3+3*x^2+2*x", "--mci"]), Some(3));
}

#[test]
fn refine_prints_the_digits() {
    let text = ok(&[
        "refine", "--poly", "x^3-20*x+7", "--interval", "4,5", "--method", "lz2", "--mode", "exact", "-L", "8",
    ]);
    assert!(text.contains("decimal: 4.285631"), "{text}");
    let doc = json(&[
        "refine", "--poly", "x^3-20*x+7", "--interval", "1097/256,2195/512", "-L", "20", "--trace", "--format",
        "json",
    ]);
    assert_eq!(doc["L"], 20);
    assert!(doc["decimal"].as_str().unwrap().starts_with("4.2856312267090112779"));
    assert!(!doc["trace"].as_array().unwrap().is_empty());
    assert!(doc["convergence_trace"].is_array());
}

#[test]
fn refine_accepts_negative_endpoints() {
    let text = ok(&["refine", "--poly", "x^2-2", "--interval", "-2,-1", "-L", "10", "--method", "lz1"]);
    assert!(text.contains("decimal: -1.414213562"), "{text}");
}

#[test]
fn pipeline_json_shape() {
    let doc = json(&[
        "pipeline", "--poly", "(x-1)^2*(x^3-20*x+7)", "-L", "12", "--method", "lz1", "--mode", "interval",
        "--format", "json",
    ]);
    assert_eq!(doc["polynomial"], "x^5 - 2*x^4 - 19*x^3 + 47*x^2 - 34*x + 7");
    assert_eq!(doc["method"], "lz1");
    assert_eq!(doc["mode"], "interval");
    assert_eq!(doc["L"], 12);
    let roots = doc["roots"].as_array().unwrap();
    assert_eq!(roots.len(), 4);
    for r in roots {
        for key in ["lo", "hi", "decimal", "multiplicity", "correct_digits", "iterations", "wall_time"] {
            assert!(r.get(key).is_some(), "missing {key} in {r}");
        }
    }
    let one = roots.iter().find(|r| r["multiplicity"] == 2).unwrap();
    assert_eq!(one["decimal"], "1");
}

#[test]
fn pipeline_text() {
    let text = ok(&["pipeline", "--poly", "x^2-2", "-L", "6"]);
    assert!(text.contains("real roots: 2"), "{text}");
    assert!(text.contains("1.41421"), "{text}");
}

#[test]
fn bench_chebyshev_reports_both_methods() {
    let doc = json(&["bench", "chebyshev", "--n", "20", "-L", "50", "--format", "json"]);
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|r| r["contract"] == true));
    let text = ok(&["bench", "chebyshev", "--n", "10", "-L", "20", "--methods", "lz2"]);
    assert!(text.contains("lz2"), "{text}");
}

#[test]
fn exit_codes() {
    // Unreadable input.
    assert_eq!(code(&["sqfree", "--poly", "x^-1"]), Some(2));
    assert_eq!(code(&["sqfree", "--poly", "x +* 2"]), Some(2));
    assert_eq!(code(&["refine", "--poly", "x^2-2", "--interval", "1;2", "-L", "5"]), Some(2));
    assert_eq!(code(&["pipeline", "--poly", "x", "-L", "0"]), Some(2));
    assert_eq!(code(&["nonsense"]), Some(2));
    // Precondition violations.
    assert_eq!(code(&["lmcd", "--poly", "(x-1)^2"]), Some(3));
    assert_eq!(code(&["lmcd", "--poly", "5"]), Some(3));
    assert_eq!(code(&["isolate", "--poly", "x^2-2*x+1"]), Some(3));
    assert_eq!(code(&["refine", "--poly", "x^2-2", "--interval", "-2,2", "-L", "5"]), Some(3));
    assert_eq!(code(&["refine", "--poly", "x^2-2", "--interval", "2,3", "-L", "5"]), Some(3));
    assert_eq!(code(&["refine", "--poly", "x^2-2", "--interval", "2,1", "-L", "5"]), Some(3));
    assert_eq!(code(&["pipeline", "--poly", "0", "-L", "5"]), Some(3));
    assert_eq!(code(&["bench", "chebyshev", "--n", "7", "-L", "5"]), Some(3));
}

#[test]
fn errors_go_to_stderr() {
    let out = run(&["sqfree", "--poly", "x^-1"]);
    assert!(stdout(&out).is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}
