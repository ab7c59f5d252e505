use std::process::{Command, Output};

fn unisolve(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unisolve")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn traced_cubic_shows_f1() {
    let o = unisolve(&["solve", "x^3 - 2.049888x^2 + 3.1010205x + 11.313708", "--trace"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("21.2075"), "{out}");
    assert!(out.contains("plan (N, M, K):"));
}

#[test]
fn coefficient_list_input() {
    let o = unisolve(&["solve", "--coeffs", "1,-3,2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["roots"][0]["re"], 1.0);
    assert_eq!(v["roots"][1]["re"], 2.0);
}

#[test]
fn quintic_is_a_solver_error() {
    let o = unisolve(&["solve", "x^5+1", "--method", "unified"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("degree"), "{}", stderr(&o));
}

#[test]
fn parse_error_reports_position() {
    let o = unisolve(&["solve", "x^2+y"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("position 4"), "{}", stderr(&o));
}

#[test]
fn check_agrees_on_examples() {
    for input in ["x^4 + 2.0533927x^3 - 2.8917903x^2 + 7.6758959x + 29.5803989", "x^2+1", "x^3+3x^2+3x+1"] {
        let o = unisolve(&["check", input]);
        assert_eq!(o.status.code(), Some(0), "{input}: {}", stdout(&o));
        assert!(!stdout(&o).contains("DISAGREE"));
    }
}

#[test]
fn batch_has_no_failures() {
    let o = unisolve(&["batch", "--count", "1000", "--degree", "4", "--seed", "42", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn batch_is_deterministic() {
    let args = ["batch", "--count", "1", "--degree", "2", "--seed", "7"];
    assert_eq!(unisolve(&args).stdout, unisolve(&args).stdout);
}

#[test]
fn zero_range_batch_takes_the_depressed_path() {
    let o = unisolve(&["batch", "--count", "10", "--degree", "3", "--coeff-range", "0,0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["special_cases"]["depressed-special"], 10);
}

#[test]
fn json_output_is_reproducible() {
    let args = ["solve", "x^4 - 10x^2 + 9", "--format", "json", "--trace"];
    let (a, b) = (unisolve(&args), unisolve(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn decompose_prints_factors() {
    let o = unisolve(&["decompose", "x^4 - 10x^2 + 9"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("factor 1"));
}

#[test]
fn invalid_batch_parameters() {
    let o = unisolve(&["batch", "--degree", "7"]);
    assert_eq!(o.status.code(), Some(2));
}
