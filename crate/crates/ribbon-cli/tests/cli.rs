//! The `ribbon` binary end to end, checking its JSON output and exit status.

use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::{json, Value};

fn ribbon(args: &[&str], stdin: &str) -> (i32, Value) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ribbon"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("the binary starts");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let value = serde_json::from_str(&text).unwrap_or(Value::Null);
    (out.status.code().expect("exited normally"), value)
}

#[test]
fn edge_window_of_a_partition() {
    let (code, v) = ribbon(
        &["convert", "--to", "edge"],
        r#"{"partition": [6, 4, 3, 3, 1]}"#,
    );
    assert_eq!(code, 0);
    assert_eq!(
        v["window"],
        json!({ "lo": -7, "hi": 8, "bits": "110100110100100" })
    );
    let (code, back) = ribbon(
        &["convert", "--to", "partition"],
        &json!({ "edge": v["edge"] }).to_string(),
    );
    assert_eq!(code, 0);
    assert_eq!(back["partition"], json!([6, 4, 3, 3, 1]));
}

#[test]
fn quotient_round_trip() {
    let (code, v) = ribbon(
        &["convert", "--to", "quotient", "--r", "3"],
        r#"{"partition": [6, 4, 3, 3, 1]}"#,
    );
    assert_eq!(code, 0);
    let input = json!({ "core": v["core"], "quotient": v["quotient"] }).to_string();
    let (code, back) = ribbon(&["convert", "--to", "partition"], &input);
    assert_eq!(code, 0);
    assert_eq!(back["partition"], json!([6, 4, 3, 3, 1]));
}

#[test]
fn symmetric_spin_square() {
    let input = json!({
        "mu": [16, 15, 15, 5, 4],
        "nu": [14, 14, 14, 9, 4],
        "kappa": [17, 17, 16, 13, 9, 5, 1, 1],
    });
    let (code, v) = ribbon(
        &[
            "datum", "extract", "--name", "spin-sym", "--r", "4", "--trace",
        ],
        &input.to_string(),
    );
    assert_eq!(code, 0);
    assert_eq!(v["lambda"], json!([14, 13, 11, 5]));
    assert_eq!(v["a"], json!([0, 2, 0, 1]));
    assert_eq!(
        v["spin"],
        json!({ "balance": 10, "twice_colour_weight": 10 })
    );
    assert!(v["trace"]["table"]
        .as_array()
        .is_some_and(|t| !t.is_empty()));

    let input = json!({ "lambda": v["lambda"], "mu": v["mu"], "nu": v["nu"], "a": v["a"] });
    let (code, w) = ribbon(
        &["datum", "insert", "--name", "spin-sym", "--r", "4"],
        &input.to_string(),
    );
    assert_eq!(code, 0);
    assert_eq!(w["kappa"], json!([17, 17, 16, 13, 9, 5, 1, 1]));
    assert!(w.get("trace").is_none());
}

#[test]
fn asymmetric_spin_square() {
    let input = json!({
        "lambda": [10, 10, 10, 10, 4, 3, 3, 1],
        "mu": [12, 11, 11, 11, 10, 10, 9, 6, 5, 2, 2, 1, 1],
        "nu": [15, 10, 10, 10, 7, 5, 5, 4, 4, 1],
        "a": [1, 0, 0, 1, 1],
    });
    let (code, v) = ribbon(
        &[
            "datum",
            "insert",
            "--name",
            "spin-asym",
            "--r",
            "5",
            "--trace",
        ],
        &input.to_string(),
    );
    assert_eq!(code, 0);
    assert_eq!(
        v["kappa"],
        json!([17, 16, 15, 12, 10, 10, 10, 10, 6, 6, 4, 3, 3, 3, 1])
    );
    assert_eq!(v["trace"]["heads"]["nu_lambda"], json!([-5, -2, 2, 14]));
    assert_eq!(v["spin"]["balance"], json!(14));
    assert_eq!(v["spin"]["twice_colour_weight"], json!(14));
}

#[test]
fn burge_trace_has_a_table() {
    let input = r#"{"lambda": [2], "mu": [3], "nu": [3], "a": 1}"#;
    let (code, v) = ribbon(
        &["datum", "insert", "--name", "burge-edge", "--trace"],
        input,
    );
    assert_eq!(code, 0);
    assert_eq!(v["kappa"], json!([4, 1]));
    let rows = v["trace"]["burge"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), v["trace"]["table"].as_array().unwrap().len());
}

#[test]
fn knuth_growth_round_trip() {
    let input = r#"{"matrix": [[1, 0, 2], [0, 1, 1]]}"#;
    let (code, g) = ribbon(&["grow", "--datum", "rsk"], input);
    assert_eq!(code, 0);
    assert_eq!(g["p"]["weight"], json!([1, 1, 3]));
    assert_eq!(g["q"]["weight"], json!([3, 2]));
    let pair = json!({ "p": g["p"]["chain"], "q": g["q"]["chain"] });
    let (code, s) = ribbon(&["shrink", "--datum", "rsk"], &pair.to_string());
    assert_eq!(code, 0);
    assert_eq!(s["matrix"], json!([[[1], [0], [2]], [[0], [1], [1]]]));
    assert_eq!(s["shapes"], g["shapes"]);
}

#[test]
fn schensted_growth_round_trip() {
    let input = r#"{"permutation": [2, 0, 3, 1], "colours": [1, 0, 1, 1]}"#;
    let (code, g) = ribbon(&["grow", "--tag", "sw", "--r", "2"], input);
    assert_eq!(code, 0);
    assert_eq!(g["colour_sum"], json!(3));
    let pair = json!({ "p": g["p"], "q": g["q"] });
    let (code, s) = ribbon(&["shrink", "--tag", "sw", "--r", "2"], &pair.to_string());
    assert_eq!(code, 0);
    assert_eq!(s["permutation"], json!([2, 0, 3, 1]));
    assert_eq!(s["colours"], json!([1, 0, 1, 1]));
}

#[test]
fn row_insertion_rows() {
    let (code, g) = ribbon(&["grow", "--tag", "row"], r#"{"permutation": [2, 0, 1]}"#);
    assert_eq!(code, 0);
    assert_eq!(g["p_rows"], json!([[0, 1], [2]]));
    assert_eq!(g["q_rows"], json!([[0, 2], [1]]));
}

#[test]
fn strips_and_non_strips() {
    let (code, v) = ribbon(&["strip", "--r", "3"], r#"{"lower": [1], "upper": [4, 3]}"#);
    assert_eq!(code, 0);
    assert_eq!(v["count"], json!(2));
    assert_eq!(v["heads"], json!([1, 3]));
    let (code, v) = ribbon(
        &["strip", "--r", "2"],
        r#"{"lower": [], "upper": [1, 1, 1, 1]}"#,
    );
    assert_eq!(code, 1);
    assert_eq!(v["strip"], json!(false));
}

#[test]
fn malformed_input_exits_with_two() {
    for (args, input) in [
        (vec!["strip", "--r", "2"], "not json"),
        (vec!["convert", "--to", "edge"], r#"{"partition": [1, 2]}"#),
        (
            vec!["convert", "--to", "edge"],
            r#"{"partition": [1], "core": []}"#,
        ),
        (vec!["datum", "insert", "--name", "nonsense"], r#"{}"#),
        (
            vec!["grow", "--datum", "spin-asym", "--r", "2"],
            r#"{"matrix": [[1]]}"#,
        ),
    ] {
        let (code, v) = ribbon(&args, input);
        assert_eq!(code, 2, "{args:?} {input}");
        assert_eq!(v["ok"], json!(false));
        assert!(v["error"].is_string());
    }
}

#[test]
fn precondition_failures_exit_with_one() {
    // µ/λ is not a horizontal 2-strip
    let input = r#"{"lambda": [], "mu": [1, 1, 1, 1], "nu": [], "a": [0, 0]}"#;
    let (code, v) = ribbon(
        &["datum", "insert", "--name", "factored-rsk", "--r", "2"],
        input,
    );
    assert_eq!(code, 1);
    assert_eq!(v["ok"], json!(false));
}

#[test]
fn placement_claims_pass() {
    let (code, v) = ribbon(
        &[
            "verify",
            "--suite",
            "claims",
            "--w",
            "0010110000010000",
            "--r",
            "4",
        ],
        "",
    );
    assert_eq!(code, 0);
    assert_eq!(v["ok"], json!(true));
    assert!(!v["details"].as_array().unwrap().is_empty());
}

#[test]
fn spin_identities_pass() {
    let (code, v) = ribbon(
        &[
            "verify",
            "--suite",
            "qcauchy",
            "--r",
            "2",
            "--deg",
            "2",
            "--max-size",
            "4",
        ],
        "",
    );
    assert_eq!(code, 0, "{v}");
    let (code, _) = ribbon(
        &["verify", "--suite", "asym-cauchy", "--r", "2", "--deg", "2"],
        "",
    );
    assert_eq!(code, 0);
    let (code, _) = ribbon(
        &[
            "verify", "--suite", "cauchy", "--r", "2", "--core", "1", "--deg", "2",
        ],
        "",
    );
    assert_eq!(code, 0);
}

#[test]
fn counts_and_properties_pass() {
    let (code, _) = ribbon(
        &[
            "verify",
            "--suite",
            "schensted-count",
            "--r",
            "2",
            "--n",
            "3",
        ],
        "",
    );
    assert_eq!(code, 0);
    let args = [
        "verify",
        "--suite",
        "properties",
        "--r",
        "2",
        "--rows",
        "2",
        "--cols",
        "2",
        "--jobs",
        "2",
    ];
    let (code, v) = ribbon(&args, "");
    assert_eq!(code, 0);
    assert_eq!(v["ok"], json!(true));
}

#[test]
fn suites_without_parameters_pass_trivially() {
    for suite in [
        "claims",
        "cauchy",
        "qcauchy",
        "asym-cauchy",
        "schensted-count",
        "properties",
    ] {
        let (code, v) = ribbon(&["verify", "--suite", suite], "");
        assert_eq!(code, 0);
        assert_eq!(v, json!({ "ok": true, "details": [] }));
    }
}

#[test]
fn bad_verify_arguments_are_malformed() {
    let (code, _) = ribbon(
        &["verify", "--suite", "claims", "--w", "0120", "--r", "2"],
        "",
    );
    assert_eq!(code, 2);
    let (code, _) = ribbon(
        &["verify", "--suite", "cauchy", "--r", "2", "--core", "2"],
        "",
    );
    assert_eq!(code, 1);
}

#[test]
fn output_is_deterministic() {
    let args = [
        "verify",
        "--suite",
        "properties",
        "--r",
        "2",
        "--rows",
        "2",
        "--cols",
        "2",
    ];
    let (_, a) = ribbon(&args, "");
    let mut with_jobs = args.to_vec();
    with_jobs.extend(["--jobs", "3"]);
    let (_, b) = ribbon(&with_jobs, "");
    assert_eq!(a, b);
    let input = r#"{"permutation": [3, 1, 0, 2], "colours": [2, 0, 1, 1]}"#;
    assert_eq!(
        ribbon(&["grow", "--tag", "ws", "--r", "3"], input),
        ribbon(&["grow", "--tag", "ws", "--r", "3"], input)
    );
}
