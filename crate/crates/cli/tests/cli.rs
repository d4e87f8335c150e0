use std::process::{Command, Output};

fn monosens(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monosens"))
        .args(args)
        .output()
        .expect("failed to launch monosens")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn analyze_majority_of_three() {
    let out = monosens(&["analyze", "--n", "3", "--hex", "e8"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["monotone"], true);
    assert_eq!(v["hex"], "e8");
    assert_eq!(v["average_sensitivity"]["num"], "3");
    assert_eq!(v["average_sensitivity"]["log2_den"], 1);
    assert_eq!(v["minimal_ones"], serde_json::json!([3, 5, 6]));
    assert_eq!(v["maximal_zeros"], serde_json::json!([1, 2, 4]));
    assert_eq!(v["layer_profile"], serde_json::json!([0, 0, 3, 1]));
    assert_eq!(v["activities"].as_array().unwrap().len(), 3);
}

#[test]
fn analyze_non_monotone_is_data() {
    // parity on two variables
    let out = monosens(&["analyze", "--n", "2", "--hex", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["monotone"], false);
    assert!(v["minimal_ones"].is_null());
    assert!(v["special_classes"].is_null());
    assert_eq!(v["average_sensitivity"]["float"], 2.0);
}

#[test]
fn analyze_rejects_bad_input() {
    for args in [
        ["analyze", "--n", "3", "--hex", "zz"],
        ["analyze", "--n", "2", "--hex", "1ff"],
        ["analyze", "--n", "31", "--hex", "0"],
    ] {
        let out = monosens(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn analyze_round_trips_hex() {
    let first = json(&monosens(&["analyze", "--n", "4", "--hex", "0xFEE8"]));
    let hex = first["hex"].as_str().unwrap().to_string();
    assert_eq!(hex, "fee8");
    let second = json(&monosens(&["analyze", "--n", "4", "--hex", &hex]));
    assert_eq!(first, second);
}

#[test]
fn curve_is_byte_stable() {
    let a = monosens(&["curve", "--min", "2", "--max", "30"]);
    let b = monosens(&["curve", "--min", "2", "--max", "30", "--threads", "1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("n,parity,s_hat,s_hat_1,s_hat_2,sqrt_2n_over_pi")
    );
    assert_eq!(lines.count(), 29);
    assert_eq!(text, monosens::report::curve_csv(2, 30).unwrap());
}

#[test]
fn curve_json_matches_csv_rows() {
    let out = monosens(&["curve", "--min", "8", "--max", "11", "--format", "json"]);
    let rows = json(&out);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[1]["n"], 9);
    assert_eq!(rows[1]["parity"], "odd");
    assert!((rows[1]["s_hat"].as_f64().unwrap() - 1.9188824).abs() < 1e-6);
}

#[test]
fn curve_rejects_bad_ranges() {
    for args in [
        ["--min", "1", "--max", "5"],
        ["--min", "9", "--max", "5"],
        ["--min", "2", "--max", "401"],
    ] {
        let mut full = vec!["curve"];
        full.extend(args);
        assert_eq!(monosens(&full).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_exact_small_n() {
    let v = json(&monosens(&[
        "verify", "--n", "3", "--mode", "exact", "--format", "json",
    ]));
    assert_eq!(v["mean_exact"], "39/40");
    assert_eq!(v["function_count"], "20");
    assert_eq!(v["status"], "ok");

    let out = monosens(&["verify", "--n", "2", "--mode", "exact"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    let field = |name: &str| row[header.iter().position(|h| *h == name).unwrap()];
    assert_eq!(field("mean_exact"), "2/3");
    assert_eq!(field("ratio_exact"), "16/15");
}

#[test]
fn verify_sample_is_reproducible() {
    let args = [
        "verify",
        "--n",
        "4",
        "--mode",
        "sample",
        "--samples",
        "200",
        "--seed",
        "5",
    ];
    let a = monosens(&args);
    assert_eq!(a.status.code(), Some(0));
    let mut more_threads = args.to_vec();
    more_threads.extend(["--threads", "3"]);
    assert_eq!(a.stdout, monosens(&more_threads).stdout);
}

#[test]
fn verify_rejects_invalid_requests() {
    for args in [
        vec!["verify", "--n", "7", "--mode", "exact"],
        vec!["verify", "--n", "1", "--mode", "exact"],
        vec!["verify", "--n", "21", "--mode", "sample"],
        vec!["verify", "--n", "4", "--mode", "sample", "--chains", "1"],
        vec!["verify", "--n", "4", "--mode", "fast"],
    ] {
        assert_eq!(monosens(&args).status.code(), Some(2), "{args:?}");
    }
}
