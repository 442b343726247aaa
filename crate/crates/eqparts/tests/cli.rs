//! Black-box tests of the command-line binary: JSON shapes, exit codes,
//! canonical-spec round-trips and seeded determinism.

use std::process::{Command, Output};

use serde_json::Value;

use eqparts::partset::parse_tuple_spec;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eqparts"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_json(args: &[&str]) -> Value {
    let output = run(args);
    assert!(
        output.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).expect("single JSON document")
}

#[test]
fn count_matches_published_series_value() {
    let doc = run_json(&["count", "--parts", "{1,2}", "--n", "9", "--tuple-size", "2"]);
    assert_eq!(doc["command"], "count");
    assert_eq!(doc["outputs"]["d_n"], "931");
    assert_eq!(doc["inputs"]["parts"], "{1,2};{1,2}");
    assert!(doc["elapsed_ms"].is_u64());
}

#[test]
fn prob_emits_exact_rational() {
    let doc = run_json(&["prob", "--parts", "N;N", "--n", "3"]);
    assert_eq!(doc["outputs"]["pi_n"], "3/8");
    assert_eq!(doc["outputs"]["d_n"], "6");
    assert_eq!(doc["outputs"]["pi_n_decimal"], 0.375);
}

#[test]
fn canonical_specs_round_trip() {
    for spec in ["{2^1/2,3^3};N>=2", "2N;odd>=3", "{1,2}"] {
        let doc = run_json(&["describe", "--parts", spec]);
        let echoed = doc["inputs"]["parts"].as_str().unwrap();
        let reparsed = parse_tuple_spec(echoed, false).unwrap();
        let canonical = reparsed
            .iter()
            .map(|set| set.spec().to_string())
            .collect::<Vec<_>>()
            .join(";");
        assert_eq!(echoed, canonical, "echo of {spec} must re-parse to itself");
    }
}

#[test]
fn asym_interval_contains_closed_form() {
    let doc = run_json(&["asym", "--parts", "{1,2}", "--m", "2"]);
    let bracket = doc["outputs"]["c_m"].as_str().unwrap();
    let inner = bracket.trim_start_matches('[').trim_end_matches(']');
    let (lo, hi) = inner.split_once(',').unwrap();
    let lo: f64 = lo.trim().parse().unwrap();
    let hi: f64 = hi.trim().parse().unwrap();
    let closed_form = 5f64.powf(0.75) / 2.0;
    assert!(lo <= closed_form && closed_form <= hi, "{bracket}");
    assert_eq!(doc["outputs"]["exponent"], "1/2");
}

#[test]
fn dist_reports_exact_moments() {
    let doc = run_json(&["dist", "--parts", "{1,2}", "--n", "4"]);
    assert_eq!(doc["outputs"]["pmf"]["2"], "1/5");
    assert_eq!(doc["outputs"]["pmf"]["3"], "3/5");
    assert_eq!(doc["outputs"]["pmf"]["4"], "1/5");
    assert_eq!(doc["outputs"]["mean"], "3");
    assert_eq!(doc["outputs"]["variance"], "2/5");
}

#[test]
fn table_csv_shows_convergence() {
    let output = run(&[
        "table",
        "--parts",
        "{1,2}",
        "--tuple-size",
        "2",
        "--n",
        "200",
        "--n-min",
        "50",
        "--step",
        "50",
        "--format",
        "csv",
    ]);
    assert!(output.status.success());
    let text = String::from_utf8(output.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,pi_exact,pi_asymptotic,ratio"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 4);
    let mut last_ratio = 0.0;
    for row in rows {
        let ratio: f64 = row.rsplit(',').next().unwrap().parse().unwrap();
        assert!(ratio > 0.9 && ratio < 1.1);
        assert!(ratio > last_ratio, "ratio column should approach 1");
        last_ratio = ratio;
    }
}

#[test]
fn sample_is_deterministic_per_seed() {
    let args = [
        "sample", "--parts", "{1,2,3}", "--n", "15", "--trials", "4", "--seed", "11",
    ];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let doc: Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(doc["inputs"]["rng"], "chacha12");
    for composition in doc["outputs"]["compositions"].as_array().unwrap() {
        let total: u64 = composition
            .as_array()
            .unwrap()
            .iter()
            .map(|part| part.as_u64().unwrap())
            .sum();
        assert_eq!(total, 15);
    }
}

#[test]
fn mc_reports_estimate_with_error_bar() {
    let doc = run_json(&[
        "mc",
        "--parts",
        "{1,2}",
        "--tuple-size",
        "2",
        "--n",
        "20",
        "--trials",
        "5000",
        "--seed",
        "3",
    ]);
    let estimate = doc["outputs"]["estimate"].as_f64().unwrap();
    let se = doc["outputs"]["standard_error"].as_f64().unwrap();
    assert!(estimate > 0.0 && estimate < 1.0);
    assert!(se > 0.0 && se < 0.05);
}

#[test]
fn llt_flags_degenerate_distributions() {
    let doc = run_json(&["llt", "--parts", "{1,2}", "--n", "1"]);
    assert_eq!(doc["outputs"]["degenerate"], true);
    assert_eq!(doc["outputs"]["mu_n"], "1");
}

#[test]
fn verify_battery_passes() {
    let doc = run_json(&["verify"]);
    assert_eq!(doc["outputs"]["all_pass"], true);
    let checks = doc["outputs"]["checks"].as_array().unwrap();
    assert!(checks.len() >= 10);
    assert!(checks.iter().all(|c| c["pass"] == true));
}

#[test]
fn domain_errors_exit_one_with_error_name() {
    let output = run(&["prob", "--parts", "2N;{1,2}", "--n", "3"]);
    assert_eq!(output.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("UndefinedProbability"), "{stderr}");

    let output = run(&["count", "--parts", "{1,2", "--n", "3"]);
    assert_eq!(output.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&output.stderr).contains("Parse"));

    let output = run(&["asym", "--parts", "2N", "--m", "2"]);
    assert_eq!(output.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&output.stderr).contains("Periodic"));
}

#[test]
fn usage_errors_exit_two() {
    let output = run(&["count", "--parts", "{1,2}", "--n", "3", "--format", "csv"]);
    assert_eq!(output.status.code(), Some(2));

    let output = run(&["count", "--parts", "{1,2};N;N", "--tuple-size", "2", "--n", "3"]);
    assert_eq!(output.status.code(), Some(2));

    let output = run(&["count", "--no-such-flag"]);
    assert_eq!(output.status.code(), Some(2));

    let output = run(&["table", "--parts", "{1,2};N", "--n", "100"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn capacity_guard_applies() {
    let output = run(&["count", "--parts", "{1,2}", "--n", "60", "--n-max-cap", "50"]);
    assert_eq!(output.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&output.stderr).contains("CapacityExceeded"));
}
