//! End-to-end tests spawning the real binary: known outputs, exit codes,
//! format round-trips, and the no-floats guarantee.

use std::process::{Command, Output};

use apsum::integrality::{integrality_threshold, verify_integrality_grid};
use apsum::report::reports_from_csv;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_apsum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn coeffs_matches_known_displays() {
    let out = stdout(&["coeffs", "--m", "2", "--r", "1", "--n", "3"]);
    assert_eq!(
        out.lines().collect::<Vec<_>>(),
        ["2*l^4 - l^2", "0 0 -1 0 2"]
    );

    let out = stdout(&["coeffs", "--m", "1", "--r", "0", "--n", "1"]);
    assert_eq!(out.lines().next().unwrap(), "1/2*l^2 - 1/2*l");
}

#[test]
fn invalid_parameters_are_usage_errors() {
    for args in [
        &["coeffs", "--m", "0", "--r", "3", "--n", "2"][..],
        &["coeffs", "--m", "2", "--r", "1", "--n", "0"],
        &["coeffs", "--m", "2", "--r", "1", "--n", "3", "--bogus"],
        &["verify", "--max-m", "0", "--max-r", "1", "--max-n", "1"],
        &["fvalue", "--n", "0"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "args: {args:?}");
    }
}

#[test]
fn ftable_matches_known_values() {
    assert_eq!(stdout(&["ftable", "--max-n", "1"]), "1, 2\n");

    let out = stdout(&["ftable", "--max-n", "20"]);
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines.len(), 20);
    assert_eq!(lines[15], "16, 510");
    assert_eq!(lines[19], "20, 2310");
}

#[test]
fn ftable_csv_round_trips_against_library() {
    let out = stdout(&["ftable", "--max-n", "20", "--format", "csv"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("n,F"));
    for (expected_n, line) in (1..=20u32).zip(lines) {
        let (n, f) = line.split_once(',').unwrap();
        assert_eq!(n, expected_n.to_string());
        assert_eq!(f, integrality_threshold(expected_n).to_string());
    }
}

#[test]
fn scalar_and_row_commands_render_exactly() {
    assert_eq!(stdout(&["fvalue", "--n", "13"]), "210\n");
    assert_eq!(stdout(&["bernoulli", "--n", "12"]), "-691/2730\n");
    assert_eq!(
        stdout(&["whitney", "--m", "2", "--r", "5", "--n", "2"]),
        "25 12 1\n"
    );
    assert_eq!(
        stdout(&["stirling", "--kind", "first", "--n", "4"]),
        "0 -6 11 -6 1\n"
    );
    assert_eq!(
        stdout(&["stirling", "--kind", "2", "--n", "4"]),
        "0 1 7 6 1\n"
    );
}

#[test]
fn verify_agrees_and_streams_reports() {
    let out = run(&["verify", "--max-m", "6", "--max-r", "6", "--max-n", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text
        .lines()
        .any(|line| line.starts_with("m=2 r=3 n=3") && line.contains("is_integral=true")));
}

#[test]
fn verify_unit_step_is_never_integral() {
    let out = run(&["verify", "--max-m", "1", "--max-r", "1", "--max-n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().all(|line| line.contains("is_integral=false")));
}

#[test]
fn verify_csv_round_trips_against_library() {
    let out = stdout(&[
        "verify", "--max-m", "3", "--max-r", "3", "--max-n", "3", "--format", "csv",
    ]);
    assert_eq!(
        reports_from_csv(&out).unwrap(),
        verify_integrality_grid(3, 3, 3, true)
    );
}

#[test]
fn verify_can_include_non_coprime_points() {
    let out = stdout(&[
        "verify",
        "--max-m",
        "2",
        "--max-r",
        "2",
        "--max-n",
        "1",
        "--coprime-only",
        "false",
    ]);
    assert!(out.lines().any(|line| line.starts_with("m=2 r=2 n=1")));
}

#[test]
fn json_numerics_are_strings() {
    let out = stdout(&[
        "coeffs", "--m", "2", "--r", "5", "--n", "2", "--format", "json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    for field in ["m", "r", "n", "degree", "polynomial"] {
        assert!(value[field].is_string(), "{field}");
    }
    assert!(value["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .all(serde_json::Value::is_string));
}

#[test]
fn no_floating_point_in_any_output() {
    let commands: &[&[&str]] = &[
        &["coeffs", "--m", "1", "--r", "0", "--n", "7"],
        &[
            "coeffs", "--m", "3", "--r", "2", "--n", "5", "--format", "json",
        ],
        &[
            "coeffs", "--m", "3", "--r", "2", "--n", "5", "--format", "csv",
        ],
        &["bernoulli", "--n", "30"],
        &["ftable", "--max-n", "15", "--format", "json"],
        &[
            "verify", "--max-m", "4", "--max-r", "4", "--max-n", "6", "--format", "csv",
        ],
        &[
            "verify", "--max-m", "4", "--max-r", "4", "--max-n", "6", "--format", "json",
        ],
    ];
    for args in commands {
        assert!(
            !stdout(args).contains('.'),
            "float-like output from {args:?}"
        );
    }
}
