//! End-to-end tests of the `lmr` binary: output formats, exit codes, config
//! handling, and the JSON round-trip guarantee.

use std::collections::BTreeSet;
use std::io::Write;
use std::process::{Command, Output};

fn lmr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lmr"))
        .args(args)
        .env_remove("LMR_CONFIG")
        .output()
        .expect("binary runs")
}

fn lmr_with_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lmr"))
        .args(args)
        .env_remove("LMR_CONFIG")
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn enumerate_m4_text_lists_the_census() {
    let output = lmr(&["enumerate", "--n", "4", "--set", "m"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("count=10"));
    let words: BTreeSet<&str> = lines.collect();
    let expected: BTreeSet<&str> = [
        "RRRM", "RRRL", "RRMM", "RRML", "RRLM", "RRLL", "RMMM", "RMML", "RMRL", "RMLM",
    ]
    .into_iter()
    .collect();
    assert_eq!(words, expected);
}

#[test]
fn enumerate_text_and_json_agree() {
    let text = stdout(&lmr(&["enumerate", "--n", "4", "--set", "m"]));
    let json_raw = stdout(&lmr(&["enumerate", "--n", "4", "--set", "m", "--json"]));
    let json: serde_json::Value = serde_json::from_str(&json_raw).unwrap();
    assert_eq!(json["count"], 10);
    let text_words: BTreeSet<String> = text.lines().skip(1).map(str::to_string).collect();
    let json_words: BTreeSet<String> = json["classes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["greatest"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(text_words, json_words);
}

#[test]
fn json_reports_round_trip_byte_identically() {
    for args in [
        vec!["enumerate", "--n", "4", "--set", "m"],
        vec!["enumerate", "--n", "3", "--set", "lexical", "--order", "c"],
        vec![
            "solve",
            "zw",
            "--m",
            "8",
            "--r",
            "2",
            "--expand",
            "--check-oracle",
        ],
        vec!["solve", "xy-yx", "--l", "3", "--m", "2", "--expand"],
        vec![
            "check",
            "RMLM",
            "--primitive",
            "--greatest",
            "--broken-alternating",
        ],
        vec!["psi", "--n", "4", "--mode", "collisions"],
        vec!["psi", "--n", "4", "--mode", "survey"],
        vec!["psi", "--n", "4", "--mode", "table"],
    ] {
        let mut full = args.clone();
        full.push("--json");
        let raw = stdout(&lmr(&full));
        let parsed: serde_json::Value = serde_json::from_str(&raw).unwrap();
        let mut rendered = serde_json::to_string_pretty(&parsed).unwrap();
        rendered.push('\n');
        assert_eq!(raw, rendered, "round trip for {args:?}");
    }
}

#[test]
fn check_exit_codes_reflect_verdicts() {
    let output = lmr(&["check", "RMLM", "--primitive", "--greatest"]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(stdout(&output), "primitive: true\ngreatest: true\n");

    let output = lmr(&["check", "MMMM", "--primitive"]);
    assert_eq!(exit_code(&output), 1);
    assert_eq!(stdout(&output), "primitive: false\n");
}

#[test]
fn exponent_shorthand_is_expanded_on_input() {
    let output = lmr(&[
        "check",
        "R2ML2MRMR2MR2MLM",
        "--lexical",
        "cbar",
        "--greatest",
    ]);
    assert_eq!(exit_code(&output), 0);
    // Verdicts print in the fixed order primitive, greatest, lexical,
    // broken-alternating regardless of flag order.
    assert_eq!(stdout(&output), "greatest: true\nlexical(cbar): true\n");

    // All output stays in plain expanded form.
    let output = lmr(&["check", "R3M", "--primitive", "--json"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(json["word"], "RRRM");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(exit_code(&lmr(&["enumerate", "--n", "0", "--set", "m"])), 2);
    assert_eq!(exit_code(&lmr(&["check", "RXL", "--primitive"])), 2);
    assert_eq!(exit_code(&lmr(&["check", "RML"])), 2);
    assert_eq!(exit_code(&lmr(&["solve", "zw", "--m", "4", "--r", "9"])), 2);
    assert_eq!(exit_code(&lmr(&["psi", "--n", "1", "--mode", "survey"])), 2);
    // Unknown flags are clap's domain; it also uses exit code 2.
    assert_eq!(exit_code(&lmr(&["enumerate", "--bogus"])), 2);
}

#[test]
fn resource_bounds_exit_three() {
    assert_eq!(
        exit_code(&lmr(&["enumerate", "--n", "99", "--set", "m"])),
        3
    );
    assert_eq!(
        exit_code(&lmr(&[
            "solve",
            "zw",
            "--m",
            "14",
            "--r",
            "7",
            "--check-oracle",
            "--max-n",
            "14",
            "--oracle-bound",
            "12"
        ])),
        3
    );
    // Survey needs the doubled length within bounds.
    assert_eq!(exit_code(&lmr(&["psi", "--n", "8", "--mode", "survey"])), 3);
}

#[test]
fn config_file_sets_bounds_and_flags_win() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(
        file,
        "# limits for tests\nmax_n = 5\noracle_bound = 4\nworkers = 2"
    )
    .unwrap();
    let path = file.path().to_str().unwrap();

    let output = lmr_with_env(&["enumerate", "--n", "6", "--set", "m"], "LMR_CONFIG", path);
    assert_eq!(exit_code(&output), 3);

    let output = lmr_with_env(
        &["enumerate", "--n", "6", "--set", "m", "--max-n", "6"],
        "LMR_CONFIG",
        path,
    );
    assert_eq!(exit_code(&output), 0);
}

#[test]
fn bad_config_is_a_usage_error() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "max_m = 5").unwrap();
    let path = file.path().to_str().unwrap();
    let output = lmr_with_env(&["enumerate", "--n", "2", "--set", "m"], "LMR_CONFIG", path);
    assert_eq!(exit_code(&output), 2);

    // oracle_bound above max_n violates the config invariant.
    let output = lmr(&[
        "enumerate",
        "--n",
        "2",
        "--set",
        "m",
        "--oracle-bound",
        "20",
    ]);
    assert_eq!(exit_code(&output), 2);
}

#[test]
fn solve_reports_oracle_match() {
    let output = lmr(&["solve", "zw", "--m", "6", "--r", "4", "--check-oracle"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    assert!(text.contains("kind=AllM"), "{text}");
    assert!(text.contains("solution Z=MM W=MMMM"), "{text}");
    assert!(text.contains("oracle=MATCH pairs=1"), "{text}");

    let output = lmr(&[
        "solve",
        "xy-yx",
        "--l",
        "3",
        "--m",
        "2",
        "--check-oracle",
        "--expand",
    ]);
    let text = stdout(&output);
    assert!(text.contains("oracle=MATCH pairs=3"), "{text}");
    assert!(text.contains("pair X=RLR Y=LR"), "{text}");
}

#[test]
fn lexical_enumeration_lists_both_length_one_words() {
    let output = lmr(&[
        "enumerate",
        "--n",
        "1",
        "--set",
        "lexical",
        "--order",
        "cbar",
    ]);
    assert_eq!(stdout(&output), "count=2\nR\nM\n");
}

#[test]
fn psi_table_shows_classes_and_images() {
    let output = lmr(&["psi", "--n", "4", "--mode", "table"]);
    let text = stdout(&output);
    assert!(text.starts_with("n=4 classes=10 images=7\n"), "{text}");
    assert!(text.contains("RRRM -> RRRMLLLM"), "{text}");
    assert_eq!(text.lines().count(), 11);
}

#[test]
fn psi_table_marks_images_outside_u() {
    // At n=6 one class doubles to a proper power; the table says so.
    let output = lmr(&["psi", "--n", "6", "--mode", "table"]);
    let text = stdout(&output);
    assert!(
        text.contains("RMLMRM -> RMLMRMLMRMLM  (outside U)"),
        "{text}"
    );
    let json_raw = stdout(&lmr(&["psi", "--n", "6", "--mode", "table", "--json"]));
    let json: serde_json::Value = serde_json::from_str(&json_raw).unwrap();
    let outside: Vec<&str> = json["rows"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| !r["in_u2n"].as_bool().unwrap())
        .map(|r| r["class"].as_str().unwrap())
        .collect();
    assert_eq!(outside, ["RMLMRM"]);
}

#[test]
fn out_flag_writes_the_same_report_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let on_stdout = stdout(&lmr(&["psi", "--n", "3", "--mode", "survey", "--json"]));
    let output = lmr(&[
        "psi",
        "--n",
        "3",
        "--mode",
        "survey",
        "--json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&output), 0);
    assert!(stdout(&output).is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), on_stdout);
}

#[test]
fn workers_flag_is_accepted() {
    let output = lmr(&["enumerate", "--n", "5", "--set", "m", "--workers", "2"]);
    assert_eq!(exit_code(&output), 0);
}
