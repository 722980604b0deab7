//! CLI contract tests: exit codes, diagnostics and JSON round-trips.

use std::process::Command;

fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_symcode")).args(args).output().expect("spawn");
    (
        String::from_utf8(out.stdout).expect("utf8"),
        String::from_utf8(out.stderr).expect("utf8"),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn params_matches_known_values() {
    let (stdout, _, code) = run(&["params", "--q", "5", "--m", "2", "--set", "full"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "n=20 k=3 d=12\n");
    let (stdout, _, code) = run(&["params", "--q", "5", "--m", "3", "--set", "orbit"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "n=10 k=4 d=4\n");
}

#[test]
fn zeroes_reports_bounds_and_type() {
    let (stdout, _, code) = run(&["zeroes", "--q", "5", "--m", "2", "--coeffs", "3,0,1"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "count=4 bound4=8 bound5=5 type=II\n");
    // c(x1-1)(x2-1) = 1 - x1 - x2 + x1x2: coefficients (1, 4, 1), Type I
    let (stdout, _, code) = run(&["zeroes", "--q", "5", "--coeffs", "1,4,1", "--list"]);
    assert_eq!(code, 0);
    let mut lines = stdout.lines();
    assert_eq!(lines.next(), Some("count=8 bound4=8 bound5=8 type=I"));
    assert_eq!(lines.clone().count(), 8);
    assert!(lines.all(|l| l.split(' ').any(|c| c == "1")));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["params", "--q", "6", "--m", "2"][..],
        &["params", "--m", "2"][..],
        &["params", "--q", "5", "--m", "0"][..],
        &["zeroes", "--q", "5", "--m", "3", "--coeffs", "1,2"][..],
        &["zeroes", "--q", "5", "--coeffs", "1,2,3", "--subset", "0"][..],
        &["genmat", "--p", "2", "--e", "2", "--modulus", "1,0,1", "--m", "1"][..],
        &["verify", "--q", "13"][..],
        &["nonsense"][..],
    ] {
        let (_, stderr, code) = run(args);
        assert_eq!(code, 2, "{args:?}: {stderr}");
        assert!(!stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn verify_passes_and_exits_0() {
    let (stdout, _, code) = run(&["verify", "--suite", "example"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("PASS q5-m3-generator-matrix"));
    assert!(stdout.lines().last().unwrap().starts_with("passed="));
    assert!(!stdout.contains("FAIL"));
}

#[test]
fn json_outputs_reparse() {
    for args in [
        &["params", "--q", "9", "--m", "2", "--format", "json"][..],
        &["genmat", "--q", "4", "--m", "2", "--set", "orbit", "--format", "json"][..],
        &["zeroes", "--q", "5", "--coeffs", "3,0,1", "--list", "--format", "json"][..],
        &["weight-dist", "--q", "5", "--m", "2", "--format", "json"][..],
        &["ghw", "--q", "5", "--m", "3", "--set", "orbit", "--witnesses", "--format", "json"][..],
        &["spectra", "--q", "5", "--m", "2", "--format", "json"][..],
        &["extend", "--q", "7", "--m", "2", "--s", "2", "--format", "json"][..],
        &["verify", "--suite", "example", "--json"][..],
    ] {
        let (stdout, _, code) = run(args);
        assert_eq!(code, 0, "{args:?}");
        let v: serde_json::Value = serde_json::from_str(&stdout).expect("json reparse");
        assert!(v.is_object(), "{args:?}");
    }
}

#[test]
fn extension_field_header_names_modulus() {
    let (stdout, _, code) = run(&["genmat", "--q", "9", "--m", "2", "--set", "orbit"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("# q=9 m=2 set=orbit order=lex\n# modulus=1,0,1\n"));
    // an explicit modulus is honored
    let (stdout2, _, code) =
        run(&["genmat", "--p", "3", "--e", "2", "--modulus", "2,2,1", "--m", "2", "--set", "orbit"]);
    assert_eq!(code, 0);
    assert!(stdout2.contains("# modulus=2,2,1"));
    assert_ne!(stdout, stdout2);
}
