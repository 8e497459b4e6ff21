use std::process::Command;

use blfilter::corpus;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_blfilter"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn path(name: &str) -> String {
    corpus::dir().join(name).display().to_string()
}

#[test]
fn validate_succeeds() {
    let (code, out, _) = run(&["validate", &path("l3_then_boolean.alg")]);
    assert_eq!(code, 0);
    assert!(out.contains("bl_valid = true\n"));
    assert!(out.contains("properties_pass = true\n"));
}

#[test]
fn invalid_algebra_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let broken = corpus::L3_THEN_BOOLEAN.replacen("0 0 a a", "0 0 b a", 1);
    let file = dir.path().join("broken.alg");
    std::fs::write(&file, broken).unwrap();
    let (code, out, _) = run(&["validate", file.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("bl_valid = false\n"));
    assert!(out.contains("axiom.adjoint = fail x=a y=a z=b\n"));
}

#[test]
fn profile_of_threshold_example() {
    let (code, out, _) = run(&[
        "profile",
        &path("l3_then_boolean.alg"),
        &path("thresholds_filter.fz"),
        "--kind",
        "plain",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("profile.plain = (0,1/5] (2/5,3/5] (4/5,1]\n"));
}

#[test]
fn missing_file_exits_two() {
    let (code, out, err) = run(&["filters", "/nonexistent/x.alg", "--kind", "plain"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.starts_with("error: /nonexistent/x.alg"));
}

#[test]
fn malformed_inputs_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.alg");
    std::fs::write(&file, "algebra x\nelements 0 1\n").unwrap();
    let f = file.to_str().unwrap();
    assert_eq!(run(&["validate", f]).0, 2);
    assert_eq!(
        run(&["verify", &path("diamond5.alg"), "--theorems", "bogus"]).0,
        2
    );
    assert_eq!(run(&["generate", "--size", "7"]).0, 2);
    assert_eq!(
        run(&[
            "classify",
            &path("diamond5.alg"),
            &path("overline_positive_implicative.fz"),
            "--thresholds",
            "3/5",
            "2/5"
        ])
        .0,
        2
    );
    assert_eq!(
        run(&[
            "classify",
            &path("lukasiewicz4.alg"),
            &path("overline_filter.fz")
        ])
        .0,
        2
    );
}

#[test]
fn classify_lists_every_verdict() {
    let (code, out, _) = run(&[
        "classify",
        &path("diamond5.alg"),
        &path("overline_positive_implicative.fz"),
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("overline.positive_implicative = true\n"));
    assert!(out.contains("ordinary.plain.witness = monotone x=a y=c\n"));
    let verdicts = out
        .lines()
        .filter(|l| l.ends_with(" = true") || l.ends_with(" = false"))
        .count();
    // bl_valid plus twelve verdicts
    assert_eq!(verdicts, 13);
}

#[test]
fn verify_selected_theorems() {
    let (code, out, _) = run(&[
        "verify",
        &path("lukasiewicz4.alg"),
        "--grid",
        "2",
        "--theorems",
        "overline_point_form,decomposition",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("fuzzy_sets = 81\n"));
    assert!(out.contains("overline_point_form.instances = 81\n"));
    assert!(out.contains("implicative_decomposition.pass = true\n"));
    assert!(!out.contains("level_form"));
    assert!(out.ends_with("verify_pass = true\n"));
}

#[test]
fn generate_lists_algebras() {
    let (code, out, _) = run(&["generate", "--size", "3"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("size = 3\ncount = 2\n"));
    assert_eq!(out.matches("\nalgebra bl3_").count(), 2);
}

#[test]
fn audit_reports_disagreements() {
    let (code, out, _) = run(&["audit", &path(""), "--summary"]);
    assert_eq!(code, 1);
    assert!(out.contains("examples = 8\n"));
    assert!(out.contains("oracle_mismatches = 0\n"));
    assert!(out.contains("disagreements = 4\n"));
    assert!(out.contains("overline_filter.agreement = true\n"));
    assert!(out.contains(
        "thresholds_implicative.thresholds(2/5,3/5).implicative.witness = monotone x=a y=b\n"
    ));
}

#[test]
fn reports_are_deterministic() {
    let args = [
        "classify",
        &path("l3_then_boolean.alg"),
        &path("thresholds_filter.fz"),
        "--summary",
    ];
    assert_eq!(run(&args), run(&args));
}
