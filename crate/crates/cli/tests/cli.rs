//! End-to-end tests of the qkc binary: exact output for the worked
//! examples, exit codes, JSON round trips, and determinism under --jobs.

use std::process::{Command, Output};

fn qkc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qkc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn qideal_matches_the_worked_example() {
    let out = qkc(&["qideal", "Gr(2,4)", "[2,1]"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "O[2,1] - O[2,2] - q*O[] + q*O[1]");
}

#[test]
fn dist_gr24() {
    let out = qkc(&["dist", "Gr(2,4)", "[1]", "[]"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn verify_e7_duality() {
    let out = qkc(&["verify", "E7", "duality"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        "E7 duality: 3136 pairs checked, 0 failures"
    );
}

#[test]
fn verify_jobs_is_deterministic() {
    let a = qkc(&[
        "verify",
        "LG(4)",
        "classical",
        "--jobs",
        "1",
        "--format",
        "json",
    ]);
    let b = qkc(&[
        "verify",
        "LG(4)",
        "classical",
        "--jobs",
        "5",
        "--format",
        "json",
    ]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn verify_json_is_ndjson() {
    let out = qkc(&["verify", "Gr(2,4)", "duality", "--format", "json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 37); // 36 pairs + summary
    for line in &lines {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v.get("check").is_some());
    }
    let summary: serde_json::Value = serde_json::from_str(lines[36]).unwrap();
    assert_eq!(summary["checked"], 36);
    assert_eq!(summary["failures"], 0);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["qideal", "Gr(2,4)"][..],
        &["qideal", "Gr(9,4)", "[1]"][..],
        &["dist", "Gr(2,4)", "[3]", "[]"][..],
        &["frobnicate"][..],
        &["verify", "Gr(2,4)", "nonsense"][..],
    ] {
        let out = qkc(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
    }
}

#[test]
fn dimension_bound_is_configurable() {
    // Gr(4,12) has dimension 32, over the default limit of 30.
    let out = qkc(&["poset", "Gr(4,12)"]);
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_qkc"))
        .args(["poset", "Gr(4,12)"])
        .env("QKC_MAX_DIM", "40")
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn pair_consumes_expression_files() {
    let dir = std::env::temp_dir().join(format!("qkc-pair-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("expr.json");

    let json = qkc(&["qideal", "Gr(2,4)", "[2,1]", "--format", "json"]);
    std::fs::write(&file, stdout(&json)).unwrap();
    let path = file.to_str().unwrap();

    // Dual basis: ((I_q^mu, O_mu)) = 1, off-diagonal zero, and the unit
    // class pairs to 1/(1-q).
    let out = qkc(&["pair", "Gr(2,4)", path, "[2,1]"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1");
    let out = qkc(&["pair", "Gr(2,4)", path, "[2,2]"]);
    assert_eq!(stdout(&out).trim(), "0");

    let unit = r#"{"basis":"opposite","terms":[{"shape":[],"q":0,"coeff":[{"w":[0,0,0],"c":1}]}]}"#;
    std::fs::write(&file, unit).unwrap();
    let out = qkc(&["pair", "Gr(2,4)", path, "[1]"]);
    assert_eq!(stdout(&out).trim(), "1/(1-q)");

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn detq_nonequivariant_restriction() {
    let out = qkc(&["detq", "2", "4", "[1]", "--nonequivariant"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        "O[2,2] + O[2,1] + O[2] + O[1,1] + O[1] + q*O[]"
    );
}

#[test]
fn oracle_products() {
    let out = qkc(&["oracle", "qh", "2", "4", "[1]", "[2,1]"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("1 * q*X[]"));
    assert!(text.contains("1 * X[2,2]"));
    let out = qkc(&["oracle", "check-dist", "2", "5"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("100 pairs checked, 0 failures"));
}

#[test]
fn poset_diagram_marks() {
    let out = qkc(&["poset", "Q(11)", "--format", "diagram"]);
    assert!(out.status.success());
    // Ten gray z1 boxes, one long undotted... the eleventh box is long and
    // drawn with the long-root dot.
    assert_eq!(stdout(&out).trim(), "##########.");
    let out = qkc(&["poset", "E6", "--format", "diagram"]);
    let art = stdout(&out);
    assert_eq!(art.matches('#').count(), 11);
    assert_eq!(art.matches('o').count(), 5);
}

#[test]
fn shapes_json_roundtrip_through_cli() {
    let out = qkc(&["shapes", "OG(5)", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 16);
}

#[test]
fn chev_quantum_runs() {
    // Neither (1) nor its short-rook-strip partner (2) contains z1, so the
    // quantum corrections cancel and the product stays classical.
    let out = qkc(&["chev", "LG(4)", "[1]", "--quantum"]);
    assert!(out.status.success());
    assert!(!stdout(&out).contains('q'));
    let out = qkc(&["chev", "LG(4)", "[4,2]", "--quantum"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains('q'));
}
