//! End-to-end runs of the `spbw` binary: exit codes, output formats, and
//! the definition-file surface.

use std::process::Command;

fn spbw(args: &[&str]) -> (i32, String, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_spbw"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        output.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&output.stdout).into_owned(),
        String::from_utf8_lossy(&output.stderr).into_owned(),
    )
}

#[test]
fn eval_prints_normal_forms_with_exit_zero() {
    let (code, stdout, _) = spbw(&["catalog", "quantum-plane-z3", "eval", "x2*x1"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "2*x1*x2");

    let (code, stdout, _) = spbw(&["catalog", "diff-poly-z5", "eval", "x1*t"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "t*x1 + 1");

    let (code, stdout, _) = spbw(&["catalog", "weyl-z5", "eval", "x1^0"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "1");
}

#[test]
fn check_exit_codes_follow_the_verdict() {
    // Holds -> 0.
    let (code, _, _) = spbw(&["catalog", "z2-trivial", "check", "weak-skew-armendariz"]);
    assert_eq!(code, 0);
    // FailsWithWitness -> 1.
    let (code, stdout, _) = spbw(&[
        "catalog",
        "z2xz2-swap",
        "check",
        "skew-armendariz",
        "--degree",
        "1",
    ]);
    assert_eq!(code, 1);
    assert!(stdout.contains("(0,1)"));
    // VerifiedUpTo -> 2.
    let (code, _, _) = spbw(&["catalog", "z2-trivial", "check", "skew-armendariz"]);
    assert_eq!(code, 2);
}

#[test]
fn usage_definition_and_cap_errors_have_dedicated_codes() {
    let (code, _, stderr) = spbw(&["catalog", "z2-trivial", "check", "no-such-property"]);
    assert_eq!(code, 64, "{stderr}");

    let dir = std::env::temp_dir().join("spbw-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{\"ring\": {\"kind\": \"modular\"}}").unwrap();
    let (code, _, _) = spbw(&["validate", bad.to_str().unwrap()]);
    assert_eq!(code, 65);

    let corrupt = dir.join("corrupt.json");
    std::fs::write(
        &corrupt,
        r#"{
            "ring": {"kind": "finite-table", "size": 2,
                     "add": [[0,1],[1,1]], "mul": [[0,0],[0,1]],
                     "neg": [0,1], "zero": 0, "one": 1},
            "extension": {"n": 1, "vars": [{"sigma": {"name": "identity"}}]}
        }"#,
    )
    .unwrap();
    let (code, _, stderr) = spbw(&["validate", corrupt.to_str().unwrap()]);
    assert_eq!(code, 65);
    assert!(stderr.contains("axiom"), "{stderr}");

    // 5^12 pairs exceed the default cap at degree 2.
    let (code, _, _) = spbw(&[
        "catalog",
        "weyl-z5",
        "check",
        "sd-armendariz",
        "--degree",
        "2",
    ]);
    assert_eq!(code, 70);
}

#[test]
fn cap_flags_tighten_the_search_budgets() {
    let (code, _, stderr) = spbw(&[
        "catalog",
        "z2xz2-swap",
        "check",
        "skew-armendariz",
        "--cap-multiplications",
        "10",
    ]);
    assert_eq!(code, 70, "{stderr}");
    assert!(stderr.contains("exceeds cap"), "{stderr}");

    let (code, _, stderr) = spbw(&["catalog", "ut2z2-trivial", "validate", "--cap-ring-size", "4"]);
    assert_eq!(code, 64, "{stderr}");
    assert!(stderr.contains("exceeds cap"), "{stderr}");
}

#[test]
fn witness_command_prints_replayable_witnesses() {
    let (code, stdout, _) = spbw(&["catalog", "z2poly-eval0", "witness", "sigma-rigid"]);
    assert_eq!(code, 1);
    assert!(stdout.contains("r=t"), "{stdout}");
    assert!(stdout.contains("replays: true"), "{stdout}");

    let (code, stdout, _) = spbw(&["catalog", "z2-trivial", "witness", "sigma-rigid"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("none"), "{stdout}");
}

#[test]
fn machine_format_is_reparseable_json() {
    for args in [
        vec!["catalog", "z4-trivial", "check", "baer", "--format", "json-like-tree"],
        vec![
            "catalog",
            "z2xz2-swap",
            "verify",
            "rigid-equivalence",
            "--format",
            "json-like-tree",
            "--degree",
            "2",
        ],
        vec!["catalog", "z2-trivial", "report", "--format", "json-like-tree"],
    ] {
        let (_, stdout, stderr) = spbw(&args);
        let parsed: serde_json::Value = serde_json::from_str(&stdout)
            .unwrap_or_else(|e| panic!("{args:?}: not JSON ({e}):\n{stdout}\n{stderr}"));
        assert!(parsed.is_object());
    }
}

#[test]
fn machine_reports_are_byte_identical_across_processes() {
    let args = [
        "catalog",
        "z2xz2-swap",
        "report",
        "--format",
        "json-like-tree",
    ];
    let (code1, out1, _) = spbw(&args);
    let (code2, out2, _) = spbw(&args);
    assert_eq!(code1, code2);
    assert_eq!(out1, out2, "report bytes drift across processes");

    // And across thread counts, via rayon's environment knob.
    let single = Command::new(env!("CARGO_BIN_EXE_spbw"))
        .args(args)
        .env("RAYON_NUM_THREADS", "1")
        .output()
        .expect("binary runs");
    assert_eq!(String::from_utf8_lossy(&single.stdout), out1);
}

#[test]
fn verify_and_report_exit_codes() {
    let (code, _, _) = spbw(&[
        "catalog",
        "z2xz2-swap",
        "verify",
        "rigid-equivalence",
        "--degree",
        "2",
    ]);
    assert_eq!(code, 0);
    // Hypotheses not met maps to the bounded/inconclusive exit.
    let (code, _, _) = spbw(&["catalog", "ut2z2-trivial", "verify", "delta-annihilation"]);
    assert_eq!(code, 2);
    let (code, _, _) = spbw(&["catalog", "z6-trivial", "report"]);
    assert_eq!(code, 0);
}

#[test]
fn expected_tables_render_for_every_entry() {
    for name in ["z4-trivial", "ut2z2-trivial", "weyl-z5"] {
        let (code, stdout, _) = spbw(&["catalog", name, "expected"]);
        assert_eq!(code, 0);
        assert!(stdout.contains("provenance"));
    }
}

#[test]
fn exported_documents_are_usable_definition_files() {
    let dir = std::env::temp_dir().join("spbw-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("weyl.json");
    let (code, stdout, _) = spbw(&["catalog", "weyl-z5", "export"]);
    assert_eq!(code, 0);
    std::fs::write(&path, &stdout).unwrap();
    let (code, out, _) = spbw(&["eval", path.to_str().unwrap(), "x2*x1"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "x1*x2 + 1");
}
