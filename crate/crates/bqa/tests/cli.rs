//! End-to-end tests of the `bqa` binary: exit codes, JSON shape and
//! determinism, and the shipped presentation corpus.

use std::path::PathBuf;
use std::process::{Command, Output};

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("examples/presentations")
        .join(name)
}

fn bqa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bqa"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is valid JSON")
}

#[test]
fn check_consistent_corpus_exits_zero() {
    let file = corpus("quantum_space.bqa");
    let out = bqa(&["check", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["consistent"], true);
    let residues = v["residues"].as_object().unwrap();
    assert_eq!(residues.len(), 10);
    assert!(residues.values().all(|r| r == "0"));
}

#[test]
fn check_inconsistent_exits_one_with_residues() {
    let file = corpus("jacobi_fail.bqa");
    let out = bqa(&["check", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["consistent"], false);
    assert_eq!(v["residues"]["X1"], "-1");
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.bqa");
    std::fs::write(&path, "n = 3\nq = [oops]\n").unwrap();
    let out = bqa(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let v = stdout_json(&out);
    assert!(v["error"].as_str().unwrap().contains("line 2"));

    let out = bqa(&["check", "/nonexistent/file.bqa"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classify_uqso3_is_quantum_case_1() {
    let file = corpus("uqso3.bqa");
    let out = bqa(&["classify", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["family"], "ThreeQ.Quantum");
    assert_eq!(v["case"], 1);
    assert_eq!(v["params"]["q"], "4");
    assert_eq!(v["params"]["classes"][0]["representative"], "-1");
    assert_eq!(v["params"]["classes"][1]["representative"], "1");
}

#[test]
fn classify_whole_corpus_families() {
    let expected = [
        ("quantum_space.bqa", "ThreeQ.C5"),
        ("uqso3.bqa", "ThreeQ.Quantum"),
        ("aw3.bqa", "ThreeQ.Quantum"),
        ("usl2.bqa", "LieType.Usl2"),
        ("heisenberg.bqa", "LieType.UH3"),
        ("lie_p3.bqa", "LieType.P3"),
        ("lie_un_mod.bqa", "LieType.UN_mod"),
        ("lie_un2xkz.bqa", "LieType.Un2xKz"),
        ("lie_um_mod.bqa", "LieType.UM_mod"),
        ("oneq_case1.bqa", "OneQ.MuAlphaNonzero"),
        ("oneq_case2.bqa", "OneQ.MuAlphaZero"),
        ("twoq_nonunit.bqa", "TwoQ.Q1Q2NonUnit"),
        ("twoq_unit.bqa", "TwoQ.Q1Q2Unit"),
        ("threeq_c2.bqa", "ThreeQ.C2"),
        ("threeq_c3.bqa", "ThreeQ.C3"),
        ("threeq_c4.bqa", "ThreeQ.C4"),
        ("threeq_c5.bqa", "ThreeQ.C5"),
        ("quantum_case2.bqa", "ThreeQ.Quantum"),
        ("quantum_case3.bqa", "ThreeQ.Quantum"),
        ("quantum_case4.bqa", "ThreeQ.Quantum"),
    ];
    for (name, family) in expected {
        let file = corpus(name);
        let out = bqa(&["classify", file.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        let v = stdout_json(&out);
        assert_eq!(v["family"], family, "{name}");
    }
}

#[test]
fn quantum_corpus_cases() {
    for (name, case) in [
        ("quantum_case2.bqa", 2),
        ("quantum_case3.bqa", 3),
        ("quantum_case4.bqa", 4),
    ] {
        let out = bqa(&["classify", corpus(name).to_str().unwrap()]);
        let v = stdout_json(&out);
        assert_eq!(v["case"], case, "{name}");
    }
}

#[test]
fn reduce_command_round_trips() {
    let file = corpus("heisenberg.bqa");
    let out = bqa(&["reduce", file.to_str().unwrap(), "--expr", "x3*x2*x1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["normal_form"], "x1*x2*x3 + x3^2");

    let out = bqa(&[
        "reduce",
        file.to_str().unwrap(),
        "--expr",
        "x1*x2",
        "--order",
        "213",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["normal_form"], "x2*x1 - x3");
}

#[test]
fn structure_command_verifies() {
    let file = corpus("twoq_unit.bqa");
    let out = bqa(&["structure", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["verified"], true);
    assert_eq!(v["gwa"]["classical"], true);

    // uncovered family answers with a domain verdict
    let file = corpus("threeq_c5.bqa");
    let out = bqa(&["structure", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["covered"], false);
}

#[test]
fn orbit_command_over_prime_field() {
    let out = bqa(&["orbit", "--case", "1", "--xi", "1,3,5", "--field", "fp:7"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    // 3 and 5 are nonresidues mod 7: both products land in the class of 3
    assert_eq!(v["classes"][0]["representative"], "3");
    assert_eq!(v["classes"][1]["representative"], "3");
}

#[test]
fn apply_command_matches_swap_example() {
    let file = corpus("quantum_space.bqa");
    let out = bqa(&["apply", file.to_str().unwrap(), "--perm", "213"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["result"]["q"][0], "1/2");
    assert_eq!(v["consistent"], true);
}

#[test]
fn selftest_small_run_passes() {
    let out = bqa(&["selftest", "--trials", "200", "--seed", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["pass"], true);
    assert_eq!(v["suites"].as_array().unwrap().len(), 8);

    // the restricted mode runs the finite-field suites only
    let out = bqa(&[
        "selftest", "--trials", "200", "--seed", "5", "--field", "fp:7",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["suites"].as_array().unwrap().len(), 5);
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    let file = corpus("aw3.bqa");
    let a = bqa(&["classify", file.to_str().unwrap()]);
    let b = bqa(&["classify", file.to_str().unwrap()]);
    assert_eq!(a.stdout, b.stdout);
    // exact values are strings, never floats
    let v = stdout_json(&a);
    assert!(v["params"]["q"].is_string());
}
