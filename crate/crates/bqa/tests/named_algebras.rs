//! Integration checks on well-known algebras built from the shipped
//! corpus: consistency, classification, reordered bases, and the Weyl
//! structure, all exercised through the public API.

use std::path::PathBuf;

use bqa::classify::{classify3, CanonicalFamily, LieKind, ThreeQForm};
use bqa::consistency3::{is_consistent3, Bq3};
use bqa::field::{FieldKind, FieldValue};
use bqa::freealg::parse_expr;
use bqa::rewrite::{overlap_check, parse_presentation, reduce, reduce_in_order};
use bqa::structure::extract_structure;

fn load(name: &str) -> Bq3 {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("examples/presentations")
        .join(name);
    let text = std::fs::read_to_string(path).unwrap();
    Bq3::from_presentation(&parse_presentation(&text).unwrap()).unwrap()
}

#[test]
fn askey_wilson_is_consistent_for_generic_constants() {
    // w = 2: the cyclic shape makes the ten conditions hold automatically
    let aw = load("aw3.bqa");
    assert!(is_consistent3(&aw));
    assert!(overlap_check(&aw.to_presentation()).is_empty());
    // and with an extra non-cyclic entry the conditions genuinely fail
    let mut amat = aw.amat().clone();
    amat[1][2] = FieldValue::rational(1, 1); // gamma = 1
    let broken = Bq3::new(aw.qs().clone(), amat, aw.bvec().clone()).unwrap();
    assert!(!is_consistent3(&broken));
    assert!(!overlap_check(&broken.to_presentation()).is_empty());
}

#[test]
fn enveloping_sl2_detected_with_closure_flag() {
    let sl2 = load("usl2.bqa");
    let cls = classify3(&sl2).unwrap();
    match &cls.form.family {
        CanonicalFamily::LieType(form) => {
            assert_eq!(form.kind, LieKind::Usl2);
            assert_eq!(
                (form.dim_center, form.nilpotent, form.solvable),
                (1, false, false)
            );
        }
        other => panic!("wrong family {other:?}"),
    }
    // the rationals are not closed, so the tag carries the closure flag
    assert!(cls.form.closure_flag);
}

#[test]
fn reordered_bases_across_the_corpus() {
    let field = FieldKind::Rational;
    let exprs = ["x3*x2*x1", "x2*x1 - 2*x3", "x3^2*x1"];
    for name in [
        "quantum_space.bqa",
        "uqso3.bqa",
        "heisenberg.bqa",
        "twoq_unit.bqa",
        "threeq_c3.bqa",
    ] {
        let a = load(name);
        let p = a.to_presentation();
        for text in exprs {
            let f = parse_expr(text, 3, field).unwrap();
            let base = reduce(&f, &p);
            for sigma in [
                [1, 2, 3],
                [1, 3, 2],
                [2, 1, 3],
                [2, 3, 1],
                [3, 1, 2],
                [3, 2, 1],
            ] {
                let nf = reduce_in_order(&f, &p, &sigma).unwrap();
                assert_eq!(reduce(&nf, &p), base, "{name} {text} {sigma:?}");
            }
        }
    }
}

#[test]
fn uqso3_quantum_invariants() {
    let uq = load("uqso3.bqa");
    let cls = classify3(&uq).unwrap();
    let CanonicalFamily::ThreeQ(ThreeQForm::Quantum(qf)) = &cls.form.family else {
        panic!("expected the quantum family");
    };
    assert_eq!(qf.case, 1);
    assert_eq!(qf.q, FieldValue::rational(4, 1));
    assert!(!qf.q_inverted);
    let reps: Vec<String> = qf
        .classes
        .iter()
        .map(|c| c.representative.to_string())
        .collect();
    assert_eq!(reps, ["-1", "1"]);
    // the canonical presentation is consistent and in reduced shape
    assert!(is_consistent3(&cls.presentation));
    assert!(cls.presentation.c().is_one());
}

#[test]
fn corpus_structure_extraction() {
    for (name, covered) in [
        ("oneq_case1.bqa", true),
        ("oneq_case2.bqa", true),
        ("twoq_unit.bqa", true),
        ("twoq_nonunit.bqa", false),
        ("quantum_space.bqa", false),
        ("heisenberg.bqa", false),
    ] {
        let cls = classify3(&load(name)).unwrap();
        match extract_structure(&cls) {
            Ok(report) => {
                assert!(covered, "{name} unexpectedly covered");
                assert!(report.verified, "{name}: {:?}", report.checks);
            }
            Err(_) => assert!(!covered, "{name} should carry structure"),
        }
    }
}

#[test]
fn quantum_corpus_class_data() {
    // cube class of b3/(c b2^2) = 2 survives over the rationals
    let cls = classify3(&load("quantum_case3.bqa")).unwrap();
    let CanonicalFamily::ThreeQ(ThreeQForm::Quantum(qf)) = &cls.form.family else {
        panic!("expected quantum");
    };
    assert_eq!(qf.case, 3);
    assert_eq!(qf.classes[0].exponent, 3);
    assert_eq!(qf.classes[0].representative, FieldValue::rational(2, 1));

    // square class of b3/(b1 b2) = 3
    let cls = classify3(&load("quantum_case4.bqa")).unwrap();
    let CanonicalFamily::ThreeQ(ThreeQForm::Quantum(qf)) = &cls.form.family else {
        panic!("expected quantum");
    };
    assert_eq!(qf.case, 4);
    assert_eq!(qf.classes[0].representative, FieldValue::rational(3, 1));
}
