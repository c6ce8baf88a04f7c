//! The six Lie-type families (all q's equal to 1) and the exact
//! invariants separating them: dimension of the centre of the associated
//! 4-dimensional Lie algebra, nilpotency, and solvability.
//!
//! Run with: cargo run --example lie_type

use bqa::classify::{classify3, lie_classify, lie_model, LieKind};
use bqa::field::FieldKind;

fn main() {
    let field = FieldKind::Rational;
    println!(
        "{:<8} {:>10} {:>10} {:>9}",
        "family", "dim centre", "nilpotent", "solvable"
    );
    for kind in LieKind::all() {
        let model = lie_model(kind, field);
        let form = lie_classify(&model).unwrap();
        println!(
            "{:<8} {:>10} {:>10} {:>9}",
            form.kind.label(),
            form.dim_center,
            form.nilpotent,
            form.solvable
        );
        // the full classifier agrees with the direct invariant computation
        let cls = classify3(&model).unwrap();
        assert_eq!(cls.form.family.label(), format!("LieType.{}", kind.label()));
        // only the sl2 family needs an algebraically closed field for its
        // uniqueness statement
        assert_eq!(cls.form.closure_flag, matches!(kind, LieKind::Usl2));
    }

    println!();
    println!("relabeled inputs land on the same family:");
    // [x2,x1] = 5 x3 and [x3,x2] = -2: still the Weyl-tensor-polynomial type
    let p =
        bqa::rewrite::parse_presentation("n = 3\nfield = \"Q\"\nq = [1, 1, 1]\nc = 5\nb3 = -2\n")
            .unwrap();
    let a = bqa::consistency3::Bq3::from_presentation(&p).unwrap();
    let form = lie_classify(&a).unwrap();
    println!("  scaled Weyl-type input -> {}", form.kind.label());
    assert_eq!(form.kind, LieKind::UNMod);
}
