//! The five two-generator algebras: polynomial ring, Weyl algebra, the
//! enveloping algebra of the nonabelian 2-dimensional Lie algebra, quantum
//! plane and quantum Weyl algebra.
//!
//! Run with: cargo run --example two_generators

use bqa::classify::classify2;
use bqa::field::FieldValue;

fn main() {
    let q = |n: i64, d: i64| FieldValue::rational(n, d);
    // x2 x1 = q x1 x2 + a x1 + b x2 + c
    let cases = [
        ((1, 1), 0, 0, 0, "commutative polynomials"),
        ((1, 1), 0, 0, 5, "a nonzero central constant rescales to 1"),
        (
            (1, 1),
            1,
            3,
            0,
            "any nonzero linear part straightens to [x2,x1] = x1",
        ),
        ((3, 1), 0, 0, 0, "q = 3, no constant survives the shift"),
        (
            (3, 1),
            1,
            2,
            7,
            "q = 3, the reduced constant 7 + 2/(1-3) = 6 is nonzero",
        ),
        (
            (3, 1),
            1,
            2,
            1,
            "q = 3, crafted so the shifted constant cancels",
        ),
    ];
    for ((qn, qd), a, b, c, comment) in cases {
        let form = classify2(&q(qn, qd), &q(a, 1), &q(b, 1), &q(c, 1)).unwrap();
        println!(
            "q = {}, (a, b, c) = ({a}, {b}, {c})  ->  {:<20} {comment}",
            q(qn, qd),
            form.family.label()
        );
    }
}
