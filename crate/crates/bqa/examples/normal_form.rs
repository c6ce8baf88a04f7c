//! Rewriting free-algebra expressions to ordered normal form, including
//! normal forms with respect to reordered generator sequences.
//!
//! Run with: cargo run --example normal_form

use bqa::field::FieldKind;
use bqa::freealg::parse_expr;
use bqa::rewrite::{parse_presentation, reduce, reduce_in_order};

fn main() {
    // the Heisenberg relations: x2 x1 - x1 x2 = x3, x3 central
    let p = parse_presentation("n = 3\nfield = \"Q\"\nq = [1, 1, 1]\nc = 1\n").unwrap();
    let field = FieldKind::Rational;

    for text in ["x2*x1", "x3*x2*x1", "(x2*x1)^2", "x3*x1 - x1*x3 + 1/2"] {
        let f = parse_expr(text, 3, field).unwrap();
        println!("{text:<20} ->  {}", reduce(&f, &p));
    }

    println!();
    println!("reordered bases (x2 < x1 < x3):");
    for text in ["x1*x2", "x2*x1*x3"] {
        let f = parse_expr(text, 3, field).unwrap();
        let nf = reduce_in_order(&f, &p, &[2, 1, 3]).unwrap();
        println!("{text:<20} ->  {nf}");
        // reducing back in the identity order recovers the usual normal form
        assert_eq!(reduce(&nf, &p), reduce(&f, &p));
    }

    // a quantum plane: coefficients pile up q-powers
    let qp = parse_presentation("n = 2\nfield = \"Q\"\nq = [3]\n").unwrap();
    let f = parse_expr("x2^2*x1^2", 2, field).unwrap();
    println!();
    println!("quantum plane (q = 3): x2^2*x1^2 -> {}", reduce(&f, &qp));
}
