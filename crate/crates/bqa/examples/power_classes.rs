//! Exact field arithmetic and n-th power coset classes over the rationals
//! and over prime fields — the data behind the torus orbit invariants.
//!
//! Run with: cargo run --example power_classes

use bqa::field::{is_nth_power, nth_root, power_class, same_class, FieldKind, FieldValue};

fn main() {
    let q = |n: i64, d: i64| FieldValue::rational(n, d);

    println!("square-free parts over the rationals:");
    for v in [q(8, 1), q(-4, 1), q(1, 2), q(18, 25)] {
        let cls = power_class(&v, 2).unwrap();
        println!("  {v:<6} lies in {cls}");
    }
    assert!(same_class(&q(2, 1), &q(8, 1), 2).unwrap());
    assert!(!same_class(&q(2, 1), &q(3, 1), 2).unwrap());

    println!();
    println!("cube classes absorb signs (-1 is a cube):");
    for v in [q(-8, 1), q(16, 1), q(5, 1)] {
        println!("  {v:<6} lies in {}", power_class(&v, 3).unwrap());
    }

    println!();
    println!("GF(7): squares are {{1, 2, 4}}, nonresidues share one class:");
    let f = FieldKind::Fp(7);
    for x in 1..7 {
        let v = f.integer(x);
        println!(
            "  {x}: square = {:<5} class representative = {}",
            is_nth_power(&v, 2).unwrap(),
            power_class(&v, 2).unwrap().representative
        );
    }

    println!();
    println!("roots when they exist:");
    for (v, n) in [(q(9, 4), 2), (q(-27, 1), 3), (q(16, 81), 4), (q(2, 1), 2)] {
        match nth_root(&v, n).unwrap() {
            Some(root) => println!("  {v}^(1/{n}) = {root}"),
            None => println!("  {v} has no rational {n}-th root"),
        }
    }
    let g = FieldKind::Fp(11);
    let every_cube = (1..11).all(|x| nth_root(&g.integer(x), 3).unwrap().is_some());
    println!("  every unit of GF(11) is a cube: {every_cube}");
}
