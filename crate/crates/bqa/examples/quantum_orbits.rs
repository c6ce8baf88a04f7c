//! The four torus actions on parameter triples and their complete orbit
//! invariants, including an exhaustive orbit census over GF(7).
//!
//! Run with: cargo run --example quantum_orbits

use std::collections::HashSet;

use bqa::classify::{orbit_invariant, orbit_representative, torus_action};
use bqa::field::{FieldKind, FieldValue};

fn main() {
    let q = |n: i64, d: i64| FieldValue::rational(n, d);

    println!("rational examples:");
    for (case, xi) in [
        (1u8, [q(1, 1), q(2, 1), q(3, 1)]),
        (2, [q(1, 1), q(8, 1), q(1, 1)]),
        (3, [q(1, 1), q(1, 1), q(16, 1)]),
        (4, [q(2, 1), q(1, 1), q(-6, 1)]),
        (1, [q(0, 1), q(4, 1), q(9, 1)]),
    ] {
        let inv = orbit_invariant(case, &xi).unwrap();
        let rep = orbit_representative(&inv);
        let classes: Vec<String> = inv.classes.iter().map(|c| c.to_string()).collect();
        println!(
            "  case {case}: xi = ({}, {}, {})  classes [{}]  representative ({}, {}, {})",
            xi[0],
            xi[1],
            xi[2],
            classes.join(", "),
            rep[0],
            rep[1],
            rep[2]
        );
        // the invariant is constant along the action
        let lambda = [q(2, 1), q(-3, 1), q(5, 7)];
        assert_eq!(
            orbit_invariant(case, &torus_action(case, &lambda, &xi)).unwrap(),
            inv
        );
    }

    // exhaustive census over GF(7): count orbits via distinct invariants
    println!();
    println!("orbit census over GF(7):");
    let f = FieldKind::Fp(7);
    for case in 1..=4u8 {
        let mut invariants = HashSet::new();
        let mut dense = HashSet::new();
        for a in 0..7i64 {
            for b in 0..7i64 {
                for c in 0..7i64 {
                    let xi = [f.integer(a), f.integer(b), f.integer(c)];
                    let inv = orbit_invariant(case, &xi).unwrap();
                    if xi.iter().all(|v| !v.is_zero()) {
                        dense.insert(inv.clone());
                    }
                    invariants.insert(inv);
                }
            }
        }
        println!(
            "  case {case}: {} orbits, {} of them dense",
            invariants.len(),
            dense.len()
        );
    }
}
