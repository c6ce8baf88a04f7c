//! Deciding PBW consistency two ways: the explicit ten-residue criterion
//! and the overlap-resolution oracle, on three showcase presentations.
//!
//! Run with: cargo run --example consistency_check

use bqa::consistency3::{is_consistent3, residues, Bq3};
use bqa::field::{FieldKind, FieldValue};
use bqa::rewrite::overlap_check;

fn show(name: &str, a: &Bq3) {
    println!("== {name}");
    let r = residues(a);
    for (label, value) in r.labeled() {
        if !value.is_zero() {
            println!("   residue {label} = {value}");
        }
    }
    println!("   residue criterion: consistent = {}", is_consistent3(a));
    let reports = overlap_check(&a.to_presentation());
    match reports.as_slice() {
        [] => println!("   overlap oracle:    both resolutions of x3 x2 x1 agree"),
        [r] => println!(
            "   overlap oracle:    resolutions differ by {}",
            r.difference
        ),
        _ => unreachable!("three generators have a single ambiguity"),
    }
    println!();
}

fn main() {
    let f = FieldKind::Rational;
    let q = |n: i64, d: i64| FieldValue::rational(n, d);
    let z = || f.zero();

    // x2 x1 = 2 x1 x2, x3 x1 = 3 x1 x3, x3 x2 = 5 x2 x3
    let quantum_space = Bq3::quantum_space(f, [q(2, 1), q(3, 1), q(5, 1)]).unwrap();
    show("quantum space", &quantum_space);

    // the cyclically symmetric algebra at q = 4:
    //   x2 x1 = 4 x1 x2 - 2 x3, x3 x1 = 1/4 x1 x3 + 1/2 x2,
    //   x3 x2 = 4 x2 x3 - 2 x1
    let uq_so3 = Bq3::new(
        [q(4, 1), q(1, 4), q(4, 1)],
        [
            [z(), z(), q(-2, 1)],
            [z(), q(1, 2), z()],
            [q(-2, 1), z(), z()],
        ],
        [z(), z(), z()],
    )
    .unwrap();
    show("cyclically symmetric algebra (q = 4)", &uq_so3);

    // a bracket table violating the Jacobi identity
    let jacobi_fail = Bq3::new(
        [q(1, 1), q(1, 1), q(1, 1)],
        [
            [z(), z(), z()],
            [q(1, 1), z(), z()],
            [q(1, 1), q(1, 1), q(1, 1)],
        ],
        [z(), z(), z()],
    )
    .unwrap();
    show("Jacobi failure", &jacobi_fail);
}
