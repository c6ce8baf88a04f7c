//! Loading presentations from the text format the CLI uses, over the
//! rationals and over prime fields, including the n = 3 scalar aliases.
//!
//! Run with: cargo run --example presentation_files

use bqa::consistency3::{is_consistent3, Bq3};
use bqa::rewrite::{overlap_check, parse_presentation};

fn main() {
    // the general form: q, A, B as bracketed lists in pair order
    // (2,1), (3,1), (3,2)
    let general = r#"
        n = 3
        field = "fp:7"
        q = [2, 4, 2]
        A = [[0, 0, 0], [0, 3, 0], [0, 0, 0]]
        B = [0, 5, 0]
    "#;
    let p = parse_presentation(general).unwrap();
    println!(
        "general form over {}: consistent = {}",
        p.field(),
        overlap_check(&p).is_empty()
    );

    // the same presentation through the scalar aliases
    let aliased = "n = 3; field = \"fp:7\"; q1 = 2; q2 = 4; q3 = 2; beta = 3; b2 = 5";
    let p2 = parse_presentation(aliased).unwrap();
    assert_eq!(p, p2);
    println!("alias form parses to the identical presentation");

    // four generators work too; only the triple checks grow
    let four = r#"
        n = 4
        field = "Q"
        q = [2, 3, 5, 7, 11, 13]
    "#;
    let p4 = parse_presentation(four).unwrap();
    println!(
        "n = 4 quantum space: {} ambiguities, consistent = {}",
        4usize, // the triples (k,j,i) with i < j < k
        overlap_check(&p4).is_empty()
    );

    // errors carry line numbers
    let broken = "n = 3\nq = [1, 2]\n";
    match parse_presentation(broken) {
        Err(e) => println!("diagnostic: {e}"),
        Ok(_) => unreachable!(),
    }

    // the shipped corpus round-trips through Bq3
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/presentations");
    let mut count = 0;
    let mut consistent = 0;
    let mut entries: Vec<_> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "bqa"))
        .collect();
    entries.sort();
    for path in entries {
        let text = std::fs::read_to_string(&path).unwrap();
        let p = parse_presentation(&text).unwrap();
        count += 1;
        if p.n() == 3 {
            let a = Bq3::from_presentation(&p).unwrap();
            if is_consistent3(&a) {
                consistent += 1;
            }
        }
    }
    println!("corpus: {count} files, {consistent} consistent three-generator presentations");
}
