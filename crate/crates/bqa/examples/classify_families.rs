//! Classifying the shipped presentation corpus: every consistent
//! 3-generator presentation lands in one of the canonical families, with
//! a transform trace that reproduces the canonical presentation.
//!
//! Run with: cargo run --example classify_families

use bqa::classify::classify3;
use bqa::consistency3::Bq3;
use bqa::rewrite::parse_presentation;
use bqa::transform::apply;

fn main() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/presentations");
    let mut files: Vec<_> = std::fs::read_dir(dir)
        .expect("presentation corpus present")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "bqa"))
        .collect();
    files.sort();

    for path in files {
        let name = path.file_name().unwrap().to_string_lossy().into_owned();
        let text = std::fs::read_to_string(&path).unwrap();
        let p = parse_presentation(&text).unwrap();
        if p.n() != 3 {
            continue;
        }
        let a = Bq3::from_presentation(&p).unwrap();
        match classify3(&a) {
            Ok(cls) => {
                println!("{name:<22} {}", cls.form.family.label());
                println!("    signature: {}", cls.invariant_signature());
                println!(
                    "    transforms: {}",
                    if cls.transforms.is_empty() {
                        "none (already canonical)".to_string()
                    } else {
                        cls.transforms
                            .iter()
                            .map(|g| format!("[{g}]"))
                            .collect::<Vec<_>>()
                            .join(" then ")
                    }
                );
                // replaying the trace lands exactly on the canonical presentation
                let mut replay = a.clone();
                for g in &cls.transforms {
                    replay = apply(&replay, g);
                }
                assert_eq!(replay, cls.presentation);
            }
            Err(e) => println!("{name:<22} not classified: {e}"),
        }
        println!();
    }
}
