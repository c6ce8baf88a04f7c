//! Canonical forms of quantum presentations (q1 = q3 = q, q2 = q^{-1},
//! q != 1). After the shift reductions only c, beta, lambda and the
//! constants survive, and permutations act on the surviving slots while
//! possibly replacing q by its inverse. The classifier enumerates all six
//! permutation frames, keeps those whose zero pattern and constants match
//! one of the four published menus, torus-normalizes each, and picks a
//! deterministic best: largest q direction first, then the smallest
//! canonical parameter tuple. The result is a true canonical form: any two
//! equivalent inputs produce identical output.

use crate::consistency3::{is_consistent3, Bq3};
use crate::field::{nth_root, power_class, FieldValue, PowerClass};
use crate::transform::{apply, kill_ab, kill_alpha, MonomialAffineTransform};

use super::{ClassifyError, PERMS};

/// Canonical data of a quantum presentation: the quantum parameter (with a
/// note when an odd permutation inverted it), which of the four torus-orbit
/// cases applies, and the coset classes pinning the dense parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumForm {
    pub q: FieldValue,
    pub q_inverted: bool,
    pub case: u8,
    pub classes: Vec<PowerClass>,
}

fn is_quantum(a: &Bq3) -> bool {
    !a.q1().is_one() && a.q1() == a.q3() && a.q1().try_mul(a.q2()).unwrap().is_one()
}

struct Candidate {
    q: FieldValue,
    classes: Vec<PowerClass>,
    presentation: Bq3,
    transforms: Vec<MonomialAffineTransform>,
}

/// Classifies a consistent quantum presentation. Returns the canonical
/// form, the canonical presentation, and the transforms reaching it.
pub fn quantum_classify(
    a: &Bq3,
) -> Result<(QuantumForm, Bq3, Vec<MonomialAffineTransform>), ClassifyError> {
    if !is_quantum(a) {
        return Err(ClassifyError::NotQuantum);
    }
    if !is_consistent3(a) {
        return Err(ClassifyError::Inconsistent);
    }
    let field = a.field();
    let mut trace = Vec::new();
    let (reduced, g) = kill_ab(a).expect("quantum q1 != 1");
    if !g.is_identity() {
        trace.push(g);
    }
    let (reduced, g) = kill_alpha(&reduced).expect("quantum q2 != 1");
    if !g.is_identity() {
        trace.push(g);
    }
    assert_reduced(&reduced);

    let nonzeros = [reduced.c(), reduced.beta(), reduced.lambda()]
        .iter()
        .filter(|v| !v.is_zero())
        .count();
    let case: u8 = match nonzeros {
        3 => 1,
        2 => 2,
        1 => 3,
        _ => 4,
    };

    let mut candidates: Vec<Candidate> = Vec::new();
    for &perm in &PERMS {
        let g = MonomialAffineTransform::permutation(field, perm).unwrap();
        let framed = apply(&reduced, &g);
        assert_reduced(&framed);
        let pattern: [bool; 3] = [
            !framed.c().is_zero(),
            !framed.beta().is_zero(),
            !framed.lambda().is_zero(),
        ];
        let pattern_ok = match case {
            1 => pattern == [true, true, true],
            2 => pattern == [true, true, false],
            3 => pattern == [true, false, false],
            _ => pattern == [false, false, false],
        };
        if !pattern_ok {
            continue;
        }
        // strata constraints on the constants
        let menu_ok = match case {
            3 => !(framed.b2().is_zero() && !framed.b3().is_zero()),
            4 => {
                let supp = [
                    !framed.b1().is_zero(),
                    !framed.b2().is_zero(),
                    !framed.b3().is_zero(),
                ];
                supp[0] as u8 >= supp[1] as u8 && supp[1] as u8 >= supp[2] as u8
            }
            _ => true,
        };
        if !menu_ok {
            continue;
        }
        let (normalized, classes, scaling) = normalize_case(case, &framed)?;
        let mut transforms = Vec::new();
        if !g.is_identity() {
            transforms.push(g);
        }
        if !scaling.is_identity() {
            transforms.push(scaling);
        }
        candidates.push(Candidate {
            q: framed.q1().clone(),
            classes,
            presentation: normalized,
            transforms,
        });
    }
    assert!(!candidates.is_empty(), "every pattern has a valid frame");

    // largest q first, then the smallest canonical tuple
    let tuple = |p: &Bq3| -> [FieldValue; 6] {
        [
            p.c().clone(),
            p.beta().clone(),
            p.lambda().clone(),
            p.b1().clone(),
            p.b2().clone(),
            p.b3().clone(),
        ]
    };
    candidates.sort_by(|x, y| {
        y.q.order_cmp(&x.q).then_with(|| {
            let tx = tuple(&x.presentation);
            let ty = tuple(&y.presentation);
            tx.iter()
                .zip(ty.iter())
                .map(|(a, b)| a.order_cmp(b))
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
        })
    });
    let best = candidates.into_iter().next().unwrap();

    let q_inverted = &best.q != a.q1();
    trace.extend(best.transforms);
    Ok((
        QuantumForm {
            q: best.q,
            q_inverted,
            case,
            classes: best.classes,
        },
        best.presentation,
        trace,
    ))
}

fn assert_reduced(a: &Bq3) {
    for (name, v) in [
        ("a", a.a()),
        ("b", a.b()),
        ("alpha", a.alpha()),
        ("gamma", a.gamma()),
        ("mu", a.mu()),
        ("nu", a.nu()),
    ] {
        assert!(v.is_zero(), "{name} must vanish in reduced quantum form");
    }
}

/// Torus-normalizes one frame into its menu entry.
fn normalize_case(
    case: u8,
    a: &Bq3,
) -> Result<(Bq3, Vec<PowerClass>, MonomialAffineTransform), ClassifyError> {
    let field = a.field();
    let one = field.one();
    let (c, beta, lambda) = (a.c().clone(), a.beta().clone(), a.lambda().clone());
    let (b1, b2, b3) = (a.b1().clone(), a.b2().clone(), a.b3().clone());

    let sqrt = |v: &FieldValue| -> Result<FieldValue, ClassifyError> {
        Ok(nth_root(v, 2)?.expect("square root exists inside the class"))
    };

    let (scale, classes): ([FieldValue; 3], Vec<PowerClass>) = match case {
        1 => {
            let cb = c.try_mul(&beta).unwrap();
            let cl = c.try_mul(&lambda).unwrap();
            let rho = power_class(&cb, 2)?;
            let eta = power_class(&cl, 2)?;
            let l1 = sqrt(&cb.try_div(&rho.representative).unwrap())?;
            let l2 = sqrt(&cl.try_div(&eta.representative).unwrap())?;
            let l3 = l1.try_mul(&l2).unwrap().try_div(&c).unwrap();
            ([l1, l2, l3], vec![rho, eta])
        }
        2 => {
            if !b3.is_zero() {
                // invariant beta / (c b3^2) up to fourth powers
                let inv = beta
                    .try_div(&c.try_mul(&b3.try_mul(&b3).unwrap()).unwrap())
                    .unwrap();
                let rho = power_class(&inv, 4)?;
                let l2 = nth_root(&rho.representative.try_div(&inv).unwrap(), 4)?
                    .expect("fourth root exists inside the class");
                let l3 = b3.try_div(&l2).unwrap();
                let l1 = c
                    .try_mul(&b3)
                    .unwrap()
                    .try_div(&l2.try_mul(&l2).unwrap())
                    .unwrap();
                ([l1, l2, l3], vec![rho])
            } else {
                let cb = c.try_mul(&beta).unwrap();
                let rho = power_class(&cb, 2)?;
                let l1 = sqrt(&cb.try_div(&rho.representative).unwrap())?;
                let l3 = l1.try_div(&c).unwrap();
                ([l1, one.clone(), l3], vec![rho])
            }
        }
        3 => match (!b2.is_zero(), !b3.is_zero()) {
            (true, true) => {
                // invariant b3 / (c b2^2) up to cubes
                let inv = b3
                    .try_div(&c.try_mul(&b2.try_mul(&b2).unwrap()).unwrap())
                    .unwrap();
                let rho = power_class(&inv, 3)?;
                let l1 = nth_root(&rho.representative.try_div(&inv).unwrap(), 3)?
                    .expect("cube root exists inside the class");
                let l3 = b2.try_div(&l1).unwrap();
                let l2 = c
                    .try_mul(&b2)
                    .unwrap()
                    .try_div(&l1.try_mul(&l1).unwrap())
                    .unwrap();
                ([l1, l2, l3], vec![rho])
            }
            (true, false) => {
                let l2 = c.try_mul(&b2).unwrap();
                ([one.clone(), l2, b2.clone()], Vec::new())
            }
            (false, false) => ([one.clone(), one.clone(), c.inv().unwrap()], Vec::new()),
            (false, true) => unreachable!("filtered out by the menu constraint"),
        },
        _ => {
            let supp = (!b1.is_zero(), !b2.is_zero(), !b3.is_zero());
            match supp {
                (true, true, true) => {
                    // invariant b3 / (b1 b2) up to squares
                    let inv = b3.try_div(&b1.try_mul(&b2).unwrap()).unwrap();
                    let rho = power_class(&inv, 2)?;
                    let l1 = sqrt(&rho.representative.try_div(&inv).unwrap())?;
                    let l2 = b1.try_div(&l1).unwrap();
                    let l3 = b2.try_div(&l1).unwrap();
                    ([l1, l2, l3], vec![rho])
                }
                (true, true, false) => ([one.clone(), b1.clone(), b2.clone()], Vec::new()),
                (true, false, false) => ([one.clone(), b1.clone(), one.clone()], Vec::new()),
                (false, false, false) => {
                    return Ok((
                        a.clone(),
                        Vec::new(),
                        MonomialAffineTransform::identity(field),
                    ))
                }
                _ => unreachable!("filtered out by the menu constraint"),
            }
        }
    };

    let g = MonomialAffineTransform::scaling(scale).unwrap();
    let out = apply(a, &g);
    assert_menu_entry(case, &out, &classes);
    Ok((out, classes, g))
}

fn assert_menu_entry(case: u8, a: &Bq3, classes: &[PowerClass]) {
    let expect = |cond: bool| assert!(cond, "canonical form missed its menu entry");
    match case {
        1 => {
            expect(a.c().is_one());
            expect(a.beta() == &classes[0].representative);
            expect(a.lambda() == &classes[1].representative);
        }
        2 => {
            expect(a.c().is_one());
            expect(a.lambda().is_zero());
            expect(a.beta() == &classes[0].representative);
            expect(a.b3().is_zero() || a.b3().is_one());
        }
        3 => {
            expect(a.c().is_one());
            expect(a.beta().is_zero() && a.lambda().is_zero());
            if let Some(c0) = classes.first() {
                expect(a.b2().is_one());
                expect(a.b3() == &c0.representative);
            } else {
                expect(a.b2().is_zero() || a.b2().is_one());
                expect(a.b3().is_zero());
            }
        }
        _ => {
            expect(a.c().is_zero() && a.beta().is_zero() && a.lambda().is_zero());
            if let Some(c0) = classes.first() {
                expect(a.b1().is_one() && a.b2().is_one());
                expect(a.b3() == &c0.representative);
            } else {
                let supp = [!a.b1().is_zero(), !a.b2().is_zero(), !a.b3().is_zero()];
                expect(matches!(
                    supp,
                    [true, true, false] | [true, false, false] | [false, false, false]
                ));
                for v in [a.b1(), a.b2(), a.b3()] {
                    expect(v.is_zero() || v.is_one());
                }
            }
        }
    }
}
