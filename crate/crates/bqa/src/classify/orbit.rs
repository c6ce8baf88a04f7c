//! The four weighted actions of the 3-torus on K^3 that govern the quantum
//! parameter triples, and a complete invariant for their orbits: the
//! support pattern together with at most two power-coset classes.

use crate::field::{power_class, FieldKind, FieldValue, PowerClass};

use super::ClassifyError;

/// Applies the case-k torus action of lambda to xi.
///
/// The coordinate weights are, per case:
/// 1: (l3/(l1 l2), l2/(l1 l3), l1/(l2 l3))
/// 2: (l3/(l1 l2), l2/(l1 l3), 1/(l2 l3))
/// 3: (l3/(l1 l2), 1/(l1 l3),  1/(l2 l3))
/// 4: (1/(l1 l2),  1/(l1 l3),  1/(l2 l3))
pub fn torus_action(case: u8, lambda: &[FieldValue; 3], xi: &[FieldValue; 3]) -> [FieldValue; 3] {
    assert!((1..=4).contains(&case), "case must be 1..=4");
    let (l1, l2, l3) = (&lambda[0], &lambda[1], &lambda[2]);
    let one = l1.kind().one();
    let frac = |num: &FieldValue, d1: &FieldValue, d2: &FieldValue| {
        num.try_div(&d1.try_mul(d2).unwrap()).unwrap()
    };
    let weights = match case {
        1 => [frac(l3, l1, l2), frac(l2, l1, l3), frac(l1, l2, l3)],
        2 => [frac(l3, l1, l2), frac(l2, l1, l3), frac(&one, l2, l3)],
        3 => [frac(l3, l1, l2), frac(&one, l1, l3), frac(&one, l2, l3)],
        _ => [frac(&one, l1, l2), frac(&one, l1, l3), frac(&one, l2, l3)],
    };
    std::array::from_fn(|i| xi[i].try_mul(&weights[i]).unwrap())
}

/// A complete orbit invariant: two vectors lie on the same orbit of the
/// case-k action exactly when their invariants are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrbitInvariant {
    pub case: u8,
    pub field: FieldKind,
    pub supp: [bool; 3],
    pub classes: Vec<PowerClass>,
}

/// Computes the invariant of xi under the case-k action. On the dense part
/// it is the known coset (two square classes for case 1; a quartic, cubic
/// or square class for cases 2-4); on the singular strata the support
/// decides, refined by one square class where a stratum is not a single
/// orbit.
pub fn orbit_invariant(case: u8, xi: &[FieldValue; 3]) -> Result<OrbitInvariant, ClassifyError> {
    if !(1..=4).contains(&case) {
        return Err(ClassifyError::BadOrbitCase(case));
    }
    let field = xi[0].kind();
    let supp: [bool; 3] = std::array::from_fn(|i| !xi[i].is_zero());
    let zeros = supp.iter().filter(|s| !**s).count();
    let cls = |v: &FieldValue, n: u32| power_class(v, n).map_err(ClassifyError::from);
    let classes = if zeros >= 2 {
        Vec::new()
    } else if zeros == 1 {
        match case {
            1 => {
                // product of the two nonzero coordinates, up to squares
                let prod = (0..3)
                    .filter(|&i| supp[i])
                    .map(|i| xi[i].clone())
                    .reduce(|a, b| a.try_mul(&b).unwrap())
                    .unwrap();
                vec![cls(&prod, 2)?]
            }
            2 if !supp[2] => {
                vec![cls(&xi[0].try_mul(&xi[1]).unwrap(), 2)?]
            }
            _ => Vec::new(),
        }
    } else {
        match case {
            1 => vec![
                cls(&xi[0].try_mul(&xi[1]).unwrap(), 2)?,
                cls(&xi[0].try_mul(&xi[2]).unwrap(), 2)?,
            ],
            2 => {
                // xi2 / (xi1 xi3^2) up to fourth powers
                let denom = xi[0].try_mul(&xi[2].try_mul(&xi[2]).unwrap()).unwrap();
                vec![cls(&xi[1].try_div(&denom).unwrap(), 4)?]
            }
            3 => {
                // xi3 / (xi1 xi2^2) up to cubes
                let denom = xi[0].try_mul(&xi[1].try_mul(&xi[1]).unwrap()).unwrap();
                vec![cls(&xi[2].try_div(&denom).unwrap(), 3)?]
            }
            _ => {
                // xi3 / (xi1 xi2) up to squares
                let denom = xi[0].try_mul(&xi[1]).unwrap();
                vec![cls(&xi[2].try_div(&denom).unwrap(), 2)?]
            }
        }
    };
    Ok(OrbitInvariant {
        case,
        field,
        supp,
        classes,
    })
}

/// The canonical orbit representative carried by an invariant; each
/// singular stratum representative matches the published lists.
pub fn orbit_representative(inv: &OrbitInvariant) -> [FieldValue; 3] {
    let one = inv.field.one();
    let zero = inv.field.zero();
    let rep = |i: usize| inv.classes[i].representative.clone();
    let zeros = inv.supp.iter().filter(|s| !**s).count();
    match (inv.case, zeros) {
        (_, 2) | (_, 3) => std::array::from_fn(|i| {
            if inv.supp[i] {
                one.clone()
            } else {
                zero.clone()
            }
        }),
        (1, 1) => {
            // (1, r, 0), (1, 0, r) or (0, 1, r) depending on the zero slot
            if !inv.supp[2] {
                [one.clone(), rep(0), zero]
            } else if !inv.supp[1] {
                [one.clone(), zero, rep(0)]
            } else {
                [zero, one.clone(), rep(0)]
            }
        }
        (1, 0) => [one.clone(), rep(0), rep(1)],
        (2, 1) => {
            if !inv.supp[2] {
                [one.clone(), rep(0), zero]
            } else {
                // single orbits (1,0,1) and (0,1,1)
                std::array::from_fn(|i| {
                    if inv.supp[i] {
                        one.clone()
                    } else {
                        zero.clone()
                    }
                })
            }
        }
        (2, 0) => [one.clone(), rep(0), one.clone()],
        (3, 1) | (4, 1) => std::array::from_fn(|i| {
            if inv.supp[i] {
                one.clone()
            } else {
                zero.clone()
            }
        }),
        (3, 0) | (4, 0) => [one.clone(), one.clone(), rep(0)],
        other => unreachable!("invalid invariant shape {other:?}"),
    }
}
