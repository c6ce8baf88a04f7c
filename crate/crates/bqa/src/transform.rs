//! Monomial-affine changes of generators acting on 3-generator
//! presentations: compositions of permutations, torus scalings and shifts.
//!
//! A transform records how each old generator is rewritten in terms of the
//! new ones: x_i becomes scale_i * x_{perm(i)} + shift_i. Applying it
//! substitutes into the defining relations and re-solves them, so the
//! returned presentation describes the same algebra on the new generators.
//! Composition follows application order: `h.after(&g)` acts like g first,
//! then h, and `apply(apply(a, g), h) == apply(a, &h.after(&g))`.

use std::fmt;

use thiserror::Error;

use crate::consistency3::Bq3;
use crate::field::{FieldKind, FieldValue};
use crate::freealg::{NcPoly, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransformError {
    #[error("scale entries must be nonzero")]
    ZeroScale,
    #[error("{0:?} is not a permutation of 1..=3")]
    BadPermutation([usize; 3]),
    #[error("the shift removing a and b needs q1 != 1")]
    KillAbNeedsQ1NotOne,
    #[error("the substitution removing alpha needs q2 != 1")]
    KillAlphaNeedsQ2NotOne,
    #[error("removing alpha requires a = b = 0 first")]
    KillAlphaNeedsZeroAb,
}

/// An element of the group generated by generator permutations, nonzero
/// scalings and constant shifts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialAffineTransform {
    /// 1-based images: generator i maps onto generator perm[i-1].
    perm: [usize; 3],
    scale: [FieldValue; 3],
    shift: [FieldValue; 3],
}

impl MonomialAffineTransform {
    pub fn new(
        perm: [usize; 3],
        scale: [FieldValue; 3],
        shift: [FieldValue; 3],
    ) -> Result<Self, TransformError> {
        let mut seen = [false; 3];
        for &p in &perm {
            if !(1..=3).contains(&p) || std::mem::replace(&mut seen[p - 1], true) {
                return Err(TransformError::BadPermutation(perm));
            }
        }
        if scale.iter().any(FieldValue::is_zero) {
            return Err(TransformError::ZeroScale);
        }
        Ok(MonomialAffineTransform { perm, scale, shift })
    }

    pub fn identity(field: FieldKind) -> Self {
        MonomialAffineTransform {
            perm: [1, 2, 3],
            scale: [field.one(), field.one(), field.one()],
            shift: [field.zero(), field.zero(), field.zero()],
        }
    }

    pub fn permutation(field: FieldKind, perm: [usize; 3]) -> Result<Self, TransformError> {
        Self::new(
            perm,
            [field.one(), field.one(), field.one()],
            [field.zero(), field.zero(), field.zero()],
        )
    }

    pub fn scaling(scale: [FieldValue; 3]) -> Result<Self, TransformError> {
        let field = scale[0].kind();
        Self::new([1, 2, 3], scale, [field.zero(), field.zero(), field.zero()])
    }

    pub fn shifting(shift: [FieldValue; 3]) -> Self {
        let field = shift[0].kind();
        MonomialAffineTransform {
            perm: [1, 2, 3],
            scale: [field.one(), field.one(), field.one()],
            shift,
        }
    }

    pub fn perm(&self) -> [usize; 3] {
        self.perm
    }

    pub fn scale(&self) -> &[FieldValue; 3] {
        &self.scale
    }

    pub fn shift(&self) -> &[FieldValue; 3] {
        &self.shift
    }

    pub fn is_identity(&self) -> bool {
        self.perm == [1, 2, 3]
            && self.scale.iter().all(FieldValue::is_one)
            && self.shift.iter().all(FieldValue::is_zero)
    }

    pub fn is_odd_permutation(&self) -> bool {
        let p = self.perm;
        let mut inversions = 0;
        for i in 0..3 {
            for j in i + 1..3 {
                if p[i] > p[j] {
                    inversions += 1;
                }
            }
        }
        inversions % 2 == 1
    }

    /// The transform acting like `g` first, then `self`.
    pub fn after(&self, g: &Self) -> Self {
        let field = self.scale[0].kind();
        let mut perm = [0usize; 3];
        let mut scale: [FieldValue; 3] = std::array::from_fn(|_| field.one());
        let mut shift: [FieldValue; 3] = std::array::from_fn(|_| field.zero());
        for i in 0..3 {
            let mid = g.perm[i]; // g sends x_{i+1} onto generator `mid`
            perm[i] = self.perm[mid - 1];
            scale[i] = g.scale[i].try_mul(&self.scale[mid - 1]).expect("fields");
            shift[i] = g.scale[i]
                .try_mul(&self.shift[mid - 1])
                .expect("fields")
                .try_add(&g.shift[i])
                .expect("fields");
        }
        MonomialAffineTransform { perm, scale, shift }
    }

    pub fn inverse(&self) -> Self {
        let field = self.scale[0].kind();
        let mut perm = [0usize; 3];
        let mut scale: [FieldValue; 3] = std::array::from_fn(|_| field.one());
        let mut shift: [FieldValue; 3] = std::array::from_fn(|_| field.zero());
        for i in 0..3 {
            let target = self.perm[i] - 1;
            perm[target] = i + 1;
            let inv = self.scale[i].inv().expect("scales are nonzero");
            shift[target] = self.shift[i]
                .clone()
                .negated()
                .try_mul(&inv)
                .expect("fields");
            scale[target] = inv;
        }
        MonomialAffineTransform { perm, scale, shift }
    }

    /// Images of the generators as free-algebra elements.
    fn images(&self) -> [NcPoly; 3] {
        std::array::from_fn(|i| {
            let mut p =
                NcPoly::monomial(3, Word::single(self.perm[i] as u32), self.scale[i].clone());
            p.add_term(Word::empty(), self.shift[i].clone());
            p
        })
    }
}

impl fmt::Display for MonomialAffineTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "perm={}{}{} scale=({},{},{}) shift=({},{},{})",
            self.perm[0],
            self.perm[1],
            self.perm[2],
            self.scale[0],
            self.scale[1],
            self.scale[2],
            self.shift[0],
            self.shift[1],
            self.shift[2]
        )
    }
}

/// Substitutes the transform into the defining relations and solves each
/// transformed relation for its descent, producing the presentation of the
/// same algebra on the new generators.
pub fn apply(a: &Bq3, g: &MonomialAffineTransform) -> Bq3 {
    let field = a.field();
    assert_eq!(
        g.scale[0].kind(),
        field,
        "transform and presentation fields differ"
    );
    let images = g.images();
    let img = |m: usize| &images[m - 1];

    let mut qs: [Option<FieldValue>; 3] = [None, None, None];
    let mut amat: [[Option<FieldValue>; 3]; 3] = Default::default();
    let mut bvec: [Option<FieldValue>; 3] = [None, None, None];

    let pairs = [(2usize, 1usize), (3, 1), (3, 2)];
    let pair_slot = |i: usize, j: usize| match (i, j) {
        (2, 1) => 0,
        (3, 1) => 1,
        (3, 2) => 2,
        _ => unreachable!(),
    };

    for &(i, j) in &pairs {
        let slot = pair_slot(i, j);
        let q = &a.qs()[slot];
        // E := g(x_i) g(x_j) - q_ij g(x_j) g(x_i) - sum_k a_ijk g(x_k) - b_ij
        let mut e = img(i).mul(img(j)).sub(&img(j).mul(img(i)).scale(q));
        for k in 1..=3 {
            let coeff = &a.amat()[slot][k - 1];
            if !coeff.is_zero() {
                e = e.sub(&img(k).scale(coeff));
            }
        }
        e.add_term(Word::empty(), a.bvec()[slot].clone().negated());

        let (pi, pj) = (g.perm[i - 1], g.perm[j - 1]);
        let (hi, lo) = (pi.max(pj), pi.min(pj));
        let w_hi_lo = Word::from_letters(vec![hi as u32, lo as u32]);
        let w_lo_hi = Word::from_letters(vec![lo as u32, hi as u32]);
        for (w, _) in e.terms() {
            assert!(
                w.len() <= 1 || *w == w_hi_lo || *w == w_lo_hi,
                "transformed relation left the bi-quadratic shape"
            );
        }
        let lead = e
            .coefficient(&w_hi_lo)
            .expect("descent coefficient vanished")
            .clone();
        let lead_inv = lead
            .inv()
            .expect("descent coefficient is a product of units");
        let new_q = e
            .coefficient(&w_lo_hi)
            .expect("ordered coefficient vanished")
            .clone()
            .negated()
            .try_mul(&lead_inv)
            .unwrap();
        let new_slot = pair_slot(hi, lo);
        assert!(qs[new_slot].is_none(), "pair solved twice");
        qs[new_slot] = Some(new_q);
        for k in 1..=3 {
            let c = e
                .coefficient(&Word::single(k as u32))
                .cloned()
                .unwrap_or_else(|| field.zero());
            amat[new_slot][k - 1] = Some(c.negated().try_mul(&lead_inv).unwrap());
        }
        let c0 = e
            .coefficient(&Word::empty())
            .cloned()
            .unwrap_or_else(|| field.zero());
        bvec[new_slot] = Some(c0.negated().try_mul(&lead_inv).unwrap());
    }

    Bq3::new(
        qs.map(|v| v.expect("all pairs solved")),
        amat.map(|row| row.map(|v| v.expect("all pairs solved"))),
        bvec.map(|v| v.expect("all pairs solved")),
    )
    .expect("transforms preserve presentation invariants")
}

/// The shift making a = b = 0 in the first relation (valid whenever
/// q1 != 1). Returns the transformed presentation and the shift used.
pub fn kill_ab(a: &Bq3) -> Result<(Bq3, MonomialAffineTransform), TransformError> {
    let field = a.field();
    let one = field.one();
    let denom = &one - a.q1();
    if denom.is_zero() {
        return Err(TransformError::KillAbNeedsQ1NotOne);
    }
    if a.a().is_zero() && a.b().is_zero() {
        return Ok((a.clone(), MonomialAffineTransform::identity(field)));
    }
    let g = MonomialAffineTransform::shifting([
        a.b().try_div(&denom).unwrap(),
        a.a().try_div(&denom).unwrap(),
        field.zero(),
    ]);
    let out = apply(a, &g);
    assert!(out.a().is_zero() && out.b().is_zero());
    Ok((out, g))
}

/// Removes alpha from the second relation by scaling x3 to make alpha = 1
/// and then shifting it by 1/(1 - q2). Requires q2 != 1 and a = b = 0.
pub fn kill_alpha(a: &Bq3) -> Result<(Bq3, MonomialAffineTransform), TransformError> {
    let field = a.field();
    let one = field.one();
    let denom = &one - a.q2();
    if denom.is_zero() {
        return Err(TransformError::KillAlphaNeedsQ2NotOne);
    }
    if !(a.a().is_zero() && a.b().is_zero()) {
        return Err(TransformError::KillAlphaNeedsZeroAb);
    }
    if a.alpha().is_zero() {
        return Ok((a.clone(), MonomialAffineTransform::identity(field)));
    }
    let alpha = a.alpha().clone();
    let g = MonomialAffineTransform::new(
        [1, 2, 3],
        [one.clone(), one.clone(), alpha.clone()],
        [field.zero(), field.zero(), alpha.try_div(&denom).unwrap()],
    )
    .expect("alpha is nonzero");
    let out = apply(a, &g);
    assert!(out.alpha().is_zero());
    Ok((out, g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::consistency3::is_consistent3;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> FieldValue {
        FieldValue::rational(n, d)
    }

    fn z() -> FieldValue {
        FieldKind::Rational.zero()
    }

    fn quantum_space(q1: FieldValue, q2: FieldValue, q3: FieldValue) -> Bq3 {
        Bq3::quantum_space(q1.kind(), [q1, q2, q3]).unwrap()
    }

    #[test]
    fn identity_and_inverse() {
        let a = quantum_space(q(2, 1), q(3, 1), q(5, 1));
        let id = MonomialAffineTransform::identity(FieldKind::Rational);
        assert_eq!(apply(&a, &id), a);
        let g = MonomialAffineTransform::new(
            [2, 3, 1],
            [q(2, 1), q(-1, 3), q(7, 2)],
            [q(1, 1), q(0, 1), q(-4, 5)],
        )
        .unwrap();
        assert!(g.after(&g.inverse()).is_identity());
        assert!(g.inverse().after(&g).is_identity());
        assert_eq!(apply(&apply(&a, &g), &g.inverse()), a);
    }

    #[test]
    fn torus_fixes_quantum_space() {
        let a = quantum_space(q(2, 1), q(3, 1), q(5, 1));
        let g = MonomialAffineTransform::scaling([q(4, 1), q(-2, 3), q(9, 1)]).unwrap();
        assert_eq!(apply(&a, &g), a);
    }

    #[test]
    fn swap_inverts_q1() {
        let a = quantum_space(q(5, 1), q(1, 1), q(1, 1));
        let g = MonomialAffineTransform::permutation(FieldKind::Rational, [2, 1, 3]).unwrap();
        let b = apply(&a, &g);
        assert_eq!(b.q1(), &q(1, 5));
    }

    #[test]
    fn perm_free_transforms_fix_q() {
        let a = Bq3::new(
            [q(2, 1), q(3, 1), q(5, 1)],
            [
                [z(), z(), q(1, 2)],
                [q(3, 1), z(), z()],
                [z(), q(-1, 1), z()],
            ],
            [q(1, 1), q(2, 1), q(0, 1)],
        )
        .unwrap();
        let g = MonomialAffineTransform::new(
            [1, 2, 3],
            [q(2, 1), q(5, 3), q(-1, 2)],
            [q(1, 1), q(-2, 1), q(4, 1)],
        )
        .unwrap();
        let b = apply(&a, &g);
        assert_eq!(b.qs(), a.qs());
    }

    #[test]
    fn kill_ab_example() {
        // a = 2, b = 3, q1 = 2: new generators are x1 + 3 and x2 + 2
        let a = Bq3::new(
            [q(2, 1), q(3, 1), q(5, 1)],
            [[q(2, 1), q(3, 1), z()], [z(), z(), z()], [z(), z(), z()]],
            [z(), z(), z()],
        )
        .unwrap();
        let (out, g) = kill_ab(&a).unwrap();
        assert!(out.a().is_zero() && out.b().is_zero());
        assert_eq!(g.shift()[0], q(-3, 1));
        assert_eq!(g.shift()[1], q(-2, 1));

        let already = kill_ab(&out).unwrap();
        assert!(already.1.is_identity());
    }

    #[test]
    fn kill_ab_over_gf5() {
        let f = FieldKind::Fp(5);
        let zero = || f.zero();
        let a = Bq3::new(
            [f.integer(2), f.integer(3), f.integer(4)],
            [
                [f.integer(1), f.integer(1), zero()],
                [zero(), zero(), zero()],
                [zero(), zero(), zero()],
            ],
            [zero(), zero(), zero()],
        )
        .unwrap();
        let (out, g) = kill_ab(&a).unwrap();
        assert!(out.a().is_zero() && out.b().is_zero());
        // 1/(1-2) = -1 = 4 mod 5
        assert_eq!(g.shift()[0], f.integer(4));
    }

    #[test]
    fn kill_ab_requires_q1_not_one() {
        let a = quantum_space(q(1, 1), q(3, 1), q(5, 1));
        assert_eq!(
            kill_ab(&a).unwrap_err(),
            TransformError::KillAbNeedsQ1NotOne
        );
    }

    #[test]
    fn kill_alpha_examples() {
        let mk = |alpha: FieldValue| {
            Bq3::new(
                [q(2, 1), q(3, 1), q(6, 1)],
                [[z(), z(), z()], [alpha, z(), z()], [z(), z(), z()]],
                [z(), z(), z()],
            )
            .unwrap()
        };
        let (out, g) = kill_alpha(&mk(z())).unwrap();
        assert!(g.is_identity());
        assert!(out.alpha().is_zero());

        let (out, g) = kill_alpha(&mk(q(2, 1))).unwrap();
        assert!(out.alpha().is_zero());
        assert_eq!(g.scale()[2], q(2, 1));

        let bad = Bq3::new(
            [q(2, 1), q(1, 1), q(6, 1)],
            [[z(), z(), z()], [q(2, 1), z(), z()], [z(), z(), z()]],
            [z(), z(), z()],
        )
        .unwrap();
        assert_eq!(
            kill_alpha(&bad).unwrap_err(),
            TransformError::KillAlphaNeedsQ2NotOne
        );
    }

    #[test]
    fn kill_alpha_clears_mu_on_consistent_input() {
        // q2 != 1 and consistency ties mu to alpha; killing alpha kills mu
        let a = Bq3::new(
            [q(2, 1), q(3, 1), q(5, 1)],
            [[z(), z(), z()], [q(6, 1), z(), z()], [z(), q(12, 1), z()]],
            [z(), z(), z()],
        )
        .unwrap();
        // (1-q3) alpha = (1-q2) mu: (1-5)*6 = -24 = (1-3)*12
        assert!(is_consistent3(&a));
        let (out, _) = kill_alpha(&a).unwrap();
        assert!(out.alpha().is_zero());
        assert!(out.mu().is_zero());
        assert!(is_consistent3(&out));
    }

    #[test]
    fn quantum_triple_scales_by_torus_weights() {
        // c, beta, lambda pick up l3/(l1 l2), l2/(l1 l3), l1/(l2 l3)
        let a = Bq3::new(
            [q(4, 1), q(1, 4), q(4, 1)],
            [
                [z(), z(), q(7, 1)],
                [z(), q(3, 1), z()],
                [q(-2, 1), z(), z()],
            ],
            [q(1, 1), q(2, 1), q(3, 1)],
        )
        .unwrap();
        let (l1, l2, l3) = (q(2, 1), q(3, 1), q(5, 1));
        let g = MonomialAffineTransform::scaling([l1.clone(), l2.clone(), l3.clone()]).unwrap();
        let b = apply(&a, &g);
        let weight = |num: &FieldValue, d1: &FieldValue, d2: &FieldValue| {
            num.try_div(&d1.try_mul(d2).unwrap()).unwrap()
        };
        assert_eq!(b.c(), &a.c().try_mul(&weight(&l3, &l1, &l2)).unwrap());
        assert_eq!(b.beta(), &a.beta().try_mul(&weight(&l2, &l1, &l3)).unwrap());
        assert_eq!(
            b.lambda(),
            &a.lambda().try_mul(&weight(&l1, &l2, &l3)).unwrap()
        );
        assert_eq!(b.b1(), &weight(a.b1(), &l1, &l2));
        assert_eq!(b.b2(), &weight(a.b2(), &l1, &l3));
        assert_eq!(b.b3(), &weight(a.b3(), &l2, &l3));
    }

    fn arb_value() -> impl Strategy<Value = FieldValue> {
        (-6i64..=6, 1i64..=4).prop_map(|(n, d)| q(n, d))
    }

    fn arb_nonzero() -> impl Strategy<Value = FieldValue> {
        (arb_value(), 1i64..=5)
            .prop_map(|(v, fallback)| if v.is_zero() { q(fallback, 1) } else { v })
    }

    fn arb_bq3() -> impl Strategy<Value = Bq3> {
        (
            [arb_nonzero(), arb_nonzero(), arb_nonzero()],
            proptest::collection::vec(arb_value(), 12),
        )
            .prop_map(|(qs, rest)| {
                Bq3::new(
                    qs,
                    [
                        [rest[0].clone(), rest[1].clone(), rest[2].clone()],
                        [rest[3].clone(), rest[4].clone(), rest[5].clone()],
                        [rest[6].clone(), rest[7].clone(), rest[8].clone()],
                    ],
                    [rest[9].clone(), rest[10].clone(), rest[11].clone()],
                )
                .unwrap()
            })
    }

    fn arb_transform() -> impl Strategy<Value = MonomialAffineTransform> {
        (
            0usize..6,
            [arb_nonzero(), arb_nonzero(), arb_nonzero()],
            [arb_value(), arb_value(), arb_value()],
        )
            .prop_map(|(pidx, scale, shift)| {
                let perms = [
                    [1, 2, 3],
                    [1, 3, 2],
                    [2, 1, 3],
                    [2, 3, 1],
                    [3, 1, 2],
                    [3, 2, 1],
                ];
                MonomialAffineTransform::new(perms[pidx], scale, shift).unwrap()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn action_is_compatible_with_composition(
            a in arb_bq3(),
            g in arb_transform(),
            h in arb_transform(),
        ) {
            let stepwise = apply(&apply(&a, &g), &h);
            let composed = apply(&a, &h.after(&g));
            prop_assert_eq!(stepwise, composed);
        }

        #[test]
        fn action_preserves_consistency(a in arb_bq3(), g in arb_transform()) {
            prop_assert_eq!(is_consistent3(&a), is_consistent3(&apply(&a, &g)));
        }

        #[test]
        fn round_trip_through_inverse(a in arb_bq3(), g in arb_transform()) {
            prop_assert_eq!(apply(&apply(&a, &g), &g.inverse()), a);
        }
    }
}
