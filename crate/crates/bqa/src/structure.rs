//! Diskew-polynomial and generalized Weyl presentations of the canonical
//! families that carry them, with symbolic verification: every extracted
//! relation is rewritten to zero inside the 3-generator algebra itself.
//!
//! A diskew presentation singles out one generator t as a polynomial base
//! ring K[t] and two generators x, y with x t = sigma(t) x, y t = tau(t) y
//! and x y - rho y x = b(t). When rho is a unit this lifts to a
//! generalized Weyl presentation over K[t][h] with h = yx, sigma(h) =
//! rho h + b and tau(h) = rho^{-1}(h - tau(b)).

use thiserror::Error;

use crate::classify::{CanonicalFamily, Classification, OneQForm, TwoQForm};
use crate::consistency3::Bq3;
use crate::field::FieldValue;
use crate::freealg::NcPoly;
use crate::rewrite::reduce;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("family {0} has no asserted diskew/Weyl structure")]
    NotCovered(String),
}

/// An affine endomorphism of K[t], determined by t -> linear * t + constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap {
    pub linear: FieldValue,
    pub constant: FieldValue,
}

impl AffineMap {
    pub fn identity_like(&self) -> bool {
        self.linear.is_one() && self.constant.is_zero()
    }

    /// outer(inner(t)).
    pub fn compose(outer: &AffineMap, inner: &AffineMap) -> AffineMap {
        AffineMap {
            linear: inner.linear.try_mul(&outer.linear).unwrap(),
            constant: inner
                .linear
                .try_mul(&outer.constant)
                .unwrap()
                .try_add(&inner.constant)
                .unwrap(),
        }
    }

    pub fn inverse(&self) -> AffineMap {
        let li = self.linear.inv().expect("affine maps here are invertible");
        AffineMap {
            constant: self.constant.clone().negated().try_mul(&li).unwrap(),
            linear: li,
        }
    }

    /// Image of the degree-<=1 polynomial p under the endomorphism.
    pub fn apply_poly(&self, p: &LinearPoly) -> LinearPoly {
        LinearPoly {
            linear: p.linear.try_mul(&self.linear).unwrap(),
            constant: p
                .linear
                .try_mul(&self.constant)
                .unwrap()
                .try_add(&p.constant)
                .unwrap(),
        }
    }
}

/// A polynomial of degree at most 1 in the base generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearPoly {
    pub linear: FieldValue,
    pub constant: FieldValue,
}

impl LinearPoly {
    pub fn zero_like(v: &FieldValue) -> Self {
        LinearPoly {
            linear: v.kind().zero(),
            constant: v.kind().zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.linear.is_zero() && self.constant.is_zero()
    }
}

/// Diskew-polynomial data extracted from a canonical presentation. The
/// generator indices record which x_i plays the base t and which play x, y.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DprData {
    pub base_gen: usize,
    pub x_gen: usize,
    pub y_gen: usize,
    pub sigma: AffineMap,
    pub tau: AffineMap,
    pub rho: FieldValue,
    pub b: LinearPoly,
    /// tau = sigma^{-1}, the classical situation
    pub classical: bool,
}

/// Action on h extended over the base: h -> h_coeff * h + t_part(t).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HMap {
    pub h_coeff: FieldValue,
    pub t_part: LinearPoly,
}

/// Generalized Weyl data lifted from a diskew presentation: the base ring
/// grows by h = yx with sigma(h) = rho h + b and tau(h) = rho^{-1}(h - tau(b)).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GwaData {
    /// tau sigma on the base generator
    pub nu: AffineMap,
    pub sigma_h: HMap,
    pub tau_h: HMap,
    pub classical: bool,
}

/// C = h + alpha(t), central when rho = 1, nu = id and alpha - sigma(alpha) = b.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralElement {
    pub alpha: LinearPoly,
}

/// Reads the diskew presentation off a classified canonical form, for the
/// families that have one.
pub fn to_dpr(cls: &Classification) -> Result<DprData, StructureError> {
    let p = &cls.presentation;
    let field = p.field();
    let one = field.one();
    let zero = field.zero();
    match &cls.form.family {
        // x = x2, y = x1 over K[x3]: sigma(t) = t - mu, tau(t) = t - alpha,
        // x y - q1 y x = c t + b1
        CanonicalFamily::OneQ(form) => {
            let (sigma_c, tau_c, b) = match form {
                OneQForm::MuAlphaNonzero { alpha, mu, .. } => (
                    mu.clone().negated(),
                    alpha.clone().negated(),
                    LinearPoly {
                        linear: zero.clone(),
                        constant: zero.clone(),
                    },
                ),
                OneQForm::MuAlphaZero { alpha, c, b1, .. } => (
                    alpha.clone(),
                    alpha.clone().negated(),
                    LinearPoly {
                        linear: c.clone(),
                        constant: b1.clone(),
                    },
                ),
            };
            let sigma = AffineMap {
                linear: one.clone(),
                constant: sigma_c,
            };
            let tau = AffineMap {
                linear: one,
                constant: tau_c,
            };
            let classical = tau == sigma.inverse();
            Ok(DprData {
                base_gen: 3,
                x_gen: 2,
                y_gen: 1,
                sigma,
                tau,
                rho: p.q1().clone(),
                b,
                classical,
            })
        }
        // x = x3, y = x2 over K[x1]: sigma(t) = q1^{-1} t,
        // x y - y x = lambda t + b3
        CanonicalFamily::TwoQ(TwoQForm::Unit { q1, lambda, b3 }) => {
            let sigma = AffineMap {
                linear: q1.inv().expect("q1 is a unit"),
                constant: zero.clone(),
            };
            Ok(DprData {
                base_gen: 1,
                x_gen: 3,
                y_gen: 2,
                tau: sigma.inverse(),
                sigma,
                rho: one,
                b: LinearPoly {
                    linear: lambda.clone(),
                    constant: b3.clone(),
                },
                classical: true,
            })
        }
        other => Err(StructureError::NotCovered(other.label())),
    }
}

/// Extends the endomorphisms over h = yx; always applicable here since
/// every rho is a unit.
pub fn gwa_lift(d: &DprData) -> GwaData {
    let rho_inv = d.rho.inv().expect("rho is a unit");
    let tau_b = d.tau.apply_poly(&d.b);
    let tau_h = HMap {
        h_coeff: rho_inv.clone(),
        t_part: LinearPoly {
            linear: tau_b.linear.clone().negated().try_mul(&rho_inv).unwrap(),
            constant: tau_b.constant.clone().negated().try_mul(&rho_inv).unwrap(),
        },
    };
    let sigma_h = HMap {
        h_coeff: d.rho.clone(),
        t_part: d.b.clone(),
    };
    // tau(sigma(h)) = rho tau(h) + tau(b) must return h
    let round_trip_coeff = sigma_h.h_coeff.try_mul(&tau_h.h_coeff).unwrap();
    assert!(round_trip_coeff.is_one(), "tau sigma must fix h");
    let residual = LinearPoly {
        linear: d
            .rho
            .try_mul(&tau_h.t_part.linear)
            .unwrap()
            .try_add(&tau_b.linear)
            .unwrap(),
        constant: d
            .rho
            .try_mul(&tau_h.t_part.constant)
            .unwrap()
            .try_add(&tau_b.constant)
            .unwrap(),
    };
    assert!(residual.is_zero(), "tau sigma must fix h");
    GwaData {
        nu: AffineMap::compose(&d.tau, &d.sigma),
        sigma_h,
        tau_h,
        classical: d.classical,
    }
}

/// Solves alpha - sigma(alpha) = b for alpha of degree <= 1 when rho = 1
/// and tau sigma fixes the base generator; `None` when no solution exists
/// (for instance a constant b with sigma fixing constants).
pub fn central_element(d: &DprData) -> Option<CentralElement> {
    if !d.rho.is_one() {
        return None;
    }
    if !AffineMap::compose(&d.tau, &d.sigma).identity_like() {
        return None;
    }
    let field = d.rho.kind();
    let one = field.one();
    let u = &d.sigma.linear;
    let v = &d.sigma.constant;
    // alpha = p t + r: alpha - sigma(alpha) = p (1 - u) t - p v
    let (p, ok_const) = if !(&one - u).is_zero() {
        let p = d.b.linear.try_div(&(&one - u)).unwrap();
        let expected = p.try_mul(v).unwrap().negated();
        (p, expected == d.b.constant)
    } else if !d.b.linear.is_zero() {
        return None;
    } else if !v.is_zero() {
        (d.b.constant.try_div(v).unwrap().negated(), true)
    } else {
        (field.zero(), d.b.constant.is_zero())
    };
    if !ok_const {
        return None;
    }
    Some(CentralElement {
        alpha: LinearPoly {
            linear: p,
            constant: field.zero(),
        },
    })
}

/// One named symbolic identity and whether it reduced to zero.
pub type Check = (String, bool);

/// The extracted structure plus the verdicts of rewriting each defining
/// relation of the extracted presentation to zero inside the algebra.
#[derive(Debug, Clone)]
pub struct StructureReport {
    pub dpr: DprData,
    pub gwa: GwaData,
    pub central: Option<CentralElement>,
    pub checks: Vec<Check>,
    pub verified: bool,
}

/// Extracts the diskew and Weyl data for the classified family and checks
/// every asserted relation symbolically against the canonical presentation.
pub fn extract_structure(cls: &Classification) -> Result<StructureReport, StructureError> {
    let dpr = to_dpr(cls)?;
    let gwa = gwa_lift(&dpr);
    let central = central_element(&dpr);
    let checks = verify(&cls.presentation, &dpr, &gwa, central.as_ref());
    let verified = checks.iter().all(|(_, ok)| *ok);
    Ok(StructureReport {
        dpr,
        gwa,
        central,
        checks,
        verified,
    })
}

fn verify(p: &Bq3, dpr: &DprData, gwa: &GwaData, central: Option<&CentralElement>) -> Vec<Check> {
    let field = p.field();
    let pres = p.to_presentation();
    let gen = |i: usize| NcPoly::generator(3, field, i as u32);
    let t = gen(dpr.base_gen);
    let x = gen(dpr.x_gen);
    let y = gen(dpr.y_gen);
    let h = y.mul(&x);
    let lin_poly = |lp: &LinearPoly| {
        t.scale(&lp.linear)
            .add(&NcPoly::constant(3, lp.constant.clone()))
    };
    let affine_poly = |m: &AffineMap| {
        t.scale(&m.linear)
            .add(&NcPoly::constant(3, m.constant.clone()))
    };
    let h_poly = |m: &HMap| h.scale(&m.h_coeff).add(&lin_poly(&m.t_part));
    let sigma_h = h_poly(&gwa.sigma_h);
    let tau_h = h_poly(&gwa.tau_h);

    let zero_check = |name: &str, e: NcPoly| (name.to_string(), reduce(&e, &pres).is_zero());
    let mut checks = vec![
        zero_check(
            "x t = sigma(t) x",
            x.mul(&t).sub(&affine_poly(&dpr.sigma).mul(&x)),
        ),
        zero_check(
            "y t = tau(t) y",
            y.mul(&t).sub(&affine_poly(&dpr.tau).mul(&y)),
        ),
        zero_check(
            "x y - rho y x = b",
            x.mul(&y)
                .sub(&y.mul(&x).scale(&dpr.rho))
                .sub(&lin_poly(&dpr.b)),
        ),
        zero_check("x y = sigma(h)", x.mul(&y).sub(&sigma_h)),
        zero_check(
            "h t = nu(t) h",
            h.mul(&t).sub(&affine_poly(&gwa.nu).mul(&h)),
        ),
        zero_check("x h = sigma(h) x", x.mul(&h).sub(&sigma_h.mul(&x))),
        zero_check("y h = tau(h) y", y.mul(&h).sub(&tau_h.mul(&y))),
    ];
    if let Some(c) = central {
        let c_elem = h.add(&lin_poly(&c.alpha));
        for i in 1..=3usize {
            let g = gen(i);
            checks.push(zero_check(
                &format!("C commutes with x{i}"),
                c_elem.mul(&g).sub(&g.mul(&c_elem)),
            ));
        }
    }
    checks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify3;
    use crate::field::FieldKind;

    fn q(n: i64, d: i64) -> FieldValue {
        FieldValue::rational(n, d)
    }

    fn z() -> FieldValue {
        FieldKind::Rational.zero()
    }

    fn classified(a: Bq3) -> Classification {
        classify3(&a).unwrap()
    }

    #[test]
    fn one_q_case1_lift() {
        // q1 = 2, alpha = 1, mu = 0
        let cls = classified(
            Bq3::new(
                [q(2, 1), q(1, 1), q(1, 1)],
                [[z(), z(), z()], [q(1, 1), z(), z()], [z(), z(), z()]],
                [z(), z(), z()],
            )
            .unwrap(),
        );
        let report = extract_structure(&cls).unwrap();
        assert!(report.verified, "failed checks: {:?}", report.checks);
        let d = &report.dpr;
        assert!(d.sigma.identity_like()); // sigma(t) = t - mu = t
        assert_eq!(d.tau.constant, q(-1, 1)); // tau(t) = t - alpha
        assert_eq!(d.rho, q(2, 1));
        assert!(d.b.is_zero());
        assert!(!d.classical);
        // sigma(h) = q1 h, tau(h) = q1^{-1} h, nu(t) = t - alpha - mu
        assert_eq!(report.gwa.sigma_h.h_coeff, q(2, 1));
        assert!(report.gwa.sigma_h.t_part.is_zero());
        assert_eq!(report.gwa.tau_h.h_coeff, q(1, 2));
        assert!(report.gwa.tau_h.t_part.is_zero());
        assert_eq!(report.gwa.nu.constant, q(-1, 1));
        assert!(report.central.is_none()); // rho != 1
    }

    #[test]
    fn one_q_case2_classical_gwa() {
        // alpha = 1, c = 1 (the classifier absorbs b1): sigma(h) = q1 h + t
        let cls = classified(
            Bq3::new(
                [q(2, 1), q(1, 1), q(1, 1)],
                [
                    [z(), z(), q(1, 1)],
                    [q(1, 1), z(), z()],
                    [z(), q(-1, 1), z()],
                ],
                [q(1, 1), z(), z()],
            )
            .unwrap(),
        );
        let report = extract_structure(&cls).unwrap();
        assert!(report.verified, "failed checks: {:?}", report.checks);
        let d = &report.dpr;
        assert!(d.classical);
        assert_eq!(d.sigma.constant, q(1, 1));
        assert_eq!(d.tau.constant, q(-1, 1));
        assert_eq!(report.gwa.sigma_h.h_coeff, q(2, 1));
        assert_eq!(report.gwa.sigma_h.t_part.linear, q(1, 1));
        assert!(report.gwa.sigma_h.t_part.constant.is_zero());

        // a c = 0, b1 = 1 input keeps its constant: sigma(h) = q1 h + 1
        let cls = classified(
            Bq3::new(
                [q(2, 1), q(1, 1), q(1, 1)],
                [[z(), z(), z()], [q(1, 1), z(), z()], [z(), q(-1, 1), z()]],
                [q(1, 1), z(), z()],
            )
            .unwrap(),
        );
        let report = extract_structure(&cls).unwrap();
        assert!(report.verified, "failed checks: {:?}", report.checks);
        assert!(report.gwa.sigma_h.t_part.linear.is_zero());
        assert_eq!(report.gwa.sigma_h.t_part.constant, q(1, 1));
    }

    #[test]
    fn two_q_unit_central_element() {
        // q1 = 2, lambda = 1, b3 = 0: alpha = (1 - 1/2)^{-1} t = 2 t
        let cls = classified(
            Bq3::new(
                [q(2, 1), q(1, 2), q(1, 1)],
                [[z(), z(), z()], [z(), z(), z()], [q(1, 1), z(), z()]],
                [z(), z(), z()],
            )
            .unwrap(),
        );
        let report = extract_structure(&cls).unwrap();
        assert!(report.verified, "failed checks: {:?}", report.checks);
        assert_eq!(report.dpr.rho, q(1, 1));
        assert_eq!(report.dpr.b.linear, q(1, 1));
        let central = report.central.expect("b3 = 0 admits a central element");
        assert_eq!(central.alpha.linear, q(2, 1));
        assert!(central.alpha.constant.is_zero());
    }

    #[test]
    fn two_q_unit_b3_blocks_central_element() {
        // lambda = 0, b3 = 1: constant b, sigma scales t only: no solution
        let cls = classified(
            Bq3::new(
                [q(2, 1), q(1, 2), q(1, 1)],
                [[z(), z(), z()], [z(), z(), z()], [z(), z(), z()]],
                [z(), z(), q(1, 1)],
            )
            .unwrap(),
        );
        let report = extract_structure(&cls).unwrap();
        assert!(report.verified);
        assert!(report.central.is_none());
    }

    #[test]
    fn trivial_b_gives_central_h() {
        let cls = classified(
            Bq3::new(
                [q(2, 1), q(1, 2), q(1, 1)],
                [[z(), z(), z()], [z(), z(), z()], [z(), z(), z()]],
                [z(), z(), z()],
            )
            .unwrap(),
        );
        let report = extract_structure(&cls).unwrap();
        let central = report.central.expect("b = 0 gives C = h");
        assert!(central.alpha.is_zero());
    }

    #[test]
    fn uncovered_families_signal_not_covered() {
        let cls = classified(
            Bq3::quantum_space(FieldKind::Rational, [q(2, 1), q(4, 1), q(3, 1)]).unwrap(),
        );
        assert!(matches!(
            extract_structure(&cls),
            Err(StructureError::NotCovered(_))
        ));
    }
}
