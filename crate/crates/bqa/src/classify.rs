//! Canonical-form classification of consistent presentations.
//!
//! Three-generator presentations fall into four classes by how many of the
//! q's differ from 1 (after permuting generators): none (Lie type), one,
//! two, or all three. Each class has a finite menu of canonical shapes
//! reachable by shifts, torus scalings and permutations; `classify3` picks
//! the menu entry, returns the canonical presentation, and the transform
//! trace that reaches it. Two-generator presentations land in one of five
//! algebras via `classify2`.

mod lie;
mod orbit;
mod quantum;

pub use lie::{lie_classify, lie_model, LieForm, LieKind};
pub use orbit::{orbit_invariant, orbit_representative, torus_action, OrbitInvariant};
pub use quantum::{quantum_classify, QuantumForm};

use thiserror::Error;

use crate::consistency3::{is_consistent3, Bq3};
use crate::field::FieldValue;
use crate::transform::{apply, kill_ab, kill_alpha, MonomialAffineTransform};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("presentation is not PBW consistent; classification presumes a PBW basis")]
    Inconsistent,
    #[error("q must be nonzero")]
    ZeroQ,
    #[error("expected a quantum presentation (q1 = q3 = q, q2 = q^-1, q != 1)")]
    NotQuantum,
    #[error("expected all q's equal to 1")]
    NotLieType,
    #[error("orbit case must be 1..=4 (got {0})")]
    BadOrbitCase(u8),
    #[error(transparent)]
    Field(#[from] crate::field::FieldError),
}

/// The five two-generator algebras.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoGenClass {
    /// K[x1, x2]
    Polynomial,
    /// the first Weyl algebra
    Weyl,
    /// the enveloping algebra of the nonabelian 2-dimensional Lie algebra
    EnvelopingN2,
    QuantumPlane {
        q: FieldValue,
    },
    QuantumWeyl {
        q: FieldValue,
    },
}

impl TwoGenClass {
    pub fn label(&self) -> &'static str {
        match self {
            TwoGenClass::Polynomial => "Poly2",
            TwoGenClass::Weyl => "Weyl",
            TwoGenClass::EnvelopingN2 => "Un2",
            TwoGenClass::QuantumPlane { .. } => "QuantumPlane",
            TwoGenClass::QuantumWeyl { .. } => "QuantumWeyl",
        }
    }
}

/// One q different from 1 (normalized to q1): the two shapes of that class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OneQForm {
    /// mu + alpha != 0 forces c = b1 = 0; (alpha, mu) lands in
    /// {(1, mu') | mu' != -1} or (0, 1).
    MuAlphaNonzero {
        q1: FieldValue,
        alpha: FieldValue,
        mu: FieldValue,
    },
    /// mu = -alpha; (alpha, c, b1) lands in {0,1}^3 with b1 = 0 whenever
    /// c = 1 (a shift of the central-like x3 absorbs the constant).
    MuAlphaZero {
        q1: FieldValue,
        alpha: FieldValue,
        c: FieldValue,
        b1: FieldValue,
    },
}

/// q1, q2 != 1, q3 = 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoQForm {
    /// q1 q2 != 1 kills all lower-order terms: the quantum space with
    /// weights (q1, q2, 1).
    NonUnit { q1: FieldValue, q2: FieldValue },
    /// q2 = q1^{-1}: only lambda, b3 survive, each normalized into {0, 1}.
    Unit {
        q1: FieldValue,
        lambda: FieldValue,
        b3: FieldValue,
    },
}

/// All q's different from 1, split by which of q1 - q3, 1 - q1 q2,
/// 1 - q2 q3 vanish.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ThreeQForm {
    /// q1 = q3 = q, q2 = q^{-1}: the quantum family with its four
    /// torus-orbit cases.
    Quantum(QuantumForm),
    /// q1 = q3, q1 q2 != 1: beta, b2 in {0, 1}.
    C2 {
        q1: FieldValue,
        q2: FieldValue,
        beta: FieldValue,
        b2: FieldValue,
    },
    /// q1 != q3, q1 q2 = 1: lambda, b3 in {0, 1}.
    C3 {
        q1: FieldValue,
        q3: FieldValue,
        lambda: FieldValue,
        b3: FieldValue,
    },
    /// q1 != q3, q1 q2 != 1, q2 q3 = 1: c, b1 in {0, 1}.
    C4 {
        q1: FieldValue,
        q2: FieldValue,
        c: FieldValue,
        b1: FieldValue,
    },
    /// none vanish: the quantum space with weights Q.
    C5 {
        q1: FieldValue,
        q2: FieldValue,
        q3: FieldValue,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CanonicalFamily {
    TwoGen(TwoGenClass),
    LieType(LieForm),
    OneQ(OneQForm),
    TwoQ(TwoQForm),
    ThreeQ(ThreeQForm),
}

impl CanonicalFamily {
    /// Family tag in dotted form, e.g. "ThreeQ.Quantum".
    pub fn label(&self) -> String {
        match self {
            CanonicalFamily::TwoGen(c) => format!("TwoGen.{}", c.label()),
            CanonicalFamily::LieType(f) => format!("LieType.{}", f.kind.label()),
            CanonicalFamily::OneQ(OneQForm::MuAlphaNonzero { .. }) => "OneQ.MuAlphaNonzero".into(),
            CanonicalFamily::OneQ(OneQForm::MuAlphaZero { .. }) => "OneQ.MuAlphaZero".into(),
            CanonicalFamily::TwoQ(TwoQForm::NonUnit { .. }) => "TwoQ.Q1Q2NonUnit".into(),
            CanonicalFamily::TwoQ(TwoQForm::Unit { .. }) => "TwoQ.Q1Q2Unit".into(),
            CanonicalFamily::ThreeQ(ThreeQForm::Quantum(_)) => "ThreeQ.Quantum".into(),
            CanonicalFamily::ThreeQ(ThreeQForm::C2 { .. }) => "ThreeQ.C2".into(),
            CanonicalFamily::ThreeQ(ThreeQForm::C3 { .. }) => "ThreeQ.C3".into(),
            CanonicalFamily::ThreeQ(ThreeQForm::C4 { .. }) => "ThreeQ.C4".into(),
            CanonicalFamily::ThreeQ(ThreeQForm::C5 { .. }) => "ThreeQ.C5".into(),
        }
    }
}

/// A classified family together with whether its uniqueness statement
/// needs square or cube roots the ground field may lack.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    pub family: CanonicalFamily,
    pub closure_flag: bool,
}

/// Output of `classify3`: the canonical form, the canonical presentation
/// it refers to, and the transform trace that maps the input onto it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub form: CanonicalForm,
    pub presentation: Bq3,
    pub transforms: Vec<MonomialAffineTransform>,
}

impl Classification {
    /// The data pinned by the family's uniqueness statement, rendered
    /// deterministically. Free parameters (such as the b's of the dense
    /// quantum case) are excluded, so equivalent presentations produce
    /// equal signatures.
    pub fn invariant_signature(&self) -> String {
        match &self.form.family {
            CanonicalFamily::TwoGen(c) => match c {
                TwoGenClass::QuantumPlane { q } | TwoGenClass::QuantumWeyl { q } => {
                    format!("{}[q={}]", self.form.family.label(), q)
                }
                _ => self.form.family.label(),
            },
            CanonicalFamily::LieType(_) => self.form.family.label(),
            CanonicalFamily::OneQ(OneQForm::MuAlphaNonzero { q1, alpha, mu }) => {
                format!("OneQ.MuAlphaNonzero[q1={q1},alpha={alpha},mu={mu}]")
            }
            CanonicalFamily::OneQ(OneQForm::MuAlphaZero { q1, alpha, c, b1 }) => {
                format!("OneQ.MuAlphaZero[q1={q1},alpha={alpha},c={c},b1={b1}]")
            }
            CanonicalFamily::TwoQ(TwoQForm::NonUnit { q1, q2 }) => {
                format!("TwoQ.Q1Q2NonUnit[q1={q1},q2={q2}]")
            }
            CanonicalFamily::TwoQ(TwoQForm::Unit { q1, lambda, b3 }) => {
                format!("TwoQ.Q1Q2Unit[q1={q1},lambda={lambda},b3={b3}]")
            }
            CanonicalFamily::ThreeQ(ThreeQForm::Quantum(qf)) => {
                let p = &self.presentation;
                let pinned = match qf.case {
                    1 => format!("c={},beta={},lambda={}", p.c(), p.beta(), p.lambda()),
                    2 => format!("c={},beta={},b3={}", p.c(), p.beta(), p.b3()),
                    3 => format!("c={},b2={},b3={}", p.c(), p.b2(), p.b3()),
                    _ => format!("b1={},b2={},b3={}", p.b1(), p.b2(), p.b3()),
                };
                let classes: Vec<String> = qf.classes.iter().map(|c| c.to_string()).collect();
                format!(
                    "ThreeQ.Quantum[q={},case={},classes=({}),{}]",
                    qf.q,
                    qf.case,
                    classes.join(","),
                    pinned
                )
            }
            CanonicalFamily::ThreeQ(ThreeQForm::C2 { q1, q2, beta, b2 }) => {
                format!("ThreeQ.C2[q1={q1},q2={q2},beta={beta},b2={b2}]")
            }
            CanonicalFamily::ThreeQ(ThreeQForm::C3 { q1, q3, lambda, b3 }) => {
                format!("ThreeQ.C3[q1={q1},q3={q3},lambda={lambda},b3={b3}]")
            }
            CanonicalFamily::ThreeQ(ThreeQForm::C4 { q1, q2, c, b1 }) => {
                format!("ThreeQ.C4[q1={q1},q2={q2},c={c},b1={b1}]")
            }
            CanonicalFamily::ThreeQ(ThreeQForm::C5 { .. }) => {
                // the weight triple is determined only up to permuting
                // generators, which permutes and inverts entries; compare
                // the lexicographically smallest image
                let qs = PERMS
                    .iter()
                    .map(|&p| {
                        let g = MonomialAffineTransform::permutation(self.presentation.field(), p)
                            .unwrap();
                        let moved = apply(&self.presentation, &g);
                        [moved.q1().clone(), moved.q2().clone(), moved.q3().clone()]
                    })
                    .min_by(|x, y| {
                        x.iter()
                            .zip(y.iter())
                            .map(|(a, b)| a.order_cmp(b))
                            .find(|o| o.is_ne())
                            .unwrap_or(std::cmp::Ordering::Equal)
                    })
                    .unwrap();
                format!("ThreeQ.C5[q1={},q2={},q3={}]", qs[0], qs[1], qs[2])
            }
        }
    }
}

/// Classifies the two-generator algebra x2 x1 = q x1 x2 + a x1 + b x2 + c.
pub fn classify2(
    q: &FieldValue,
    a: &FieldValue,
    b: &FieldValue,
    c: &FieldValue,
) -> Result<CanonicalForm, ClassifyError> {
    if q.is_zero() {
        return Err(ClassifyError::ZeroQ);
    }
    let one = q.kind().one();
    let class = if q.is_one() {
        if a.is_zero() && b.is_zero() {
            if c.is_zero() {
                TwoGenClass::Polynomial
            } else {
                TwoGenClass::Weyl
            }
        } else {
            TwoGenClass::EnvelopingN2
        }
    } else {
        // the shift x1 += b/(1-q), x2 += a/(1-q) removes a and b and moves
        // the constant to c + ab/(1-q); a torus scaling then fixes c to 1
        let c_reduced = c + &a.try_mul(b).unwrap().try_div(&(&one - q)).unwrap();
        if c_reduced.is_zero() {
            TwoGenClass::QuantumPlane { q: q.clone() }
        } else {
            TwoGenClass::QuantumWeyl { q: q.clone() }
        }
    };
    Ok(CanonicalForm {
        family: CanonicalFamily::TwoGen(class),
        closure_flag: false,
    })
}

/// All six permutations in lexicographic one-line order.
pub(crate) const PERMS: [[usize; 3]; 6] = [
    [1, 2, 3],
    [1, 3, 2],
    [2, 1, 3],
    [2, 3, 1],
    [3, 1, 2],
    [3, 2, 1],
];

fn count_not_one(a: &Bq3) -> usize {
    a.qs().iter().filter(|q| !q.is_one()).count()
}

fn q_pattern_matches(a: &Bq3, count: usize) -> bool {
    let not_one: [bool; 3] = std::array::from_fn(|i| !a.qs()[i].is_one());
    match count {
        0 => not_one == [false, false, false],
        1 => not_one == [true, false, false],
        2 => not_one == [true, true, false],
        _ => not_one == [true, true, true],
    }
}

/// Classifies a consistent 3-generator presentation: permutes generators so
/// the q-pattern matches its class, applies the constructive reductions of
/// that class, and returns the canonical data together with the transform
/// trace. The trace composed onto the input reproduces the canonical
/// presentation exactly.
pub fn classify3(a: &Bq3) -> Result<Classification, ClassifyError> {
    if !is_consistent3(a) {
        return Err(ClassifyError::Inconsistent);
    }
    let field = a.field();
    let count = count_not_one(a);

    // lexicographically smallest permutation matching the class pattern
    let mut current = a.clone();
    let mut trace: Vec<MonomialAffineTransform> = Vec::new();
    if !q_pattern_matches(&current, count) {
        let perm = PERMS
            .iter()
            .map(|&p| MonomialAffineTransform::permutation(field, p).unwrap())
            .find(|g| q_pattern_matches(&apply(a, g), count))
            .expect("some permutation sorts the q-pattern");
        current = apply(a, &perm);
        trace.push(perm);
    }

    let classification = match count {
        0 => {
            let form = lie_classify(&current)?;
            Classification {
                form: CanonicalForm {
                    closure_flag: matches!(form.kind, LieKind::Usl2),
                    family: CanonicalFamily::LieType(form),
                },
                presentation: current,
                transforms: trace,
            }
        }
        1 => classify_one_q(current, trace),
        2 => classify_two_q(current, trace),
        _ => classify_three_q(current, trace)?,
    };

    // the trace must reproduce the canonical presentation
    let mut replay = a.clone();
    for g in &classification.transforms {
        replay = apply(&replay, g);
    }
    assert_eq!(
        replay, classification.presentation,
        "transform trace does not reach the canonical presentation"
    );
    Ok(classification)
}

fn push_if_nontrivial(trace: &mut Vec<MonomialAffineTransform>, g: MonomialAffineTransform) {
    if !g.is_identity() {
        trace.push(g);
    }
}

/// q1 != 1, q2 = q3 = 1.
fn classify_one_q(a: Bq3, mut trace: Vec<MonomialAffineTransform>) -> Classification {
    let field = a.field();
    let one = field.one();
    let (a, g) = kill_ab(&a).expect("q1 != 1 in this class");
    push_if_nontrivial(&mut trace, g);
    for (name, v) in [
        ("nu", a.nu()),
        ("gamma", a.gamma()),
        ("beta", a.beta()),
        ("lambda", a.lambda()),
        ("b2", a.b2()),
        ("b3", a.b3()),
    ] {
        assert!(v.is_zero(), "consistency forces {name} = 0 here");
    }

    let mu_plus_alpha = a.mu() + a.alpha();
    if !mu_plus_alpha.is_zero() {
        assert!(a.c().is_zero() && a.b1().is_zero());
        let omega = if a.alpha().is_zero() {
            a.mu().clone()
        } else {
            a.alpha().clone()
        };
        let g = MonomialAffineTransform::scaling([one.clone(), one.clone(), omega]).unwrap();
        let out = apply(&a, &g);
        push_if_nontrivial(&mut trace, g);
        let (alpha, mu) = (out.alpha().clone(), out.mu().clone());
        assert!(
            (alpha.is_one() && mu != one.clone().negated()) || (alpha.is_zero() && mu.is_one())
        );
        Classification {
            form: CanonicalForm {
                family: CanonicalFamily::OneQ(OneQForm::MuAlphaNonzero {
                    q1: out.q1().clone(),
                    alpha,
                    mu,
                }),
                closure_flag: false,
            },
            presentation: out,
            transforms: trace,
        }
    } else {
        // mu = -alpha; c and b1 survive. With q2 = q3 = 1 a shift of x3
        // moves b1 by c times the shift while fixing everything else, so
        // whenever c != 0 the canonical constant is 0.
        let mut a = a;
        if !a.c().is_zero() && !a.b1().is_zero() {
            let m = a.b1().try_div(a.c()).unwrap().negated();
            let g = MonomialAffineTransform::shifting([field.zero(), field.zero(), m]);
            a = apply(&a, &g);
            assert!(a.b1().is_zero());
            trace.push(g);
        }
        let (alpha, c, b1) = (a.alpha().clone(), a.c().clone(), a.b1().clone());
        let (s1, s3) = if alpha.is_zero() {
            match (c.is_zero(), b1.is_zero()) {
                (true, true) => (one.clone(), one.clone()),
                (true, false) => (b1.clone(), one.clone()),
                (false, true) => (one.clone(), c.inv().unwrap()),
                (false, false) => unreachable!("b1 was absorbed above"),
            }
        } else if c.is_zero() {
            if b1.is_zero() {
                (one.clone(), alpha.clone())
            } else {
                (b1.clone(), alpha.clone())
            }
        } else {
            (c.try_mul(&alpha).unwrap(), alpha.clone())
        };
        let g = MonomialAffineTransform::scaling([s1, one.clone(), s3]).unwrap();
        let out = apply(&a, &g);
        push_if_nontrivial(&mut trace, g);
        let (alpha, c, b1) = (out.alpha().clone(), out.c().clone(), out.b1().clone());
        let in_unit_cube = |v: &FieldValue| v.is_zero() || v.is_one();
        assert!(
            in_unit_cube(&alpha)
                && in_unit_cube(&c)
                && in_unit_cube(&b1)
                && !(c.is_one() && b1.is_one()),
            "normalized triple must land in the menu"
        );
        Classification {
            form: CanonicalForm {
                family: CanonicalFamily::OneQ(OneQForm::MuAlphaZero {
                    q1: out.q1().clone(),
                    alpha,
                    c,
                    b1,
                }),
                closure_flag: false,
            },
            presentation: out,
            transforms: trace,
        }
    }
}

/// q1, q2 != 1, q3 = 1.
fn classify_two_q(a: Bq3, mut trace: Vec<MonomialAffineTransform>) -> Classification {
    let field = a.field();
    let one = field.one();
    let (a, g) = kill_ab(&a).expect("q1 != 1 in this class");
    push_if_nontrivial(&mut trace, g);
    for (name, v) in [
        ("nu", a.nu()),
        ("gamma", a.gamma()),
        ("beta", a.beta()),
        ("mu", a.mu()),
        ("c", a.c()),
        ("b1", a.b1()),
        ("b2", a.b2()),
    ] {
        assert!(v.is_zero(), "consistency forces {name} = 0 here");
    }
    let (a, g) = kill_alpha(&a).expect("q2 != 1 in this class");
    push_if_nontrivial(&mut trace, g);

    let unit = a.q1().try_mul(a.q2()).unwrap().is_one();
    if !unit {
        assert!(a.lambda().is_zero() && a.b3().is_zero());
        return Classification {
            form: CanonicalForm {
                family: CanonicalFamily::TwoQ(TwoQForm::NonUnit {
                    q1: a.q1().clone(),
                    q2: a.q2().clone(),
                }),
                closure_flag: false,
            },
            presentation: a,
            transforms: trace,
        };
    }
    let (lambda, b3) = (a.lambda().clone(), a.b3().clone());
    let s2 = if b3.is_zero() {
        one.clone()
    } else {
        b3.clone()
    };
    let s1 = if lambda.is_zero() {
        one.clone()
    } else {
        s2.try_div(&lambda).unwrap()
    };
    let g = MonomialAffineTransform::scaling([s1, s2, one.clone()]).unwrap();
    let out = apply(&a, &g);
    push_if_nontrivial(&mut trace, g);
    let (lambda, b3) = (out.lambda().clone(), out.b3().clone());
    assert!((lambda.is_zero() || lambda.is_one()) && (b3.is_zero() || b3.is_one()));
    Classification {
        form: CanonicalForm {
            family: CanonicalFamily::TwoQ(TwoQForm::Unit {
                q1: out.q1().clone(),
                lambda,
                b3,
            }),
            closure_flag: false,
        },
        presentation: out,
        transforms: trace,
    }
}

/// All q's different from 1.
fn classify_three_q(
    a: Bq3,
    mut trace: Vec<MonomialAffineTransform>,
) -> Result<Classification, ClassifyError> {
    let field = a.field();
    let one = field.one();
    let (a, g) = kill_ab(&a).expect("q1 != 1 in this class");
    push_if_nontrivial(&mut trace, g);
    assert!(a.nu().is_zero() && a.gamma().is_zero());
    let (a, g) = kill_alpha(&a).expect("q2 != 1 in this class");
    push_if_nontrivial(&mut trace, g);
    assert!(a.mu().is_zero(), "consistency forces mu = 0 once alpha = 0");

    let q1_eq_q3 = a.q1() == a.q3();
    let q1q2_unit = a.q1().try_mul(a.q2()).unwrap().is_one();
    let q2q3_unit = a.q2().try_mul(a.q3()).unwrap().is_one();

    if q1_eq_q3 && q1q2_unit {
        let (form, presentation, extra) = quantum_classify(&a)?;
        trace.extend(extra);
        return Ok(Classification {
            form: CanonicalForm {
                family: CanonicalFamily::ThreeQ(ThreeQForm::Quantum(form)),
                closure_flag: false,
            },
            presentation,
            transforms: trace,
        });
    }

    let classification = if q1_eq_q3 {
        // beta and b2 survive; scale them into {0, 1}
        for (name, v) in [
            ("lambda", a.lambda()),
            ("c", a.c()),
            ("b1", a.b1()),
            ("b3", a.b3()),
        ] {
            assert!(v.is_zero(), "consistency forces {name} = 0 here");
        }
        let (beta, b2) = (a.beta().clone(), a.b2().clone());
        let s1 = if b2.is_zero() {
            one.clone()
        } else {
            b2.clone()
        };
        let s2 = if beta.is_zero() {
            one.clone()
        } else {
            s1.try_div(&beta).unwrap()
        };
        let g = MonomialAffineTransform::scaling([s1, s2, one.clone()]).unwrap();
        let out = apply(&a, &g);
        push_if_nontrivial(&mut trace, g);
        Classification {
            form: CanonicalForm {
                family: CanonicalFamily::ThreeQ(ThreeQForm::C2 {
                    q1: out.q1().clone(),
                    q2: out.q2().clone(),
                    beta: out.beta().clone(),
                    b2: out.b2().clone(),
                }),
                closure_flag: false,
            },
            presentation: out,
            transforms: trace,
        }
    } else if q1q2_unit {
        for (name, v) in [
            ("beta", a.beta()),
            ("c", a.c()),
            ("b1", a.b1()),
            ("b2", a.b2()),
        ] {
            assert!(v.is_zero(), "consistency forces {name} = 0 here");
        }
        let (lambda, b3) = (a.lambda().clone(), a.b3().clone());
        let s2 = if b3.is_zero() {
            one.clone()
        } else {
            b3.clone()
        };
        let s1 = if lambda.is_zero() {
            one.clone()
        } else {
            s2.try_div(&lambda).unwrap()
        };
        let g = MonomialAffineTransform::scaling([s1, s2, one.clone()]).unwrap();
        let out = apply(&a, &g);
        push_if_nontrivial(&mut trace, g);
        Classification {
            form: CanonicalForm {
                family: CanonicalFamily::ThreeQ(ThreeQForm::C3 {
                    q1: out.q1().clone(),
                    q3: out.q3().clone(),
                    lambda: out.lambda().clone(),
                    b3: out.b3().clone(),
                }),
                closure_flag: false,
            },
            presentation: out,
            transforms: trace,
        }
    } else if q2q3_unit {
        for (name, v) in [
            ("beta", a.beta()),
            ("lambda", a.lambda()),
            ("b2", a.b2()),
            ("b3", a.b3()),
        ] {
            assert!(v.is_zero(), "consistency forces {name} = 0 here");
        }
        let (c, b1) = (a.c().clone(), a.b1().clone());
        let s1 = if b1.is_zero() {
            one.clone()
        } else {
            b1.clone()
        };
        let s3 = if c.is_zero() {
            one.clone()
        } else {
            s1.try_div(&c).unwrap()
        };
        let g = MonomialAffineTransform::scaling([s1, one.clone(), s3]).unwrap();
        let out = apply(&a, &g);
        push_if_nontrivial(&mut trace, g);
        Classification {
            form: CanonicalForm {
                family: CanonicalFamily::ThreeQ(ThreeQForm::C4 {
                    q1: out.q1().clone(),
                    q2: out.q2().clone(),
                    c: out.c().clone(),
                    b1: out.b1().clone(),
                }),
                closure_flag: false,
            },
            presentation: out,
            transforms: trace,
        }
    } else {
        assert!(
            a.amat().iter().flatten().all(FieldValue::is_zero)
                && a.bvec().iter().all(FieldValue::is_zero),
            "consistency forces the generic three-q case to be a quantum space"
        );
        Classification {
            form: CanonicalForm {
                family: CanonicalFamily::ThreeQ(ThreeQForm::C5 {
                    q1: a.q1().clone(),
                    q2: a.q2().clone(),
                    q3: a.q3().clone(),
                }),
                closure_flag: false,
            },
            presentation: a,
            transforms: trace,
        }
    };
    Ok(classification)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldKind;

    fn q(n: i64, d: i64) -> FieldValue {
        FieldValue::rational(n, d)
    }

    fn z() -> FieldValue {
        FieldKind::Rational.zero()
    }

    #[test]
    fn two_generator_menu() {
        let one = q(1, 1);
        let check = |qv: FieldValue, a: i64, b: i64, c: i64, expect: &str| {
            let form = classify2(&qv, &q(a, 1), &q(b, 1), &q(c, 1)).unwrap();
            assert_eq!(form.family.label(), format!("TwoGen.{expect}"));
        };
        check(one.clone(), 0, 0, 0, "Poly2");
        check(one.clone(), 0, 0, 5, "Weyl");
        check(one.clone(), 1, 3, 0, "Un2");
        check(q(3, 1), 0, 0, 0, "QuantumPlane");
        // a=1, b=2, c=7, q=3: reduced constant 7 + 2/(1-3) = 6 != 0
        check(q(3, 1), 1, 2, 7, "QuantumWeyl");
        // crafted cancellation: c = -ab/(1-q) = 1 for a=1,b=2,q=3
        check(q(3, 1), 1, 2, 1, "QuantumPlane");
        assert_eq!(
            classify2(&z(), &z(), &z(), &z()).unwrap_err(),
            ClassifyError::ZeroQ
        );
    }

    #[test]
    fn classify3_rejects_inconsistent() {
        let one = || q(1, 1);
        let bad = Bq3::new(
            [one(), one(), one()],
            [[z(), z(), z()], [one(), z(), z()], [one(), one(), one()]],
            [z(), z(), z()],
        )
        .unwrap();
        assert_eq!(classify3(&bad).unwrap_err(), ClassifyError::Inconsistent);
    }

    #[test]
    fn one_q_mu_alpha_nonzero() {
        // q = (2,1,1), alpha = mu = 1: normalizes to (1, 1)
        let a = Bq3::new(
            [q(2, 1), q(1, 1), q(1, 1)],
            [[z(), z(), z()], [q(1, 1), z(), z()], [z(), q(1, 1), z()]],
            [z(), z(), z()],
        )
        .unwrap();
        let cls = classify3(&a).unwrap();
        match &cls.form.family {
            CanonicalFamily::OneQ(OneQForm::MuAlphaNonzero { q1, alpha, mu }) => {
                assert_eq!(q1, &q(2, 1));
                assert!(alpha.is_one());
                assert!(mu.is_one());
            }
            other => panic!("wrong family {other:?}"),
        }
    }

    #[test]
    fn one_q_mu_alpha_zero_menu() {
        // alpha = 2, mu = -2, c = 3, b1 = 5: the x3 shift absorbs b1 and
        // scalings land the triple on (1, 1, 0)
        let a = Bq3::new(
            [q(2, 1), q(1, 1), q(1, 1)],
            [
                [z(), z(), q(3, 1)],
                [q(2, 1), z(), z()],
                [z(), q(-2, 1), z()],
            ],
            [q(5, 1), z(), z()],
        )
        .unwrap();
        let cls = classify3(&a).unwrap();
        match &cls.form.family {
            CanonicalFamily::OneQ(OneQForm::MuAlphaZero { alpha, c, b1, .. }) => {
                assert!(alpha.is_one() && c.is_one());
                assert!(b1.is_zero());
            }
            other => panic!("wrong family {other:?}"),
        }
        assert_eq!(cls.presentation.mu(), &q(-1, 1));

        // shifted copies of the same algebra agree on the canonical form
        let shift = crate::transform::MonomialAffineTransform::shifting([z(), z(), q(7, 1)]);
        let moved = crate::transform::apply(&a, &shift);
        let cls2 = classify3(&moved).unwrap();
        assert_eq!(cls.invariant_signature(), cls2.invariant_signature());

        // with c = 0 the constant is a genuine invariant
        let b = Bq3::new(
            [q(2, 1), q(1, 1), q(1, 1)],
            [[z(), z(), z()], [q(2, 1), z(), z()], [z(), q(-2, 1), z()]],
            [q(5, 1), z(), z()],
        )
        .unwrap();
        let cls = classify3(&b).unwrap();
        match &cls.form.family {
            CanonicalFamily::OneQ(OneQForm::MuAlphaZero { alpha, c, b1, .. }) => {
                assert!(alpha.is_one() && c.is_zero() && b1.is_one());
            }
            other => panic!("wrong family {other:?}"),
        }
    }

    #[test]
    fn two_q_families() {
        let a = Bq3::quantum_space(FieldKind::Rational, [q(2, 1), q(3, 1), q(1, 1)]).unwrap();
        let cls = classify3(&a).unwrap();
        assert_eq!(cls.form.family.label(), "TwoQ.Q1Q2NonUnit");

        let b = Bq3::new(
            [q(2, 1), q(1, 2), q(1, 1)],
            [[z(), z(), z()], [z(), z(), z()], [q(3, 1), z(), z()]],
            [z(), z(), q(4, 1)],
        )
        .unwrap();
        let cls = classify3(&b).unwrap();
        match &cls.form.family {
            CanonicalFamily::TwoQ(TwoQForm::Unit { q1, lambda, b3 }) => {
                assert_eq!(q1, &q(2, 1));
                assert!(lambda.is_one() && b3.is_one());
            }
            other => panic!("wrong family {other:?}"),
        }
    }

    #[test]
    fn three_q_non_quantum_cases() {
        // C2: q = (2, 4, 2), q1 q2 = 8 != 1
        let a = Bq3::new(
            [q(2, 1), q(4, 1), q(2, 1)],
            [[z(), z(), z()], [z(), q(3, 1), z()], [z(), z(), z()]],
            [z(), q(5, 1), z()],
        )
        .unwrap();
        let cls = classify3(&a).unwrap();
        match &cls.form.family {
            CanonicalFamily::ThreeQ(ThreeQForm::C2 { beta, b2, .. }) => {
                assert!(beta.is_one() && b2.is_one());
            }
            other => panic!("wrong family {other:?}"),
        }

        // C3: q = (2, 1/2, 3)
        let b = Bq3::new(
            [q(2, 1), q(1, 2), q(3, 1)],
            [[z(), z(), z()], [z(), z(), z()], [q(2, 1), z(), z()]],
            [z(), z(), q(3, 1)],
        )
        .unwrap();
        let cls = classify3(&b).unwrap();
        assert_eq!(cls.form.family.label(), "ThreeQ.C3");

        // C4: q = (2, 3, 1/3)
        let c = Bq3::new(
            [q(2, 1), q(3, 1), q(1, 3)],
            [[z(), z(), q(2, 1)], [z(), z(), z()], [z(), z(), z()]],
            [q(3, 1), z(), z()],
        )
        .unwrap();
        let cls = classify3(&c).unwrap();
        match &cls.form.family {
            CanonicalFamily::ThreeQ(ThreeQForm::C4 { c, b1, .. }) => {
                assert!(c.is_one() && b1.is_one());
            }
            other => panic!("wrong family {other:?}"),
        }

        // C5: q = (2, 4, 3)
        let d = Bq3::quantum_space(FieldKind::Rational, [q(2, 1), q(4, 1), q(3, 1)]).unwrap();
        let cls = classify3(&d).unwrap();
        assert_eq!(cls.form.family.label(), "ThreeQ.C5");
    }

    #[test]
    fn permutation_step_sorts_q_pattern() {
        // one q != 1 but sitting in the q3 slot
        let a = Bq3::quantum_space(FieldKind::Rational, [q(1, 1), q(1, 1), q(7, 1)]).unwrap();
        let cls = classify3(&a).unwrap();
        assert!(matches!(
            &cls.form.family,
            CanonicalFamily::OneQ(_) | CanonicalFamily::TwoQ(_)
        ));
        assert!(!cls.presentation.q1().is_one());
        assert!(cls.presentation.q2().is_one() && cls.presentation.q3().is_one());
    }
}
