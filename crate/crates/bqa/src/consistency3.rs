//! The explicit PBW-consistency criterion for 3-generator presentations:
//! ten exact residues, one per coefficient of the resolved ambiguity
//! x3 x2 x1, labeled by the monomial they come from. All residues vanish
//! exactly when the ordered monomials form a basis.

use thiserror::Error;

use crate::field::{FieldKind, FieldValue};
use crate::rewrite::BqPresentation;

/// A 3-generator presentation
///
/// ```text
/// x2 x1 - q1 x1 x2 = a x1 + b x2 + c x3 + b1
/// x3 x1 - q2 x1 x3 = alpha x1 + beta x2 + gamma x3 + b2
/// x3 x2 - q3 x2 x3 = lambda x1 + mu x2 + nu x3 + b3
/// ```
///
/// with all q's nonzero. The coefficient matrix rows follow the relations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bq3 {
    qs: [FieldValue; 3],
    amat: [[FieldValue; 3]; 3],
    bvec: [FieldValue; 3],
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Bq3Error {
    #[error("q1, q2, q3 must be nonzero")]
    ZeroQ,
    #[error("entries must all live in one field")]
    MixedFields,
    #[error("expected a 3-generator presentation, found n = {0}")]
    WrongGeneratorCount(usize),
}

impl Bq3 {
    pub fn new(
        qs: [FieldValue; 3],
        amat: [[FieldValue; 3]; 3],
        bvec: [FieldValue; 3],
    ) -> Result<Self, Bq3Error> {
        if qs.iter().any(FieldValue::is_zero) {
            return Err(Bq3Error::ZeroQ);
        }
        let kind = qs[0].kind();
        let uniform = qs.iter().all(|v| v.kind() == kind)
            && amat.iter().flatten().all(|v| v.kind() == kind)
            && bvec.iter().all(|v| v.kind() == kind);
        if !uniform {
            return Err(Bq3Error::MixedFields);
        }
        Ok(Bq3 { qs, amat, bvec })
    }

    /// The quantum space: all linear and constant parts zero.
    pub fn quantum_space(field: FieldKind, qs: [FieldValue; 3]) -> Result<Self, Bq3Error> {
        let z = || field.zero();
        Bq3::new(
            qs,
            [[z(), z(), z()], [z(), z(), z()], [z(), z(), z()]],
            [z(), z(), z()],
        )
    }

    pub fn field(&self) -> FieldKind {
        self.qs[0].kind()
    }

    pub fn q1(&self) -> &FieldValue {
        &self.qs[0]
    }
    pub fn q2(&self) -> &FieldValue {
        &self.qs[1]
    }
    pub fn q3(&self) -> &FieldValue {
        &self.qs[2]
    }
    pub fn qs(&self) -> &[FieldValue; 3] {
        &self.qs
    }
    pub fn a(&self) -> &FieldValue {
        &self.amat[0][0]
    }
    pub fn b(&self) -> &FieldValue {
        &self.amat[0][1]
    }
    pub fn c(&self) -> &FieldValue {
        &self.amat[0][2]
    }
    pub fn alpha(&self) -> &FieldValue {
        &self.amat[1][0]
    }
    pub fn beta(&self) -> &FieldValue {
        &self.amat[1][1]
    }
    pub fn gamma(&self) -> &FieldValue {
        &self.amat[1][2]
    }
    pub fn lambda(&self) -> &FieldValue {
        &self.amat[2][0]
    }
    pub fn mu(&self) -> &FieldValue {
        &self.amat[2][1]
    }
    pub fn nu(&self) -> &FieldValue {
        &self.amat[2][2]
    }
    pub fn amat(&self) -> &[[FieldValue; 3]; 3] {
        &self.amat
    }
    pub fn b1(&self) -> &FieldValue {
        &self.bvec[0]
    }
    pub fn b2(&self) -> &FieldValue {
        &self.bvec[1]
    }
    pub fn b3(&self) -> &FieldValue {
        &self.bvec[2]
    }
    pub fn bvec(&self) -> &[FieldValue; 3] {
        &self.bvec
    }

    pub fn to_presentation(&self) -> BqPresentation {
        BqPresentation::new(
            3,
            self.field(),
            self.qs.to_vec(),
            self.amat.iter().map(|row| row.to_vec()).collect(),
            self.bvec.to_vec(),
        )
        .expect("Bq3 invariants imply a valid presentation")
    }

    pub fn from_presentation(p: &BqPresentation) -> Result<Self, Bq3Error> {
        if p.n() != 3 {
            return Err(Bq3Error::WrongGeneratorCount(p.n()));
        }
        let row = |i: usize, j: usize| -> [FieldValue; 3] {
            [
                p.a(i, j, 1).clone(),
                p.a(i, j, 2).clone(),
                p.a(i, j, 3).clone(),
            ]
        };
        Bq3::new(
            [p.q(2, 1).clone(), p.q(3, 1).clone(), p.q(3, 2).clone()],
            [row(2, 1), row(3, 1), row(3, 2)],
            [p.b(2, 1).clone(), p.b(3, 1).clone(), p.b(3, 2).clone()],
        )
    }
}

/// The ten residues, named after the monomial of x3 x2 x1's two resolutions
/// whose coefficients they compare. The presentation is PBW consistent
/// exactly when all ten vanish.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyResidues {
    pub x1x2: FieldValue,
    pub x1x3: FieldValue,
    pub x2x3: FieldValue,
    pub x1x1: FieldValue,
    pub x2x2: FieldValue,
    pub x3x3: FieldValue,
    pub x1: FieldValue,
    pub x2: FieldValue,
    pub x3: FieldValue,
    pub unit: FieldValue,
}

impl ConsistencyResidues {
    pub fn all_zero(&self) -> bool {
        self.labeled().iter().all(|(_, v)| v.is_zero())
    }

    /// Residues in reporting order with their conventional labels.
    pub fn labeled(&self) -> [(&'static str, &FieldValue); 10] {
        [
            ("X1X2", &self.x1x2),
            ("X1X3", &self.x1x3),
            ("X2X3", &self.x2x3),
            ("X1X1", &self.x1x1),
            ("X2X2", &self.x2x2),
            ("X3X3", &self.x3x3),
            ("X1", &self.x1),
            ("X2", &self.x2),
            ("X3", &self.x3),
            ("1", &self.unit),
        ]
    }
}

/// Evaluates the ten consistency conditions exactly, each as
/// left-hand side minus right-hand side.
pub fn residues(p: &Bq3) -> ConsistencyResidues {
    let one = p.field().one();
    let (q1, q2, q3) = (p.q1(), p.q2(), p.q3());
    let (a, b, c) = (p.a(), p.b(), p.c());
    let (al, be, ga) = (p.alpha(), p.beta(), p.gamma());
    let (la, mu, nu) = (p.lambda(), p.mu(), p.nu());
    let (b1, b2, b3) = (p.b1(), p.b2(), p.b3());

    let one_m = |q: &FieldValue| &one - q; // 1 - q
    let q1q2 = q1 * q2;
    let q2q3 = q2 * q3;

    ConsistencyResidues {
        // (1 - q3) alpha = (1 - q2) mu
        x1x2: &(&one_m(q3) * al) - &(&one_m(q2) * mu),
        // (1 - q3) a = (1 - q1) nu
        x1x3: &(&one_m(q3) * a) - &(&one_m(q1) * nu),
        // (1 - q2) b = (1 - q1) gamma
        x2x3: &(&one_m(q2) * b) - &(&one_m(q1) * ga),
        // (1 - q1 q2) lambda = 0
        x1x1: &one_m(&q1q2) * la,
        // (q1 - q3) beta = 0
        x2x2: &(q1 - q3) * be,
        // (1 - q2 q3) c = 0
        x3x3: &one_m(&q2q3) * c,
        // ((1-q3) alpha - mu) a + (b + q1 gamma) lambda - nu alpha
        //   + (q1 q2 - 1) b3 = 0
        x1: &(&(&(&(&one_m(q3) * al) - mu) * a) + &(&(b + &(q1 * ga)) * la))
            - &(&(nu * al) - &(&(&q1q2 - &one) * b3)),
        // (a - nu) beta + q1 gamma mu - q3 alpha b + (q1 - q3) b2 = 0
        x2: &(&(&(a - nu) * be) + &(&(q1 * ga) * mu)) - &(&(&(q3 * al) * b) - &(&(q1 - q3) * b2)),
        // (a + (q1 - 1) nu) gamma + b nu - (mu + q3 alpha) c
        //   + (1 - q2 q3) b1 = 0
        x3: &(&(&(a + &(&(q1 - &one) * nu)) * ga) + &(b * nu))
            - &(&(&(mu + &(q3 * al)) * c) - &(&one_m(&q2q3) * b1)),
        // -(mu + q3 alpha) b1 + (a - nu) b2 + (b + q1 gamma) b3 = 0
        unit: &(&(&(a - nu) * b2) + &(&(b + &(q1 * ga)) * b3)) - &(&(mu + &(q3 * al)) * b1),
    }
}

pub fn is_consistent3(p: &Bq3) -> bool {
    residues(p).all_zero()
}
