//! Classification of Lie-type presentations (all q's equal to 1).
//!
//! A consistent Lie-type presentation is the enveloping algebra of a
//! 4-dimensional Lie algebra spanned by x1, x2, x3 and a central element z,
//! factored by z = 1. The isomorphism type is decided by three invariants
//! computed exactly from the structure constants: the dimension of the
//! centre, nilpotency, and solvability.

use crate::consistency3::{is_consistent3, Bq3};
use crate::field::{FieldKind, FieldValue};

use super::ClassifyError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LieKind {
    /// polynomial algebra in three variables
    P3,
    /// enveloping algebra of sl2
    Usl2,
    /// enveloping algebra of the Heisenberg algebra
    UH3,
    /// [x,y] = z, [x,z] = 0, [y,z] = 1 (Weyl algebra tensor a polynomial ring)
    UNMod,
    /// [x,y] = y with a central third generator
    Un2Kz,
    /// [x,y] = y, [x,z] = 1, [y,z] = 0 (skew extension of the Weyl algebra)
    UMMod,
}

impl LieKind {
    pub fn label(&self) -> &'static str {
        match self {
            LieKind::P3 => "P3",
            LieKind::Usl2 => "Usl2",
            LieKind::UH3 => "UH3",
            LieKind::UNMod => "UN_mod",
            LieKind::Un2Kz => "Un2xKz",
            LieKind::UMMod => "UM_mod",
        }
    }

    pub fn all() -> [LieKind; 6] {
        [
            LieKind::P3,
            LieKind::Usl2,
            LieKind::UH3,
            LieKind::UNMod,
            LieKind::Un2Kz,
            LieKind::UMMod,
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieForm {
    pub kind: LieKind,
    pub dim_center: usize,
    pub nilpotent: bool,
    pub solvable: bool,
}

type Vec4 = [FieldValue; 4];

/// Structure constants of the 4-dimensional bracket on (x1, x2, x3, z).
struct LieAlgebra {
    field: FieldKind,
    /// table[i][j] = [e_{i+1}, e_{j+1}] in coordinates
    table: [[Vec4; 4]; 4],
}

impl LieAlgebra {
    fn from_presentation(a: &Bq3) -> Self {
        let field = a.field();
        let zero = || field.zero();
        let zv = || [zero(), zero(), zero(), zero()];
        let mut table: [[Vec4; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| zv()));
        let rows = [
            (1usize, 0usize, 0usize), // [e2, e1] = row 0 of the matrix
            (2, 0, 1),                // [e3, e1]
            (2, 1, 2),                // [e3, e2]
        ];
        for (i, j, row) in rows {
            let mut v = zv();
            v[..3].clone_from_slice(&a.amat()[row]);
            v[3] = a.bvec()[row].clone();
            table[j][i] = std::array::from_fn(|k| v[k].clone().negated());
            table[i][j] = v;
        }
        LieAlgebra { field, table }
    }

    fn bracket(&self, u: &Vec4, v: &Vec4) -> Vec4 {
        let mut out: Vec4 = std::array::from_fn(|_| self.field.zero());
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let scale = ui.try_mul(vj).unwrap();
                for (k, target) in out.iter_mut().enumerate() {
                    let term = self.table[i][j][k].try_mul(&scale).unwrap();
                    *target = target.try_add(&term).unwrap();
                }
            }
        }
        out
    }

    fn full_basis(&self) -> Vec<Vec4> {
        (0..4)
            .map(|i| {
                std::array::from_fn(|k| {
                    if k == i {
                        self.field.one()
                    } else {
                        self.field.zero()
                    }
                })
            })
            .collect()
    }

    /// Row space of all brackets [u, v], u in a, v in b.
    fn bracket_space(&self, a: &[Vec4], b: &[Vec4]) -> Vec<Vec4> {
        let mut rows = Vec::new();
        for u in a {
            for v in b {
                rows.push(self.bracket(u, v));
            }
        }
        rref(rows, self.field)
    }

    fn center_dim(&self) -> usize {
        // v is central iff for every j, k: sum_i v_i table[i][j][k] = 0
        let mut rows = Vec::new();
        for j in 0..4 {
            for k in 0..4 {
                rows.push(std::array::from_fn(|i| self.table[i][j][k].clone()));
            }
        }
        4 - rref(rows, self.field).len()
    }

    fn is_nilpotent(&self) -> bool {
        let full = self.full_basis();
        let mut layer = self.bracket_space(&full, &full);
        loop {
            if layer.is_empty() {
                return true;
            }
            let next = self.bracket_space(&full, &layer);
            if next == layer {
                return false;
            }
            layer = next;
        }
    }

    fn is_solvable(&self) -> bool {
        let mut layer = {
            let full = self.full_basis();
            self.bracket_space(&full, &full)
        };
        loop {
            if layer.is_empty() {
                return true;
            }
            let next = self.bracket_space(&layer, &layer);
            if next == layer {
                return false;
            }
            layer = next;
        }
    }
}

/// Reduced row echelon form with unit pivots; canonical for the row space,
/// so equality of outputs means equality of spans.
fn rref(rows: Vec<Vec4>, field: FieldKind) -> Vec<Vec4> {
    let mut mat: Vec<Vec4> = rows
        .into_iter()
        .filter(|r| r.iter().any(|v| !v.is_zero()))
        .collect();
    let mut pivot_row = 0;
    for col in 0..4 {
        let Some(found) = (pivot_row..mat.len()).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(pivot_row, found);
        let inv = mat[pivot_row][col].inv().unwrap();
        for cell in mat[pivot_row].iter_mut() {
            *cell = cell.try_mul(&inv).unwrap();
        }
        let pivot = mat[pivot_row].clone();
        for (r, row) in mat.iter_mut().enumerate() {
            if r != pivot_row && !row[col].is_zero() {
                let factor = row[col].clone();
                for (cell, p) in row.iter_mut().zip(pivot.iter()) {
                    *cell = cell.try_sub(&p.try_mul(&factor).unwrap()).unwrap();
                }
            }
        }
        pivot_row += 1;
        if pivot_row == mat.len() {
            break;
        }
    }
    mat.retain(|r| r.iter().any(|v| !v.is_zero()));
    let _ = field;
    mat
}

/// Classifies a consistent presentation with q1 = q2 = q3 = 1 into the six
/// Lie-type families via (dim of centre, nilpotent, solvable).
pub fn lie_classify(a: &Bq3) -> Result<LieForm, ClassifyError> {
    if !a.qs().iter().all(FieldValue::is_one) {
        return Err(ClassifyError::NotLieType);
    }
    if !is_consistent3(a) {
        return Err(ClassifyError::Inconsistent);
    }
    let g = LieAlgebra::from_presentation(a);
    let dim_center = g.center_dim();
    let nilpotent = g.is_nilpotent();
    let solvable = g.is_solvable();
    let kind = match (dim_center, nilpotent, solvable) {
        (4, _, _) => LieKind::P3,
        (2, true, _) => LieKind::UH3,
        (2, false, _) => LieKind::Un2Kz,
        (1, true, _) => LieKind::UNMod,
        (1, false, true) => LieKind::UMMod,
        (1, false, false) => LieKind::Usl2,
        other => unreachable!("impossible invariant triple {other:?}"),
    };
    Ok(LieForm {
        kind,
        dim_center,
        nilpotent,
        solvable,
    })
}

/// The standard model presentation of each Lie-type family.
pub fn lie_model(kind: LieKind, field: FieldKind) -> Bq3 {
    let z = || field.zero();
    let one = || field.one();
    let qs = [one(), one(), one()];
    let (amat, bvec) = match kind {
        LieKind::P3 => (
            [[z(), z(), z()], [z(), z(), z()], [z(), z(), z()]],
            [z(), z(), z()],
        ),
        // [x3,x1] = 2 x1, [x3,x2] = -2 x2, [x2,x1] = -x3
        LieKind::Usl2 => (
            [
                [z(), z(), field.integer(-1)],
                [field.integer(2), z(), z()],
                [z(), field.integer(-2), z()],
            ],
            [z(), z(), z()],
        ),
        // [x2,x1] = x3 central
        LieKind::UH3 => (
            [[z(), z(), one()], [z(), z(), z()], [z(), z(), z()]],
            [z(), z(), z()],
        ),
        // [x2,x1] = x3, [x3,x2] = 1
        LieKind::UNMod => (
            [[z(), z(), one()], [z(), z(), z()], [z(), z(), z()]],
            [z(), z(), one()],
        ),
        // [x2,x1] = x1, x3 central
        LieKind::Un2Kz => (
            [[one(), z(), z()], [z(), z(), z()], [z(), z(), z()]],
            [z(), z(), z()],
        ),
        // [x3,x1] = x1, [x3,x2] = 1
        LieKind::UMMod => (
            [[z(), z(), z()], [one(), z(), z()], [z(), z(), z()]],
            [z(), z(), one()],
        ),
    };
    Bq3::new(qs, amat, bvec).expect("models are valid presentations")
}
