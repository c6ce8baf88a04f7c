//! Bi-quadratic presentations and rewriting: reduction of free-algebra
//! elements to ordered normal form, the triple-overlap consistency check
//! (the independent oracle used against the explicit 3-generator criterion),
//! and normal forms with respect to reordered generator sequences.
//!
//! Reduction is stateless and deterministic: concurrent calls on shared
//! presentations always return identical results.

use thiserror::Error;

use crate::field::{FieldKind, FieldValue};
use crate::freealg::{NcPoly, Word};

/// Relations x_i x_j - q_ij x_j x_i = sum_k a_ijk x_k + b_ij for i > j,
/// with every q_ij invertible. Pairs are stored row-major:
/// (2,1), (3,1), (3,2), (4,1), ...
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BqPresentation {
    n: usize,
    field: FieldKind,
    q: Vec<FieldValue>,
    a: Vec<Vec<FieldValue>>,
    b: Vec<FieldValue>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Invalid(String),
}

fn invalid(msg: impl Into<String>) -> PresentationError {
    PresentationError::Invalid(msg.into())
}

pub(crate) fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(j < i && j >= 1);
    (i - 2) * (i - 1) / 2 + (j - 1)
}

pub fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

impl BqPresentation {
    pub fn new(
        n: usize,
        field: FieldKind,
        q: Vec<FieldValue>,
        a: Vec<Vec<FieldValue>>,
        b: Vec<FieldValue>,
    ) -> Result<Self, PresentationError> {
        let pairs = pair_count(n);
        if n < 2 {
            return Err(invalid("at least two generators required"));
        }
        if q.len() != pairs || a.len() != pairs || b.len() != pairs {
            return Err(invalid(format!(
                "expected {pairs} entries for q, A and B with n={n}"
            )));
        }
        if a.iter().any(|row| row.len() != n) {
            return Err(invalid(format!("each A row must have {n} entries")));
        }
        for v in q.iter().chain(b.iter()).chain(a.iter().flatten()) {
            if v.kind() != field {
                return Err(invalid("presentation entry from the wrong field"));
            }
        }
        if q.iter().any(FieldValue::is_zero) {
            return Err(invalid("every q entry must be nonzero"));
        }
        Ok(BqPresentation { n, field, q, a, b })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn q(&self, i: usize, j: usize) -> &FieldValue {
        &self.q[pair_index(i, j)]
    }

    pub fn a(&self, i: usize, j: usize, k: usize) -> &FieldValue {
        &self.a[pair_index(i, j)][k - 1]
    }

    pub fn b(&self, i: usize, j: usize) -> &FieldValue {
        &self.b[pair_index(i, j)]
    }

    /// Right-hand side of the rewrite rule for the descent x_i x_j (i > j):
    /// q_ij x_j x_i + sum_k a_ijk x_k + b_ij.
    pub fn rule_rhs(&self, i: usize, j: usize) -> NcPoly {
        let mut rhs = NcPoly::monomial(
            self.n,
            Word::from_letters(vec![j as u32, i as u32]),
            self.q(i, j).clone(),
        );
        for k in 1..=self.n {
            let c = self.a(i, j, k);
            if !c.is_zero() {
                rhs.add_term(Word::single(k as u32), c.clone());
            }
        }
        let c = self.b(i, j);
        if !c.is_zero() {
            rhs.add_term(Word::empty(), c.clone());
        }
        rhs
    }
}

/// Which descent of the current deglex-largest word gets rewritten. Both
/// strategies terminate; on consistent presentations they agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReductionStrategy {
    #[default]
    LeftmostDescent,
    RightmostDescent,
}

/// Normal form under the canonical strategy (leftmost descent of the
/// deglex-largest word).
pub fn reduce(f: &NcPoly, p: &BqPresentation) -> NcPoly {
    reduce_with(f, p, ReductionStrategy::LeftmostDescent)
}

/// Rewrites until only ordered monomials remain. Each step replaces one
/// descent x_i x_j (i > j) using the defining relation, which strictly
/// lowers the word in deglex, so this terminates for any presentation.
pub fn reduce_with(f: &NcPoly, p: &BqPresentation, strategy: ReductionStrategy) -> NcPoly {
    assert_eq!(f.n(), p.n, "polynomial and presentation disagree on n");
    assert_eq!(
        f.field(),
        p.field,
        "polynomial and presentation fields differ"
    );
    let mut out = NcPoly::zero(p.n, p.field);
    let mut pending = f.clone();
    while let Some((w, c)) = pending.pop_leading() {
        let descent = match strategy {
            ReductionStrategy::LeftmostDescent => w.leftmost_descent(),
            ReductionStrategy::RightmostDescent => w.rightmost_descent(),
        };
        let Some(k) = descent else {
            out.add_term(w, c);
            continue;
        };
        let letters = w.letters();
        let (i, j) = (letters[k] as usize, letters[k + 1] as usize);
        let prefix = &letters[..k];
        let suffix = &letters[k + 2..];
        let glue = |mid: &[u32]| {
            let mut v = Vec::with_capacity(prefix.len() + mid.len() + suffix.len());
            v.extend_from_slice(prefix);
            v.extend_from_slice(mid);
            v.extend_from_slice(suffix);
            Word::from_letters(v)
        };
        pending.add_term(
            glue(&[j as u32, i as u32]),
            c.try_mul(p.q(i, j)).expect("field mismatch"),
        );
        for m in 1..=p.n {
            let a = p.a(i, j, m);
            if !a.is_zero() {
                pending.add_term(glue(&[m as u32]), c.try_mul(a).expect("field mismatch"));
            }
        }
        let b = p.b(i, j);
        if !b.is_zero() {
            pending.add_term(glue(&[]), c.try_mul(b).expect("field mismatch"));
        }
    }
    out
}

/// One unresolved ambiguity x_k x_j x_i (i < j < k): the two resolutions
/// disagree by `difference`, a combination of ordered monomials of degree
/// at most 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapReport {
    pub k: usize,
    pub j: usize,
    pub i: usize,
    pub difference: NcPoly,
}

/// Resolves every word x_k x_j x_i (i < j < k) two ways: first rewriting
/// the left pair (x_k x_j) versus first rewriting the right pair (x_j x_i),
/// each continued to normal form. Reports the triples where the outcomes
/// differ; an empty list is exactly PBW consistency.
pub fn overlap_check(p: &BqPresentation) -> Vec<OverlapReport> {
    let mut reports = Vec::new();
    for k in 3..=p.n {
        for j in 2..k {
            for i in 1..j {
                let xi = NcPoly::generator(p.n, p.field, i as u32);
                let xk = NcPoly::generator(p.n, p.field, k as u32);
                let left = reduce(&p.rule_rhs(k, j).mul(&xi), p);
                let right = reduce(&xk.mul(&p.rule_rhs(j, i)), p);
                let difference = left.sub(&right);
                if !difference.is_zero() {
                    assert!(
                        difference.degree().unwrap_or(0) <= 2,
                        "cubic terms must cancel in overlap resolutions"
                    );
                    assert!(difference.terms().all(|(w, _)| w.is_ordered()));
                    reports.push(OverlapReport {
                        k,
                        j,
                        i,
                        difference,
                    });
                }
            }
        }
    }
    reports
}

pub fn pbw_consistent(p: &BqPresentation) -> bool {
    overlap_check(p).is_empty()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReorderError {
    #[error("presentation is not PBW consistent; reordered normal forms are undefined")]
    Inconsistent,
    #[error("`{0:?}` is not a permutation of 1..=n")]
    BadPermutation(Vec<usize>),
}

/// Normal form of `f` with respect to the reordered generator sequence
/// x_{sigma(1)}, ..., x_{sigma(n)}: the result is a combination of words
/// x_{sigma(1)}^{a_1} ... x_{sigma(n)}^{a_n}. Relations are inverted as
/// needed, which uses that every q is a unit.
pub fn reduce_in_order(
    f: &NcPoly,
    p: &BqPresentation,
    sigma: &[usize],
) -> Result<NcPoly, ReorderError> {
    let n = p.n;
    let mut seen = vec![false; n];
    if sigma.len() != n
        || !sigma
            .iter()
            .all(|&s| (1..=n).contains(&s) && !std::mem::replace(&mut seen[s - 1], true))
    {
        return Err(ReorderError::BadPermutation(sigma.to_vec()));
    }
    if !pbw_consistent(p) {
        return Err(ReorderError::Inconsistent);
    }
    let mut inv = vec![0usize; n];
    for (t, &s) in sigma.iter().enumerate() {
        inv[s - 1] = t + 1;
    }

    // Relabel y_t := x_{sigma(t)} and re-solve each relation for its
    // y-descent; the relabeled presentation is again bi-quadratic.
    let pairs = pair_count(n);
    let mut q = Vec::with_capacity(pairs);
    let mut a = Vec::with_capacity(pairs);
    let mut b = Vec::with_capacity(pairs);
    for s in 2..=n {
        for t in 1..s {
            let (oi, oj) = (sigma[s - 1], sigma[t - 1]);
            let relabel_row = |row_i: usize, row_j: usize| -> Vec<FieldValue> {
                let mut out = vec![p.field.zero(); n];
                for m in 1..=n {
                    out[inv[m - 1] - 1] = p.a(row_i, row_j, m).clone();
                }
                out
            };
            if oi > oj {
                q.push(p.q(oi, oj).clone());
                a.push(relabel_row(oi, oj));
                b.push(p.b(oi, oj).clone());
            } else {
                // x_oi x_oj = q^{-1} (x_oj x_oi - sum a_m x_m - b)
                let qinv = p.q(oj, oi).inv().expect("q entries are units");
                q.push(qinv.clone());
                let row = relabel_row(oj, oi);
                a.push(
                    row.into_iter()
                        .map(|v| (v.negated()).try_mul(&qinv).unwrap())
                        .collect(),
                );
                b.push(p.b(oj, oi).clone().negated().try_mul(&qinv).unwrap());
            }
        }
    }
    let relabeled = BqPresentation::new(n, p.field, q, a, b).expect("relabeling preserves shape");

    let map_letters = |poly: &NcPoly, table: &[usize]| -> NcPoly {
        let mut out = NcPoly::zero(n, p.field);
        for (w, c) in poly.terms() {
            let letters = w
                .letters()
                .iter()
                .map(|&l| table[(l - 1) as usize] as u32)
                .collect();
            out.add_term(Word::from_letters(letters), c.clone());
        }
        out
    };
    let f_y = map_letters(f, &inv);
    let nf = reduce(&f_y, &relabeled);
    Ok(map_letters(&nf, sigma))
}

// ---- presentation files ----

/// Parses the `key = value` presentation format:
///
/// ```text
/// n = 3
/// field = "Q"            # or "fp:7"
/// q = [2, 3, 5]          # row-major lower triangle: q21, q31, q32
/// A = [[0,0,0],[0,0,0],[0,0,0]]
/// B = [0, 0, 0]
/// ```
///
/// For n = 3 the scalar aliases q1,q2,q3, a,b,c, alpha,beta,gamma,
/// lambda,mu,nu and b1,b2,b3 are accepted. Omitted A and B default to zero.
/// Statements are separated by newlines or `;`, comments start with `#`.
pub fn parse_presentation(text: &str) -> Result<BqPresentation, PresentationError> {
    let mut stmts: Vec<(usize, String, String)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        for stmt in line.split(';') {
            let stmt = stmt.trim();
            if stmt.is_empty() {
                continue;
            }
            let Some((key, value)) = stmt.split_once('=') else {
                return Err(PresentationError::Parse {
                    line: lineno + 1,
                    message: format!("expected `key = value`, found `{stmt}`"),
                });
            };
            stmts.push((lineno + 1, key.trim().to_string(), value.trim().to_string()));
        }
    }

    let mut field = FieldKind::Rational;
    let mut n: Option<usize> = None;
    for (line, key, value) in &stmts {
        match key.as_str() {
            "field" => {
                field = FieldKind::parse(value.trim_matches('"')).map_err(|e| {
                    PresentationError::Parse {
                        line: *line,
                        message: e.to_string(),
                    }
                })?;
            }
            "n" => {
                n = Some(value.parse().map_err(|_| PresentationError::Parse {
                    line: *line,
                    message: format!("bad generator count `{value}`"),
                })?);
            }
            _ => {}
        }
    }
    let n = n.ok_or_else(|| invalid("missing `n`"))?;
    if n < 2 {
        return Err(invalid("n must be at least 2"));
    }
    let pairs = pair_count(n);

    let scalar = |line: usize, s: &str| -> Result<FieldValue, PresentationError> {
        field
            .parse_literal(s)
            .map_err(|e| PresentationError::Parse {
                line,
                message: format!("bad literal `{s}`: {e}"),
            })
    };

    let mut q: Vec<Option<FieldValue>> = vec![None; pairs];
    let mut a: Vec<Vec<Option<FieldValue>>> = vec![vec![None; n]; pairs];
    let mut b: Vec<Option<FieldValue>> = vec![None; pairs];

    let set = |slot: &mut Option<FieldValue>,
               value: FieldValue,
               line: usize,
               what: &str|
     -> Result<(), PresentationError> {
        if slot.is_some() {
            return Err(PresentationError::Parse {
                line,
                message: format!("{what} assigned twice"),
            });
        }
        *slot = Some(value);
        Ok(())
    };

    // alias -> (pair, column) into A; pairs are (2,1), (3,1), (3,2)
    let a_alias = |name: &str| -> Option<(usize, usize)> {
        let names = [
            "a", "b", "c", "alpha", "beta", "gamma", "lambda", "mu", "nu",
        ];
        names
            .iter()
            .position(|&m| m == name)
            .map(|idx| (idx / 3, idx % 3))
    };

    for (line, key, value) in &stmts {
        let line = *line;
        match key.as_str() {
            "n" | "field" => {}
            "q" => {
                let items = split_list(value, line)?;
                if items.len() != pairs {
                    return Err(PresentationError::Parse {
                        line,
                        message: format!("q must list {pairs} entries"),
                    });
                }
                for (idx, item) in items.iter().enumerate() {
                    set(&mut q[idx], scalar(line, item)?, line, "q entry")?;
                }
            }
            "A" => {
                let rows = split_list(value, line)?;
                if rows.len() != pairs {
                    return Err(PresentationError::Parse {
                        line,
                        message: format!("A must list {pairs} rows"),
                    });
                }
                for (ri, row) in rows.iter().enumerate() {
                    let items = split_list(row, line)?;
                    if items.len() != n {
                        return Err(PresentationError::Parse {
                            line,
                            message: format!("each A row must list {n} entries"),
                        });
                    }
                    for (ci, item) in items.iter().enumerate() {
                        set(&mut a[ri][ci], scalar(line, item)?, line, "A entry")?;
                    }
                }
            }
            "B" => {
                let items = split_list(value, line)?;
                if items.len() != pairs {
                    return Err(PresentationError::Parse {
                        line,
                        message: format!("B must list {pairs} entries"),
                    });
                }
                for (idx, item) in items.iter().enumerate() {
                    set(&mut b[idx], scalar(line, item)?, line, "B entry")?;
                }
            }
            other => {
                let aliases_need_n3 = || -> Result<(), PresentationError> {
                    if n != 3 {
                        return Err(PresentationError::Parse {
                            line,
                            message: format!("alias `{other}` is only valid for n = 3"),
                        });
                    }
                    Ok(())
                };
                if let Some(idx) = other
                    .strip_prefix('q')
                    .and_then(|d| d.parse::<usize>().ok())
                    .filter(|&d| (1..=3).contains(&d))
                {
                    aliases_need_n3()?;
                    set(&mut q[idx - 1], scalar(line, value)?, line, "q entry")?;
                } else if let Some((pair, col)) = a_alias(other) {
                    aliases_need_n3()?;
                    set(&mut a[pair][col], scalar(line, value)?, line, "A entry")?;
                } else if let Some(idx) = other
                    .strip_prefix('b')
                    .and_then(|d| d.parse::<usize>().ok())
                    .filter(|&d| (1..=3).contains(&d))
                {
                    aliases_need_n3()?;
                    set(&mut b[idx - 1], scalar(line, value)?, line, "B entry")?;
                } else {
                    return Err(PresentationError::Parse {
                        line,
                        message: format!("unknown key `{other}`"),
                    });
                }
            }
        }
    }

    let q: Vec<FieldValue> = q
        .into_iter()
        .enumerate()
        .map(|(idx, v)| v.ok_or_else(|| invalid(format!("q entry {} missing", idx + 1))))
        .collect::<Result<_, _>>()?;
    let a = a
        .into_iter()
        .map(|row| row.into_iter().map(|v| v.unwrap_or(field.zero())).collect())
        .collect();
    let b = b.into_iter().map(|v| v.unwrap_or(field.zero())).collect();
    BqPresentation::new(n, field, q, a, b)
}

/// Splits a bracketed list `[a, b, [c, d]]` into top-level items.
fn split_list(value: &str, line: usize) -> Result<Vec<String>, PresentationError> {
    let s = value.trim();
    let inner = s
        .strip_prefix('[')
        .and_then(|rest| rest.strip_suffix(']'))
        .ok_or_else(|| PresentationError::Parse {
            line,
            message: format!("expected a bracketed list, found `{s}`"),
        })?;
    let mut items = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for ch in inner.chars() {
        match ch {
            '[' => {
                depth += 1;
                current.push(ch);
            }
            ']' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| PresentationError::Parse {
                        line,
                        message: "unbalanced brackets".into(),
                    })?;
                current.push(ch);
            }
            ',' if depth == 0 => {
                items.push(current.trim().to_string());
                current.clear();
            }
            _ => current.push(ch),
        }
    }
    if depth != 0 {
        return Err(PresentationError::Parse {
            line,
            message: "unbalanced brackets".into(),
        });
    }
    if !current.trim().is_empty() {
        items.push(current.trim().to_string());
    }
    Ok(items)
}
