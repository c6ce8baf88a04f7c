//! Words in the free monoid on generators x1..xn, the degree-by-lexicographic
//! order, and exact-coefficient polynomials of the free algebra, plus a small
//! expression parser and renderer.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Signed;
use thiserror::Error;

use crate::field::{FieldKind, FieldValue};

/// A word in the generators, stored as 1-based indices. The empty word is
/// the unit monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<u32>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn single(i: u32) -> Self {
        Word { letters: vec![i] }
    }

    pub fn from_letters(letters: Vec<u32>) -> Self {
        Word { letters }
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Whether the letters are nondecreasing, i.e. the word is an ordered
    /// monomial x1^a1 ... xn^an.
    pub fn is_ordered(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] <= w[1])
    }

    /// Position of the leftmost descent `letters[k] > letters[k+1]`, if any.
    pub fn leftmost_descent(&self) -> Option<usize> {
        self.letters.windows(2).position(|w| w[0] > w[1])
    }

    pub fn rightmost_descent(&self) -> Option<usize> {
        (0..self.letters.len().saturating_sub(1))
            .rev()
            .find(|&k| self.letters[k] > self.letters[k + 1])
    }

    /// Exponent vector when the word is ordered.
    pub fn exponents(&self, n: usize) -> Vec<usize> {
        let mut e = vec![0; n];
        for &l in &self.letters {
            e[(l - 1) as usize] += 1;
        }
        e
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree-by-lexicographic comparison with x1 < x2 < ... < xn.
pub fn deglex_compare(u: &Word, v: &Word) -> Ordering {
    u.cmp(v)
}

/// An element of the free algebra K<x1,...,xn>: finitely many words with
/// nonzero exact coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NcPoly {
    n: usize,
    field: FieldKind,
    terms: BTreeMap<Word, FieldValue>,
}

impl NcPoly {
    pub fn zero(n: usize, field: FieldKind) -> Self {
        NcPoly {
            n,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize, field: FieldKind) -> Self {
        Self::constant(n, field.one())
    }

    pub fn constant(n: usize, c: FieldValue) -> Self {
        let mut poly = NcPoly::zero(n, c.kind());
        poly.add_term(Word::empty(), c);
        poly
    }

    pub fn generator(n: usize, field: FieldKind, i: u32) -> Self {
        assert!(i >= 1 && i as usize <= n, "generator index out of range");
        let mut poly = NcPoly::zero(n, field);
        poly.add_term(Word::single(i), field.one());
        poly
    }

    pub fn monomial(n: usize, word: Word, c: FieldValue) -> Self {
        let mut poly = NcPoly::zero(n, c.kind());
        poly.add_term(word, c);
        poly
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending deglex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &FieldValue)> {
        self.terms.iter()
    }

    /// Terms leading-first (descending deglex), the canonical iteration and
    /// rendering order.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Word, &FieldValue)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, w: &Word) -> Option<&FieldValue> {
        self.terms.get(w)
    }

    pub fn leading_word(&self) -> Option<&Word> {
        self.terms.keys().next_back()
    }

    /// Largest word by deglex, removed from the polynomial.
    pub(crate) fn pop_leading(&mut self) -> Option<(Word, FieldValue)> {
        self.terms.pop_last()
    }

    /// Total degree (length of the leading word); zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Word::len)
    }

    /// Adds `c * w`, dropping the entry when the coefficient cancels.
    pub fn add_term(&mut self, w: Word, c: FieldValue) {
        assert_eq!(c.kind(), self.field, "coefficient from the wrong field");
        debug_assert!(
            w.letters().iter().all(|&l| l >= 1 && l as usize <= self.n),
            "word uses out-of-range generators"
        );
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().try_add(&c).expect("field mismatch");
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_compatible(&self, other: &NcPoly) {
        assert_eq!(self.n, other.n, "mixed generator counts");
        assert_eq!(self.field, other.field, "mixed coefficient fields");
    }

    pub fn add(&self, other: &NcPoly) -> NcPoly {
        self.check_compatible(other);
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &NcPoly) -> NcPoly {
        self.check_compatible(other);
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone().negated());
        }
        out
    }

    pub fn neg(&self) -> NcPoly {
        let mut out = NcPoly::zero(self.n, self.field);
        for (w, c) in &self.terms {
            out.terms.insert(w.clone(), c.clone().negated());
        }
        out
    }

    pub fn scale(&self, c: &FieldValue) -> NcPoly {
        assert_eq!(c.kind(), self.field, "scalar from the wrong field");
        let mut out = NcPoly::zero(self.n, self.field);
        if c.is_zero() {
            return out;
        }
        for (w, k) in &self.terms {
            out.terms
                .insert(w.clone(), k.try_mul(c).expect("field mismatch"));
        }
        out
    }

    /// Free-algebra product: bilinear extension of word concatenation. No
    /// reordering or reduction is applied.
    pub fn mul(&self, other: &NcPoly) -> NcPoly {
        self.check_compatible(other);
        let mut out = NcPoly::zero(self.n, self.field);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a.try_mul(b).expect("field mismatch"));
            }
        }
        out
    }

    /// Replaces generator i by `images[i-1]` in every word, multiplying
    /// left to right.
    pub fn substitute(&self, images: &[NcPoly]) -> NcPoly {
        assert_eq!(images.len(), self.n, "one image per generator required");
        let target_n = images.first().map(|p| p.n).unwrap_or(self.n);
        let mut out = NcPoly::zero(target_n, self.field);
        for (w, c) in &self.terms {
            let mut prod = NcPoly::constant(target_n, c.clone());
            for &l in w.letters() {
                prod = prod.mul(&images[(l - 1) as usize]);
            }
            out = out.add(&prod);
        }
        out
    }
}

fn write_word(f: &mut fmt::Formatter<'_>, w: &Word) -> fmt::Result {
    let mut first = true;
    let mut i = 0;
    let letters = w.letters();
    while i < letters.len() {
        let l = letters[i];
        let mut run = 1;
        while i + run < letters.len() && letters[i + run] == l {
            run += 1;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if run == 1 {
            write!(f, "x{l}")?;
        } else {
            write!(f, "x{l}^{run}")?;
        }
        i += run;
    }
    Ok(())
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in self.terms_desc() {
            // Only rationals carry a sign worth folding into the separator.
            let (neg, mag) = match c {
                FieldValue::Q(q) if q.is_negative() => (true, c.clone().negated()),
                _ => (false, c.clone()),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if w.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write_word(f, w)?;
            } else {
                write!(f, "{mag}*")?;
                write_word(f, w)?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at {line}:{col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

fn error_at(text: &str, pos: usize, message: impl Into<String>) -> ParseError {
    let mut line = 1;
    let mut col = 1;
    for (i, ch) in text.char_indices() {
        if i >= pos {
            break;
        }
        if ch == '\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
    }
    ParseError {
        line,
        col,
        message: message.into(),
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Number(String),
    Ident(String),
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

fn lex(text: &str) -> Result<Lexer, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '+' => {
                toks.push((Tok::Plus, i));
                i += 1;
            }
            '-' => {
                toks.push((Tok::Minus, i));
                i += 1;
            }
            '*' => {
                toks.push((Tok::Star, i));
                i += 1;
            }
            '/' => {
                toks.push((Tok::Slash, i));
                i += 1;
            }
            '^' => {
                toks.push((Tok::Caret, i));
                i += 1;
            }
            '(' => {
                toks.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, i));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                toks.push((Tok::Number(text[start..i].to_string()), start));
            }
            'a'..='z' | 'A'..='Z' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                toks.push((Tok::Ident(text[start..i].to_string()), start));
            }
            _ => return Err(error_at(text, i, format!("unexpected character `{c}`"))),
        }
    }
    Ok(Lexer { toks, pos: 0 })
}

struct Parser<'a> {
    text: &'a str,
    lexer: Lexer,
    n: usize,
    field: FieldKind,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.lexer.toks.get(self.lexer.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.lexer
            .toks
            .get(self.lexer.pos)
            .map(|(_, p)| *p)
            .unwrap_or(self.text.len())
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.lexer.toks.get(self.lexer.pos).cloned();
        self.lexer.pos += 1;
        t.map(|(t, _)| t)
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        error_at(self.text, self.here(), msg)
    }

    fn expr(&mut self) -> Result<NcPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<NcPoly, ParseError> {
        let mut acc = self.signed()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.mul(&self.signed()?);
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let pos = self.here();
                    let rhs = self.signed()?;
                    let scalar = as_constant(&rhs).ok_or_else(|| {
                        error_at(self.text, pos, "division only by a nonzero scalar")
                    })?;
                    let inv = scalar
                        .inv()
                        .map_err(|_| error_at(self.text, pos, "division by zero"))?;
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    // unary minus binds looser than ^: -x2^2 is -(x2^2)
    fn signed(&mut self) -> Result<NcPoly, ParseError> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.bump();
            return Ok(self.signed()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<NcPoly, ParseError> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.bump();
            let pos = self.here();
            match self.bump() {
                Some(Tok::Number(d)) => {
                    let e: u32 = d
                        .parse()
                        .map_err(|_| error_at(self.text, pos, "exponent out of range"))?;
                    let mut acc = NcPoly::one(self.n, self.field);
                    for _ in 0..e {
                        acc = acc.mul(&base);
                    }
                    Ok(acc)
                }
                _ => Err(error_at(
                    self.text,
                    pos,
                    "expected a nonnegative integer exponent",
                )),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<NcPoly, ParseError> {
        let pos = self.here();
        match self.bump() {
            Some(Tok::Number(d)) => {
                let c = self
                    .field
                    .parse_literal(&d)
                    .map_err(|e| error_at(self.text, pos, e.to_string()))?;
                Ok(NcPoly::constant(self.n, c))
            }
            Some(Tok::Ident(name)) => {
                let idx = name
                    .strip_prefix('x')
                    .and_then(|d| d.parse::<u32>().ok())
                    .ok_or_else(|| {
                        error_at(self.text, pos, format!("unknown identifier `{name}`"))
                    })?;
                if idx < 1 || idx as usize > self.n {
                    return Err(error_at(
                        self.text,
                        pos,
                        format!("generator index out of range: x{idx} with n={}", self.n),
                    ));
                }
                Ok(NcPoly::generator(self.n, self.field, idx))
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(error_at(self.text, pos, "unclosed parenthesis")),
                }
            }
            Some(t) => Err(error_at(self.text, pos, format!("unexpected token {t:?}"))),
            None => Err(error_at(self.text, pos, "unexpected end of input")),
        }
    }
}

fn as_constant(p: &NcPoly) -> Option<FieldValue> {
    if p.is_zero() {
        return Some(p.field().zero());
    }
    if p.num_terms() == 1 {
        if let Some(c) = p.coefficient(&Word::empty()) {
            return Some(c.clone());
        }
    }
    None
}

/// Parses `+ - * / ^` expressions over generators x1..xn with exact scalar
/// literals; `*` is noncommutative concatenation.
pub fn parse_expr(text: &str, n: usize, field: FieldKind) -> Result<NcPoly, ParseError> {
    let lexer = lex(text)?;
    let mut parser = Parser {
        text,
        lexer,
        n,
        field,
    };
    let poly = parser.expr()?;
    if parser.peek().is_some() {
        return Err(parser.err("trailing input after expression"));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(letters: &[u32]) -> Word {
        Word::from_letters(letters.to_vec())
    }

    #[test]
    fn deglex_examples() {
        // length dominates
        assert_eq!(deglex_compare(&w(&[1, 3]), &w(&[2, 1, 1])), Ordering::Less);
        assert_eq!(deglex_compare(&w(&[1, 2]), &w(&[1, 2])), Ordering::Equal);
        // first letter decides at equal length
        assert_eq!(deglex_compare(&w(&[2, 1]), &w(&[1, 3])), Ordering::Greater);
    }

    #[test]
    fn deglex_total_order_compatible_with_concatenation() {
        // exhaustive over words of length <= 4 on 3 letters
        let mut words = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..4 {
            let mut next = Vec::new();
            for u in &layer {
                for l in 1..=3u32 {
                    let mut v = u.letters().to_vec();
                    v.push(l);
                    next.push(w(&v));
                }
            }
            words.extend(next.iter().cloned());
            layer = next;
        }
        let exts: Vec<Word> = words.iter().filter(|u| u.len() <= 2).cloned().collect();
        for a in &words {
            for b in &words {
                let ord = deglex_compare(a, b);
                if ord == Ordering::Less {
                    for e in &exts {
                        assert_eq!(deglex_compare(&e.concat(a), &e.concat(b)), Ordering::Less);
                        assert_eq!(deglex_compare(&a.concat(e), &b.concat(e)), Ordering::Less);
                    }
                }
            }
        }
    }

    #[test]
    fn multiplication_does_not_reorder() {
        let k = FieldKind::Rational;
        let x1 = NcPoly::generator(2, k, 1);
        let x2 = NcPoly::generator(2, k, 2);
        let p = x2.mul(&x1);
        assert_eq!(p.num_terms(), 1);
        assert_eq!(p.leading_word().unwrap(), &w(&[2, 1]));
    }

    #[test]
    fn difference_of_squares() {
        let k = FieldKind::Rational;
        let p = parse_expr("(x1+1)*(x1-1)", 1, k).unwrap();
        let expected = parse_expr("x1^2 - 1", 1, k).unwrap();
        assert_eq!(p, expected);
    }

    #[test]
    fn coefficients_cancel_mod_p() {
        let k = FieldKind::Fp(5);
        let p = parse_expr("2*x1 * 3*x2", 2, k).unwrap();
        assert_eq!(p, parse_expr("x1*x2", 2, k).unwrap());
    }

    #[test]
    fn parse_errors_carry_positions() {
        let k = FieldKind::Rational;
        let err = parse_expr("x4", 3, k).unwrap_err();
        assert!(err.message.contains("out of range"), "{err}");
        let err = parse_expr("x1 + ", 3, k).unwrap_err();
        assert_eq!(err.col, 6);
        assert!(parse_expr("x2*x1 - 2*x1*x2", 3, k).is_ok());
    }

    #[test]
    fn rendering_examples() {
        let k = FieldKind::Rational;
        let p = parse_expr("x1*x2*x3 + 1/2*x3*x3", 3, k).unwrap();
        assert_eq!(p.to_string(), "x1*x2*x3 + 1/2*x3^2");
        let q = parse_expr("x2*x1 - 2*x1*x2", 3, k).unwrap();
        assert_eq!(q.to_string(), "x2*x1 - 2*x1*x2");
        assert_eq!(NcPoly::zero(3, k).to_string(), "0");
    }

    fn arb_poly(n: usize, field: FieldKind) -> impl Strategy<Value = NcPoly> {
        let coeff = (-9i64..=9, 1i64..=5).prop_map(move |(a, b)| match field {
            FieldKind::Rational => FieldValue::rational(a, b),
            FieldKind::Fp(p) => FieldValue::fp(p, a),
        });
        let word = proptest::collection::vec(1u32..=n as u32, 0..4).prop_map(Word::from_letters);
        proptest::collection::vec((word, coeff), 0..5).prop_map(move |terms| {
            let mut poly = NcPoly::zero(n, field);
            for (w, c) in terms {
                poly.add_term(w, c);
            }
            poly
        })
    }

    proptest! {
        #[test]
        fn mul_associative_and_distributive(
            a in arb_poly(3, FieldKind::Rational),
            b in arb_poly(3, FieldKind::Rational),
            c in arb_poly(3, FieldKind::Rational),
        ) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }

        #[test]
        fn parse_render_round_trip_rational(p in arb_poly(3, FieldKind::Rational)) {
            let rendered = p.to_string();
            let back = parse_expr(&rendered, 3, FieldKind::Rational).unwrap();
            prop_assert_eq!(back, p);
        }

        #[test]
        fn parse_render_round_trip_fp(p in arb_poly(3, FieldKind::Fp(7))) {
            let rendered = p.to_string();
            let back = parse_expr(&rendered, 3, FieldKind::Fp(7)).unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
