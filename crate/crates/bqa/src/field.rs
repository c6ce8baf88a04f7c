//! Exact coefficient arithmetic over the rationals and over prime fields
//! GF(p), together with n-th power coset classification of nonzero elements
//! (the groups K^×/K^{×n} for n = 2, 3, 4).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Largest admitted prime modulus.
pub const MAX_MODULUS: u64 = 1 << 31;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation requires a nonzero element")]
    ZeroInput,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds the 2^31 limit")]
    ModulusTooLarge(u64),
    #[error("integer too large to factor exactly")]
    Unfactorable,
    #[error("malformed field literal `{0}`")]
    BadLiteral(String),
    #[error("power class exponent must be 2, 3 or 4 (got {0})")]
    InvalidExponent(u32),
}

/// Which ground field values live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rational,
    Fp(u64),
}

impl FieldKind {
    /// Parses the config form `"Q"` or `"fp:<p>"`.
    pub fn parse(spec: &str) -> Result<Self, FieldError> {
        let s = spec.trim();
        if s == "Q" || s == "q" {
            return Ok(FieldKind::Rational);
        }
        if let Some(rest) = s.strip_prefix("fp:").or_else(|| s.strip_prefix("Fp:")) {
            let p: u64 = rest
                .trim()
                .parse()
                .map_err(|_| FieldError::BadLiteral(spec.to_string()))?;
            if p >= MAX_MODULUS {
                return Err(FieldError::ModulusTooLarge(p));
            }
            if !is_prime_u64(p) {
                return Err(FieldError::NotPrime(p));
            }
            return Ok(FieldKind::Fp(p));
        }
        Err(FieldError::BadLiteral(spec.to_string()))
    }

    pub fn zero(&self) -> FieldValue {
        match self {
            FieldKind::Rational => FieldValue::Q(BigRational::zero()),
            FieldKind::Fp(p) => FieldValue::Fp { p: *p, r: 0 },
        }
    }

    pub fn one(&self) -> FieldValue {
        self.integer(1)
    }

    /// Embeds a signed integer into the field.
    pub fn integer(&self, n: i64) -> FieldValue {
        match self {
            FieldKind::Rational => FieldValue::Q(BigRational::from_integer(BigInt::from(n))),
            FieldKind::Fp(p) => {
                let m = n.rem_euclid(*p as i64) as u64;
                FieldValue::Fp { p: *p, r: m }
            }
        }
    }

    /// Parses an exact literal: an optionally signed integer or `a/b`.
    pub fn parse_literal(&self, text: &str) -> Result<FieldValue, FieldError> {
        let s = text.trim();
        let bad = || FieldError::BadLiteral(text.to_string());
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (s, None),
        };
        let n: BigInt = num.parse().map_err(|_| bad())?;
        let d: BigInt = match den {
            Some(b) => b.parse().map_err(|_| bad())?,
            None => BigInt::one(),
        };
        if d.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        match self {
            FieldKind::Rational => Ok(FieldValue::Q(BigRational::new(n, d))),
            FieldKind::Fp(p) => {
                let nv = fp_from_bigint(&n, *p);
                let dv = fp_from_bigint(&d, *p);
                if dv == 0 {
                    return Err(FieldError::DivisionByZero);
                }
                Ok(FieldValue::Fp {
                    p: *p,
                    r: mul_mod(nv, inv_mod(dv, *p), *p),
                })
            }
        }
    }

    pub fn spec_string(&self) -> String {
        match self {
            FieldKind::Rational => "Q".to_string(),
            FieldKind::Fp(p) => format!("fp:{p}"),
        }
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec_string())
    }
}

/// An exact field element: a reduced rational or a residue mod a prime.
///
/// Rational values are kept in lowest terms with positive denominator
/// (`BigRational` maintains this); prime-field residues lie in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldValue {
    Q(BigRational),
    Fp { p: u64, r: u64 },
}

impl FieldValue {
    pub fn kind(&self) -> FieldKind {
        match self {
            FieldValue::Q(_) => FieldKind::Rational,
            FieldValue::Fp { p, .. } => FieldKind::Fp(*p),
        }
    }

    pub fn rational(num: i64, den: i64) -> Self {
        FieldValue::Q(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn fp(p: u64, r: i64) -> Self {
        FieldValue::Fp {
            p,
            r: r.rem_euclid(p as i64) as u64,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldValue::Q(q) => q.is_zero(),
            FieldValue::Fp { r, .. } => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldValue::Q(q) => q.is_one(),
            FieldValue::Fp { r, .. } => *r == 1,
        }
    }

    fn check_same(&self, other: &FieldValue) -> Result<(), FieldError> {
        if self.kind() == other.kind() {
            Ok(())
        } else {
            Err(FieldError::MixedFields)
        }
    }

    pub fn try_add(&self, other: &FieldValue) -> Result<FieldValue, FieldError> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (FieldValue::Q(a), FieldValue::Q(b)) => FieldValue::Q(a + b),
            (FieldValue::Fp { p, r: a }, FieldValue::Fp { r: b, .. }) => FieldValue::Fp {
                p: *p,
                r: add_mod(*a, *b, *p),
            },
            _ => unreachable!(),
        })
    }

    pub fn try_sub(&self, other: &FieldValue) -> Result<FieldValue, FieldError> {
        self.try_add(&other.clone().negated())
    }

    pub fn try_mul(&self, other: &FieldValue) -> Result<FieldValue, FieldError> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (FieldValue::Q(a), FieldValue::Q(b)) => FieldValue::Q(a * b),
            (FieldValue::Fp { p, r: a }, FieldValue::Fp { r: b, .. }) => FieldValue::Fp {
                p: *p,
                r: mul_mod(*a, *b, *p),
            },
            _ => unreachable!(),
        })
    }

    pub fn try_div(&self, other: &FieldValue) -> Result<FieldValue, FieldError> {
        self.try_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<FieldValue, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(match self {
            FieldValue::Q(q) => FieldValue::Q(q.recip()),
            FieldValue::Fp { p, r } => FieldValue::Fp {
                p: *p,
                r: inv_mod(*r, *p),
            },
        })
    }

    pub fn negated(self) -> FieldValue {
        match self {
            FieldValue::Q(q) => FieldValue::Q(-q),
            FieldValue::Fp { p, r } => FieldValue::Fp {
                p,
                r: if r == 0 { 0 } else { p - r },
            },
        }
    }

    /// Integer power, negative exponents allowed for nonzero values.
    pub fn pow(&self, e: i64) -> Result<FieldValue, FieldError> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut acc = self.kind().one();
        let mut base = self.clone();
        let mut k = e as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            base = base.try_mul(&base)?;
            k >>= 1;
        }
        Ok(acc)
    }

    /// A fixed total order used to break ties canonically: the usual order
    /// on rationals, least-residue order on prime fields.
    pub fn order_cmp(&self, other: &FieldValue) -> Ordering {
        match (self, other) {
            (FieldValue::Q(a), FieldValue::Q(b)) => a.cmp(b),
            (FieldValue::Fp { r: a, .. }, FieldValue::Fp { r: b, .. }) => a.cmp(b),
            _ => panic!("order_cmp on mixed fields"),
        }
    }
}

impl fmt::Display for FieldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldValue::Q(q) => write!(f, "{q}"),
            FieldValue::Fp { r, .. } => write!(f, "{r}"),
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &FieldValue {
            type Output = FieldValue;
            fn $method(self, rhs: &FieldValue) -> FieldValue {
                self.$checked(rhs).expect("field operation failed")
            }
        }
        impl std::ops::$trait for FieldValue {
            type Output = FieldValue;
            fn $method(self, rhs: FieldValue) -> FieldValue {
                (&self).$method(&rhs)
            }
        }
        impl std::ops::$trait<&FieldValue> for FieldValue {
            type Output = FieldValue;
            fn $method(self, rhs: &FieldValue) -> FieldValue {
                (&self).$method(rhs)
            }
        }
        impl std::ops::$trait<FieldValue> for &FieldValue {
            type Output = FieldValue;
            fn $method(self, rhs: FieldValue) -> FieldValue {
                self.$method(&rhs)
            }
        }
    };
}
binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl std::ops::Neg for FieldValue {
    type Output = FieldValue;
    fn neg(self) -> FieldValue {
        self.negated()
    }
}
impl std::ops::Neg for &FieldValue {
    type Output = FieldValue;
    fn neg(self) -> FieldValue {
        self.clone().negated()
    }
}

/// The coset of a nonzero element in K^×/K^{×n}, identified by a canonical
/// representative: over the rationals the n-th-power-free part (signed for
/// even n), over GF(p) the least positive residue in the coset.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PowerClass {
    pub exponent: u32,
    pub representative: FieldValue,
}

impl fmt::Display for PowerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*K^x{}", self.representative, self.exponent)
    }
}

fn check_exponent(n: u32) -> Result<(), FieldError> {
    if (2..=4).contains(&n) {
        Ok(())
    } else {
        Err(FieldError::InvalidExponent(n))
    }
}

/// Canonical representative of `x · K^{×n}`.
pub fn power_class(x: &FieldValue, n: u32) -> Result<PowerClass, FieldError> {
    check_exponent(n)?;
    if x.is_zero() {
        return Err(FieldError::ZeroInput);
    }
    let representative = match x {
        FieldValue::Q(q) => {
            let mut exps = factor_exponents(q)?;
            for e in exps.values_mut() {
                *e = e.rem_euclid(n as i64);
            }
            let mut num = BigInt::one();
            for (p, e) in &exps {
                for _ in 0..*e {
                    num *= BigInt::from(*p);
                }
            }
            // -1 is an n-th power exactly when n is odd.
            if n.is_multiple_of(2) && q.is_negative() {
                num = -num;
            }
            FieldValue::Q(BigRational::from_integer(num))
        }
        FieldValue::Fp { p, r } => {
            let chi = fp_power_character(*r, n, *p);
            let mut rep = 1u64;
            while fp_power_character(rep, n, *p) != chi {
                rep += 1;
            }
            FieldValue::Fp { p: *p, r: rep }
        }
    };
    Ok(PowerClass {
        exponent: n,
        representative,
    })
}

/// Whether `x / y` is an n-th power; the direct route, independent of the
/// canonical representatives.
pub fn same_class(x: &FieldValue, y: &FieldValue, n: u32) -> Result<bool, FieldError> {
    check_exponent(n)?;
    if x.is_zero() || y.is_zero() {
        return Err(FieldError::ZeroInput);
    }
    let q = x.try_div(y)?;
    is_nth_power(&q, n)
}

pub fn is_nth_power(x: &FieldValue, n: u32) -> Result<bool, FieldError> {
    check_exponent(n)?;
    if x.is_zero() {
        return Err(FieldError::ZeroInput);
    }
    match x {
        FieldValue::Q(q) => {
            if n.is_multiple_of(2) && q.is_negative() {
                return Ok(false);
            }
            let exps = factor_exponents(q)?;
            Ok(exps.values().all(|e| e.rem_euclid(n as i64) == 0))
        }
        FieldValue::Fp { p, r } => Ok(fp_power_character(*r, n, *p) == 1),
    }
}

/// An n-th root when one exists in the field.
pub fn nth_root(x: &FieldValue, n: u32) -> Result<Option<FieldValue>, FieldError> {
    check_exponent(n)?;
    if x.is_zero() {
        return Ok(Some(x.kind().zero()));
    }
    match x {
        FieldValue::Q(q) => {
            if n.is_multiple_of(2) && q.is_negative() {
                return Ok(None);
            }
            let exps = factor_exponents(q)?;
            if exps.values().any(|e| e % (n as i64) != 0) {
                return Ok(None);
            }
            let mut num = BigInt::one();
            let mut den = BigInt::one();
            for (p, e) in &exps {
                let k = e / n as i64;
                let target = if k >= 0 { &mut num } else { &mut den };
                for _ in 0..k.abs() {
                    *target *= BigInt::from(*p);
                }
            }
            if q.is_negative() {
                num = -num; // n is odd here
            }
            Ok(Some(FieldValue::Q(BigRational::new(num, den))))
        }
        FieldValue::Fp { p, r } => Ok(fp_nth_root(*r, n, *p).map(|r| FieldValue::Fp { p: *p, r })),
    }
}

/// Exponent map prime -> valuation of a nonzero rational.
fn factor_exponents(q: &BigRational) -> Result<BTreeMap<u128, i64>, FieldError> {
    let mut exps = BTreeMap::new();
    accumulate_factors(q.numer().abs(), 1, &mut exps)?;
    accumulate_factors(q.denom().clone(), -1, &mut exps)?;
    exps.retain(|_, e| *e != 0);
    Ok(exps)
}

fn accumulate_factors(
    value: BigInt,
    sign: i64,
    exps: &mut BTreeMap<u128, i64>,
) -> Result<(), FieldError> {
    let mut m = value.to_u128().ok_or(FieldError::Unfactorable)?;
    let mut push = |p: u128, e: i64| *exps.entry(p).or_insert(0) += e * sign;
    for small in 2u128..=(1 << 16) {
        if small * small > m {
            break;
        }
        let mut e = 0;
        while m.is_multiple_of(small) {
            m /= small;
            e += 1;
        }
        if e > 0 {
            push(small, e);
        }
    }
    if m == 1 {
        return Ok(());
    }
    // Leftover has no factor below 2^16: a prime, or a small power of one.
    for k in [4u32, 3, 2] {
        if let Some(root) = integer_kth_root(m, k) {
            if root.checked_pow(k).map(|v| v == m).unwrap_or(false) && is_prime_u128(root) {
                push(root, k as i64);
                return Ok(());
            }
        }
    }
    if is_prime_u128(m) {
        push(m, 1);
        return Ok(());
    }
    Err(FieldError::Unfactorable)
}

fn integer_kth_root(m: u128, k: u32) -> Option<u128> {
    if m == 0 {
        return Some(0);
    }
    let mut lo = 1u128;
    let mut hi = 1u128 << (128u32.div_ceil(k) + 1).min(127);
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        match mid.checked_pow(k) {
            Some(v) if v <= m => lo = mid,
            _ => hi = mid - 1,
        }
    }
    Some(lo)
}

// ---- prime field helpers ----

pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    // extended Euclid on signed intermediates
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert_eq!(r, 1, "inverse of non-unit mod {p}");
    t.rem_euclid(p as i128) as u64
}

fn fp_from_bigint(n: &BigInt, p: u64) -> u64 {
    let m = n % BigInt::from(p);
    let m = if m.sign() == Sign::Minus {
        m + BigInt::from(p)
    } else {
        m
    };
    m.to_u64().unwrap()
}

/// Value of x^((p-1)/d) with d = gcd(n, p-1); equals 1 exactly on n-th powers.
fn fp_power_character(x: u64, n: u32, p: u64) -> u64 {
    let d = gcd_u64(n as u64, p - 1);
    pow_mod(x, (p - 1) / d, p)
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Solves y^n = x in GF(p)^× via discrete log to a fixed generator.
fn fp_nth_root(x: u64, n: u32, p: u64) -> Option<u64> {
    if p == 2 {
        return Some(x);
    }
    let g = primitive_root(p);
    let k = discrete_log(g, x, p);
    // solve n*t = k (mod p-1)
    let m = p - 1;
    let d = gcd_u64(n as u64, m);
    if !k.is_multiple_of(d) {
        return None;
    }
    let m2 = m / d;
    let t = mul_mod(k / d % m2, inv_mod(n as u64 / d % m2, m2), m2);
    Some(pow_mod(g, t, p))
}

fn primitive_root(p: u64) -> u64 {
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut d = 2u64;
    while d * d <= m {
        if m.is_multiple_of(d) {
            factors.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    'outer: for g in 2..p {
        for f in &factors {
            if pow_mod(g, (p - 1) / f, p) == 1 {
                continue 'outer;
            }
        }
        return g;
    }
    unreachable!("no primitive root mod {p}")
}

/// Baby-step giant-step; fine for the 2^31 modulus cap.
fn discrete_log(g: u64, x: u64, p: u64) -> u64 {
    use std::collections::HashMap;
    let m = ((p as f64).sqrt() as u64) + 1;
    let mut table = HashMap::with_capacity(m as usize);
    let mut cur = 1u64;
    for j in 0..m {
        table.entry(cur).or_insert(j);
        cur = mul_mod(cur, g, p);
    }
    let factor = inv_mod(pow_mod(g, m, p), p);
    let mut gamma = x % p;
    for i in 0..=m {
        if let Some(j) = table.get(&gamma) {
            return (i * m + j) % (p - 1);
        }
        gamma = mul_mod(gamma, factor, p);
    }
    unreachable!("discrete log of non-unit")
}

pub fn is_prime_u64(n: u64) -> bool {
    is_prime_u128(n as u128)
}

fn is_prime_u128(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    // Miller-Rabin; this witness set is deterministic below 3.3 * 10^24,
    // far above the magnitudes factoring ever hands us.
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u128(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod_u128(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod_u128(a: u128, b: u128, m: u128) -> u128 {
    // schoolbook double-and-add to avoid overflow on full u128 range
    if let (Some(prod), true) = (a.checked_mul(b), m <= u64::MAX as u128 + 1) {
        return prod % m;
    }
    let mut result = 0u128;
    let mut a = a % m;
    let mut b = b;
    while b > 0 {
        if b & 1 == 1 {
            result = (result + a) % m;
        }
        a = (a << 1) % m;
        b >>= 1;
    }
    result
}

fn pow_mod_u128(mut a: u128, mut e: u128, m: u128) -> u128 {
    let mut acc = 1u128 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod_u128(acc, a, m);
        }
        a = mul_mod_u128(a, a, m);
        e >>= 1;
    }
    acc
}
