//! Exact arithmetic in the real field Q(√2, √3).
//!
//! Every element is stored as `c1 + c2·√2 + c3·√3 + c6·√6` with arbitrary
//! precision rational coefficients. This is the smallest field containing
//! the sine, cosine and tangent of every multiple of 15°, so every
//! coordinate, dot product and reflection that appears in this crate stays
//! inside it — no rounding, ever.
//!
//! Zero testing is structural: `1, √2, √3, √6` are linearly independent over
//! the rationals, so a value is zero iff all four coefficients are zero.
//! The sign of a nonzero value is decided by evaluating the radicals with
//! rational interval enclosures of doubling precision until the enclosing
//! interval excludes zero; termination is guaranteed because the value is
//! known to be nonzero.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary precision rational, always reduced, denominator positive.
pub type Rational = BigRational;

/// Errors from exact scalar arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed rational token `{0}`")]
    BadRational(String),
}

/// An element of Q(√2, √3), stored on the basis `{1, √2, √3, √6}`.
///
/// The representation is canonical: two values are equal iff all four
/// rational coefficients match, and the derived `Eq`/`Hash` agree with
/// numeric equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ExtScalar {
    c1: Rational,
    c2: Rational,
    c3: Rational,
    c6: Rational,
}

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(big(n), big(d))
}

impl ExtScalar {
    /// `c1 + c2·√2 + c3·√3 + c6·√6`.
    pub fn new(c1: Rational, c2: Rational, c3: Rational, c6: Rational) -> Self {
        ExtScalar { c1, c2, c3, c6 }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(ratio(n, 1))
    }

    /// The rational `n/d`. Panics if `d == 0`.
    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(ratio(n, d))
    }

    pub fn from_rational(r: Rational) -> Self {
        ExtScalar {
            c1: r,
            ..Self::default()
        }
    }

    pub fn sqrt2() -> Self {
        ExtScalar {
            c2: Rational::one(),
            ..Self::default()
        }
    }

    pub fn sqrt3() -> Self {
        ExtScalar {
            c3: Rational::one(),
            ..Self::default()
        }
    }

    pub fn sqrt6() -> Self {
        ExtScalar {
            c6: Rational::one(),
            ..Self::default()
        }
    }

    /// Coefficients on the basis `{1, √2, √3, √6}`.
    pub fn coefficients(&self) -> [&Rational; 4] {
        [&self.c1, &self.c2, &self.c3, &self.c6]
    }

    /// True iff the value is rational (no radical part).
    pub fn is_rational(&self) -> bool {
        self.c2.is_zero() && self.c3.is_zero() && self.c6.is_zero()
    }

    /// The rational part, exact only when `is_rational()`.
    pub fn rational_part(&self) -> &Rational {
        &self.c1
    }

    pub fn is_zero(&self) -> bool {
        self.c1.is_zero() && self.is_rational()
    }

    pub fn is_one(&self) -> bool {
        self.c1.is_one() && self.is_rational()
    }

    /// Exact sign: −1, 0 or +1.
    ///
    /// Zero is decided structurally. For nonzero values the radicals are
    /// replaced by rational enclosures of width `2^-p`, and `p` doubles
    /// until the resulting interval excludes zero.
    pub fn sign(&self) -> i8 {
        if self.is_rational() {
            return rational_sign(&self.c1);
        }
        let mut precision = 32u32;
        loop {
            let (lo, hi) = self.enclosure(precision);
            if lo.is_positive() {
                return 1;
            }
            if hi.is_negative() {
                return -1;
            }
            precision *= 2;
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.sign() < 0
    }

    /// Rational interval `[lo, hi]` containing the exact value, with each
    /// radical enclosed to `p` binary digits.
    fn enclosure(&self, p: u32) -> (Rational, Rational) {
        let mut lo = self.c1.clone();
        let mut hi = self.c1.clone();
        for (coef, d) in [(&self.c2, 2u32), (&self.c3, 3), (&self.c6, 6)] {
            if coef.is_zero() {
                continue;
            }
            let (rlo, rhi) = radical_bounds(d, p);
            if coef.is_positive() {
                lo += coef * rlo;
                hi += coef * rhi;
            } else {
                lo += coef * rhi;
                hi += coef * rlo;
            }
        }
        (lo, hi)
    }

    /// Multiplicative inverse. The three Galois conjugates (sign flips on
    /// √2 and/or √3) multiply the denominator into a rational norm.
    pub fn inv(&self) -> Result<ExtScalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let conj = self.conj_sqrt2() * self.conj_sqrt3() * self.conj_both();
        let norm = self.clone() * conj.clone();
        debug_assert!(norm.is_rational(), "product of all conjugates is rational");
        debug_assert!(!norm.c1.is_zero());
        Ok(conj.scale(&norm.c1.recip()))
    }

    /// Conjugate sending √2 ↦ −√2 (hence √6 ↦ −√6).
    fn conj_sqrt2(&self) -> ExtScalar {
        ExtScalar {
            c1: self.c1.clone(),
            c2: -self.c2.clone(),
            c3: self.c3.clone(),
            c6: -self.c6.clone(),
        }
    }

    /// Conjugate sending √3 ↦ −√3 (hence √6 ↦ −√6).
    fn conj_sqrt3(&self) -> ExtScalar {
        ExtScalar {
            c1: self.c1.clone(),
            c2: self.c2.clone(),
            c3: -self.c3.clone(),
            c6: -self.c6.clone(),
        }
    }

    /// Conjugate sending √2 ↦ −√2 and √3 ↦ −√3 (fixing √6).
    fn conj_both(&self) -> ExtScalar {
        ExtScalar {
            c1: self.c1.clone(),
            c2: -self.c2.clone(),
            c3: -self.c3.clone(),
            c6: self.c6.clone(),
        }
    }

    /// Multiply by a rational, coefficientwise.
    pub fn scale(&self, r: &Rational) -> ExtScalar {
        ExtScalar {
            c1: &self.c1 * r,
            c2: &self.c2 * r,
            c3: &self.c3 * r,
            c6: &self.c6 * r,
        }
    }

    pub fn square(&self) -> ExtScalar {
        self * self
    }

    /// Decimal string correct to `digits` significant digits, rounded to
    /// nearest (ties away from zero), produced from certified rational
    /// enclosures. `digits` must be at least 1.
    pub fn approx(&self, digits: u32) -> String {
        assert!(digits >= 1, "approx requires at least one digit");
        if self.is_zero() {
            return if digits == 1 {
                "0".to_string()
            } else {
                format!("0.{}", "0".repeat(digits as usize - 1))
            };
        }
        let negative = self.sign() < 0;
        let magnitude = if negative {
            -self.clone()
        } else {
            self.clone()
        };

        // Decimal exponent: 10^exp <= magnitude < 10^(exp+1).
        let mut exp: i64 = 0;
        if (magnitude.clone() - ExtScalar::one()).sign() >= 0 {
            while (magnitude.clone() - pow10_scalar(exp + 1)).sign() >= 0 {
                exp += 1;
            }
        } else {
            while (magnitude.clone() - pow10_scalar(exp)).sign() < 0 {
                exp -= 1;
            }
        }

        // Scale into [10^(digits-1), 10^digits) and round to an integer.
        let shift = digits as i64 - 1 - exp;
        let scaled = magnitude.scale(&pow10_rational(shift));
        let floor = scaled.floor_exact();
        let half = ExtScalar::from_rational(Rational::from(floor.clone()) + ratio(1, 2));
        let mut mantissa = if (scaled - half).sign() >= 0 {
            floor + BigInt::one()
        } else {
            floor
        };
        let bound = BigInt::from(10u32).pow(digits);
        if mantissa == bound {
            // Rounding rolled the mantissa over, e.g. 9.97 -> "10.0".
            mantissa = BigInt::from(10u32).pow(digits - 1);
            exp += 1;
        }

        let body = render_decimal(&mantissa.to_string(), exp, digits);
        if negative {
            format!("-{body}")
        } else {
            body
        }
    }

    /// Exact floor. The value must be positive (internal use by `approx`).
    fn floor_exact(&self) -> BigInt {
        if self.is_rational() {
            return self.c1.floor().to_integer();
        }
        let mut precision = 32u32;
        loop {
            let (lo, hi) = self.enclosure(precision);
            let (flo, fhi) = (lo.floor().to_integer(), hi.floor().to_integer());
            if flo == fhi {
                return flo;
            }
            // An irrational value is never an integer, so the shrinking
            // interval eventually settles on one floor.
            precision *= 2;
        }
    }

    /// Parse the four-token textual form `c1 c2 c3 c6`, each token a
    /// rational `p/q` or integer `p`.
    pub fn parse_tokens(tokens: &[&str]) -> Result<ExtScalar, ScalarError> {
        assert_eq!(tokens.len(), 4, "scalar takes exactly four tokens");
        let mut parts = tokens.iter().map(|t| parse_rational(t));
        Ok(ExtScalar {
            c1: parts.next().unwrap()?,
            c2: parts.next().unwrap()?,
            c3: parts.next().unwrap()?,
            c6: parts.next().unwrap()?,
        })
    }

    /// The four-token textual form used by polygon files.
    pub fn to_tokens(&self) -> String {
        format!(
            "{} {} {} {}",
            format_rational(&self.c1),
            format_rational(&self.c2),
            format_rational(&self.c3),
            format_rational(&self.c6)
        )
    }

    /// Approximate value as `f64`, for rendering defaults only.
    pub fn to_f64(&self) -> f64 {
        f64::from_str(&self.approx(17)).expect("approx emits parseable decimals")
    }
}

/// Parse `p/q` or `p` into a reduced rational.
pub fn parse_rational(token: &str) -> Result<Rational, ScalarError> {
    let bad = || ScalarError::BadRational(token.to_string());
    match token.split_once('/') {
        None => {
            let n = BigInt::from_str(token).map_err(|_| bad())?;
            Ok(Rational::from(n))
        }
        Some((num, den)) => {
            let n = BigInt::from_str(num).map_err(|_| bad())?;
            let d = BigInt::from_str(den).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Render a rational as `p` or `p/q`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn rational_sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Enclosure `[s/2^p, (s+1)/2^p]` of √d with `s = isqrt(d · 4^p)`.
fn radical_bounds(d: u32, p: u32) -> (Rational, Rational) {
    let shifted = BigUint::from(d) << (2 * p);
    let root = shifted.sqrt();
    let denom = BigInt::one() << p;
    let lo = Rational::new(BigInt::from(root.clone()), denom.clone());
    let hi = Rational::new(BigInt::from(root + BigUint::one()), denom);
    (lo, hi)
}

fn pow10_rational(k: i64) -> Rational {
    let p = BigInt::from(10u32).pow(k.unsigned_abs() as u32);
    if k >= 0 {
        Rational::from(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

fn pow10_scalar(k: i64) -> ExtScalar {
    ExtScalar::from_rational(pow10_rational(k))
}

/// Place the decimal point of a `digits`-long mantissa at exponent `exp`.
fn render_decimal(mantissa: &str, exp: i64, digits: u32) -> String {
    debug_assert_eq!(mantissa.len(), digits as usize);
    if exp < 0 {
        let zeros = "0".repeat((-exp - 1) as usize);
        format!("0.{zeros}{mantissa}")
    } else if (exp as usize) + 1 >= digits as usize {
        let zeros = "0".repeat(exp as usize + 1 - digits as usize);
        format!("{mantissa}{zeros}")
    } else {
        let split = exp as usize + 1;
        format!("{}.{}", &mantissa[..split], &mantissa[split..])
    }
}

impl From<i64> for ExtScalar {
    fn from(n: i64) -> Self {
        ExtScalar::from_int(n)
    }
}

impl From<Rational> for ExtScalar {
    fn from(r: Rational) -> Self {
        ExtScalar::from_rational(r)
    }
}

impl Add for &ExtScalar {
    type Output = ExtScalar;
    fn add(self, rhs: &ExtScalar) -> ExtScalar {
        ExtScalar {
            c1: &self.c1 + &rhs.c1,
            c2: &self.c2 + &rhs.c2,
            c3: &self.c3 + &rhs.c3,
            c6: &self.c6 + &rhs.c6,
        }
    }
}

impl Sub for &ExtScalar {
    type Output = ExtScalar;
    fn sub(self, rhs: &ExtScalar) -> ExtScalar {
        ExtScalar {
            c1: &self.c1 - &rhs.c1,
            c2: &self.c2 - &rhs.c2,
            c3: &self.c3 - &rhs.c3,
            c6: &self.c6 - &rhs.c6,
        }
    }
}

impl Mul for &ExtScalar {
    type Output = ExtScalar;
    fn mul(self, rhs: &ExtScalar) -> ExtScalar {
        // Basis products: √2·√2=2, √3·√3=3, √6·√6=6,
        // √2·√3=√6, √2·√6=2√3, √3·√6=3√2.
        let (a1, a2, a3, a6) = (&self.c1, &self.c2, &self.c3, &self.c6);
        let (b1, b2, b3, b6) = (&rhs.c1, &rhs.c2, &rhs.c3, &rhs.c6);
        let two = ratio(2, 1);
        let three = ratio(3, 1);
        let six = ratio(6, 1);
        ExtScalar {
            c1: a1 * b1 + (a2 * b2) * &two + (a3 * b3) * &three + (a6 * b6) * &six,
            c2: a1 * b2 + a2 * b1 + (a3 * b6 + a6 * b3) * &three,
            c3: a1 * b3 + a3 * b1 + (a2 * b6 + a6 * b2) * &two,
            c6: a1 * b6 + a6 * b1 + a2 * b3 + a3 * b2,
        }
    }
}

impl Neg for &ExtScalar {
    type Output = ExtScalar;
    fn neg(self) -> ExtScalar {
        ExtScalar {
            c1: -self.c1.clone(),
            c2: -self.c2.clone(),
            c3: -self.c3.clone(),
            c6: -self.c6.clone(),
        }
    }
}

impl Div for &ExtScalar {
    type Output = ExtScalar;
    /// Panics on division by zero; use [`ExtScalar::inv`] to handle it.
    #[allow(clippy::suspicious_arithmetic_impl)] // division is mul by inverse
    fn div(self, rhs: &ExtScalar) -> ExtScalar {
        self * &rhs.inv().expect("division by zero")
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ExtScalar {
            type Output = ExtScalar;
            fn $method(self, rhs: ExtScalar) -> ExtScalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&ExtScalar> for ExtScalar {
            type Output = ExtScalar;
            fn $method(self, rhs: &ExtScalar) -> ExtScalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<ExtScalar> for &ExtScalar {
            type Output = ExtScalar;
            fn $method(self, rhs: ExtScalar) -> ExtScalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for ExtScalar {
    type Output = ExtScalar;
    fn neg(self) -> ExtScalar {
        -&self
    }
}

impl PartialOrd for ExtScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtScalar {
    /// Numeric order, decided by the exact sign of the difference. This is
    /// consistent with `Eq` because the representation is canonical.
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        match (self - other).sign() {
            1 => Ordering::Greater,
            -1 => Ordering::Less,
            _ => Ordering::Equal,
        }
    }
}

impl fmt::Display for ExtScalar {
    /// Compact exact form without spaces, e.g. `2-sqrt(3)` or `1/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        let mut first = true;
        for (coef, radical) in [
            (&self.c1, None),
            (&self.c2, Some("sqrt(2)")),
            (&self.c3, Some("sqrt(3)")),
            (&self.c6, Some("sqrt(6)")),
        ] {
            if coef.is_zero() {
                continue;
            }
            let mut term = match radical {
                None => format_rational(coef),
                Some(sym) => {
                    if coef.is_one() {
                        sym.to_string()
                    } else if (-coef).is_one() {
                        format!("-{sym}")
                    } else {
                        format!("{}*{}", format_rational(coef), sym)
                    }
                }
            };
            if !first && !term.starts_with('-') {
                term.insert(0, '+');
            }
            out.push_str(&term);
            first = false;
        }
        write!(f, "{out}")
    }
}
