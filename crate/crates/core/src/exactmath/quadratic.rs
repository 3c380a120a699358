//! Exact elements `(a + b√d)/c` of a real quadratic field, with ℚ as the
//! degenerate case `b = 0`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ExactError;

/// The field an element lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuadraticField {
    Rational,
    /// ℚ(√d) with `d ≥ 2` squarefree.
    Real(u64),
}

impl QuadraticField {
    pub fn radicand(self) -> Option<u64> {
        match self {
            QuadraticField::Rational => None,
            QuadraticField::Real(d) => Some(d),
        }
    }

    /// The smallest field containing both, or an error when two distinct
    /// irrational fields meet.
    pub fn join(self, other: QuadraticField) -> Result<QuadraticField, ExactError> {
        match (self, other) {
            (QuadraticField::Rational, f) | (f, QuadraticField::Rational) => Ok(f),
            (QuadraticField::Real(d), QuadraticField::Real(e)) if d == e => Ok(self),
            (QuadraticField::Real(d), QuadraticField::Real(e)) => {
                Err(ExactError::MixedFields { left: d, right: e })
            }
        }
    }
}

impl fmt::Display for QuadraticField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuadraticField::Rational => write!(f, "Q"),
            QuadraticField::Real(d) => write!(f, "Q(sqrt({d}))"),
        }
    }
}

/// Splits `n = s² · r` with `r` squarefree.
pub fn squarefree_split(n: u64) -> (u64, u64) {
    let mut square = 1u64;
    let mut rest = n;
    let mut p = 2u64;
    while p.saturating_mul(p) <= rest {
        let pp = p * p;
        while rest.is_multiple_of(pp) {
            rest /= pp;
            square *= p;
        }
        p += 1;
    }
    (square, rest)
}

/// An exact real number `(a + b√d)/c` in canonical form:
/// `c > 0`, `gcd(a, b, c) = 1`, `d` squarefree, and `b = 0` iff rational.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticNumber {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    field: QuadraticField,
}

impl QuadraticNumber {
    /// Builds `(a + b√d)/c` for any `d ≥ 0`; square factors of `d` are pulled
    /// out and perfect squares collapse to ℚ.
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: u64,
    ) -> Result<Self, ExactError> {
        let (a, mut b, c) = (a.into(), b.into(), c.into());
        if c.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        if d == 0 {
            return Ok(Self::canonical(
                a,
                BigInt::zero(),
                c,
                QuadraticField::Rational,
            ));
        }
        let (s, r) = squarefree_split(d);
        b *= s;
        if r == 1 {
            return Ok(Self::canonical(
                a + b,
                BigInt::zero(),
                c,
                QuadraticField::Rational,
            ));
        }
        Ok(Self::canonical(a, b, c, QuadraticField::Real(r)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self::canonical(
            n.into(),
            BigInt::zero(),
            BigInt::one(),
            QuadraticField::Rational,
        )
    }

    pub fn from_ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self, ExactError> {
        Self::new(num, 0, den, 0)
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::canonical(
            r.numer().clone(),
            BigInt::zero(),
            r.denom().clone(),
            QuadraticField::Rational,
        )
    }

    /// `√n`, normalized.
    pub fn sqrt(n: u64) -> Self {
        Self::new(0, 1, 1, n).expect("nonzero denominator")
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    fn canonical(mut a: BigInt, mut b: BigInt, mut c: BigInt, mut field: QuadraticField) -> Self {
        debug_assert!(!c.is_zero());
        if b.is_zero() {
            field = QuadraticField::Rational;
        }
        if c.is_negative() {
            a = -a;
            b = -b;
            c = -c;
        }
        let g = a.gcd(&b).gcd(&c);
        if !g.is_one() {
            a /= &g;
            b /= &g;
            c /= &g;
        }
        QuadraticNumber { a, b, c, field }
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn field(&self) -> QuadraticField {
        self.field
    }

    /// Radicand, with 1 standing in for ℚ so formulas stay uniform.
    fn d(&self) -> BigInt {
        BigInt::from(self.field.radicand().unwrap_or(1))
    }

    pub fn is_rational(&self) -> bool {
        self.field == QuadraticField::Rational
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.is_rational() && self.c.is_one()
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational()
            .then(|| BigRational::new(self.a.clone(), self.c.clone()))
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.a.clone())
    }

    /// Galois conjugate `(a − b√d)/c`.
    pub fn conjugate(&self) -> Self {
        QuadraticNumber {
            a: self.a.clone(),
            b: -&self.b,
            c: self.c.clone(),
            field: self.field,
        }
    }

    /// Field norm `(a² − b²d)/c²`.
    pub fn norm(&self) -> BigRational {
        BigRational::new(
            &self.a * &self.a - &self.b * &self.b * self.d(),
            &self.c * &self.c,
        )
    }

    pub fn add(&self, other: &Self) -> Result<Self, ExactError> {
        let field = self.field.join(other.field)?;
        Ok(Self::canonical(
            &self.a * &other.c + &other.a * &self.c,
            &self.b * &other.c + &other.b * &self.c,
            &self.c * &other.c,
            field,
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ExactError> {
        let field = self.field.join(other.field)?;
        let d = BigInt::from(field.radicand().unwrap_or(1));
        Ok(Self::canonical(
            &self.a * &other.a + &self.b * &other.b * d,
            &self.a * &other.b + &self.b * &other.a,
            &self.c * &other.c,
            field,
        ))
    }

    pub fn neg(&self) -> Self {
        QuadraticNumber {
            a: -&self.a,
            b: -&self.b,
            c: self.c.clone(),
            field: self.field,
        }
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        // c/(a + b√d) = c(a − b√d)/(a² − b²d); the norm is nonzero since d is
        // not a square.
        let n = &self.a * &self.a - &self.b * &self.b * self.d();
        Ok(Self::canonical(
            &self.c * &self.a,
            -(&self.c * &self.b),
            n,
            self.field,
        ))
    }

    pub fn div(&self, other: &Self) -> Result<Self, ExactError> {
        self.mul(&other.inv()?)
    }

    pub fn add_integer(&self, n: &BigInt) -> Self {
        Self::canonical(
            &self.a + n * &self.c,
            self.b.clone(),
            self.c.clone(),
            self.field,
        )
    }

    pub fn mul_integer(&self, n: &BigInt) -> Self {
        Self::canonical(&self.a * n, &self.b * n, self.c.clone(), self.field)
    }

    /// Sign of the real number, using the embedding `√d > 0`.
    pub fn signum(&self) -> Ordering {
        sign_of_surd(&self.a, &self.b, &self.d())
    }

    /// Exact comparison; fails only for two distinct irrational fields.
    pub fn try_cmp(&self, other: &Self) -> Result<Ordering, ExactError> {
        Ok(self.sub(other)?.signum())
    }

    /// `⌊x⌋` computed exactly.
    pub fn floor(&self) -> BigInt {
        if self.b.is_zero() {
            return self.a.div_floor(&self.c);
        }
        let root = (&self.b * &self.b * self.d()).sqrt();
        // b√d is irrational, so its floor is root or −root − 1.
        let floor_bsd = if self.b.is_positive() {
            root
        } else {
            -root - 1
        };
        (&self.a + floor_bsd).div_floor(&self.c)
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        let c = self.c.to_f64().unwrap_or(f64::NAN);
        let d = self.field.radicand().unwrap_or(1) as f64;
        (a + b * d.sqrt()) / c
    }
}

/// Sign of `a + b√d` for `d ≥ 1` (with `d` a non-square whenever `b ≠ 0`).
pub(crate) fn sign_of_surd(a: &BigInt, b: &BigInt, d: &BigInt) -> Ordering {
    let sa = a.sign();
    let sb = b.sign();
    use num_bigint::Sign::*;
    match (sa, sb) {
        (NoSign, NoSign) => Ordering::Equal,
        (Plus, Plus) | (Plus, NoSign) | (NoSign, Plus) => Ordering::Greater,
        (Minus, Minus) | (Minus, NoSign) | (NoSign, Minus) => Ordering::Less,
        (Plus, Minus) => (a * a).cmp(&(b * b * d)),
        (Minus, Plus) => (b * b * d).cmp(&(a * a)),
    }
}

impl PartialOrd for QuadraticNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.try_cmp(other).ok()
    }
}

impl From<i64> for QuadraticNumber {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl fmt::Display for QuadraticNumber {
    /// Prints in the expression grammar accepted by the command line, e.g.
    /// `(1+sqrt(5))/2`, `-3/2`, `2*sqrt(2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let numerator = match self.field {
            QuadraticField::Rational => self.a.to_string(),
            QuadraticField::Real(d) => {
                let surd = if self.b.is_one() {
                    format!("sqrt({d})")
                } else if (-&self.b).is_one() {
                    format!("-sqrt({d})")
                } else {
                    format!("{}*sqrt({d})", self.b)
                };
                if self.a.is_zero() {
                    surd
                } else if self.b.is_negative() {
                    format!("{}{}", self.a, surd)
                } else {
                    format!("{}+{}", self.a, surd)
                }
            }
        };
        if self.c.is_one() {
            f.write_str(&numerator)
        } else if self.is_rational() {
            write!(f, "{}/{}", numerator, self.c)
        } else {
            write!(f, "({})/{}", numerator, self.c)
        }
    }
}
