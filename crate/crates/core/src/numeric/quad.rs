use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;

use super::{format_scaled_decimal, is_perfect_square, isqrt, NumericError, Rational};

/// Exact element `a + b·√d` of ℚ(√d), with `d` a positive non-square.
///
/// Because `√d` is irrational the pair `(a, b)` is unique, so equality is
/// componentwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadValue {
    a: Rational,
    b: Rational,
    d: u64,
}

impl QuadValue {
    pub fn new(a: Rational, b: Rational, d: u64) -> Result<Self, NumericError> {
        if d == 0 || is_perfect_square(d) {
            return Err(NumericError::SquareRadicand(d));
        }
        Ok(QuadValue { a, b, d })
    }

    /// The rational `a` embedded in ℚ(√d).
    pub fn rational(a: Rational, d: u64) -> Result<Self, NumericError> {
        QuadValue::new(a, Rational::zero(), d)
    }

    /// `√d` itself.
    pub fn sqrt(d: u64) -> Result<Self, NumericError> {
        QuadValue::new(Rational::zero(), Rational::one(), d)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn check_same_field(&self, other: &QuadValue) -> Result<(), NumericError> {
        if self.d != other.d {
            return Err(NumericError::MixedRadicands(self.d, other.d));
        }
        Ok(())
    }

    fn with(&self, a: Rational, b: Rational) -> QuadValue {
        QuadValue { a, b, d: self.d }
    }

    fn d_rat(&self) -> Rational {
        Rational::from_integer(self.d)
    }

    pub fn add(&self, other: &QuadValue) -> Result<QuadValue, NumericError> {
        self.check_same_field(other)?;
        Ok(self.with(&self.a + &other.a, &self.b + &other.b))
    }

    pub fn sub(&self, other: &QuadValue) -> Result<QuadValue, NumericError> {
        self.check_same_field(other)?;
        Ok(self.with(&self.a - &other.a, &self.b - &other.b))
    }

    pub fn mul(&self, other: &QuadValue) -> Result<QuadValue, NumericError> {
        self.check_same_field(other)?;
        let a = &self.a * &other.a + self.d_rat() * (&self.b * &other.b);
        let b = &self.a * &other.b + &other.a * &self.b;
        Ok(self.with(a, b))
    }

    /// Division through the conjugate: `x / y = x·ȳ / N(y)`.
    pub fn div(&self, other: &QuadValue) -> Result<QuadValue, NumericError> {
        self.check_same_field(other)?;
        let norm = other.norm();
        if norm.is_zero() {
            return Err(NumericError::DivisionByZero);
        }
        let num = self.mul(&other.conjugate())?;
        Ok(self.with(num.a.checked_div(&norm)?, num.b.checked_div(&norm)?))
    }

    pub fn neg(&self) -> QuadValue {
        self.with(-&self.a, -&self.b)
    }

    pub fn scale(&self, c: &Rational) -> QuadValue {
        self.with(&self.a * c, &self.b * c)
    }

    pub fn conjugate(&self) -> QuadValue {
        self.with(self.a.clone(), -&self.b)
    }

    /// `a² − d·b²`; zero only for the zero element.
    pub fn norm(&self) -> Rational {
        self.a.square() - self.d_rat() * self.b.square()
    }

    /// Exact sign, decided with rational arithmetic only.
    pub fn sign(&self) -> Sign {
        let sa = self.a.sign();
        let sb = self.b.sign();
        match (sa, sb) {
            (Sign::NoSign, Sign::NoSign) => Sign::NoSign,
            (Sign::NoSign, s) | (s, Sign::NoSign) => s,
            (x, y) if x == y => x,
            _ => {
                // Opposite signs: the larger magnitude of a and b·√d wins.
                match self.a.square().cmp(&(self.d_rat() * self.b.square())) {
                    Ordering::Greater => sa,
                    Ordering::Less => sb,
                    Ordering::Equal => unreachable!("a² = d·b² with d non-square and b ≠ 0"),
                }
            }
        }
    }

    pub fn abs(&self) -> QuadValue {
        if self.sign() == Sign::Minus {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn cmp_value(&self, other: &QuadValue) -> Result<Ordering, NumericError> {
        Ok(match self.sub(other)?.sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        })
    }

    /// Largest integer not above the value.
    pub fn floor(&self) -> BigInt {
        // Write the value as (p + q·√d) / den over a common positive denominator.
        let den = self.a.denom().lcm(self.b.denom());
        let p = self.a.numer() * (&den / self.a.denom());
        let q = self.b.numer() * (&den / self.b.denom());
        let root = isqrt(&(&q * &q * BigInt::from(self.d))).expect("non-negative");
        let q_root_floor = match q.sign() {
            Sign::Minus => -root - 1,
            _ => root,
        };
        (p + q_root_floor).div_floor(&den)
    }

    /// Nearest integer, ties rounded away from zero.
    pub fn round_half_away(&self) -> BigInt {
        let half = Rational::new(1, 2).expect("nonzero denominator");
        if self.sign() == Sign::Minus {
            let shifted = self.neg();
            -shifted.with(&shifted.a + &half, shifted.b.clone()).floor()
        } else {
            self.with(&self.a + &half, self.b.clone()).floor()
        }
    }

    /// Decimal text with `digits` fractional places, rounded half away from
    /// zero, so the error is at most `0.5·10^-digits`.
    pub fn approx_decimal(&self, digits: usize) -> String {
        let scale = Rational::from_integer(BigInt::from(10u32).pow(digits as u32));
        format_scaled_decimal(&self.scale(&scale).round_half_away(), digits)
    }
}

impl fmt::Display for QuadValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_negative() {
            write!(f, "{} - {}√{}", self.a, self.b.abs(), self.d)
        } else {
            write!(f, "{} + {}√{}", self.a, self.b, self.d)
        }
    }
}
