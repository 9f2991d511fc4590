use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::NumericError;

/// Exact fraction kept in lowest terms with a positive denominator.
///
/// Zero is always `0/1`. The canonical text form is `num/den`, or the bare
/// numerator when the denominator is one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(num_rational::BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self, NumericError> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(NumericError::DivisionByZero);
        }
        Ok(Rational(num_rational::BigRational::new(numer.into(), denom)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(num_rational::BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(num_rational::BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(num_rational::BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn sign(&self) -> Sign {
        self.numer().sign()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn square(&self) -> Self {
        Rational(&self.0 * &self.0)
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational, NumericError> {
        if rhs.is_zero() {
            return Err(NumericError::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Rational, NumericError> {
        Rational::one().checked_div(self)
    }

    /// Largest integer not above the value.
    pub fn floor(&self) -> BigInt {
        self.numer().div_floor(self.denom())
    }

    /// Nearest integer, ties rounded away from zero.
    pub fn round_half_away(&self) -> BigInt {
        let half = Rational::new(1, 2).expect("nonzero denominator");
        if self.sign() == Sign::Minus {
            -(&(-self) + &half).floor()
        } else {
            (self + &half).floor()
        }
    }

    /// Decimal text rounded half away from zero to `digits` fractional places.
    pub fn to_decimal(&self, digits: usize) -> String {
        let scaled = self * &Rational::from_integer(BigInt::from(10u32).pow(digits as u32));
        format_scaled_decimal(&scaled.round_half_away(), digits)
    }
}

/// Renders the integer `m` as `m / 10^digits` with exactly `digits` places.
pub(crate) fn format_scaled_decimal(m: &BigInt, digits: usize) -> String {
    let negative = m.is_negative();
    let mut body = m.abs().to_string();
    if digits == 0 {
        return if negative { format!("-{body}") } else { body };
    }
    if body.len() <= digits {
        body = format!("{}{}", "0".repeat(digits + 1 - body.len()), body);
    }
    let (int_part, frac_part) = body.split_at(body.len() - digits);
    format!("{}{int_part}.{frac_part}", if negative { "-" } else { "" })
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

/// Parses `"-"? INT ("/" POSINT)?`. Non-reduced input is accepted and reduced.
impl FromStr for Rational {
    type Err = NumericError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || NumericError::MalformedRational(s.to_string());
        let (numer, denom) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let digits = numer.strip_prefix('-').unwrap_or(numer);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let numer: BigInt = numer.parse().map_err(|_| bad())?;
        let denom: BigInt = match denom {
            None => BigInt::one(),
            Some(d) => {
                if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad());
                }
                d.parse().map_err(|_| bad())?
            }
        };
        if denom.is_zero() {
            return Err(NumericError::ZeroDenominator(s.to_string()));
        }
        Rational::new(numer, denom)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(&self.0, &rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(self.0, rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

pub fn rat_cmp(x: &Rational, y: &Rational) -> Ordering {
    x.cmp(y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn assert_canonical(x: &Rational) {
        assert!(x.denom().is_positive());
        assert!(x.numer().gcd(x.denom()).is_one());
        if x.is_zero() {
            assert!(x.denom().is_one());
        }
    }

    #[test]
    fn add_thirds_and_halves() {
        let sum = r("1/2") + r("1/3");
        assert_eq!(sum, r("5/6"));
        assert_eq!(sum.to_string(), "5/6");
    }

    #[test]
    fn divide_by_zero_is_an_error() {
        assert_eq!(r("1").checked_div(&r("0")), Err(NumericError::DivisionByZero));
    }

    #[test]
    fn sixty_squared() {
        assert_eq!((r("60") * r("60")).to_string(), "3600");
    }

    #[test]
    fn text_form() {
        assert_eq!(r("4/2").to_string(), "2");
        assert_eq!(r("-6/4").to_string(), "-3/2");
        assert_eq!(r("0/7").to_string(), "0");
        assert_canonical(&r("0/7"));
        assert!(matches!("1/0".parse::<Rational>(), Err(NumericError::ZeroDenominator(_))));
        for bad in ["", "-", "1/", "/2", "1.5", "+1", "1/-2", "a", "1 /2"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn floor_and_rounding() {
        assert_eq!(r("-1/2").floor(), BigInt::from(-1));
        assert_eq!(r("7/2").round_half_away(), BigInt::from(4));
        assert_eq!(r("-7/2").round_half_away(), BigInt::from(-4));
        assert_eq!(r("-7/3").round_half_away(), BigInt::from(-2));
        assert_eq!(r("3/2").to_decimal(3), "1.500");
        assert_eq!(r("-1/8").to_decimal(2), "-0.13");
        assert_eq!(r("1/3").to_decimal(0), "0");
    }

    #[test]
    fn ordering_is_total() {
        let mut xs = vec![r("1/2"), r("-3"), r("2/3"), r("0")];
        xs.sort();
        assert_eq!(xs, vec![r("-3"), r("0"), r("1/2"), r("2/3")]);
        assert_eq!(rat_cmp(&r("1/3"), &r("2/6")), Ordering::Equal);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn rational() -> impl Strategy<Value = Rational> {
            (-1000i64..1000, 1i64..1000).prop_map(|(n, d)| Rational::new(n, d).unwrap())
        }

        proptest! {
            #[test]
            fn results_stay_canonical(x in rational(), y in rational()) {
                assert_canonical(&(&x + &y));
                assert_canonical(&(&x - &y));
                assert_canonical(&(&x * &y));
                if !y.is_zero() {
                    let q = x.checked_div(&y).unwrap();
                    assert_canonical(&q);
                    prop_assert_eq!(&q * &y, x.clone());
                }
                prop_assert_eq!(x.to_string().parse::<Rational>().unwrap(), x);
            }
        }
    }
}
