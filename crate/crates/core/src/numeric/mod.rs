//! Exact arithmetic: canonical big rationals and the quadratic fields ℚ(√d).
//!
//! Nothing in this module touches hardware floating point. Decimal text is
//! produced by scaling to an integer and rounding half away from zero.

mod quad;
mod rational;

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::Signed;
use thiserror::Error;

pub use quad::QuadValue;
pub(crate) use rational::format_scaled_decimal;
pub use rational::{rat_cmp, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed rational {0:?}")]
    MalformedRational(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("square root of negative integer {0}")]
    NegativeSqrt(BigInt),
    #[error("radicand {0} is a perfect square or zero")]
    SquareRadicand(u64),
    #[error("mixed radicands √{0} and √{1}")]
    MixedRadicands(u64, u64),
}

/// Floor square root: the `r` with `r² ≤ n < (r+1)²`.
pub fn isqrt(n: &BigInt) -> Result<BigInt, NumericError> {
    if n.is_negative() {
        return Err(NumericError::NegativeSqrt(n.clone()));
    }
    Ok(n.sqrt())
}

pub fn is_perfect_square(n: u64) -> bool {
    let r = n.sqrt();
    r * r == n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(&BigInt::from(0)).unwrap(), BigInt::from(0));
        assert_eq!(isqrt(&BigInt::from(16)).unwrap(), BigInt::from(4));
        assert_eq!(isqrt(&BigInt::from(17)).unwrap(), BigInt::from(4));
        assert!(matches!(isqrt(&BigInt::from(-1)), Err(NumericError::NegativeSqrt(_))));
    }

    #[test]
    fn isqrt_defining_inequality_up_to_a_million() {
        for n in 0u64..=1_000_000 {
            let r = isqrt(&BigInt::from(n)).unwrap();
            let r: u64 = r.try_into().unwrap();
            assert!(r * r <= n && n < (r + 1) * (r + 1), "isqrt({n}) = {r}");
        }
    }

    #[test]
    fn isqrt_large() {
        let n = BigInt::from(2) * BigInt::from(10).pow(40);
        let r = isqrt(&n).unwrap();
        assert!(&r * &r <= n && (&r + 1) * (&r + 1) > n);
        assert_eq!(r.to_string(), "141421356237309504880");
    }
}
