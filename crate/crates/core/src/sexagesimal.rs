//! Base-60 positional numerals in the modern `whole;frac,frac` notation.
//!
//! Whole digits are separated by `,`, the radix mark is `;`, and each digit
//! is written in decimal (`0..=59`). `1;24,51,10` is `1 + 24/60 + 51/60² + 10/60³`.
//!
//! Rounding to a fixed number of fractional places is always half away from
//! zero. Values are normalized on construction: redundant leading whole
//! zeros and trailing fractional zeros are dropped, and zero is unsigned.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::numeric::{is_perfect_square, isqrt, Rational};

pub const BASE: u32 = 60;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at offset {offset}")]
pub struct SexParseError {
    pub offset: usize,
    pub kind: SexParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SexParseErrorKind {
    #[error("empty digit")]
    EmptyDigit,
    #[error("digit {0} is not below 60")]
    DigitOutOfRange(u32),
    #[error("digit longer than two characters")]
    DigitTooLong,
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SexError {
    #[error(transparent)]
    Parse(#[from] SexParseError),
    #[error("{0} is a perfect square; its root is exact")]
    PerfectSquare(u64),
    #[error("digit {0} is not below 60")]
    DigitOutOfRange(u8),
    #[error("Heron iteration needs a positive start value, got {0}")]
    NonPositiveStart(SexValue),
    #[error("Heron iteration needs a positive radicand")]
    ZeroRadicand,
}

/// Signed base-60 numeral with whole and fractional digit sequences.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SexValue {
    negative: bool,
    whole: Vec<u8>,
    frac: Vec<u8>,
}

impl SexValue {
    pub fn new(negative: bool, whole: Vec<u8>, frac: Vec<u8>) -> Result<Self, SexError> {
        if let Some(&d) = whole.iter().chain(&frac).find(|&&d| d >= BASE as u8) {
            return Err(SexError::DigitOutOfRange(d));
        }
        Ok(Self::normalized(negative, whole, frac))
    }

    fn normalized(negative: bool, mut whole: Vec<u8>, mut frac: Vec<u8>) -> Self {
        let leading = whole.iter().take_while(|&&d| d == 0).count();
        whole.drain(..leading);
        if whole.is_empty() {
            whole.push(0);
        }
        while frac.last() == Some(&0) {
            frac.pop();
        }
        let is_zero = whole == [0] && frac.is_empty();
        SexValue { negative: negative && !is_zero, whole, frac }
    }

    pub fn zero() -> Self {
        SexValue { negative: false, whole: vec![0], frac: vec![] }
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn whole(&self) -> &[u8] {
        &self.whole
    }

    pub fn frac(&self) -> &[u8] {
        &self.frac
    }

    pub fn is_zero(&self) -> bool {
        self.whole == [0] && self.frac.is_empty()
    }

    /// Builds `m / 60^k` exactly.
    pub fn from_scaled(m: &BigInt, frac_digits: usize) -> Self {
        let base = BigInt::from(BASE);
        let mut rest = m.abs();
        let mut frac = vec![0u8; frac_digits];
        for slot in frac.iter_mut().rev() {
            let (q, r) = rest.div_rem(&base);
            *slot = r.to_u8().expect("remainder below 60");
            rest = q;
        }
        let mut whole = Vec::new();
        while !rest.is_zero() {
            let (q, r) = rest.div_rem(&base);
            whole.push(r.to_u8().expect("remainder below 60"));
            rest = q;
        }
        whole.reverse();
        Self::normalized(m.is_negative(), whole, frac)
    }

    /// Exact positional sum.
    pub fn to_rational(&self) -> Rational {
        let base = BigInt::from(BASE);
        let numer =
            self.whole.iter().chain(&self.frac).fold(BigInt::zero(), |acc, &d| acc * &base + BigInt::from(d));
        let numer = if self.negative { -numer } else { numer };
        Rational::new(numer, base.pow(self.frac.len() as u32)).expect("positive power of 60")
    }

    /// Nearest multiple of `60^-k`, ties away from zero.
    pub fn from_rational(r: &Rational, frac_digits: usize) -> Self {
        let scaled = r * &Rational::from_integer(sixty_pow(frac_digits));
        Self::from_scaled(&scaled.round_half_away(), frac_digits)
    }

    /// `c · self`, rounded to `frac_digits` places.
    pub fn scale(&self, c: &BigInt, frac_digits: usize) -> Self {
        let product = self.to_rational() * Rational::from_integer(c.clone());
        Self::from_rational(&product, frac_digits)
    }
}

fn sixty_pow(k: usize) -> BigInt {
    BigInt::from(BASE).pow(k as u32)
}

impl fmt::Display for SexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        let join = |digits: &[u8]| digits.iter().map(u8::to_string).collect::<Vec<_>>().join(",");
        f.write_str(&join(&self.whole))?;
        if !self.frac.is_empty() {
            write!(f, ";{}", join(&self.frac))?;
        }
        Ok(())
    }
}

impl FromStr for SexValue {
    type Err = SexParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_sex(s)
    }
}

/// Parses `"-"? digit ("," digit)* (";" digit ("," digit)*)?`.
pub fn parse_sex(text: &str) -> Result<SexValue, SexParseError> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let negative = bytes.first() == Some(&b'-');
    if negative {
        pos += 1;
    }
    let mut whole = Vec::new();
    let mut frac = Vec::new();
    let mut in_frac = false;
    loop {
        let digit = parse_digit(text, &mut pos)?;
        if in_frac {
            frac.push(digit);
        } else {
            whole.push(digit);
        }
        match bytes.get(pos) {
            None => break,
            Some(b',') => pos += 1,
            Some(b';') if !in_frac => {
                in_frac = true;
                pos += 1;
            }
            Some(_) => {
                let c = text[pos..].chars().next().expect("in bounds");
                return Err(SexParseError { offset: pos, kind: SexParseErrorKind::UnexpectedChar(c) });
            }
        }
    }
    Ok(SexValue::normalized(negative, whole, frac))
}

fn parse_digit(text: &str, pos: &mut usize) -> Result<u8, SexParseError> {
    let start = *pos;
    let len = text.as_bytes()[start..].iter().take_while(|b| b.is_ascii_digit()).count();
    let err = |kind| SexParseError { offset: start, kind };
    match len {
        0 => Err(err(SexParseErrorKind::EmptyDigit)),
        1 | 2 => {
            let value: u32 = text[start..start + len].parse().expect("ascii digits");
            if value >= BASE {
                return Err(err(SexParseErrorKind::DigitOutOfRange(value)));
            }
            *pos += len;
            Ok(value as u8)
        }
        _ => Err(err(SexParseErrorKind::DigitTooLong)),
    }
}

pub fn format_sex(v: &SexValue) -> String {
    v.to_string()
}

pub fn sex_to_rational(v: &SexValue) -> Rational {
    v.to_rational()
}

pub fn rational_to_sex(r: &Rational, frac_digits: usize) -> SexValue {
    SexValue::from_rational(r, frac_digits)
}

pub fn sex_scale(v: &SexValue, c: u64, frac_digits: usize) -> SexValue {
    v.scale(&BigInt::from(c), frac_digits)
}

/// Integer nearest to `√(num/den)` for positive `den`, ties rounded up.
///
/// With `m₀ = ⌊√(num/den)⌋`, `m₀ + 1` wins iff `den·(2m₀+1)² ≤ 4·num`.
fn nearest_sqrt_numerator(num: &BigInt, den: &BigInt) -> BigInt {
    let m0 = isqrt(&num.div_floor(den)).expect("non-negative radicand");
    let twice_mid = BigInt::from(2) * &m0 + 1;
    if den * &twice_mid * &twice_mid <= BigInt::from(4) * num {
        m0 + 1
    } else {
        m0
    }
}

fn require_non_square(n: u64) -> Result<(), SexError> {
    if is_perfect_square(n) {
        return Err(SexError::PerfectSquare(n));
    }
    Ok(())
}

/// The `k`-place numeral closest to `√n`.
pub fn best_sex_approx(n: u64, frac_digits: usize) -> Result<SexValue, SexError> {
    require_non_square(n)?;
    let scale_sq = sixty_pow(2 * frac_digits);
    let m = nearest_sqrt_numerator(&(BigInt::from(n) * scale_sq), &BigInt::from(1));
    Ok(SexValue::from_scaled(&m, frac_digits))
}

/// The `k`-place numeral closest to `1/√n = √n/n`.
pub fn best_sex_approx_recip(n: u64, frac_digits: usize) -> Result<SexValue, SexError> {
    require_non_square(n)?;
    let scale_sq = sixty_pow(2 * frac_digits);
    let m = nearest_sqrt_numerator(&scale_sq, &BigInt::from(n));
    Ok(SexValue::from_scaled(&m, frac_digits))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeronRun {
    /// The start value followed by each distinct rounded iterate.
    pub iterates: Vec<SexValue>,
    /// Whether the last iterate reproduced itself.
    pub converged: bool,
}

impl HeronRun {
    pub fn last(&self) -> &SexValue {
        self.iterates.last().expect("start value is always present")
    }
}

/// Heron's iteration `x ← (x + n/x)/2`, evaluated exactly and rounded to
/// `frac_digits` places after each step.
pub fn heron_sqrt_sex(
    n: u64,
    x0: &SexValue,
    frac_digits: usize,
    max_iter: usize,
) -> Result<HeronRun, SexError> {
    if n == 0 {
        return Err(SexError::ZeroRadicand);
    }
    if x0.is_negative() || x0.is_zero() {
        return Err(SexError::NonPositiveStart(x0.clone()));
    }
    let n = Rational::from_integer(n);
    let half = Rational::new(1, 2).expect("nonzero denominator");
    let mut iterates = vec![x0.clone()];
    let mut converged = false;
    for _ in 0..max_iter {
        let x = iterates.last().expect("non-empty").to_rational();
        let quotient = n.checked_div(&x).expect("iterates stay positive");
        let next = SexValue::from_rational(&((x + quotient) * &half), frac_digits);
        if Some(&next) == iterates.last() {
            converged = true;
            break;
        }
        iterates.push(next);
    }
    Ok(HeronRun { iterates, converged })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::QuadValue;
    use num_bigint::Sign;
    use std::cmp::Ordering;

    fn sex(s: &str) -> SexValue {
        s.parse().unwrap()
    }

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn parse_examples() {
        let v = sex("1;24,51,10");
        assert_eq!(v.whole(), &[1]);
        assert_eq!(v.frac(), &[24, 51, 10]);
        assert_eq!(sex("0;0,0,1").to_rational(), r("1/216000"));
        assert_eq!(
            parse_sex("1;60"),
            Err(SexParseError { offset: 2, kind: SexParseErrorKind::DigitOutOfRange(60) })
        );
    }

    #[test]
    fn parse_errors_carry_offsets() {
        let kind_at = |s: &str| parse_sex(s).map(|_| ()).unwrap_err();
        assert_eq!(kind_at("").offset, 0);
        assert_eq!(kind_at("1;").kind, SexParseErrorKind::EmptyDigit);
        assert_eq!(kind_at("1;").offset, 2);
        assert_eq!(kind_at("1,,2").offset, 2);
        assert_eq!(kind_at("1;2;3").kind, SexParseErrorKind::UnexpectedChar(';'));
        assert_eq!(kind_at("1;2;3").offset, 3);
        assert_eq!(kind_at("123").kind, SexParseErrorKind::DigitTooLong);
        assert_eq!(kind_at("--1").offset, 1);
        assert_eq!(kind_at("1 ;2").kind, SexParseErrorKind::UnexpectedChar(' '));
        assert_eq!(kind_at("1;é").offset, 2);
    }

    #[test]
    fn normalization() {
        assert_eq!(sex("42;25,35,0").to_string(), "42;25,35");
        assert_eq!(sex("0,0,5;30").to_string(), "5;30");
        assert_eq!(sex("-0;0").to_string(), "0");
        assert_eq!(sex("1,0;30").to_rational(), r("121/2"));
        assert_eq!(sex("-1;30").to_rational(), r("-3/2"));
        assert_eq!(sex("05;09").to_string(), "5;9");
    }

    #[test]
    fn to_rational_examples() {
        // 1 + 24/60 + 51/3600 + 10/216000 = 305470/216000
        assert_eq!(sex("1;24,51,10").to_rational(), r("30547/21600"));
        assert_eq!(sex("42;25,35").to_rational(), r("152735/3600"));
        assert_eq!(sex("42;25,35").to_rational().to_string(), "30547/720");
        assert_eq!(sex("0").to_rational(), Rational::zero());
    }

    #[test]
    fn from_rational_examples() {
        assert_eq!(rational_to_sex(&r("3/2"), 1).to_string(), "1;30");
        assert_eq!(rational_to_sex(&r("30547/21600"), 3).to_string(), "1;24,51,10");
        assert_eq!(rational_to_sex(&r("1/3"), 2).to_string(), "0;20");
        // 1/120 is exactly half a unit at one place; ties go away from zero.
        assert_eq!(rational_to_sex(&r("1/120"), 1).to_string(), "0;1");
        assert_eq!(rational_to_sex(&r("-1/120"), 1).to_string(), "-0;1");
        assert_eq!(rational_to_sex(&r("-1/121"), 1).to_string(), "0");
    }

    #[test]
    fn scaling() {
        assert_eq!(sex_scale(&sex("1;24,51,10"), 30, 3).to_string(), "42;25,35");
        assert_eq!(sex_scale(&sex("1;24,51,10"), 1, 3), sex("1;24,51,10"));
        assert_eq!(sex_scale(&sex("0;0,0,1"), 60, 3).to_string(), "0;0,1");
    }

    /// Independent oracle: scan a window of numerators and keep the one whose
    /// distance to the target is smallest, comparing distances with exact
    /// surd signs.
    fn brute_force_best(target: &QuadValue, frac_digits: usize, window: i64) -> BigInt {
        let scale = sixty_pow(frac_digits);
        let centre = target.scale(&Rational::from_integer(scale.clone())).floor();
        let dist = |m: &BigInt| {
            let value = Rational::new(m.clone(), scale.clone()).unwrap();
            target.sub(&QuadValue::rational(value, target.radicand()).unwrap()).unwrap().abs()
        };
        let mut best = centre.clone() - window;
        for offset in -window..=window {
            let m = &centre + offset;
            if dist(&m).cmp_value(&dist(&best)).unwrap() == Ordering::Less {
                best = m;
            }
        }
        best
    }

    fn numerator(v: &SexValue, k: usize) -> BigInt {
        let scaled = v.to_rational() * Rational::from_integer(sixty_pow(k));
        assert!(scaled.is_integer());
        scaled.numer().clone()
    }

    #[test]
    fn best_approximations_match_brute_force() {
        let root2 = QuadValue::sqrt(2).unwrap();
        let inv_root2 = root2.scale(&r("1/2"));
        assert_eq!(best_sex_approx(2, 3).unwrap().to_string(), "1;24,51,10");
        assert_eq!(best_sex_approx_recip(2, 3).unwrap().to_string(), "0;42,25,35");
        assert_eq!(best_sex_approx(3, 1).unwrap().to_string(), "1;44");
        for k in 1..=4 {
            let v = best_sex_approx(2, k).unwrap();
            assert_eq!(numerator(&v, k), brute_force_best(&root2, k, 25), "k={k}");
            let v = best_sex_approx_recip(2, k).unwrap();
            assert_eq!(numerator(&v, k), brute_force_best(&inv_root2, k, 25), "recip k={k}");
        }
        for n in [3u64, 5, 6, 7, 8, 10, 11, 12, 13, 14, 15, 17] {
            let root = QuadValue::sqrt(n).unwrap();
            let v = best_sex_approx(n, 2).unwrap();
            assert_eq!(numerator(&v, 2), brute_force_best(&root, 2, 5), "n={n}");
            let recip = root.scale(&Rational::new(1, n).unwrap());
            let v = best_sex_approx_recip(n, 2).unwrap();
            assert_eq!(numerator(&v, 2), brute_force_best(&recip, 2, 5), "recip n={n}");
        }
    }

    #[test]
    fn perfect_squares_are_rejected() {
        assert_eq!(best_sex_approx(4, 3), Err(SexError::PerfectSquare(4)));
        assert_eq!(best_sex_approx_recip(9, 3), Err(SexError::PerfectSquare(9)));
    }

    #[test]
    fn tablet_constant_is_within_a_millionth() {
        let gap = QuadValue::sqrt(2)
            .unwrap()
            .sub(&QuadValue::rational(sex("1;24,51,10").to_rational(), 2).unwrap())
            .unwrap();
        let millionth = QuadValue::rational(r("1/1000000"), 2).unwrap();
        assert_eq!(millionth.sub(&gap.abs()).unwrap().sign(), Sign::Plus);
        assert_eq!(gap.approx_decimal(9), "0.000000599");
    }

    #[test]
    fn heron_from_one_thirty() {
        let run = heron_sqrt_sex(2, &sex("1;30"), 3, 10).unwrap();
        let shown: Vec<String> = run.iterates.iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["1;30", "1;25", "1;24,51,11", "1;24,51,10"]);
        assert!(run.converged);
        assert_eq!(run.last(), &best_sex_approx(2, 3).unwrap());

        let run = heron_sqrt_sex(2, &sex("1;25"), 3, 10).unwrap();
        assert_eq!(run.last().to_string(), "1;24,51,10");
        assert!(run.converged);
    }

    #[test]
    fn heron_exact_root_is_a_fixed_point() {
        let run = heron_sqrt_sex(4, &sex("2"), 3, 10).unwrap();
        assert_eq!(run.iterates, vec![sex("2")]);
        assert!(run.converged);
    }

    #[test]
    fn heron_contracts_towards_root_two() {
        let root2 = QuadValue::sqrt(2).unwrap();
        let run = heron_sqrt_sex(2, &sex("1;30"), 3, 10).unwrap();
        let dists: Vec<QuadValue> = run
            .iterates
            .iter()
            .map(|x| root2.sub(&QuadValue::rational(x.to_rational(), 2).unwrap()).unwrap().abs())
            .collect();
        for pair in dists[1..].windows(2) {
            assert_ne!(pair[1].cmp_value(&pair[0]).unwrap(), Ordering::Greater);
        }
    }

    #[test]
    fn heron_rejects_bad_start() {
        assert!(matches!(heron_sqrt_sex(2, &sex("0"), 3, 5), Err(SexError::NonPositiveStart(_))));
        assert!(matches!(heron_sqrt_sex(2, &sex("-1"), 3, 5), Err(SexError::NonPositiveStart(_))));
        assert_eq!(heron_sqrt_sex(0, &sex("1"), 3, 5), Err(SexError::ZeroRadicand));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn sex_value() -> impl Strategy<Value = SexValue> {
            (any::<bool>(), prop::collection::vec(0u8..60, 1..4), prop::collection::vec(0u8..60, 0..5))
                .prop_map(|(neg, whole, frac)| SexValue::new(neg, whole, frac).unwrap())
        }

        proptest! {
            #[test]
            fn text_round_trip(v in sex_value()) {
                prop_assert_eq!(parse_sex(&format_sex(&v)).unwrap(), v);
            }

            #[test]
            fn rational_round_trip(v in sex_value()) {
                let k = v.frac().len();
                prop_assert_eq!(rational_to_sex(&sex_to_rational(&v), k), v);
            }
        }
    }
}
