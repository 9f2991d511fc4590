//! Infinite descent for `H² = 2S²`, made checkable.
//!
//! The argument splits into two machine-checkable halves:
//!
//! 1. the descent step `(H, S) → (S, H/2)` applies whenever `H` is even and
//!    sends the defect `k = H² − 2S²` to `−k/2`, so a pair with `k = 0` would
//!    descend forever through ever smaller positive integers;
//! 2. an exhaustive scan confirms no pair up to a bound has `k = 0`, and
//!    reports the closest approach (a Pell pair with `|k| = 1`).
//!
//! The shrinkage `S < H` and `H/2 < S`, which only holds on the impossible
//! `k = 0` branch, is checked symbolically in ℚ(√2) by [`shrinkage`].

use std::fmt;

use num_bigint::Sign;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::numeric::{is_perfect_square, QuadValue, Rational};

pub const DEFAULT_BOUND: u64 = 10_000;

/// Scans above this bound could overflow the defect arithmetic.
pub const MAX_BOUND: u64 = 1 << 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProofError {
    #[error("H = {h} is odd (H² = {h_sq} is odd), so H/2 is not an integer")]
    InapplicableStep { h: u64, h_sq: u128 },
    #[error("pair components must be positive, got ({h}, {s})")]
    NonPositivePair { h: u64, s: u64 },
    #[error("search limit must be between 2 and {MAX_BOUND}, got {0}")]
    BadLimit(u64),
    #[error("n must be positive")]
    ZeroRadicand,
    #[error("found H² = {n}·S² at {pair}")]
    Falsified { n: u64, pair: DescentPair },
}

/// Candidate `H/S` for `√2`: hypotenuse and side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DescentPair {
    h: u64,
    s: u64,
}

impl DescentPair {
    pub fn new(h: u64, s: u64) -> Result<Self, ProofError> {
        if h == 0 || s == 0 {
            return Err(ProofError::NonPositivePair { h, s });
        }
        Ok(DescentPair { h, s })
    }

    pub fn h(&self) -> u64 {
        self.h
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    /// `H² − 2S²`.
    pub fn defect(&self) -> i128 {
        self.defect_for(2)
    }

    /// `H² − n·S²`.
    pub fn defect_for(&self, n: u64) -> i128 {
        let (h, s) = (self.h as i128, self.s as i128);
        h * h - n as i128 * s * s
    }
}

impl fmt::Display for DescentPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(H={}, S={})", self.h, self.s)
    }
}

impl Serialize for DescentPair {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("DescentPair", 2)?;
        st.serialize_field("H", &self.h)?;
        st.serialize_field("S", &self.s)?;
        st.end()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Parity {
    pub h_even: bool,
    pub h_sq_even: bool,
}

impl Parity {
    pub fn agrees(&self) -> bool {
        self.h_even == self.h_sq_even
    }
}

/// Parities of `h` and `h²`; they always agree.
pub fn parity_lemma(h: u64) -> Parity {
    let h_sq = h as u128 * h as u128;
    Parity { h_even: h.is_multiple_of(2), h_sq_even: h_sq.is_multiple_of(2) }
}

/// `(H, S) → (S, H/2)`, defined for even `H`.
pub fn descent_step(pair: DescentPair) -> Result<DescentPair, ProofError> {
    if !pair.h.is_multiple_of(2) {
        let h_sq = pair.h as u128 * pair.h as u128;
        return Err(ProofError::InapplicableStep { h: pair.h, h_sq });
    }
    DescentPair::new(pair.s, pair.h / 2)
}

/// Applies [`descent_step`] until `H` is odd; the chain starts with `pair`.
pub fn descend(pair: DescentPair) -> Vec<DescentPair> {
    let mut chain = vec![pair];
    while let Ok(next) = descent_step(*chain.last().expect("non-empty")) {
        chain.push(next);
    }
    chain
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub n: u64,
    pub limit: u64,
    pub pairs_scanned: u64,
    /// Smallest `|H² − n·S²|` over all scanned pairs.
    pub min_defect: u128,
    /// The minimizing pair with the smallest `H`.
    pub witness: DescentPair,
    /// The minimizing pair with the largest `H`: the best approximation found.
    pub last_witness: DescentPair,
}

#[derive(Debug, Clone, Copy)]
struct Partial {
    pairs: u64,
    min: u128,
    first: DescentPair,
    last: DescentPair,
    zero: Option<DescentPair>,
}

impl Partial {
    fn merge(self, later: Partial) -> Partial {
        Partial {
            pairs: self.pairs + later.pairs,
            min: self.min.min(later.min),
            first: if self.min <= later.min { self.first } else { later.first },
            last: if later.min <= self.min { later.last } else { self.last },
            zero: self.zero.or(later.zero),
        }
    }
}

fn scan_h_range(n: u64, hs: std::ops::Range<u64>) -> Option<Partial> {
    let mut acc: Option<Partial> = None;
    for h in hs {
        let h_sq = h as i128 * h as i128;
        for s in 1..h {
            let k = (h_sq - n as i128 * s as i128 * s as i128).unsigned_abs();
            let pair = DescentPair { h, s };
            acc = Some(match acc {
                None => Partial { pairs: 1, min: k, first: pair, last: pair, zero: None },
                Some(mut p) => {
                    p.pairs += 1;
                    if k < p.min {
                        p.min = k;
                        p.first = pair;
                        p.last = pair;
                    } else if k == p.min {
                        p.last = pair;
                    }
                    p
                }
            });
            if k == 0 {
                let p = acc.as_mut().expect("just set");
                p.zero = p.zero.or(Some(pair));
            }
        }
    }
    acc
}

/// Exhaustive scan of every `1 ≤ S < H ≤ limit` for `H² = n·S²`.
///
/// Blocks of `H` are scanned in parallel and merged in order, so the result
/// equals the sequential scan. A zero defect is reported as
/// [`ProofError::Falsified`].
pub fn defect_search(n: u64, limit: u64) -> Result<SearchReport, ProofError> {
    if n == 0 {
        return Err(ProofError::ZeroRadicand);
    }
    if !(2..=MAX_BOUND).contains(&limit) {
        return Err(ProofError::BadLimit(limit));
    }
    const BLOCK: u64 = 64;
    let blocks = (limit - 1).div_ceil(BLOCK);
    let partials: Vec<Partial> = (0..blocks)
        .into_par_iter()
        .filter_map(|b| {
            let start = 2 + b * BLOCK;
            scan_h_range(n, start..(start + BLOCK).min(limit + 1))
        })
        .collect();
    let total = partials.into_iter().reduce(Partial::merge).expect("limit ≥ 2 gives a pair");
    if let Some(pair) = total.zero {
        return Err(ProofError::Falsified { n, pair });
    }
    Ok(SearchReport {
        n,
        limit,
        pairs_scanned: total.pairs,
        min_defect: total.min,
        witness: total.first,
        last_witness: total.last,
    })
}

/// [`defect_search`] for `√2`.
pub fn no_solution_search(limit: u64) -> Result<SearchReport, ProofError> {
    defect_search(2, limit)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Rational { root: u64 },
    Irrational(IrrationalEvidence),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrrationalEvidence {
    pub exhaustive_bound: u64,
    pub min_defect: u128,
    pub witness: DescentPair,
    pub narration: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrrationalityCertificate {
    pub n: u64,
    pub verdict: Verdict,
}

impl IrrationalityCertificate {
    pub fn is_rational(&self) -> bool {
        matches!(self.verdict, Verdict::Rational { .. })
    }

    /// Rechecks the certificate's arithmetic claims.
    pub fn check(&self) -> bool {
        match &self.verdict {
            Verdict::Rational { root } => (*root as u128).pow(2) == self.n as u128,
            Verdict::Irrational(ev) => {
                let k = ev.witness.defect_for(self.n).unsigned_abs();
                !is_perfect_square(self.n)
                    && ev.exhaustive_bound >= 1
                    && k != 0
                    && k == ev.min_defect
                    && ev.witness.h() <= ev.exhaustive_bound
            }
        }
    }

    /// Certificate JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        #[serde(untagged)]
        enum Doc<'a> {
            Rational {
                n: u64,
                verdict: &'static str,
                root: u64,
            },
            Irrational {
                n: u64,
                verdict: &'static str,
                exhaustive_bound: u64,
                min_defect: u128,
                witness: DescentPair,
                narration: &'a [String],
            },
        }
        let doc = match &self.verdict {
            Verdict::Rational { root } => Doc::Rational { n: self.n, verdict: "rational", root: *root },
            Verdict::Irrational(ev) => Doc::Irrational {
                n: self.n,
                verdict: "irrational",
                exhaustive_bound: ev.exhaustive_bound,
                min_defect: ev.min_defect,
                witness: ev.witness,
                narration: &ev.narration,
            },
        };
        let mut text = serde_json::to_string_pretty(&doc).expect("plain data serializes");
        text.push('\n');
        text
    }
}

fn narration(n: u64) -> Vec<String> {
    if n == 2 {
        return [
            "H^2 = 2 S^2 assumed",
            "H even by parity lemma",
            "descend to (S, H/2)",
            "contradicts lowest terms",
        ]
        .map(String::from)
        .to_vec();
    }
    let r = num_integer::Roots::sqrt(&n);
    vec![
        format!("H^2 = {n} S^2 assumed with gcd(H, S) = 1"),
        "S divides H^2 and is coprime to H, so S = 1".to_string(),
        format!("then H^2 = {n}, so {n} is a perfect square"),
        format!("{r}^2 < {n} < {}^2, contradiction", r + 1),
    ]
}

/// Decides whether `√n` is rational.
///
/// Perfect squares get their root; every other `n` gets the lowest-terms
/// argument (the descent narration for `n = 2`) and an exhaustive
/// no-solution scan up to `bound`, whose witness is the largest pair
/// attaining the minimal nonzero defect.
pub fn decide_sqrt_rational(n: u64, bound: u64) -> Result<IrrationalityCertificate, ProofError> {
    if n == 0 {
        return Err(ProofError::ZeroRadicand);
    }
    let root = num_integer::Roots::sqrt(&n);
    if root * root == n {
        return Ok(IrrationalityCertificate { n, verdict: Verdict::Rational { root } });
    }
    let search = defect_search(n, bound)?;
    Ok(IrrationalityCertificate {
        n,
        verdict: Verdict::Irrational(IrrationalEvidence {
            exhaustive_bound: bound,
            min_defect: search.min_defect,
            witness: search.last_witness,
            narration: narration(n),
        }),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shrinkage {
    /// `s < s√2`.
    pub side_below_diagonal: bool,
    /// `s√2/2 < s`.
    pub half_diagonal_below_side: bool,
}

impl Shrinkage {
    pub fn holds(&self) -> bool {
        self.side_below_diagonal && self.half_diagonal_below_side
    }
}

/// For a square of side `s > 0` with diagonal `s√2`, decides exactly that
/// `S < H` and `H/2 < S`.
pub fn shrinkage(side: &Rational) -> Shrinkage {
    let diagonal = QuadValue::sqrt(2).expect("2 is not a square").scale(side);
    let side = QuadValue::rational(side.clone(), 2).expect("2 is not a square");
    let half = diagonal.scale(&Rational::new(1, 2).expect("nonzero denominator"));
    Shrinkage {
        side_below_diagonal: diagonal.sub(&side).expect("same field").sign() == Sign::Plus,
        half_diagonal_below_side: side.sub(&half).expect("same field").sign() == Sign::Plus,
    }
}

/// `1/(q(p + 2q))`, a lower bound on `|√2 − p/q|` for positive integers.
///
/// Since `|p² − 2q²| ≥ 1` and `p + q√2 < p + 2q`.
pub fn irrationality_gap(p: u64, q: u64) -> Result<Rational, ProofError> {
    if p == 0 || q == 0 {
        return Err(ProofError::NonPositivePair { h: p, s: q });
    }
    Ok(Rational::new(1u64, q as u128 * (p as u128 + 2 * q as u128)).expect("positive"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapCheck {
    pub bound: Rational,
    /// `|√2 − p/q|`, exact.
    pub gap: QuadValue,
    /// Sign of `gap − bound`.
    pub margin: Sign,
}

impl GapCheck {
    pub fn holds(&self) -> bool {
        self.margin != Sign::Minus
    }

    pub fn strict(&self) -> bool {
        self.margin == Sign::Plus
    }
}

pub fn verify_gap(p: u64, q: u64) -> Result<GapCheck, ProofError> {
    let bound = irrationality_gap(p, q)?;
    let approx = Rational::new(p, q).expect("q positive");
    let root2 = QuadValue::sqrt(2).expect("2 is not a square");
    let gap =
        root2.sub(&QuadValue::rational(approx, 2).expect("2 is not a square")).expect("same field").abs();
    let margin = gap
        .sub(&QuadValue::rational(bound.clone(), 2).expect("2 is not a square"))
        .expect("same field")
        .sign();
    Ok(GapCheck { bound, gap, margin })
}
