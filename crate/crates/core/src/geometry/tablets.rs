//! The two tablet figures, built with the kernel primitives, and their checks.
//!
//! Frame: `A` at the origin, sides axis-aligned, `ABCD` counterclockwise.
//! Every constructed point is then rational; surds only appear in lengths.

use super::kernel::{intersect, line_through, midpoint, perpendicular_through, sq_dist, Point};
use super::{Figure, GeometryError};
use crate::numeric::{QuadValue, Rational};
use crate::proofs;

/// The sixteen wedges of problem xii: four inner, four ring, eight corner.
pub const BM15285_TRIANGLES: [[&str; 3]; 16] = [
    ["O", "L", "M"],
    ["O", "M", "N"],
    ["O", "N", "R"],
    ["O", "R", "L"],
    ["L", "W", "M"],
    ["M", "X", "N"],
    ["N", "Y", "R"],
    ["R", "Z", "L"],
    ["A", "W", "L"],
    ["A", "L", "Z"],
    ["B", "X", "M"],
    ["B", "M", "W"],
    ["C", "Y", "N"],
    ["C", "N", "X"],
    ["D", "Z", "R"],
    ["D", "R", "Y"],
];

pub const YBC7289_TRIANGLES: [[&str; 3]; 4] =
    [["O", "A", "B"], ["O", "B", "C"], ["O", "C", "D"], ["O", "D", "A"]];

const SQUARE_SEGMENTS: [[&str; 2]; 4] = [["A", "B"], ["B", "C"], ["C", "D"], ["D", "A"]];
const DIAGONALS: [[&str; 2]; 2] = [["A", "C"], ["B", "D"]];
const WXYZ_SEGMENTS: [[&str; 2]; 4] = [["W", "X"], ["X", "Y"], ["Y", "Z"], ["Z", "W"]];
const LMNR_SEGMENTS: [[&str; 2]; 4] = [["L", "M"], ["M", "N"], ["N", "R"], ["R", "L"]];

fn require_positive(side: &Rational) -> Result<(), GeometryError> {
    if !side.is_positive() {
        return Err(GeometryError::NonPositiveSide(side.clone()));
    }
    Ok(())
}

/// Square `ABCD`, its diagonals and their intersection `O`.
fn square_with_diagonals(side: &Rational) -> Result<Figure, GeometryError> {
    require_positive(side)?;
    let zero = Rational::zero();
    let mut fig = Figure::new();
    fig.set_side(side.clone());
    fig.add_point("A", Point::new(zero.clone(), zero.clone()))?;
    fig.add_point("B", Point::new(side.clone(), zero.clone()))?;
    fig.add_point("C", Point::new(side.clone(), side.clone()))?;
    fig.add_point("D", Point::new(zero, side.clone()))?;
    for [p, q] in SQUARE_SEGMENTS.iter().chain(&DIAGONALS) {
        fig.add_segment(p, q)?;
    }
    let ac = line_through(fig.point("A")?, fig.point("C")?)?;
    let bd = line_through(fig.point("B")?, fig.point("D")?)?;
    fig.add_point("O", intersect(&ac, &bd)?)?;
    Ok(fig)
}

fn add_triangles(fig: &mut Figure, triangles: &[[&str; 3]]) -> Result<(), GeometryError> {
    for (i, vertices) in triangles.iter().enumerate() {
        fig.add_triangle(&format!("T{}", i + 1), *vertices)?;
    }
    Ok(())
}

/// Problem xii: the square, both diagonals, the midpoints `L, M, N, R` of
/// `AO, BO, CO, DO`, the perpendiculars through them to the diagonal each
/// lies on, and `W, X, Y, Z` where consecutive perpendiculars meet.
pub fn build_bm15285_figure(side: &Rational) -> Result<Figure, GeometryError> {
    let mut fig = square_with_diagonals(side)?;
    let ac = line_through(fig.point("A")?, fig.point("C")?)?;
    let bd = line_through(fig.point("B")?, fig.point("D")?)?;
    let o = fig.point("O")?.clone();
    for (mid, corner) in [("L", "A"), ("M", "B"), ("N", "C"), ("R", "D")] {
        let p = midpoint(fig.point(corner)?, &o);
        fig.add_point(mid, p)?;
    }
    // L and N lie on AC, M and R on BD.
    let perp = |name: &str, diagonal| -> Result<_, GeometryError> {
        Ok(perpendicular_through(fig.point(name)?, diagonal))
    };
    let (l_perp, m_perp, n_perp, r_perp) =
        (perp("L", &ac)?, perp("M", &bd)?, perp("N", &ac)?, perp("R", &bd)?);
    fig.add_point("W", intersect(&l_perp, &m_perp)?)?;
    fig.add_point("X", intersect(&m_perp, &n_perp)?)?;
    fig.add_point("Y", intersect(&n_perp, &r_perp)?)?;
    fig.add_point("Z", intersect(&r_perp, &l_perp)?)?;
    for [p, q] in WXYZ_SEGMENTS.iter().chain(&LMNR_SEGMENTS) {
        fig.add_segment(p, q)?;
    }
    add_triangles(&mut fig, &BM15285_TRIANGLES)?;
    Ok(fig)
}

/// YBC 7289: a square with both diagonals, cut into four triangles at `O`.
pub fn build_ybc7289_figure(side: &Rational) -> Result<Figure, GeometryError> {
    let mut fig = square_with_diagonals(side)?;
    add_triangles(&mut fig, &YBC7289_TRIANGLES)?;
    Ok(fig)
}

/// One exact identity, decided by rational equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub id: &'static str,
    pub statement: &'static str,
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
}

impl IdentityCheck {
    fn new(id: &'static str, statement: &'static str, lhs: Rational, rhs: Rational) -> Self {
        let holds = lhs == rhs;
        IdentityCheck { id, statement, lhs, rhs, holds }
    }

    fn failure(&self) -> GeometryError {
        GeometryError::VerificationFailed {
            identity: self.id.to_string(),
            lhs: Box::new(self.lhs.clone()),
            rhs: Box::new(self.rhs.clone()),
        }
    }
}

fn first_failure(identities: &[IdentityCheck]) -> Result<(), GeometryError> {
    match identities.iter().find(|c| !c.holds) {
        Some(c) => Err(c.failure()),
        None => Ok(()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub side: Rational,
    /// Common wedge area `T` (the area of the first triangle).
    pub t: Rational,
    pub areas: Vec<(String, Rational)>,
    pub lm_sq: Rational,
    pub mn_sq: Rational,
    pub ln_sq: Rational,
    pub identities: Vec<IdentityCheck>,
}

impl VerificationReport {
    pub fn all_hold(&self) -> bool {
        self.identities.iter().all(|c| c.holds)
    }

    pub fn total_area(&self) -> Rational {
        self.areas.iter().fold(Rational::zero(), |acc, (_, a)| acc + a)
    }
}

fn count(n: usize) -> Rational {
    Rational::from_integer(n as i64)
}

/// Evaluates every problem-xii identity without failing on the first false one.
pub fn problem_xii_report(fig: &Figure) -> Result<VerificationReport, GeometryError> {
    let side = fig.side().cloned().ok_or(GeometryError::MissingSide)?;
    let areas: Vec<(String, Rational)> =
        fig.areas().into_iter().map(|(name, a)| (name.to_string(), a)).collect();
    let t = areas.first().map(|(_, a)| a.clone()).ok_or(GeometryError::MissingTriangles)?;
    let (l, m, n) = (fig.point("L")?, fig.point("M")?, fig.point("N")?);
    let lm_sq = sq_dist(l, m);
    let mn_sq = sq_dist(m, n);
    let ln_sq = sq_dist(l, n);
    let four_t = Rational::from_integer(4) * &t;
    let eight_t = Rational::from_integer(8) * &t;
    let unequal = areas.iter().find(|(_, a)| *a != t).map_or(t.clone(), |(_, a)| a.clone());
    let total = areas.iter().fold(Rational::zero(), |acc, (_, a)| acc + a);
    let positive = fig
        .triangles()
        .iter()
        .map(|tri| fig.signed_area_doubled(tri))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .filter(Rational::is_positive)
        .count();
    let identities = vec![
        IdentityCheck::new("wedge-count", "sixteen wedges", count(areas.len()), count(16)),
        IdentityCheck::new("equal-areas", "all wedge areas equal T", unequal, t.clone()),
        IdentityCheck::new("lm-sq", "(LM)^2 = 4T", lm_sq.clone(), four_t.clone()),
        IdentityCheck::new("mn-sq", "(MN)^2 = 4T", mn_sq.clone(), four_t),
        IdentityCheck::new("ln-sq", "(LN)^2 = 8T", ln_sq.clone(), eight_t),
        IdentityCheck::new("pythagoras", "(LM)^2 + (MN)^2 = (LN)^2", &lm_sq + &mn_sq, ln_sq.clone()),
        IdentityCheck::new("partition", "sum of areas = side^2", total, side.square()),
        IdentityCheck::new(
            "orientation",
            "every wedge counterclockwise",
            count(positive),
            count(fig.triangles().len()),
        ),
    ];
    Ok(VerificationReport { side, t, areas, lm_sq, mn_sq, ln_sq, identities })
}

/// Checks problem xii; the error names the first identity that fails.
pub fn verify_problem_xii(fig: &Figure) -> Result<VerificationReport, GeometryError> {
    let report = problem_xii_report(fig)?;
    first_failure(&report.identities)?;
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YbcReport {
    pub side: Rational,
    /// `(AC)²`, which must equal `2·side²`.
    pub diag_sq: Rational,
    /// The diagonal length `side·√2`.
    pub diagonal: QuadValue,
    pub identities: Vec<IdentityCheck>,
    /// `side < side·√2`, decided exactly.
    pub diagonal_exceeds_side: bool,
    /// `side·√2 / 2 < side`, decided exactly.
    pub half_diagonal_below_side: bool,
}

impl YbcReport {
    pub fn all_hold(&self) -> bool {
        self.identities.iter().all(|c| c.holds) && self.diagonal_exceeds_side && self.half_diagonal_below_side
    }
}

pub fn ybc7289_report(fig: &Figure) -> Result<YbcReport, GeometryError> {
    let side = fig.side().cloned().ok_or(GeometryError::MissingSide)?;
    let diag_sq = sq_dist(fig.point("A")?, fig.point("C")?);
    let other_sq = sq_dist(fig.point("B")?, fig.point("D")?);
    let two_side_sq = Rational::from_integer(2) * side.square();
    let total = fig.areas().into_iter().fold(Rational::zero(), |acc, (_, a)| acc + a);
    let identities = vec![
        IdentityCheck::new("diag-ac", "(AC)^2 = 2 side^2", diag_sq.clone(), two_side_sq.clone()),
        IdentityCheck::new("diag-bd", "(BD)^2 = 2 side^2", other_sq, two_side_sq),
        IdentityCheck::new("partition", "sum of areas = side^2", total, side.square()),
    ];
    let diagonal = QuadValue::sqrt(2).expect("2 is not a square").scale(&side);
    let shrinkage = proofs::shrinkage(&side);
    Ok(YbcReport {
        side,
        diag_sq,
        diagonal,
        identities,
        diagonal_exceeds_side: shrinkage.side_below_diagonal,
        half_diagonal_below_side: shrinkage.half_diagonal_below_side,
    })
}

pub fn verify_ybc7289(fig: &Figure) -> Result<YbcReport, GeometryError> {
    let report = ybc7289_report(fig)?;
    first_failure(&report.identities)?;
    Ok(report)
}
