//! Exact planar kernel over rational coordinates and the tablet figures.

mod figure;
mod kernel;
mod tablets;

use thiserror::Error;

use crate::numeric::Rational;

pub use figure::{Figure, Triangle};
pub use kernel::{
    intersect, line_through, midpoint, perpendicular_through, polygon_area, signed_area_doubled, sq_dist,
    Line, Point,
};
pub use tablets::{
    build_bm15285_figure, build_ybc7289_figure, problem_xii_report, verify_problem_xii, verify_ybc7289,
    ybc7289_report, IdentityCheck, VerificationReport, YbcReport, BM15285_TRIANGLES, YBC7289_TRIANGLES,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("a line needs (a, b) ≠ (0, 0)")]
    DegenerateLine,
    #[error("points coincide at {0}; no unique line")]
    CoincidentPoints(Box<Point>),
    #[error("lines {} and {} are parallel", .0[0], .0[1])]
    ParallelLines(Box<[Line; 2]>),
    #[error("lines coincide: {0}")]
    CoincidentLines(Box<Line>),
    #[error("a polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("side must be positive, got {0}")]
    NonPositiveSide(Rational),
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error("{0:?} is already defined")]
    Redefinition(String),
    #[error("triangle {0:?} has collinear vertices")]
    CollinearTriangle(String),
    #[error("figure has no side length")]
    MissingSide,
    #[error("figure has no triangles")]
    MissingTriangles,
    #[error("identity {identity} fails: {lhs} ≠ {rhs}")]
    VerificationFailed { identity: String, lhs: Box<Rational>, rhs: Box<Rational> },
}
