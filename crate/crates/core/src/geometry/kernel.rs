use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::GeometryError;
use crate::numeric::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(x.into(), y.into())
    }

    pub fn scale(&self, c: &Rational) -> Point {
        Point::new(&self.x * c, &self.y * c)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Serialize for Point {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Point", 2)?;
        s.serialize_field("x", &self.x.to_string())?;
        s.serialize_field("y", &self.y.to_string())?;
        s.end()
    }
}

/// The line `a·x + b·y = c`, scaled to coprime integers with the first
/// nonzero coefficient positive, so equal lines compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Line {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl Line {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self, GeometryError> {
        if a.is_zero() && b.is_zero() {
            return Err(GeometryError::DegenerateLine);
        }
        let lcm = [&a, &b, &c].iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let mut coeffs = [&a, &b, &c].map(|r| r.numer() * (&lcm / r.denom()));
        let gcd = coeffs.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        let leading = coeffs.iter().find(|v| !v.is_zero()).expect("a or b is nonzero");
        let divisor = if leading.is_negative() { -gcd } else { gcd };
        for v in coeffs.iter_mut() {
            *v = &*v / &divisor;
        }
        let [a, b, c] = coeffs;
        Ok(Line { a, b, c })
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

    pub fn contains(&self, p: &Point) -> bool {
        let a = Rational::from_integer(self.a.clone());
        let b = Rational::from_integer(self.b.clone());
        a * &p.x + b * &p.y == Rational::from_integer(self.c.clone())
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let term = |coef: &BigInt, var: &str| -> String {
            if coef.is_one() {
                var.to_string()
            } else if *coef == BigInt::from(-1) {
                format!("-{var}")
            } else {
                format!("{coef}{var}")
            }
        };
        let lhs = match (self.a.is_zero(), self.b.is_zero()) {
            (false, true) => term(&self.a, "x"),
            (true, false) => term(&self.b, "y"),
            _ => {
                let sign = if self.b.is_negative() { "-" } else { "+" };
                format!("{} {sign} {}", term(&self.a, "x"), term(&self.b.abs(), "y"))
            }
        };
        write!(f, "{lhs} = {}", self.c)
    }
}

pub fn midpoint(p: &Point, q: &Point) -> Point {
    let half = Rational::new(1, 2).expect("nonzero denominator");
    Point::new((&p.x + &q.x) * &half, (&p.y + &q.y) * &half)
}

pub fn line_through(p: &Point, q: &Point) -> Result<Line, GeometryError> {
    if p == q {
        return Err(GeometryError::CoincidentPoints(Box::new(p.clone())));
    }
    let a = &q.y - &p.y;
    let b = &p.x - &q.x;
    let c = &a * &p.x + &b * &p.y;
    Line::new(a, b, c)
}

/// The line through `p` whose direction is the normal of `l`.
pub fn perpendicular_through(p: &Point, l: &Line) -> Line {
    let a = Rational::from_integer(-l.b.clone());
    let b = Rational::from_integer(l.a.clone());
    let c = &a * &p.x + &b * &p.y;
    Line::new(a, b, c).expect("normal of a valid line is nonzero")
}

pub fn intersect(l1: &Line, l2: &Line) -> Result<Point, GeometryError> {
    let det = &l1.a * &l2.b - &l2.a * &l1.b;
    if det.is_zero() {
        return Err(if l1 == l2 {
            GeometryError::CoincidentLines(Box::new(l1.clone()))
        } else {
            GeometryError::ParallelLines(Box::new([l1.clone(), l2.clone()]))
        });
    }
    let x = &l1.c * &l2.b - &l2.c * &l1.b;
    let y = &l1.a * &l2.c - &l2.a * &l1.c;
    Ok(Point::new(
        Rational::new(x, det.clone()).expect("nonzero determinant"),
        Rational::new(y, det).expect("nonzero determinant"),
    ))
}

pub fn sq_dist(p: &Point, q: &Point) -> Rational {
    (&p.x - &q.x).square() + (&p.y - &q.y).square()
}

/// Twice the signed shoelace area; positive for counterclockwise order.
pub fn signed_area_doubled(vertices: &[Point]) -> Rational {
    let n = vertices.len();
    (0..n).fold(Rational::zero(), |acc, i| {
        let (p, q) = (&vertices[i], &vertices[(i + 1) % n]);
        acc + (&p.x * &q.y - &q.x * &p.y)
    })
}

/// Absolute shoelace area of a simple polygon.
pub fn polygon_area(vertices: &[Point]) -> Result<Rational, GeometryError> {
    if vertices.len() < 3 {
        return Err(GeometryError::TooFewVertices(vertices.len()));
    }
    let half = Rational::new(1, 2).expect("nonzero denominator");
    Ok(signed_area_doubled(vertices).abs() * half)
}
