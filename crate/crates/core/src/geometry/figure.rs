use std::collections::BTreeMap;

use serde::Serialize;

use super::kernel::{polygon_area, signed_area_doubled, Point};
use super::GeometryError;
use crate::numeric::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    pub name: String,
    pub vertices: [String; 3],
}

/// Named points, segments between them, and named triangles.
///
/// Points are kept in name order; segments and triangles keep insertion
/// order. Every referenced name resolves and every triangle has positive
/// area.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Figure {
    side: Option<Rational>,
    points: BTreeMap<String, Point>,
    segments: Vec<(String, String)>,
    triangles: Vec<Triangle>,
}

impl Figure {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn side(&self) -> Option<&Rational> {
        self.side.as_ref()
    }

    pub fn set_side(&mut self, side: Rational) {
        self.side = Some(side);
    }

    pub fn points(&self) -> &BTreeMap<String, Point> {
        &self.points
    }

    pub fn segments(&self) -> &[(String, String)] {
        &self.segments
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    pub fn point(&self, name: &str) -> Result<&Point, GeometryError> {
        self.points.get(name).ok_or_else(|| GeometryError::UnknownName(name.to_string()))
    }

    pub fn add_point(&mut self, name: &str, p: Point) -> Result<(), GeometryError> {
        if self.points.contains_key(name) {
            return Err(GeometryError::Redefinition(name.to_string()));
        }
        self.points.insert(name.to_string(), p);
        Ok(())
    }

    pub fn add_segment(&mut self, from: &str, to: &str) -> Result<(), GeometryError> {
        self.point(from)?;
        self.point(to)?;
        self.segments.push((from.to_string(), to.to_string()));
        Ok(())
    }

    pub fn add_triangle(&mut self, name: &str, vertices: [&str; 3]) -> Result<(), GeometryError> {
        if self.triangles.iter().any(|t| t.name == name) {
            return Err(GeometryError::Redefinition(name.to_string()));
        }
        let triangle = Triangle { name: name.to_string(), vertices: vertices.map(str::to_string) };
        self.check_triangle(&triangle)?;
        self.triangles.push(triangle);
        Ok(())
    }

    fn check_triangle(&self, t: &Triangle) -> Result<(), GeometryError> {
        if self.signed_area_doubled(t)?.is_zero() {
            return Err(GeometryError::CollinearTriangle(t.name.clone()));
        }
        Ok(())
    }

    pub fn triangle(&self, name: &str) -> Result<&Triangle, GeometryError> {
        self.triangles
            .iter()
            .find(|t| t.name == name)
            .ok_or_else(|| GeometryError::UnknownName(name.to_string()))
    }

    pub fn vertices_of(&self, t: &Triangle) -> Result<[Point; 3], GeometryError> {
        Ok([
            self.point(&t.vertices[0])?.clone(),
            self.point(&t.vertices[1])?.clone(),
            self.point(&t.vertices[2])?.clone(),
        ])
    }

    pub fn signed_area_doubled(&self, t: &Triangle) -> Result<Rational, GeometryError> {
        Ok(signed_area_doubled(&self.vertices_of(t)?))
    }

    pub fn area(&self, t: &Triangle) -> Result<Rational, GeometryError> {
        polygon_area(&self.vertices_of(t)?)
    }

    /// Areas in triangle order.
    pub fn areas(&self) -> Vec<(&str, Rational)> {
        self.triangles
            .iter()
            .map(|t| (t.name.as_str(), self.area(t).expect("triangle names resolve")))
            .collect()
    }

    /// Copy with one existing point moved, rechecking every triangle.
    pub fn with_point(&self, name: &str, p: Point) -> Result<Figure, GeometryError> {
        let mut moved = self.clone();
        *moved.points.get_mut(name).ok_or_else(|| GeometryError::UnknownName(name.to_string()))? = p;
        for t in &moved.triangles {
            moved.check_triangle(t)?;
        }
        Ok(moved)
    }

    /// Figure JSON: rationals in canonical text, points by name, segments
    /// and triangles in construction order, two-space indentation and a
    /// trailing newline.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct TriangleJson<'a> {
            name: &'a str,
            vertices: &'a [String; 3],
            area: String,
        }
        #[derive(Serialize)]
        struct FigureJson<'a> {
            #[serde(skip_serializing_if = "Option::is_none")]
            side: Option<String>,
            points: &'a BTreeMap<String, Point>,
            segments: &'a [(String, String)],
            triangles: Vec<TriangleJson<'a>>,
        }
        let doc = FigureJson {
            side: self.side.as_ref().map(ToString::to_string),
            points: &self.points,
            segments: &self.segments,
            triangles: self
                .triangles
                .iter()
                .zip(self.areas())
                .map(|(t, (_, area))| TriangleJson {
                    name: &t.name,
                    vertices: &t.vertices,
                    area: area.to_string(),
                })
                .collect(),
        };
        let mut text = serde_json::to_string_pretty(&doc).expect("plain data serializes");
        text.push('\n');
        text
    }
}
