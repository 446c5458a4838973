use std::fmt::Write as _;

use super::point::{Point3, Rational};
use super::predicates::{adjacent_overlap, segments_intersect};
use super::GeomError;

/// Which of two curves an error refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum CurveSide {
    A,
    B,
}

impl std::fmt::Display for CurveSide {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CurveSide::A => "A",
            CurveSide::B => "B",
        })
    }
}

/// A closed polygon. The last vertex joins the first; the first is not repeated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PLCurve {
    vertices: Vec<Point3>,
}

impl PLCurve {
    /// Requires at least three vertices. Simplicity is checked by [`PLCurve::check_simple`].
    pub fn new(vertices: Vec<Point3>) -> Result<Self, GeomError> {
        if vertices.len() < 3 {
            return Err(GeomError::TooFewVertices(vertices.len()));
        }
        Ok(PLCurve { vertices })
    }

    pub fn vertices(&self) -> &[Point3] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Segment `i` runs from vertex `i` to vertex `i + 1` (cyclically).
    pub fn segment(&self, i: usize) -> (&Point3, &Point3) {
        let n = self.vertices.len();
        (&self.vertices[i], &self.vertices[(i + 1) % n])
    }

    pub fn reversed(&self) -> PLCurve {
        let mut v = self.vertices.clone();
        v.reverse();
        PLCurve { vertices: v }
    }

    pub fn map(&self, f: impl Fn(&Point3) -> Point3) -> PLCurve {
        PLCurve { vertices: self.vertices.iter().map(f).collect() }
    }

    pub fn sheared(&self, s: &Rational) -> PLCurve {
        self.map(|p| p.sheared(s))
    }

    pub fn translated(&self, d: &Point3) -> PLCurve {
        self.map(|p| p.add(d))
    }

    /// Exact simplicity check; reports the first offending segment pair.
    pub fn check_simple(&self, side: CurveSide) -> Result<(), GeomError> {
        let n = self.vertices.len();
        for i in 0..n {
            let (a, b) = self.segment(i);
            if a == b {
                return Err(GeomError::SelfIntersection { curve: side, i, j: (i + 1) % n });
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let (a, b) = self.segment(i);
                let (c, d) = self.segment(j);
                let bad = if j == i + 1 {
                    adjacent_overlap(a, b, d)
                } else if i == 0 && j == n - 1 {
                    adjacent_overlap(b, a, c)
                } else {
                    segments_intersect(a, b, c, d)
                };
                if bad {
                    return Err(GeomError::SelfIntersection { curve: side, i, j });
                }
            }
        }
        Ok(())
    }

    /// Curve file body: one vertex per line, `n/d` rationals.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            let _ = writeln!(out, "{v}");
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, GeomError> {
        let mut vertices = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let p: Point3 = line
                .parse()
                .map_err(|e| GeomError::Parse(format!("line {}: {e}", lineno + 1)))?;
            vertices.push(p);
        }
        PLCurve::new(vertices)
    }
}

/// Confirms both curves are simple and that they do not meet.
pub fn validate_disjoint(a: &PLCurve, b: &PLCurve) -> Result<(), GeomError> {
    a.check_simple(CurveSide::A)?;
    b.check_simple(CurveSide::B)?;
    for i in 0..a.len() {
        let (p, q) = a.segment(i);
        for j in 0..b.len() {
            let (r, s) = b.segment(j);
            if segments_intersect(p, q, r, s) {
                return Err(GeomError::MutualIntersection { i, j });
            }
        }
    }
    Ok(())
}
