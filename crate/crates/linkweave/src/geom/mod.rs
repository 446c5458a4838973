//! Exact linking numbers of polygonal closed curves.
//!
//! Coordinates are exact rationals. A curve pair is projected to the xy-plane after the
//! smallest shear `(x, y, z) -> (x + s z, y + s^2 z, z)` from the schedule
//! `s = 0, 1, 1/2, 1/3, ...` that makes the diagram generic. A crossing counts +1 when
//! the over-strand direction followed by the under-strand direction is a positively
//! oriented frame of the plane (the right-hand rule); the linking number is half the sum.

mod curve;
pub mod fixtures;
mod gauss;
mod linking;
mod point;
pub mod predicates;

pub use curve::{validate_disjoint, CurveSide, PLCurve};
pub use gauss::{gauss_linking_estimate, gauss_linking_raw, GaussEstimate};
pub use linking::{
    identity, is_generic, linking_details, linking_number, make_generic, path_crossings, rational_rotation,
    shear_schedule, signed_crossings, CrossingRecord, LinkingDetails, PathCrossings, SHEAR_SEARCH_LIMIT,
};
pub use point::{
    approx, format_rational, int, parse_rational, ratio, rational_string, sign, to_f64, unit_circle_point, Point2,
    Point3, Rational,
};

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum GeomError {
    #[error("a closed curve needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("curve {curve} is not simple: segments {i} and {j} meet")]
    SelfIntersection { curve: CurveSide, i: usize, j: usize },
    #[error("curves meet: segment {i} of A touches segment {j} of B")]
    MutualIntersection { i: usize, j: usize },
    #[error("no generic shear found after {tried} parameters")]
    DegenerateFamily { tried: usize },
    #[error("projection is not generic at segments {i} and {j}")]
    NonGenericPair { i: usize, j: usize },
    #[error("Gauss estimate {estimate} has error bound {bound} >= 0.25")]
    PrecisionWarning { estimate: f64, bound: f64 },
    #[error("parse error: {0}")]
    Parse(String),
}
