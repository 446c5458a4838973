//! Decision procedures recovering the weak-linking case (A1/A2, B1/B2, C1-C3, D1/D2, PQ)
//! and its parameters from link maps and triangle tables.
//!
//! Every matcher confirms its answer by regenerating the pattern from the recovered
//! parameters (see [`patterns`]) and comparing it with the input exactly.

mod k4;
mod nca;
mod pair;
pub mod patterns;
mod pq;
mod theta;

pub use k4::{classify_k4, match_b1, match_b2, K4Classification};
pub use nca::{nca_case, NcaCase};
pub use pair::{classify_pair, common_triangles, match_d1, match_d2, PairClassification, PairReport};
pub use pq::{cyclic_order, epsilon, out_set, recover_pq, recover_pq_at, sim_classes, PqClassification};
pub use theta::{classify_theta, match_a1, match_a2, theta_max_linking, ThetaClassification};

use serde::Serialize;
use thiserror::Error;

use crate::graphs::{all_triangles, GraphError, OrientedTriangle, VertexId, VertexSet};
use crate::linktable::{linkage_status, validate_consistency, Side, TableError, TriangleLinkTable};
use crate::stars::{detect_star, Star, StarError};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("no triangle of {0} links the other side")]
    NoLinkingTriangles(Side),
    #[error("the three maps do not sum to zero")]
    NotThetaCycles,
    #[error("not weakly linked: {0}")]
    NotWeaklyLinked(String),
    #[error("linkage status is {0}, not Weak")]
    NotWeak(&'static str),
    #[error("expected order {expected}, found {found}")]
    WrongOrder { expected: usize, found: usize },
    #[error("the stars have common apex {0}")]
    CommonApex(VertexId),
    #[error("relation is not transitive on {x}, {y}, {z}")]
    NotTransitive { x: VertexId, y: VertexId, z: VertexId },
    #[error("neither orientation case holds for ({x}, {y}, {z})")]
    NeitherCase { x: VertexId, y: VertexId, z: VertexId },
    #[error("no cyclic order of the classes is consistent")]
    NoConsistentOrder,
    #[error("triangle {triangle} of {side} does not link the other side in a star with the expected apex")]
    NotStar { side: Side, triangle: OrientedTriangle },
    #[error("pattern differs at {g} / {h}: expected {expected}, found {found}")]
    PatternMismatch { g: OrientedTriangle, h: OrientedTriangle, expected: i64, found: i64 },
    #[error("no case of the dichotomy applies: {0}")]
    DichotomyViolation(String),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Star(#[from] StarError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Vertices of `side` lying on every triangle that links the other side.
pub fn common_vertices(t: &TriangleLinkTable, side: Side) -> Result<VertexSet, ClassifyError> {
    let linking = t.linking_triangles(side);
    if linking.is_empty() {
        return Err(ClassifyError::NoLinkingTriangles(side));
    }
    Ok(linking.iter().fold(VertexSet::full(t.order(side)), |acc, x| acc.intersection(x.vertex_set())))
}

/// The least vertex of `side` common to all linking triangles.
pub fn common_vertex(t: &TriangleLinkTable, side: Side) -> Result<Option<VertexId>, ClassifyError> {
    Ok(common_vertices(t, side)?.least())
}

/// Whether `parts` are pairwise disjoint with union `whole`.
pub fn is_partition(parts: &[VertexSet], whole: VertexSet) -> bool {
    let mut seen = VertexSet::EMPTY;
    for &s in parts {
        if !seen.is_disjoint(s) {
            return false;
        }
        seen = seen.union(s);
    }
    seen == whole
}

/// First entry (G triangle, H triangle, in rank order) where two equal-size tables differ.
pub fn first_difference(a: &TriangleLinkTable, b: &TriangleLinkTable) -> Option<(OrientedTriangle, OrientedTriangle, i64, i64)> {
    let (m, n) = a.orders();
    let hs = all_triangles(n);
    for g in all_triangles(m) {
        for h in &hs {
            let (x, y) = (a.get(&g, h), b.get(&g, h));
            if x != y {
                return Some((g, *h, x, y));
            }
        }
    }
    None
}

/// Any top-level classification of a complete-graph pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum Classification {
    /// One side is a triangle, which links the other in a star.
    Star { side: Side, star: Star },
    /// One side is K4; `side` names it.
    K4 { side: Side, result: K4Classification },
    Pair(PairReport),
}

impl Classification {
    pub fn label(&self) -> &'static str {
        match self {
            Classification::Star { .. } => "Star",
            Classification::K4 { result, .. } => result.label(),
            Classification::Pair(r) => r.classification.label(),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Classification::Star { side, star } => format!("Star side={side} {}", star.literal()),
            Classification::K4 { side, result } => format!("{} (K4 side={side})", result.describe()),
            Classification::Pair(r) => {
                let mut s = match r.classification {
                    PairClassification::PQ(_) => r.classification.describe(),
                    _ => format!("{} (T* side={})", r.classification.describe(), r.side),
                };
                if r.boundary_case {
                    s.push_str(" BoundaryCase");
                }
                s
            }
        }
    }
}

/// Validates, checks weakness, and routes by order: a triangle side to star detection,
/// a K4 side to the K4 classifier, everything else to the dichotomy.
pub fn classify_table(t: &TriangleLinkTable) -> Result<Classification, ClassifyError> {
    validate_consistency(t)?;
    let status = linkage_status(t)?;
    if !status.is_weak() {
        return Err(ClassifyError::NotWeak(status.label()));
    }
    let (m, n) = t.orders();
    if m == 3 || n == 3 {
        let (side, map) = if m == 3 {
            (Side::G, t.row(&OrientedTriangle::of(0, 1, 2)))
        } else {
            (Side::H, t.column(&OrientedTriangle::of(0, 1, 2)))
        };
        let star = detect_star(&map)?.ok_or_else(|| ClassifyError::NotWeaklyLinked("triangle link map is not a star".into()))?;
        return Ok(Classification::Star { side, star });
    }
    if m == 4 {
        return Ok(Classification::K4 { side: Side::G, result: classify_k4(t)? });
    }
    Ok(Classification::Pair(classify_pair(t)?))
}
