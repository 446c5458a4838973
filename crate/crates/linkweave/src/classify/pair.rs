use serde::Serialize;

use super::patterns::{common_triangle_pair, common_triangle_vertex};
use super::pq::{recover_pq, PqClassification};
use super::{common_vertices, is_partition, ClassifyError};
use crate::graphs::{all_triangles, OrientedTriangle, VertexId, VertexSet};
use crate::linktable::{Side, TriangleLinkTable};
use crate::stars::detect_star;

/// Weak linking pattern of K_m against K_n with m, n >= 5 (n = 4 flagged as boundary).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "case")]
pub enum PairClassification {
    /// Common triangle `T* = p1p2p3` on one side, common vertex `q` on the other; `T_i(x)`
    /// links `q O_i I_i` with `O_i` the complement of `I_i`.
    D1 { t_star: [VertexId; 3], q: VertexId, parts: [VertexSet; 4], sign: i64 },
    /// Common triangles on both sides; `T_i(x)` links `q_i {q_j, q_k} Y`.
    D2 { t_star: [VertexId; 3], u_star: [VertexId; 3], sign: i64 },
    /// Common vertices on both sides with cyclically ordered parts.
    PQ(PqClassification),
}

impl PairClassification {
    pub fn label(&self) -> &'static str {
        match self {
            PairClassification::D1 { .. } => "D1",
            PairClassification::D2 { .. } => "D2",
            PairClassification::PQ(_) => "PQ",
        }
    }

    /// Pattern over (side with `T*`, other side) orders `(m, n)`.
    pub fn pattern(&self, m: usize, n: usize) -> TriangleLinkTable {
        match self {
            PairClassification::D1 { t_star, q, parts, sign } => common_triangle_vertex(m, n, *t_star, *q, *parts, *sign),
            PairClassification::D2 { t_star, u_star, sign } => common_triangle_pair(m, n, *t_star, *u_star, *sign),
            PairClassification::PQ(c) => c.pattern(m, n),
        }
    }

    pub fn describe(&self) -> String {
        let tri = |t: &[VertexId; 3]| format!("{}{}{}", t[0], t[1], t[2]);
        match self {
            PairClassification::D1 { t_star, q, parts, sign } => format!(
                "D1 T*={} q={q} I0={} I1={} I2={} I3={} sign={sign:+}",
                tri(t_star),
                parts[0],
                parts[1],
                parts[2],
                parts[3]
            ),
            PairClassification::D2 { t_star, u_star, sign } => {
                format!("D2 T*={} U*={} sign={sign:+}", tri(t_star), tri(u_star))
            }
            PairClassification::PQ(c) => c.describe(),
        }
    }
}

/// A classification plus where it was found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub classification: PairClassification,
    /// Side carrying `T*` (D1, D2); `G` for PQ.
    pub side: Side,
    /// Set when an order is below the range the pattern is proven for: the side opposite
    /// `T*` has order 4, or a common-vertex table has a side of order < 5.
    pub boundary_case: bool,
}

/// Triangles `T*` (as sorted vertex triples) such that a triangle other than `T*` links
/// the other side iff it shares an edge with `T*`.
pub fn common_triangles(t: &TriangleLinkTable, side: Side) -> Vec<[VertexId; 3]> {
    let linking: Vec<VertexSet> = t.linking_triangles(side).iter().map(|x| x.vertex_set()).collect();
    let k = t.order(side);
    let mut out = Vec::new();
    for cand in all_triangles(k) {
        let c = cand.vertex_set();
        let ok = all_triangles(k).iter().all(|x| {
            let s = x.vertex_set();
            if s == c {
                return true;
            }
            let shares_edge = s.intersection(c).len() == 2;
            shares_edge == linking.contains(&s)
        });
        if ok {
            out.push(cand.sorted());
        }
    }
    out
}

fn orderings(v: [VertexId; 3]) -> [[VertexId; 3]; 6] {
    let [a, b, c] = v;
    [[a, b, c], [a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]]
}

/// D1 with the given `T*` and common vertex `q`; among all symmetric descriptions the one
/// whose parts `I1, I2, I3` have the smallest sequence of least elements is returned.
pub fn match_d1(t: &TriangleLinkTable, t_star: [VertexId; 3], q: VertexId) -> Option<PairClassification> {
    let (m, n) = t.orders();
    let tri: VertexSet = t_star.into_iter().collect();
    let x = VertexSet::full(m).minus(tri).least()?;
    let mut best: Option<((usize, usize, usize), PairClassification)> = None;
    for p in orderings(t_star) {
        for sign in [1, -1] {
            let fam = super::patterns::triangle_family(p, x);
            let mut parts = [VertexSet::EMPTY; 4];
            for (slot, tri) in parts.iter_mut().zip(&fam) {
                let row = t.row(tri);
                if row.is_zero() {
                    continue;
                }
                let row = if sign < 0 { row.negated() } else { row };
                match detect_star(&row) {
                    Ok(Some(s)) => match s.with_apex(q) {
                        Some(r) => *slot = r.inn,
                        None => return None,
                    },
                    _ => return None,
                }
            }
            if parts[1..].iter().any(|s| s.is_empty()) || !is_partition(&parts, VertexSet::full(n).without(q)) {
                continue;
            }
            let cls = PairClassification::D1 { t_star: p, q, parts, sign };
            if cls.pattern(m, n) != *t {
                continue;
            }
            let key = |s: &VertexSet| s.least().unwrap_or(usize::MAX);
            let k = (key(&parts[1]), key(&parts[2]), key(&parts[3]));
            if best.as_ref().is_none_or(|(bk, _)| k < *bk) {
                best = Some((k, cls));
            }
        }
    }
    best.map(|(_, c)| c)
}

/// D2 with the given `T*`, searching `U*` among the common triangles of the other side.
/// Returns the first match with `T*` labels in lexicographic order, `+1` before `-1`.
pub fn match_d2(t: &TriangleLinkTable, t_star: [VertexId; 3]) -> Option<PairClassification> {
    let (m, n) = t.orders();
    if !t.row(&OrientedTriangle::of(t_star[0], t_star[1], t_star[2])).is_zero() {
        return None;
    }
    let mut labels = orderings(t_star);
    labels.sort();
    for u in common_triangles(t, Side::H) {
        let mut qs = orderings(u);
        qs.sort();
        for p in labels {
            for sign in [1, -1] {
                for q in qs {
                    let cls = PairClassification::D2 { t_star: p, u_star: q, sign };
                    if cls.pattern(m, n) == *t {
                        return Some(cls);
                    }
                }
            }
        }
    }
    None
}

fn classify_common_triangle(t: &TriangleLinkTable) -> Result<PairClassification, ClassifyError> {
    let stars = common_triangles(t, Side::G);
    if stars.is_empty() {
        return Err(ClassifyError::DichotomyViolation("no common vertex and no common triangle".into()));
    }
    let qs = common_vertices(t, Side::H)?;
    for &ts in &stars {
        if qs.is_empty() {
            if let Some(c) = match_d2(t, ts) {
                return Ok(c);
            }
        } else {
            for q in qs.iter() {
                if let Some(c) = match_d1(t, ts, q) {
                    return Ok(c);
                }
            }
        }
    }
    Err(ClassifyError::DichotomyViolation(format!(
        "common triangle {:?} but the pattern is neither D1 nor D2",
        stars[0]
    )))
}

/// Applies the common vertex / common triangle dichotomy to a weakly linked table. The
/// common-triangle side must have order >= 5 and the other >= 4; the common-vertex case is
/// accepted at any order (the table is transposed when only H lacks a common vertex).
pub fn classify_pair(t: &TriangleLinkTable) -> Result<PairReport, ClassifyError> {
    let (m, n) = t.orders();
    let g_common = !common_vertices(t, Side::G)?.is_empty();
    let h_common = !common_vertices(t, Side::H)?.is_empty();
    if g_common && h_common {
        let c = recover_pq(t)?;
        let boundary_case = m.min(n) < 5;
        return Ok(PairReport { classification: PairClassification::PQ(c), side: Side::G, boundary_case });
    }
    let (table, side) = if g_common { (t.transposed(), Side::H) } else { (t.clone(), Side::G) };
    let (tm, tn) = table.orders();
    if tm < 5 || tn < 4 {
        return Err(ClassifyError::DichotomyViolation(format!("no common vertex on a side of order {tm} against {tn}")));
    }
    let c = classify_common_triangle(&table)?;
    Ok(PairReport { classification: c, side, boundary_case: tn == 4 })
}
