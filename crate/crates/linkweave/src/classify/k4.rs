use serde::Serialize;

use super::patterns::{k4_common_vertex, k4_three_apexes};
use super::{common_vertices, is_partition, ClassifyError};
use crate::graphs::{boundary_quadruple, OrientedTriangle, VertexId, VertexSet};
use crate::linktable::{linkage_status, validate_consistency, Side, TriangleLinkTable};
use crate::stars::{detect_star, Star};

/// Weak linking pattern of K4 against K_n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "case")]
pub enum K4Classification {
    /// Common vertex `q` of H; face `C_i` links `q O_i I_i`.
    B1 { q: VertexId, parts: [VertexSet; 4], sign: i64 },
    /// No common vertex of H. `labels[i]` is the G vertex playing `p_i`; `C_0` is unlinked
    /// and `C_1, C_2, C_3` link `q_1{q_2,q_3}I`, `q_2{q_1,q_3}I`, `q_3{q_1,q_2}I`.
    /// `g_stars` are the stars in G of `q3q2y`, `yq1q3`, `q2q1y` for the least `y` in `I`.
    B2 { q: [VertexId; 3], labels: [VertexId; 4], sign: i64, g_stars: [Star; 3] },
}

impl K4Classification {
    pub fn label(&self) -> &'static str {
        match self {
            K4Classification::B1 { .. } => "B1",
            K4Classification::B2 { .. } => "B2",
        }
    }

    pub fn pattern(&self, n: usize) -> TriangleLinkTable {
        match self {
            K4Classification::B1 { q, parts, sign } => k4_common_vertex(n, *q, *parts, *sign),
            K4Classification::B2 { q, labels, sign, .. } => k4_three_apexes(n, *labels, *q, *sign),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            K4Classification::B1 { q, parts, sign } => format!(
                "B1 q={q} I0={} I1={} I2={} I3={} sign={sign:+}",
                parts[0], parts[1], parts[2], parts[3]
            ),
            K4Classification::B2 { q, labels, sign, g_stars } => format!(
                "B2 q1={} q2={} q3={} p0..p3={:?} sign={sign:+} G-stars=[{}]",
                q[0],
                q[1],
                q[2],
                labels,
                g_stars.iter().map(|s| s.literal()).collect::<Vec<_>>().join(", ")
            ),
        }
    }
}

fn permutations4() -> Vec<[VertexId; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if p.iter().map(|&v| 1u8 << v).fold(0, |x, y| x | y) == 0b1111 {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// Case B1 for the first common vertex of H that fits.
pub fn match_b1(t: &TriangleLinkTable) -> Result<Option<K4Classification>, ClassifyError> {
    let n = t.order(Side::H);
    let faces = boundary_quadruple([0, 1, 2, 3])?;
    for q in common_vertices(t, Side::H)?.iter() {
        for sign in [1, -1] {
            let mut parts = [VertexSet::EMPTY; 4];
            for (slot, face) in parts.iter_mut().zip(&faces) {
                let row = t.row(face);
                if row.is_zero() {
                    continue;
                }
                let row = if sign < 0 { row.negated() } else { row };
                if let Ok(Some(s)) = detect_star(&row) {
                    if let Some(r) = s.with_apex(q) {
                        *slot = r.inn;
                    }
                }
            }
            let cls = K4Classification::B1 { q, parts, sign };
            if is_partition(&parts, VertexSet::full(n).without(q)) && cls.pattern(n) == *t {
                return Ok(Some(cls));
            }
        }
    }
    Ok(None)
}

/// Case B2: some face is unlinked and the other three link fans around a triangle of H.
/// Needs n >= 5; over K4 the B2 formulas describe B1 patterns.
pub fn match_b2(t: &TriangleLinkTable) -> Result<Option<K4Classification>, ClassifyError> {
    let n = t.order(Side::H);
    if n < 5 {
        return Ok(None);
    }
    for labels in permutations4() {
        let f = boundary_quadruple(labels)?;
        if !t.row(&f[0]).is_zero() {
            continue;
        }
        for sign in [1, -1] {
            let row = if sign < 0 { t.row(&f[1]).negated() } else { t.row(&f[1]) };
            let Ok(Some(s)) = detect_star(&row) else { continue };
            for r in s.representations() {
                if r.out.len() != 2 {
                    continue;
                }
                let v = r.out.to_vec();
                for q in [[r.apex, v[0], v[1]], [r.apex, v[1], v[0]]] {
                    if k4_three_apexes(n, labels, q, sign) == *t {
                        let inn = VertexSet::full(n).minus(q.into_iter().collect());
                        let g_stars = b2_g_stars(t, q, inn)?;
                        return Ok(Some(K4Classification::B2 { q, labels, sign, g_stars }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Matches a consistent, weakly linked K4-vs-K_n table against B1 or B2.
pub fn classify_k4(t: &TriangleLinkTable) -> Result<K4Classification, ClassifyError> {
    let m = t.order(Side::G);
    if m != 4 {
        return Err(ClassifyError::WrongOrder { expected: 4, found: m });
    }
    validate_consistency(t)?;
    let status = linkage_status(t)?;
    if !status.is_weak() {
        return Err(ClassifyError::NotWeak(status.label()));
    }
    if let Some(c) = match_b1(t)? {
        return Ok(c);
    }
    if let Some(q) = common_vertices(t, Side::H)?.least() {
        return Err(ClassifyError::DichotomyViolation(format!("common vertex {q} but no B1 pattern")));
    }
    match match_b2(t)? {
        Some(c) => Ok(c),
        None => Err(ClassifyError::DichotomyViolation("K4 table matches neither B1 nor B2".into())),
    }
}

fn b2_g_stars(t: &TriangleLinkTable, q: [VertexId; 3], inn: VertexSet) -> Result<[Star; 3], ClassifyError> {
    let y = inn.least().ok_or(ClassifyError::DichotomyViolation("B2 needs n >= 5".into()))?;
    let [q1, q2, q3] = q;
    let us = [OrientedTriangle::of(q3, q2, y), OrientedTriangle::of(y, q1, q3), OrientedTriangle::of(q2, q1, y)];
    let mut out = Vec::new();
    for u in us {
        match detect_star(&t.column(&u))? {
            Some(s) => out.push(s),
            None => return Err(ClassifyError::NotStar { side: Side::H, triangle: u }),
        }
    }
    Ok([out[0], out[1], out[2]])
}
