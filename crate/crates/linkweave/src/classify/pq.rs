use serde::Serialize;

use super::patterns::pq_pattern;
use super::{common_vertices, first_difference, ClassifyError};
use crate::graphs::{OrientedTriangle, VertexId, VertexSet};
use crate::linktable::{Side, TriangleLinkTable};
use crate::stars::detect_star;

/// Classes of `x ~ y` (x = y, or `pxy` does not link the other side) on `side - {p}`,
/// sorted by least element. Transitivity is checked.
pub fn sim_classes(t: &TriangleLinkTable, side: Side, p: VertexId) -> Result<Vec<VertexSet>, ClassifyError> {
    let k = t.order(side);
    let rest = VertexSet::full(k).without(p);
    let linked = |x: VertexId, y: VertexId| !t.link_map(side, &OrientedTriangle::of(p, x, y)).is_zero();
    let verts = rest.to_vec();
    for &x in &verts {
        for &y in &verts {
            for &z in &verts {
                if x != y && y != z && x != z && !linked(x, y) && !linked(y, z) && linked(x, z) {
                    return Err(ClassifyError::NotTransitive { x, y, z });
                }
            }
        }
    }
    let mut classes: Vec<VertexSet> = Vec::new();
    for &x in &verts {
        match classes.iter_mut().find(|c| c.least().is_some_and(|r| !linked(r, x))) {
            Some(c) => *c = c.with(x),
            None => classes.push(VertexSet::single(x)),
        }
    }
    Ok(classes)
}

/// Out-set of the star, with apex `q` on the other side, linked by `pxy`.
pub fn out_set(t: &TriangleLinkTable, side: Side, p: VertexId, q: VertexId, x: VertexId, y: VertexId) -> Result<VertexSet, ClassifyError> {
    let tri = OrientedTriangle::of(p, x, y);
    let star = detect_star(&t.link_map(side, &tri))?.ok_or(ClassifyError::NotStar { side, triangle: tri })?;
    Ok(star.with_apex(q).ok_or(ClassifyError::NotStar { side, triangle: tri })?.out)
}

/// `+1` when `O_xy, O_yz, O_zx` partition the other side minus `q` (then each `I` is the union
/// of the other two out-sets), `-1` for the same statement with in-sets.
pub fn epsilon(
    t: &TriangleLinkTable,
    side: Side,
    p: VertexId,
    q: VertexId,
    x: VertexId,
    y: VertexId,
    z: VertexId,
) -> Result<i64, ClassifyError> {
    let rest = VertexSet::full(t.order(side.other())).without(q);
    let o = [out_set(t, side, p, q, x, y)?, out_set(t, side, p, q, y, z)?, out_set(t, side, p, q, z, x)?];
    let i = o.map(|s| rest.minus(s));
    let partition = |s: [VertexSet; 3]| {
        s[0].is_disjoint(s[1]) && s[1].is_disjoint(s[2]) && s[0].is_disjoint(s[2]) && s[0].union(s[1]).union(s[2]) == rest
    };
    // With a partition the complements are automatically the pairwise unions.
    match (partition(o), partition(i)) {
        (true, false) => Ok(1),
        (false, true) => Ok(-1),
        _ => Err(ClassifyError::NeitherCase { x, y, z }),
    }
}

/// Classes ordered so that `epsilon` is +1 exactly on cyclically increasing triples,
/// starting at the class with the least vertex.
pub fn cyclic_order(t: &TriangleLinkTable, side: Side, p: VertexId, q: VertexId) -> Result<Vec<VertexSet>, ClassifyError> {
    let classes = sim_classes(t, side, p)?;
    if classes.len() < 2 {
        return Err(ClassifyError::NoConsistentOrder);
    }
    let rep = |c: &VertexSet| c.least().expect("classes are nonempty");
    let x0 = rep(&classes[0]);
    // Insertion by the relation "a before b iff epsilon(x0, a, b) = +1"; checked below.
    let mut rest: Vec<VertexSet> = Vec::with_capacity(classes.len() - 1);
    for c in &classes[1..] {
        let mut at = rest.len();
        for (i, b) in rest.iter().enumerate() {
            if epsilon(t, side, p, q, x0, rep(c), rep(b))? == 1 {
                at = i;
                break;
            }
        }
        rest.insert(at, *c);
    }
    let mut order = vec![classes[0]];
    order.extend(rest);
    let l = order.len();
    for i in 0..l {
        for j in i + 1..l {
            for k in j + 1..l {
                if epsilon(t, side, p, q, rep(&order[i]), rep(&order[j]), rep(&order[k]))? != 1 {
                    return Err(ClassifyError::NoConsistentOrder);
                }
            }
        }
    }
    Ok(order)
}

/// The common-vertex pattern: cyclically ordered parts of `G - p` and `H - q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PqClassification {
    pub p: VertexId,
    pub q: VertexId,
    pub x_parts: Vec<VertexSet>,
    pub y_parts: Vec<VertexSet>,
    pub sign: i64,
}

impl PqClassification {
    pub fn ell(&self) -> usize {
        self.x_parts.len()
    }

    pub fn pattern(&self, m: usize, n: usize) -> TriangleLinkTable {
        pq_pattern(m, n, self.p, self.q, &self.x_parts, &self.y_parts, self.sign)
    }

    /// Same pattern with the X order rotated to start at the class of the least vertex and
    /// reflected (flipping the sign) when that makes the second class's least vertex smaller.
    pub fn canonical(&self) -> PqClassification {
        let l = self.ell();
        let least = |s: &VertexSet| s.least().unwrap_or(usize::MAX);
        let start = (0..l).min_by_key(|&i| least(&self.x_parts[i])).unwrap_or(0);
        let x: Vec<_> = (0..l).map(|i| self.x_parts[(start + i) % l]).collect();
        let y: Vec<_> = (0..l).map(|i| self.y_parts[(start + i) % l]).collect();
        if l > 2 && least(&x[l - 1]) < least(&x[1]) {
            PqClassification {
                p: self.p,
                q: self.q,
                x_parts: (0..l).map(|i| x[(l - i) % l]).collect(),
                y_parts: (0..l).map(|i| y[(2 * l - i - 1) % l]).collect(),
                sign: -self.sign,
            }
        } else {
            PqClassification { p: self.p, q: self.q, x_parts: x, y_parts: y, sign: self.sign }
        }
    }

    pub fn describe(&self) -> String {
        let list = |v: &[VertexSet]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ");
        format!(
            "PQ ell={} p={} q={} X=[{}] Y=[{}] sign={:+}",
            self.ell(),
            self.p,
            self.q,
            list(&self.x_parts),
            list(&self.y_parts),
            self.sign
        )
    }
}

/// Recovers the pattern with the given apexes `p` in G and `q` in H.
pub fn recover_pq_at(t: &TriangleLinkTable, p: VertexId, q: VertexId) -> Result<PqClassification, ClassifyError> {
    let (m, n) = t.orders();
    let order = cyclic_order(t, Side::G, p, q)?;
    let l = order.len();
    let reps: Vec<VertexId> = order.iter().map(|c| c.least().expect("nonempty")).collect();
    let mut y_parts = Vec::with_capacity(l);
    for i in 0..l {
        y_parts.push(out_set(t, Side::G, p, q, reps[i], reps[(i + 1) % l])?);
    }
    let found = PqClassification { p, q, x_parts: order, y_parts, sign: 1 }.canonical();
    let expect = found.pattern(m, n);
    match first_difference(&expect, t) {
        None => Ok(found),
        Some((g, h, want, got)) => Err(ClassifyError::PatternMismatch { g, h, expected: want, found: got }),
    }
}

/// Tries every pair of common vertices in increasing order.
pub fn recover_pq(t: &TriangleLinkTable) -> Result<PqClassification, ClassifyError> {
    let ps = common_vertices(t, Side::G)?;
    let qs = common_vertices(t, Side::H)?;
    let mut last = ClassifyError::DichotomyViolation("no common vertex pair".into());
    for p in ps.iter() {
        for q in qs.iter() {
            match recover_pq_at(t, p, q) {
                Ok(c) => return Ok(c),
                Err(e) => last = e,
            }
        }
    }
    Err(last)
}
