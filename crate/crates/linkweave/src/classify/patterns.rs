//! Link patterns generated directly from the characterisation formulas. Classifiers
//! confirm a recovered case by regenerating its pattern and comparing exactly.

use crate::graphs::{all_triangles, boundary_quadruple, OrientedTriangle, VertexId, VertexSet};
use crate::linktable::TriangleLinkTable;
use crate::stars::{LinkMap, Star};

/// Indicator of `apex|out|inn`, or the zero map when either side is empty.
pub fn star_map(n: usize, apex: VertexId, out: VertexSet, inn: VertexSet) -> LinkMap {
    match Star::new(n, apex, out, inn) {
        Ok(s) => s.indicator(),
        Err(_) => LinkMap::zero(n),
    }
}

fn scaled(m: LinkMap, sign: i64) -> LinkMap {
    if sign < 0 {
        m.negated()
    } else {
        m
    }
}

/// Table whose G rows are given for some triangles (any orientation); all others are zero.
pub fn table_from_rows(m: usize, n: usize, rows: &[(OrientedTriangle, LinkMap)]) -> TriangleLinkTable {
    let mut t = TriangleLinkTable::zero(m, n);
    for (g, map) in rows {
        for u in all_triangles(n) {
            t.set(g, &u, map.get(&u));
        }
    }
    t
}

/// Theta maps with a common apex: `C_i` links `p O_i I_i`, `O_i` the union of the other parts.
pub fn theta_common_apex(n: usize, p: VertexId, parts: [VertexSet; 3], sign: i64) -> [LinkMap; 3] {
    std::array::from_fn(|i| {
        let out = parts[(i + 1) % 3].union(parts[(i + 2) % 3]);
        scaled(star_map(n, p, out, parts[i]), sign)
    })
}

/// Theta maps without a common apex: `C_i` links `p_i {p_j, p_k} I`.
pub fn theta_three_apexes(n: usize, apexes: [VertexId; 3], sign: i64) -> [LinkMap; 3] {
    let tri: VertexSet = apexes.into_iter().collect();
    let inn = VertexSet::full(n).minus(tri);
    std::array::from_fn(|i| scaled(star_map(n, apexes[i], tri.without(apexes[i]), inn), sign))
}

/// K4 against K_n with a common vertex `q`: face `C_i` links `q O_i I_i`, `O_i = H - q - I_i`.
pub fn k4_common_vertex(n: usize, q: VertexId, parts: [VertexSet; 4], sign: i64) -> TriangleLinkTable {
    let faces = boundary_quadruple([0, 1, 2, 3]).expect("distinct");
    let rest = VertexSet::full(n).without(q);
    let rows: Vec<_> =
        (0..4).map(|i| (faces[i], scaled(star_map(n, q, rest.minus(parts[i]), parts[i]), sign))).collect();
    table_from_rows(4, n, &rows)
}

/// K4 against K_n without a common vertex. `labels[i]` is the G vertex playing `p_i`;
/// `C_0` is unlinked and `C_1, C_2, C_3` link `q_1{q_2,q_3}I`, `q_2{q_1,q_3}I`, `q_3{q_1,q_2}I`.
pub fn k4_three_apexes(n: usize, labels: [VertexId; 4], q: [VertexId; 3], sign: i64) -> TriangleLinkTable {
    let faces = boundary_quadruple(labels).expect("distinct labels");
    let maps = theta_three_apexes(n, q, sign);
    let rows: Vec<_> = (0..3).map(|i| (faces[i + 1], maps[i].clone())).collect();
    table_from_rows(4, n, &rows)
}

/// The four triangles `T_0 = T*`, `T_1(x) = p3 p2 x`, `T_2(x) = x p1 p3`, `T_3(x) = p2 p1 x`.
pub fn triangle_family(p: [VertexId; 3], x: VertexId) -> [OrientedTriangle; 4] {
    boundary_quadruple([x, p[0], p[1], p[2]]).expect("distinct")
}

/// Common triangle `T* = p1p2p3` of G and common vertex `q` of H: each `T_i(x)` links `q O_i I_i`.
pub fn common_triangle_vertex(
    m: usize,
    n: usize,
    p: [VertexId; 3],
    q: VertexId,
    parts: [VertexSet; 4],
    sign: i64,
) -> TriangleLinkTable {
    let rest = VertexSet::full(n).without(q);
    let maps: Vec<LinkMap> = (0..4).map(|i| scaled(star_map(n, q, rest.minus(parts[i]), parts[i]), sign)).collect();
    let tri: VertexSet = p.into_iter().collect();
    let mut rows = vec![(OrientedTriangle::of(p[0], p[1], p[2]), maps[0].clone())];
    for x in VertexSet::full(m).minus(tri).iter() {
        let f = triangle_family(p, x);
        for i in 1..4 {
            rows.push((f[i], maps[i].clone()));
        }
    }
    table_from_rows(m, n, &rows)
}

/// Common triangles `T* = p1p2p3` in G and `U* = q1q2q3` in H: `T_i(x)` links
/// `q_i {q_j, q_k} Y` and `T*` is unlinked.
pub fn common_triangle_pair(
    m: usize,
    n: usize,
    p: [VertexId; 3],
    q: [VertexId; 3],
    sign: i64,
) -> TriangleLinkTable {
    let maps = theta_three_apexes(n, q, sign);
    let tri: VertexSet = p.into_iter().collect();
    let mut rows = Vec::new();
    for x in VertexSet::full(m).minus(tri).iter() {
        let f = triangle_family(p, x);
        for i in 1..4 {
            rows.push((f[i], maps[i - 1].clone()));
        }
    }
    table_from_rows(m, n, &rows)
}

/// Cyclically ordered clusters around `p` and `q`: for `j < k`, `p x_j x_k` links
/// `q O_jk I_jk` with `O_jk = Y_j ∪ .. ∪ Y_{k-1}`.
pub fn pq_pattern(
    m: usize,
    n: usize,
    p: VertexId,
    q: VertexId,
    x_parts: &[VertexSet],
    y_parts: &[VertexSet],
    sign: i64,
) -> TriangleLinkTable {
    let rest = VertexSet::full(n).without(q);
    let mut rows = Vec::new();
    for j in 0..x_parts.len() {
        for k in j + 1..x_parts.len() {
            let out = y_parts[j..k].iter().fold(VertexSet::EMPTY, |a, &b| a.union(b));
            let map = scaled(star_map(n, q, out, rest.minus(out)), sign);
            for a in x_parts[j].iter() {
                for b in x_parts[k].iter() {
                    rows.push((OrientedTriangle::of(p, a, b), map.clone()));
                }
            }
        }
    }
    table_from_rows(m, n, &rows)
}
