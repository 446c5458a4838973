use std::collections::BTreeMap;

use super::{validate_disjoint_embeddings, ConstructError, GraphEmbedding};
use crate::geom::{path_crossings, PLCurve, Point3, Rational};
use crate::graphs::{all_triangles, Cycle, OrientedTriangle, VertexId};
use crate::linktable::TriangleLinkTable;
use crate::stars::LinkMap;

type Chain = BTreeMap<(VertexId, VertexId), i64>;

/// Signed crossing sums between every G route and every H route under one generic shear.
///
/// Routes are oriented from lower to higher endpoint. For cycles with edge chains `a`, `b`
/// the linking number is half of `sum a_e b_f sums[e][f]`.
#[derive(Clone, Debug)]
pub struct EdgeCrossings {
    pub g_edges: Vec<(VertexId, VertexId)>,
    pub h_edges: Vec<(VertexId, VertexId)>,
    pub sums: Vec<Vec<i64>>,
    pub shear: Rational,
}

/// Validates both embeddings and their disjointness, then counts crossings edge by edge.
pub fn edge_crossings(g: &GraphEmbedding, h: &GraphEmbedding) -> Result<EdgeCrossings, ConstructError> {
    g.validate().map_err(|e| ConstructError::Invalid(format!("G: {e}")))?;
    h.validate().map_err(|e| ConstructError::Invalid(format!("H: {e}")))?;
    validate_disjoint_embeddings(g, h)?;
    let g_routes: Vec<Vec<Point3>> = g.edges.values().cloned().collect();
    let h_routes: Vec<Vec<Point3>> = h.edges.values().cloned().collect();
    let pc = path_crossings(&g_routes, &h_routes)?;
    Ok(EdgeCrossings {
        g_edges: g.edges.keys().copied().collect(),
        h_edges: h.edges.keys().copied().collect(),
        sums: pc.sums,
        shear: pc.shear,
    })
}

fn chain_of(edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Chain {
    let mut m = Chain::new();
    for (a, b) in edges {
        let (key, s) = if a < b { ((a, b), 1) } else { ((b, a), -1) };
        *m.entry(key).or_insert(0) += s;
    }
    m.retain(|_, v| *v != 0);
    m
}

impl EdgeCrossings {
    fn index(edges: &[(VertexId, VertexId)], e: (VertexId, VertexId)) -> Result<usize, ConstructError> {
        edges.binary_search(&e).map_err(|_| ConstructError::MissingEdge(e.0, e.1))
    }

    /// Linking number of two edge chains (keys `(min, max)`).
    pub fn chain_linking(&self, a: &Chain, b: &Chain) -> Result<i64, ConstructError> {
        let mut total = 0;
        for (&e, &x) in a {
            let i = Self::index(&self.g_edges, e)?;
            for (&f, &y) in b {
                let j = Self::index(&self.h_edges, f)?;
                total += x * y * self.sums[i][j];
            }
        }
        if total % 2 != 0 {
            return Err(ConstructError::Invalid(format!("odd crossing sum {total}")));
        }
        Ok(total / 2)
    }

    /// Linking number of a G cycle and an H cycle, each a closed vertex sequence.
    pub fn cycle_linking(&self, c: &[VertexId], d: &[VertexId]) -> Result<i64, ConstructError> {
        let closed = |v: &[VertexId]| (0..v.len()).map(|i| (v[i], v[(i + 1) % v.len()])).collect::<Vec<_>>();
        self.chain_linking(&chain_of(closed(c)), &chain_of(closed(d)))
    }

    pub fn triangle_linking(&self, t: &OrientedTriangle, u: &OrientedTriangle) -> Result<i64, ConstructError> {
        self.chain_linking(&chain_of(t.directed_edges()), &chain_of(u.directed_edges()))
    }

    pub fn cycle_pair(&self, c: &Cycle, d: &Cycle) -> Result<i64, ConstructError> {
        self.cycle_linking(c.vertices(), d.vertices())
    }
}

/// Triangle table of two complete-graph embeddings.
///
/// All entries come from one crossing count per (G edge, H edge) pair; the triangle curves
/// are simple and disjoint because both embeddings and their union are validated first.
pub fn table_from_embeddings(g: &GraphEmbedding, h: &GraphEmbedding) -> Result<TriangleLinkTable, ConstructError> {
    if !g.is_complete() || !h.is_complete() {
        return Err(ConstructError::Unsupported("triangle tables need complete graphs on both sides".into()));
    }
    let ec = edge_crossings(g, h)?;
    let (m, n) = (g.order(), h.order());
    let hs = all_triangles(n);
    let mut t = TriangleLinkTable::zero(m, n);
    for a in all_triangles(m) {
        for b in &hs {
            t.set(&a, b, ec.triangle_linking(&a, b)?);
        }
    }
    Ok(t)
}

/// Link map of a closed curve against every triangle of a complete-graph embedding.
pub fn curve_link_map(curve: &PLCurve, h: &GraphEmbedding) -> Result<LinkMap, ConstructError> {
    if !h.is_complete() {
        return Err(ConstructError::Unsupported("link maps need a complete graph".into()));
    }
    let mut single = GraphEmbedding::new(curve.vertices().to_vec());
    // The curve as a cycle graph on its own vertices, so the usual checks apply.
    let k = curve.len();
    for i in 0..k {
        single.add_straight(i, (i + 1) % k);
    }
    let ec = edge_crossings(&single, h)?;
    let ring: Vec<VertexId> = (0..k).collect();
    let mut map = LinkMap::zero(h.order());
    for u in all_triangles(h.order()) {
        map.set(&u, ec.cycle_linking(&ring, &u.vertices())?);
    }
    Ok(map)
}

/// Cycles of the theta graph on branch vertices 0, 1 and edge midpoints 2, 3, 4.
///
/// With arcs `e1 = 0-2-1`, `e2 = 0-3-1`, `e3 = 0-4-1` they are `e2 - e3`, `e3 - e1` and
/// `e1 - e2`; their classes sum to zero.
pub fn theta_cycles() -> [[VertexId; 4]; 3] {
    [[0, 3, 1, 4], [0, 4, 1, 2], [0, 2, 1, 3]]
}

/// Link maps of the three theta cycles against the triangles of a complete-graph embedding.
pub fn theta_link_maps(theta: &GraphEmbedding, h: &GraphEmbedding) -> Result<[LinkMap; 3], ConstructError> {
    if theta.order() != 5 || theta.edges.len() != 6 || !h.is_complete() {
        return Err(ConstructError::Unsupported("expected a theta graph against a complete graph".into()));
    }
    let ec = edge_crossings(theta, h)?;
    let hs = all_triangles(h.order());
    let maps = theta_cycles().map(|c| {
        let mut map = LinkMap::zero(h.order());
        for u in &hs {
            map.set(u, ec.cycle_linking(&c, &u.vertices())?);
        }
        Ok::<_, ConstructError>(map)
    });
    let [a, b, c] = maps;
    Ok([a?, b?, c?])
}
