//! Realizing a prescribed linking table by clasps.
//!
//! Both graphs use the spanning star at vertex 0. Every edge not incident to 0 closes one
//! fundamental cycle (the triangle `0 x y`, or a theta cycle), and these cycles span
//! homology, so a consistent table is fixed by its values on pairs of such edges. In the
//! base layout G lies entirely above H, so nothing links. G edges run east on lanes at
//! distinct heights; each H edge is a hairpin climbing north on an out lane and returning
//! south on a parallel lane. Each G lane crosses each hairpin twice. Pushing the G lane
//! under one of those two crossings (a finger) changes the linking of the two fundamental
//! cycles by one. Which lane gets the finger picks the sign.

use std::collections::BTreeMap;

use super::{table_from_embeddings, theta_link_maps, ConstructError, GraphEmbedding};
use crate::geom::{int, ratio, Point3, Rational};
use crate::graphs::{OrientedTriangle, VertexId};
use crate::linktable::{validate_consistency, TriangleLinkTable};
use crate::stars::LinkMap;

type Edge = (VertexId, VertexId);

/// Linking contributed by a finger under an out lane; the return lane gives the opposite.
const OUT_LANE_SIGN: i64 = -1;

fn p(x: Rational, y: Rational, z: Rational) -> Point3 {
    Point3::new(x, y, z)
}

/// Slot offset in `(0, 1)` for each (vertex, edge) incidence, so routes leave a vertex apart.
fn slots(edges: &[Edge]) -> BTreeMap<(VertexId, Edge), Rational> {
    let mut by_vertex: BTreeMap<VertexId, Vec<Edge>> = BTreeMap::new();
    for &e in edges {
        by_vertex.entry(e.0).or_default().push(e);
        by_vertex.entry(e.1).or_default().push(e);
    }
    let mut out = BTreeMap::new();
    for (v, es) in by_vertex {
        let d = es.len() as i64 + 1;
        for (i, e) in es.into_iter().enumerate() {
            out.insert((v, e), ratio(i as i64 + 1, d));
        }
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Lane {
    Out,
    Return,
}

fn hairpin_x(n: usize, j: usize) -> Rational {
    int(2 * n as i64 + 2 + 2 * j as i64)
}

fn lane_x(n: usize, j: usize, lane: Lane) -> Rational {
    match lane {
        Lane::Out => hairpin_x(n, j),
        Lane::Return => hairpin_x(n, j) + ratio(1, 2),
    }
}

fn lane_depth(j: usize, lane: Lane) -> Rational {
    match lane {
        Lane::Out => int(-(10 + 2 * j as i64)),
        Lane::Return => int(-(11 + 2 * j as i64)),
    }
}

/// H = K_n as hairpins below the plane z = 0, vertices on the line y = -20.
fn hairpins(n: usize, top: &Rational) -> GraphEmbedding {
    let vertices: Vec<Point3> = (0..n).map(|i| Point3::from_ints(2 * i as i64, -20, 0)).collect();
    let edges: Vec<Edge> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let slot = slots(&edges);
    let mut emb = GraphEmbedding::new(vertices);
    for (j, &(a, b)) in edges.iter().enumerate() {
        let (d_out, d_ret) = (lane_depth(j, Lane::Out), lane_depth(j, Lane::Return));
        let (x_out, x_ret) = (lane_x(n, j, Lane::Out), lane_x(n, j, Lane::Return));
        let y_out = int(-18) + ratio(j as i64, 2);
        let y_ret = &y_out + ratio(1, 4);
        let xa = int(2 * a as i64) + &slot[&(a, (a, b))];
        let xb = int(2 * b as i64) + &slot[&(b, (a, b))];
        let route = vec![
            emb.vertices[a].clone(),
            p(xa.clone(), int(-19), d_out.clone()),
            p(xa, y_out.clone(), d_out.clone()),
            p(x_out.clone(), y_out, d_out.clone()),
            p(x_out.clone(), top.clone(), d_out),
            p(x_out, top.clone(), d_ret.clone()),
            p(x_ret.clone(), top.clone(), d_ret.clone()),
            p(x_ret, y_ret.clone(), d_ret.clone()),
            p(xb.clone(), y_ret, d_ret.clone()),
            p(xb, int(-19), d_ret),
            emb.vertices[b].clone(),
        ];
        emb.add_edge(a, b, route);
    }
    emb
}

/// G on lanes above z = 0, with a finger under `(H edge index, lane)` for each listed pair.
fn lanes(order: usize, edges: &[Edge], n: usize, fingers: &BTreeMap<Edge, Vec<(usize, Lane)>>) -> GraphEmbedding {
    let vertices: Vec<Point3> = (0..order).map(|i| Point3::from_ints(-20, 2 * i as i64, 1)).collect();
    let h_edges = (n * (n - 1) / 2) as i64;
    let slot = slots(edges);
    let w = ratio(1, 8);
    let mut emb = GraphEmbedding::new(vertices);
    for (k, &(a, b)) in edges.iter().enumerate() {
        let ki = k as i64;
        let (h_out, h_ret) = (int(10 + 2 * ki), int(11 + 2 * ki));
        let x_start = int(-18) + ratio(ki, 2);
        let y_lane = int(2 * order as i64 + 4 + ki);
        let x_far = int(2 * n as i64 + 4 + 2 * h_edges) + ratio(ki, 2);
        let ya = int(2 * a as i64) + &slot[&(a, (a, b))];
        let yb = int(2 * b as i64) + &slot[&(b, (a, b))];
        let mut route = vec![
            emb.vertices[a].clone(),
            p(int(-19), ya.clone(), h_out.clone()),
            p(x_start.clone(), ya, h_out.clone()),
            p(x_start, y_lane.clone(), h_out.clone()),
        ];
        let mut under: Vec<(Rational, Rational)> = fingers
            .get(&(a, b))
            .into_iter()
            .flatten()
            .map(|&(j, lane)| (lane_x(n, j, lane), lane_depth(j, lane) - ratio(1, 2)))
            .collect();
        under.sort();
        for (x, depth) in under {
            let (l, r) = (&x - &w, &x + &w);
            route.push(p(l.clone(), y_lane.clone(), h_out.clone()));
            route.push(p(l, y_lane.clone(), depth.clone()));
            route.push(p(r.clone(), y_lane.clone(), depth));
            route.push(p(r, y_lane.clone(), h_out.clone()));
        }
        route.extend([
            p(x_far.clone(), y_lane.clone(), h_out),
            p(x_far.clone(), y_lane, h_ret.clone()),
            p(x_far, yb.clone(), h_ret.clone()),
            p(int(-19), yb, h_ret),
            emb.vertices[b].clone(),
        ]);
        emb.add_edge(a, b, route);
    }
    emb
}

/// Builds both graphs; `clasp(e, f)` is the wanted linking of the fundamental cycles of
/// G edge `e` and H edge `f` (edges not at vertex 0 only).
fn realize(
    order: usize,
    g_edges: &[Edge],
    n: usize,
    clasp: impl Fn(Edge, Edge) -> i64,
) -> Result<(GraphEmbedding, GraphEmbedding), ConstructError> {
    let h_edges: Vec<Edge> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let mut fingers: BTreeMap<Edge, Vec<(usize, Lane)>> = BTreeMap::new();
    for &e in g_edges.iter().filter(|e| e.0 != 0) {
        for (j, &f) in h_edges.iter().enumerate().filter(|(_, f)| f.0 != 0) {
            let lane = match clasp(e, f) * OUT_LANE_SIGN {
                0 => continue,
                1 => Lane::Out,
                -1 => Lane::Return,
                v => return Err(ConstructError::Unsupported(format!("clasp value {v} on {e:?} / {f:?}"))),
            };
            fingers.entry(e).or_default().push((j, lane));
        }
    }
    let top = int(2 * order as i64 + 6 + g_edges.len() as i64);
    Ok((lanes(order, g_edges, n, &fingers), hairpins(n, &top)))
}

/// Embeddings of K_m and K_n whose triangle table is `t`.
///
/// Needs a consistent table whose entries on triangle pairs through vertex 0 are in
/// {-1, 0, 1}. The result is checked by recomputing the table from the geometry.
pub fn realize_table(t: &TriangleLinkTable) -> Result<(GraphEmbedding, GraphEmbedding), ConstructError> {
    validate_consistency(t)?;
    let (m, n) = t.orders();
    let g_edges: Vec<Edge> = (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))).collect();
    let (g, h) = realize(m, &g_edges, n, |(x, y), (u, v)| {
        t.get(&OrientedTriangle::of(0, x, y), &OrientedTriangle::of(0, u, v))
    })?;
    let got = table_from_embeddings(&g, &h)?;
    if got != *t {
        return Err(ConstructError::Invalid("clasp embedding does not reproduce the table".into()));
    }
    Ok((g, h))
}

/// A theta graph (branch vertices 0, 1; midpoints 2, 3, 4) and K_n with the given cycle
/// link maps, in the order of [`super::theta_cycles`].
pub fn realize_theta(maps: &[LinkMap; 3]) -> Result<(GraphEmbedding, GraphEmbedding), ConstructError> {
    let n = maps[0].order();
    if maps.iter().any(|m| m.order() != n) || !maps[0].plus(&maps[1]).plus(&maps[2]).is_zero() {
        return Err(ConstructError::Params("theta maps must share an order and sum to zero".into()));
    }
    for m in maps {
        crate::linktable::validate_consistency(&TriangleLinkTable::from_fn(3, n, |_, u| m.get(u)))?;
    }
    let g_edges = theta_embedding_layout();
    // Fundamental cycle of 1-3 is the third theta cycle; that of 1-4 is the second, reversed.
    let (g, h) = realize(5, &g_edges, n, |e, (u, v)| {
        let face = OrientedTriangle::of(0, u, v);
        match e {
            (1, 3) => maps[2].get(&face),
            (1, 4) => -maps[1].get(&face),
            _ => 0,
        }
    })?;
    if theta_link_maps(&g, &h)? != *maps {
        return Err(ConstructError::Invalid("clasp embedding does not reproduce the theta maps".into()));
    }
    Ok((g, h))
}

/// Edges of the theta graph; the tree is 0-2, 0-3, 0-4, 1-2.
pub fn theta_embedding_layout() -> Vec<Edge> {
    vec![(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]
}
