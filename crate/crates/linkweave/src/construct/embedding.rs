use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;

use super::ConstructError;
use crate::geom::predicates::{adjacent_overlap, point_on_segment, segments_intersect};
use crate::geom::{PLCurve, Point3};
use crate::graphs::VertexId;

/// A graph drawn in space: vertex positions and one polyline per edge.
///
/// Routes are stored from the lower to the higher endpoint and include both endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphEmbedding {
    pub vertices: Vec<Point3>,
    pub edges: BTreeMap<(VertexId, VertexId), Vec<Point3>>,
}

/// Segment of a route, tagged with its edge and whether it touches an endpoint vertex.
struct Seg<'a> {
    edge: (VertexId, VertexId),
    a: &'a Point3,
    b: &'a Point3,
    /// Endpoint vertex at `a` (first segment) and at `b` (last segment).
    at_a: Option<VertexId>,
    at_b: Option<VertexId>,
}

impl GraphEmbedding {
    pub fn new(vertices: Vec<Point3>) -> Self {
        GraphEmbedding { vertices, edges: BTreeMap::new() }
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// Adds the route of edge `ab`; given in either direction, stored from the lower endpoint.
    pub fn add_edge(&mut self, a: VertexId, b: VertexId, mut route: Vec<Point3>) {
        if a > b {
            route.reverse();
            self.edges.insert((b, a), route);
        } else {
            self.edges.insert((a, b), route);
        }
    }

    /// Straight segment between the two vertices.
    pub fn add_straight(&mut self, a: VertexId, b: VertexId) {
        let route = vec![self.vertices[a].clone(), self.vertices[b].clone()];
        self.add_edge(a, b, route);
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.edges.len() == n * (n.saturating_sub(1)) / 2
    }

    /// The route from `a` to `b`.
    pub fn route(&self, a: VertexId, b: VertexId) -> Result<Vec<Point3>, ConstructError> {
        let key = (a.min(b), a.max(b));
        let r = self.edges.get(&key).ok_or(ConstructError::MissingEdge(key.0, key.1))?;
        let mut r = r.clone();
        if a > b {
            r.reverse();
        }
        Ok(r)
    }

    /// Closed curve following the cycle through `vertices`.
    pub fn cycle_curve(&self, vertices: &[VertexId]) -> Result<PLCurve, ConstructError> {
        let mut pts = Vec::new();
        for i in 0..vertices.len() {
            let r = self.route(vertices[i], vertices[(i + 1) % vertices.len()])?;
            pts.extend(r[..r.len() - 1].iter().cloned());
        }
        PLCurve::new(pts).map_err(ConstructError::Geom)
    }

    fn segments(&self) -> Vec<Seg<'_>> {
        let mut out = Vec::new();
        for (&(u, v), r) in &self.edges {
            let last = r.len() - 1;
            for i in 0..last {
                out.push(Seg {
                    edge: (u, v),
                    a: &r[i],
                    b: &r[i + 1],
                    at_a: (i == 0).then_some(u),
                    at_b: (i + 1 == last).then_some(v),
                });
            }
        }
        out
    }

    /// Exact embedding checks: endpoints match, segments are nondegenerate, routes meet
    /// only at shared endpoints, and no route passes through another vertex.
    pub fn validate(&self) -> Result<(), ConstructError> {
        for (&(u, v), r) in &self.edges {
            if u >= v || v >= self.order() {
                return Err(ConstructError::Invalid(format!("edge {u}-{v} out of range")));
            }
            if r.len() < 2 || r[0] != self.vertices[u] || r[r.len() - 1] != self.vertices[v] {
                return Err(ConstructError::Invalid(format!("route of {u}-{v} does not join its endpoints")));
            }
            if r.windows(2).any(|w| w[0] == w[1]) {
                return Err(ConstructError::Invalid(format!("route of {u}-{v} has a repeated point")));
            }
        }
        for i in 0..self.order() {
            for j in i + 1..self.order() {
                if self.vertices[i] == self.vertices[j] {
                    return Err(ConstructError::Invalid(format!("vertices {i} and {j} coincide")));
                }
            }
        }
        let segs = self.segments();
        for s in &segs {
            for (k, p) in self.vertices.iter().enumerate() {
                if s.edge.0 != k && s.edge.1 != k && point_on_segment(p, s.a, s.b) {
                    return Err(ConstructError::Invalid(format!("route of {}-{} passes through vertex {k}", s.edge.0, s.edge.1)));
                }
            }
        }
        let bad = (0..segs.len()).into_par_iter().find_map_any(|i| {
            (i + 1..segs.len()).find_map(|j| segment_clash(&segs[i], &segs[j]).then(|| (segs[i].edge, segs[j].edge)))
        });
        match bad {
            Some((e, f)) => Err(ConstructError::Invalid(format!("routes {}-{} and {}-{} meet", e.0, e.1, f.0, f.1))),
            None => Ok(()),
        }
    }

    /// Text form: `[vertices]` lines `index x y z`, `[edges]` lines `a b : x y z ; x y z ; ...`.
    pub fn to_text(&self) -> String {
        let mut out = String::from("[vertices]\n");
        for (i, p) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "{i} {p}");
        }
        out.push_str("[edges]\n");
        for (&(u, v), r) in &self.edges {
            let pts: Vec<String> = r.iter().map(|p| p.to_string()).collect();
            let _ = writeln!(out, "{u} {v} : {}", pts.join(" ; "));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, ConstructError> {
        let mut section = "";
        let mut vertices: Vec<(usize, Point3)> = Vec::new();
        let mut edges = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let err = |m: String| ConstructError::Parse(format!("line {}: {m}", lineno + 1));
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if line.starts_with('[') {
                section = match line {
                    "[vertices]" => "vertices",
                    "[edges]" => "edges",
                    other => return Err(err(format!("unknown section {other}"))),
                };
                continue;
            }
            match section {
                "vertices" => {
                    let (idx, rest) = line.split_once(char::is_whitespace).ok_or_else(|| err("expected index and point".into()))?;
                    let idx: usize = idx.parse().map_err(|_| err(format!("bad index {idx}")))?;
                    let p: Point3 = rest.trim().parse().map_err(err)?;
                    vertices.push((idx, p));
                }
                "edges" => {
                    let (head, body) = line.split_once(':').ok_or_else(|| err("expected `a b : points`".into()))?;
                    let ends: Vec<usize> = head
                        .split_whitespace()
                        .map(|s| s.parse().map_err(|_| err(format!("bad vertex {s}"))))
                        .collect::<Result<_, _>>()?;
                    let [a, b] = ends[..] else { return Err(err("expected two endpoints".into())) };
                    let route: Vec<Point3> =
                        body.split(';').map(|s| s.trim().parse().map_err(err)).collect::<Result<_, _>>()?;
                    let key = (a.min(b), a.max(b));
                    let route = if a > b { route.into_iter().rev().collect() } else { route };
                    if edges.insert(key, route).is_some() {
                        return Err(err(format!("edge {}-{} listed twice", key.0, key.1)));
                    }
                }
                _ => return Err(ConstructError::Parse(format!("line {}: data before any section", lineno + 1))),
            }
        }
        vertices.sort_by_key(|(i, _)| *i);
        if vertices.iter().enumerate().any(|(k, (i, _))| k != *i) {
            return Err(ConstructError::Parse("vertex indices must be 0..n without gaps".into()));
        }
        Ok(GraphEmbedding { vertices: vertices.into_iter().map(|(_, p)| p).collect(), edges })
    }
}

fn shared_vertex(s: &Seg<'_>, t: &Seg<'_>) -> Option<(VertexId, bool, bool)> {
    for v in [s.at_a, s.at_b].into_iter().flatten() {
        if t.at_a == Some(v) || t.at_b == Some(v) {
            return Some((v, s.at_a == Some(v), t.at_a == Some(v)));
        }
    }
    None
}

/// Whether two segments of the same embedding meet where they should not.
fn segment_clash(s: &Seg<'_>, t: &Seg<'_>) -> bool {
    if s.edge == t.edge {
        // Consecutive segments of one route share exactly one point.
        if s.b == t.a {
            return adjacent_overlap(s.a, s.b, t.b);
        }
        if t.b == s.a {
            return adjacent_overlap(t.a, t.b, s.b);
        }
        return segments_intersect(s.a, s.b, t.a, t.b);
    }
    match shared_vertex(s, t) {
        Some((_, s_starts, t_starts)) => {
            let (v, s_other) = if s_starts { (s.a, s.b) } else { (s.b, s.a) };
            let t_other = if t_starts { t.b } else { t.a };
            adjacent_overlap(s_other, v, t_other)
                || (segments_intersect(s.a, s.b, t.a, t.b) && !only_meet_at(s, t, v))
        }
        None => segments_intersect(s.a, s.b, t.a, t.b),
    }
}

/// Two segments sharing endpoint `v`, not collinear: they meet only at `v` unless one of
/// them passes through the other's far endpoint.
fn only_meet_at(s: &Seg<'_>, t: &Seg<'_>, v: &Point3) -> bool {
    let s_far = if s.a == v { s.b } else { s.a };
    let t_far = if t.a == v { t.b } else { t.a };
    !point_on_segment(s_far, t.a, t.b) && !point_on_segment(t_far, s.a, s.b)
}

/// Checks that two embeddings are disjoint.
pub fn validate_disjoint_embeddings(g: &GraphEmbedding, h: &GraphEmbedding) -> Result<(), ConstructError> {
    let gs = g.segments();
    let hs = h.segments();
    let bad = gs.par_iter().find_map_any(|s| {
        hs.iter().find_map(|t| segments_intersect(s.a, s.b, t.a, t.b).then_some((s.edge, t.edge)))
    });
    match bad {
        Some((e, f)) => Err(ConstructError::Invalid(format!(
            "G route {}-{} meets H route {}-{}",
            e.0, e.1, f.0, f.1
        ))),
        None => Ok(()),
    }
}
