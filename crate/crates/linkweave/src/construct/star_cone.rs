use std::f64::consts::TAU;

use super::router::chord_route;
use super::{curve_link_map, ConstructError, GraphEmbedding};
use crate::geom::{int, ratio, unit_circle_point, PLCurve, Point3};
use crate::stars::Star;

const CIRCLE_DEN: i64 = 1000;
/// Leg fractions and angular twists tried before giving up.
const EPS_TRIES: [(i64, i64); 3] = [(1, 8), (1, 20), (1, 50)];
const TWISTS: usize = 4;

fn circle_point(theta: f64, radius: i64, z: i64) -> Point3 {
    let (x, y) = unit_circle_point(theta, CIRCLE_DEN);
    Point3::new(x * int(radius), y * int(radius), int(z))
}

/// The unit circle in the plane `z = 0` as a 16-gon with rational vertices, counterclockwise.
fn unit_polygon() -> PLCurve {
    let pts = (0..16).map(|k| circle_point(TAU * k as f64 / 16.0, 1, 0)).collect();
    PLCurve::new(pts).expect("16 vertices")
}

fn layout(s: &Star, twist: f64, eps: &crate::geom::Rational) -> GraphEmbedding {
    let n = s.n;
    let others: Vec<usize> = (0..n).filter(|&v| v != s.apex).collect();
    let mut vertices = vec![Point3::origin(); n];
    for (k, &v) in others.iter().enumerate() {
        let z = if s.out.contains(v) { 1 } else { -1 };
        vertices[v] = circle_point(TAU * (k as f64 + twist) / others.len() as f64, 2, z);
    }
    let mut emb = GraphEmbedding::new(vertices);
    let mut up = 0;
    let mut down = 0;
    for (i, &a) in others.iter().enumerate() {
        emb.add_straight(s.apex, a);
        for &b in &others[i + 1..] {
            // Edges touching the out side run above z = 1; in-in edges run below z = -1.
            let level = if s.inn.contains(a) && s.inn.contains(b) {
                down += 1;
                -int(1) - ratio(down, 2)
            } else {
                up += 1;
                int(1) + ratio(up, 2)
            };
            let r = chord_route(&emb.vertices[a], &emb.vertices[b], &level, eps);
            emb.add_edge(a, b, r);
        }
    }
    emb
}

/// A curve linking K_n in the star `s`, together with the embedding of K_n.
///
/// The apex sits at the origin inside the curve's disk, out-vertices above it and
/// in-vertices below, so only triangles `apex, out, in` cross the disk (at the apex). The
/// curve is oriented so that its link map is the star's indicator, which is checked.
pub fn build_star_cone(n: usize, s: &Star) -> Result<(PLCurve, GraphEmbedding), ConstructError> {
    if s.n != n {
        return Err(ConstructError::Params(format!("star is over K_{} but n = {n}", s.n)));
    }
    let target = s.indicator();
    let curve = unit_polygon();
    let mut last = None;
    for (num, den) in EPS_TRIES {
        for k in 0..TWISTS {
            let emb = layout(s, 0.5 + k as f64 / (2 * TWISTS) as f64, &ratio(num, den));
            let map = match curve_link_map(&curve, &emb) {
                Ok(m) => m,
                Err(e) => {
                    last = Some(e);
                    continue;
                }
            };
            if map == target {
                return Ok((curve, emb));
            }
            if map == target.negated() {
                return Ok((curve.reversed(), emb));
            }
            return Err(ConstructError::Invalid(format!("star cone links in an unexpected map for {}", s.literal())));
        }
    }
    Err(last.unwrap_or_else(|| ConstructError::Invalid("no routing attempt succeeded".into())))
}
