//! Floating-point Gauss linking integral, evaluated in closed form per segment pair.
//! Independent of the crossing engine; used to cross-check it.

use super::curve::PLCurve;
use super::GeomError;

type V = [f64; 3];

fn sub(a: V, b: V) -> V {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}
fn dot(a: V, b: V) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}
fn cross(a: V, b: V) -> V {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}
fn norm(a: V) -> f64 {
    dot(a, a).sqrt()
}
fn unit(a: V) -> Option<V> {
    let n = norm(a);
    (n > 0.0).then(|| [a[0] / n, a[1] / n, a[2] / n])
}

/// Smallest distance between two segments.
fn segment_distance(p1: V, p2: V, q1: V, q2: V) -> f64 {
    let d1 = sub(p2, p1);
    let d2 = sub(q2, q1);
    let r = sub(p1, q1);
    let a = dot(d1, d1);
    let e = dot(d2, d2);
    let f = dot(d2, r);
    let c = dot(d1, r);
    let b = dot(d1, d2);
    let denom = a * e - b * b;
    let mut s = if denom > 1e-300 { ((b * f - c * e) / denom).clamp(0.0, 1.0) } else { 0.0 };
    let mut t = if e > 0.0 { (b * s + f) / e } else { 0.0 };
    if t < 0.0 {
        t = 0.0;
        s = if a > 0.0 { (-c / a).clamp(0.0, 1.0) } else { 0.0 };
    } else if t > 1.0 {
        t = 1.0;
        s = if a > 0.0 { ((b - c) / a).clamp(0.0, 1.0) } else { 0.0 };
    }
    let cp = [p1[0] + d1[0] * s, p1[1] + d1[1] * s, p1[2] + d1[2] * s];
    let cq = [q1[0] + d2[0] * t, q1[1] + d2[1] * t, q1[2] + d2[2] * t];
    norm(sub(cp, cq))
}

/// Solid angle contribution of one segment pair, divided by 4 pi.
fn pair_term(p1: V, p2: V, q1: V, q2: V) -> f64 {
    let r13 = sub(q1, p1);
    let r14 = sub(q2, p1);
    let r23 = sub(q1, p2);
    let r24 = sub(q2, p2);
    let normals = [cross(r13, r14), cross(r14, r24), cross(r24, r23), cross(r23, r13)];
    let mut n = [[0.0; 3]; 4];
    for (slot, v) in n.iter_mut().zip(normals) {
        match unit(v) {
            Some(u) => *slot = u,
            // Coplanar quadrilateral: it subtends no solid angle.
            None => return 0.0,
        }
    }
    let mut omega = 0.0;
    for k in 0..4 {
        omega += dot(n[k], n[(k + 1) % 4]).clamp(-1.0, 1.0).asin();
    }
    let orient = dot(cross(sub(q2, q1), sub(p2, p1)), r13);
    if orient == 0.0 {
        return 0.0;
    }
    omega.copysign(orient) / (4.0 * std::f64::consts::PI)
}

/// Numeric linking estimate with a heuristic rounding-error bound.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GaussEstimate {
    pub value: f64,
    pub error_bound: f64,
}

impl GaussEstimate {
    pub fn rounded(&self) -> i64 {
        self.value.round() as i64
    }

    pub fn certified(&self) -> bool {
        self.error_bound < 0.25
    }
}

/// Evaluates the Gauss integral. Returns `PrecisionWarning` when the error bound reaches 0.25.
pub fn gauss_linking_estimate(a: &PLCurve, b: &PLCurve) -> Result<GaussEstimate, GeomError> {
    let est = gauss_linking_raw(a, b);
    if est.certified() {
        Ok(est)
    } else {
        Err(GeomError::PrecisionWarning { estimate: est.value, bound: est.error_bound })
    }
}

/// Same as [`gauss_linking_estimate`] without the bound check.
pub fn gauss_linking_raw(a: &PLCurve, b: &PLCurve) -> GaussEstimate {
    let pa: Vec<V> = a.vertices().iter().map(|p| p.to_f64()).collect();
    let pb: Vec<V> = b.vertices().iter().map(|p| p.to_f64()).collect();
    let mut total = 0.0;
    let mut bound = 0.0;
    for i in 0..pa.len() {
        let (p1, p2) = (pa[i], pa[(i + 1) % pa.len()]);
        for j in 0..pb.len() {
            let (q1, q2) = (pb[j], pb[(j + 1) % pb.len()]);
            total += pair_term(p1, p2, q1, q2);
            // asin is ill-conditioned near +-1 and the normals lose precision as the
            // segments approach each other; scale machine epsilon accordingly.
            let scale = norm(sub(p2, p1)).max(norm(sub(q2, q1))).max(f64::MIN_POSITIVE);
            let dist = segment_distance(p1, p2, q1, q2);
            let rel = if dist > 0.0 { scale / dist } else { f64::INFINITY };
            bound += 8.0 * (f64::EPSILON * (1.0 + rel * rel)).sqrt();
        }
    }
    GaussEstimate { value: total, error_bound: bound }
}
