use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::curve::{validate_disjoint, PLCurve};
use super::point::{int, Point2, Point3, Rational};
use super::predicates::{classify_projected, orient2, projected_on_segment, projects_to_point, Projected};
use super::GeomError;

/// Number of shear parameters tried before giving up.
pub const SHEAR_SEARCH_LIMIT: usize = 512;

/// The k-th shear parameter: 0, 1, 1/2, 1/3, ...
pub fn shear_schedule(k: usize) -> Rational {
    if k == 0 {
        Rational::zero()
    } else {
        Rational::new(1.into(), (k as i64).into())
    }
}

/// One inter-curve crossing of the projected diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossingRecord {
    pub segment_a: usize,
    pub segment_b: usize,
    /// +1 when (over direction, under direction) is positively oriented in the plane.
    pub sign: i8,
    pub point: Point2,
}

fn adjacent(n: usize, i: usize, j: usize) -> Option<usize> {
    // Shared vertex index of segments i < j of an n-gon, if any.
    if j == i + 1 {
        Some(j)
    } else if i == 0 && j == n - 1 {
        Some(0)
    } else {
        None
    }
}

struct Seg<'a> {
    curve: usize,
    index: usize,
    a: &'a Point3,
    b: &'a Point3,
}

/// Whether the vertical projection of the given curves is generic in the strict sense:
/// no segment collapses, every pair of projected segments is disjoint or crosses
/// transversally at interior points, and no point lies on three projected segments.
pub fn is_generic(curves: &[&PLCurve]) -> bool {
    let mut segs = Vec::new();
    for (c, curve) in curves.iter().enumerate() {
        for i in 0..curve.len() {
            let (a, b) = curve.segment(i);
            if projects_to_point(a, b) {
                return false;
            }
            segs.push(Seg { curve: c, index: i, a, b });
        }
    }
    let mut crossing_points: Vec<(usize, usize, Point3)> = Vec::new();
    for x in 0..segs.len() {
        for y in (x + 1)..segs.len() {
            let (s, t) = (&segs[x], &segs[y]);
            if s.curve == t.curve {
                let n = curves[s.curve].len();
                if let Some(shared) = adjacent(n, s.index, t.index) {
                    let v = &curves[s.curve].vertices()[shared];
                    let (p, q) = (
                        if s.a == v { s.b } else { s.a },
                        if t.a == v { t.b } else { t.a },
                    );
                    let vp = p.sub(v);
                    let vq = q.sub(v);
                    let folded = orient2(v, p, q).is_zero() && (&vp.x * &vq.x + &vp.y * &vq.y) > Rational::zero();
                    if folded {
                        return false;
                    }
                    continue;
                }
            }
            match classify_projected(s.a, s.b, t.a, t.b) {
                Projected::Disjoint => {}
                Projected::Degenerate => return false,
                Projected::Proper { t: param, .. } => {
                    crossing_points.push((x, y, s.a.lerp(s.b, &param)));
                }
            }
        }
    }
    for (x, y, pt) in &crossing_points {
        for (k, s) in segs.iter().enumerate() {
            if k != *x && k != *y && projected_on_segment(pt, s.a, s.b) {
                return false;
            }
        }
    }
    true
}

/// Smallest shear from the schedule making the pair's projection generic.
pub fn make_generic(a: &PLCurve, b: &PLCurve) -> Result<Rational, GeomError> {
    for k in 0..SHEAR_SEARCH_LIMIT {
        let s = shear_schedule(k);
        let (sa, sb) = (a.sheared(&s), b.sheared(&s));
        if is_generic(&[&sa, &sb]) {
            return Ok(s);
        }
    }
    Err(GeomError::DegenerateFamily { tried: SHEAR_SEARCH_LIMIT })
}

fn crossing_sign(p1: &Point3, p2: &Point3, q1: &Point3, q2: &Point3, t: &Rational, u: &Rational, cross: &Rational) -> Option<i8> {
    let zp = &p1.z + t * (&p2.z - &p1.z);
    let zq = &q1.z + u * (&q2.z - &q1.z);
    if zp == zq {
        return None;
    }
    let positive = cross > &Rational::zero();
    // cross is (dir p) x (dir q); swapping over and under flips it.
    let s = if zp > zq { positive } else { !positive };
    Some(if s { 1 } else { -1 })
}

/// Inter-curve crossings of the vertical projection, which must already be generic.
pub fn signed_crossings(a: &PLCurve, b: &PLCurve) -> Result<Vec<CrossingRecord>, GeomError> {
    let mut out = Vec::new();
    for i in 0..a.len() {
        let (p1, p2) = a.segment(i);
        for j in 0..b.len() {
            let (q1, q2) = b.segment(j);
            if projects_to_point(p1, p2) || projects_to_point(q1, q2) {
                return Err(GeomError::NonGenericPair { i, j });
            }
            match classify_projected(p1, p2, q1, q2) {
                Projected::Disjoint => {}
                Projected::Degenerate => return Err(GeomError::NonGenericPair { i, j }),
                Projected::Proper { t, u, cross } => {
                    let sign = crossing_sign(p1, p2, q1, q2, &t, &u, &cross)
                        .ok_or(GeomError::NonGenericPair { i, j })?;
                    let at = p1.lerp(p2, &t);
                    out.push(CrossingRecord { segment_a: i, segment_b: j, sign, point: Point2 { x: at.x, y: at.y } });
                }
            }
        }
    }
    Ok(out)
}

/// Full linking computation with its bookkeeping.
#[derive(Clone, Debug)]
pub struct LinkingDetails {
    pub value: i64,
    pub shear: Rational,
    pub crossings: Vec<CrossingRecord>,
}

pub fn linking_details(a: &PLCurve, b: &PLCurve) -> Result<LinkingDetails, GeomError> {
    validate_disjoint(a, b)?;
    let shear = make_generic(a, b)?;
    let crossings = signed_crossings(&a.sheared(&shear), &b.sheared(&shear))?;
    let total: i64 = crossings.iter().map(|c| c.sign as i64).sum();
    debug_assert!(total % 2 == 0);
    Ok(LinkingDetails { value: total / 2, shear, crossings })
}

/// Exact linking number of two disjoint simple closed polygons.
pub fn linking_number(a: &PLCurve, b: &PLCurve) -> Result<i64, GeomError> {
    Ok(linking_details(a, b)?.value)
}

/// Crossing sums between two families of open polylines, for one common shear.
///
/// Entry `[i][j]` is the sum of crossing signs between path `i` of the first family and
/// path `j` of the second. Linking numbers of closed curves assembled from these paths
/// are half the signed sum of the relevant entries. Only the conditions needed for that
/// sum are enforced: no collapsed segment, and every cross-family pair of projected
/// segments disjoint or crossing transversally at interior points.
#[derive(Clone, Debug)]
pub struct PathCrossings {
    pub shear: Rational,
    pub sums: Vec<Vec<i64>>,
}

pub fn path_crossings(first: &[Vec<Point3>], second: &[Vec<Point3>]) -> Result<PathCrossings, GeomError> {
    for k in 0..SHEAR_SEARCH_LIMIT {
        let s = shear_schedule(k);
        if let Some(sums) = try_path_crossings(first, second, &s) {
            return Ok(PathCrossings { shear: s, sums });
        }
    }
    Err(GeomError::DegenerateFamily { tried: SHEAR_SEARCH_LIMIT })
}

fn try_path_crossings(first: &[Vec<Point3>], second: &[Vec<Point3>], s: &Rational) -> Option<Vec<Vec<i64>>> {
    let shear_all = |paths: &[Vec<Point3>]| -> Vec<Vec<Point3>> {
        paths.iter().map(|p| p.iter().map(|v| v.sheared(s)).collect()).collect()
    };
    let f = shear_all(first);
    let g = shear_all(second);
    for path in f.iter().chain(g.iter()) {
        if path.windows(2).any(|w| projects_to_point(&w[0], &w[1])) {
            return None;
        }
    }
    let rows: Vec<Option<Vec<i64>>> = f
        .par_iter()
        .map(|pf| {
            let mut row = vec![0i64; g.len()];
            for (j, pg) in g.iter().enumerate() {
                for w in pf.windows(2) {
                    for x in pg.windows(2) {
                        match classify_projected(&w[0], &w[1], &x[0], &x[1]) {
                            Projected::Disjoint => {}
                            Projected::Degenerate => return None,
                            Projected::Proper { t, u, cross } => {
                                row[j] += crossing_sign(&w[0], &w[1], &x[0], &x[1], &t, &u, &cross)? as i64;
                            }
                        }
                    }
                }
            }
            Some(row)
        })
        .collect();
    rows.into_iter().collect()
}

/// A rational rotation from an integer quaternion (Euler-Rodrigues with rational scaling).
pub fn rational_rotation(q: [i64; 4]) -> [[Rational; 3]; 3] {
    let [a, b, c, d] = q.map(int);
    let n = &a * &a + &b * &b + &c * &c + &d * &d;
    assert!(!n.is_zero(), "zero quaternion");
    let two = int(2);
    let m = [
        [
            &a * &a + &b * &b - &c * &c - &d * &d,
            &two * (&b * &c - &a * &d),
            &two * (&b * &d + &a * &c),
        ],
        [
            &two * (&b * &c + &a * &d),
            &a * &a - &b * &b + &c * &c - &d * &d,
            &two * (&c * &d - &a * &b),
        ],
        [
            &two * (&b * &d - &a * &c),
            &two * (&c * &d + &a * &b),
            &a * &a - &b * &b - &c * &c + &d * &d,
        ],
    ];
    m.map(|row| row.map(|v| v / &n))
}

/// The identity matrix.
pub fn identity() -> [[Rational; 3]; 3] {
    let o = Rational::one;
    let z = Rational::zero;
    [[o(), z(), z()], [z(), o(), z()], [z(), z(), o()]]
}
