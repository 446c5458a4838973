//! Exact segment predicates in space and in the xy projection.

use num_traits::{Signed, Zero};

use super::point::{sign, Point3, Rational};

/// Twice the signed area of the projected triangle `a b c`.
pub fn orient2(a: &Point3, b: &Point3, c: &Point3) -> Rational {
    (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x)
}

/// 2D cross product of the projected directions `a1 -> a2` and `b1 -> b2`.
pub fn cross2(a1: &Point3, a2: &Point3, b1: &Point3, b2: &Point3) -> Rational {
    (&a2.x - &a1.x) * (&b2.y - &b1.y) - (&a2.y - &a1.y) * (&b2.x - &b1.x)
}

fn between(v: &Rational, a: &Rational, b: &Rational) -> bool {
    if a <= b {
        a <= v && v <= b
    } else {
        b <= v && v <= a
    }
}

fn project(p: &Point3, drop: usize) -> (Rational, Rational) {
    match drop {
        0 => (p.y.clone(), p.z.clone()),
        1 => (p.x.clone(), p.z.clone()),
        _ => (p.x.clone(), p.y.clone()),
    }
}

type P2 = (Rational, Rational);

fn orient(a: &P2, b: &P2, c: &P2) -> Rational {
    (&b.0 - &a.0) * (&c.1 - &a.1) - (&b.1 - &a.1) * (&c.0 - &a.0)
}

fn on_segment2(p: &P2, a: &P2, b: &P2) -> bool {
    between(&p.0, &a.0, &b.0) && between(&p.1, &a.1, &b.1)
}

fn segments_meet2(a: &P2, b: &P2, c: &P2, d: &P2) -> bool {
    let o1 = sign(&orient(a, b, c));
    let o2 = sign(&orient(a, b, d));
    let o3 = sign(&orient(c, d, a));
    let o4 = sign(&orient(c, d, b));
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    (o1 == 0 && on_segment2(c, a, b))
        || (o2 == 0 && on_segment2(d, a, b))
        || (o3 == 0 && on_segment2(a, c, d))
        || (o4 == 0 && on_segment2(b, c, d))
}

/// Whether point `p` lies on the closed segment `a b` in space.
pub fn point_on_segment(p: &Point3, a: &Point3, b: &Point3) -> bool {
    let ab = b.sub(a);
    let ap = p.sub(a);
    if !ab.cross(&ap).is_zero() {
        return false;
    }
    between(&p.x, &a.x, &b.x) && between(&p.y, &a.y, &b.y) && between(&p.z, &a.z, &b.z)
}

/// Whether closed segments `a b` and `c d` share a point. Degenerate segments are points.
pub fn segments_intersect(a: &Point3, b: &Point3, c: &Point3, d: &Point3) -> bool {
    if a == b {
        return point_on_segment(a, c, d);
    }
    if c == d {
        return point_on_segment(c, a, b);
    }
    if !boxes_overlap(a, b, c, d) {
        return false;
    }
    let ab = b.sub(a);
    let n1 = ab.cross(&c.sub(a));
    let n2 = ab.cross(&d.sub(a));
    if n1.is_zero() && n2.is_zero() {
        // All four points on one line.
        return point_on_segment(c, a, b)
            || point_on_segment(d, a, b)
            || point_on_segment(a, c, d)
            || point_on_segment(b, c, d);
    }
    if !n1.dot(&d.sub(a)).is_zero() {
        return false;
    }
    let normal = if n1.is_zero() { n2 } else { n1 };
    let drop = if !normal.z.is_zero() {
        2
    } else if !normal.y.is_zero() {
        1
    } else {
        0
    };
    segments_meet2(&project(a, drop), &project(b, drop), &project(c, drop), &project(d, drop))
}

/// For segments `a v` and `v c` sharing the vertex `v`: do they meet anywhere else?
pub fn adjacent_overlap(a: &Point3, v: &Point3, c: &Point3) -> bool {
    let va = a.sub(v);
    let vc = c.sub(v);
    va.cross(&vc).is_zero() && va.dot(&vc).is_positive()
}

fn boxes_overlap(a: &Point3, b: &Point3, c: &Point3, d: &Point3) -> bool {
    for k in 0..3 {
        let (a, b, c, d) = (a.coords()[k], b.coords()[k], c.coords()[k], d.coords()[k]);
        let (lo1, hi1) = if a <= b { (a, b) } else { (b, a) };
        let (lo2, hi2) = if c <= d { (c, d) } else { (d, c) };
        if hi1 < lo2 || hi2 < lo1 {
            return false;
        }
    }
    true
}

/// How two segments meet in the xy projection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Projected {
    Disjoint,
    /// Transverse crossing interior to both segments, at parameters `t` (first) and `u` (second).
    Proper { t: Rational, u: Rational, cross: Rational },
    /// Touching, overlapping, or through an endpoint.
    Degenerate,
}

/// Classifies the projections of `p1 p2` and `q1 q2`; both must project to proper segments.
pub fn classify_projected(p1: &Point3, p2: &Point3, q1: &Point3, q2: &Point3) -> Projected {
    if !boxes_overlap_xy(p1, p2, q1, q2) {
        return Projected::Disjoint;
    }
    let o1 = sign(&orient2(p1, p2, q1));
    let o2 = sign(&orient2(p1, p2, q2));
    let o3 = sign(&orient2(q1, q2, p1));
    let o4 = sign(&orient2(q1, q2, p2));
    let on = |p: &Point3, a: &Point3, b: &Point3| between(&p.x, &a.x, &b.x) && between(&p.y, &a.y, &b.y);
    if o1 == 0 && o2 == 0 {
        let overlap = on(q1, p1, p2) || on(q2, p1, p2) || on(p1, q1, q2) || on(p2, q1, q2);
        return if overlap { Projected::Degenerate } else { Projected::Disjoint };
    }
    if (o1 == 0 && on(q1, p1, p2))
        || (o2 == 0 && on(q2, p1, p2))
        || (o3 == 0 && on(p1, q1, q2))
        || (o4 == 0 && on(p2, q1, q2))
    {
        return Projected::Degenerate;
    }
    if o1 * o2 < 0 && o3 * o4 < 0 {
        let cross = cross2(p1, p2, q1, q2);
        let w = q1.sub(p1);
        let t = (&w.x * (&q2.y - &q1.y) - &w.y * (&q2.x - &q1.x)) / &cross;
        let u = (&w.x * (&p2.y - &p1.y) - &w.y * (&p2.x - &p1.x)) / &cross;
        return Projected::Proper { t, u, cross };
    }
    Projected::Disjoint
}

fn boxes_overlap_xy(a: &Point3, b: &Point3, c: &Point3, d: &Point3) -> bool {
    for k in 0..2 {
        let (a, b, c, d) = (a.coords()[k], b.coords()[k], c.coords()[k], d.coords()[k]);
        let (lo1, hi1) = if a <= b { (a, b) } else { (b, a) };
        let (lo2, hi2) = if c <= d { (c, d) } else { (d, c) };
        if hi1 < lo2 || hi2 < lo1 {
            return false;
        }
    }
    true
}

/// Whether a segment projects to a single point.
pub fn projects_to_point(a: &Point3, b: &Point3) -> bool {
    a.x == b.x && a.y == b.y
}

/// Whether projected point `p` lies on the projected closed segment `a b`.
pub fn projected_on_segment(p: &Point3, a: &Point3, b: &Point3) -> bool {
    orient2(a, b, p).is_zero() && between(&p.x, &a.x, &b.x) && between(&p.y, &a.y, &b.y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64, z: i64) -> Point3 {
        Point3::from_ints(x, y, z)
    }

    #[test]
    fn skew_segments_miss() {
        assert!(!segments_intersect(&p(0, 0, 0), &p(2, 0, 0), &p(1, -1, 1), &p(1, 1, 1)));
    }

    #[test]
    fn crossing_segments_meet() {
        assert!(segments_intersect(&p(0, 0, 0), &p(2, 0, 0), &p(1, -1, 0), &p(1, 1, 0)));
        assert!(segments_intersect(&p(0, 0, 0), &p(2, 2, 2), &p(1, 1, 1), &p(5, 0, 3)));
    }

    #[test]
    fn collinear_cases() {
        assert!(segments_intersect(&p(0, 0, 0), &p(2, 2, 2), &p(1, 1, 1), &p(3, 3, 3)));
        assert!(!segments_intersect(&p(0, 0, 0), &p(1, 1, 1), &p(2, 2, 2), &p(3, 3, 3)));
    }

    #[test]
    fn vertical_plane_uses_other_projection() {
        // Both segments lie in the plane x = 0.
        assert!(segments_intersect(&p(0, 0, 0), &p(0, 2, 2), &p(0, 0, 2), &p(0, 2, 0)));
        assert!(!segments_intersect(&p(0, 0, 0), &p(0, 1, 0), &p(0, 0, 2), &p(0, 2, 2)));
    }

    #[test]
    fn adjacent_overlap_detects_fold_back() {
        assert!(adjacent_overlap(&p(2, 0, 0), &p(0, 0, 0), &p(1, 0, 0)));
        assert!(!adjacent_overlap(&p(2, 0, 0), &p(0, 0, 0), &p(-1, 0, 0)));
    }

    #[test]
    fn projected_classification() {
        match classify_projected(&p(0, 0, 0), &p(2, 0, 5), &p(1, -1, 1), &p(1, 1, 1)) {
            Projected::Proper { t, u, .. } => {
                assert_eq!(t, super::super::point::ratio(1, 2));
                assert_eq!(u, super::super::point::ratio(1, 2));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            classify_projected(&p(0, 0, 0), &p(2, 0, 0), &p(1, 0, 3), &p(1, 1, 3)),
            Projected::Degenerate
        );
        assert_eq!(
            classify_projected(&p(0, 0, 0), &p(2, 0, 0), &p(3, -1, 1), &p(3, 1, 1)),
            Projected::Disjoint
        );
    }
}
