use crate::geom::{Point3, Rational};

/// Edge route that leaves `a` toward `b`, runs at height `level`, and comes back down to `b`.
///
/// The legs start along the chord, so routes sharing an endpoint leave it in different
/// directions; `eps` is the fraction of the chord taken by each leg.
pub fn chord_route(a: &Point3, b: &Point3, level: &Rational, eps: &Rational) -> Vec<Point3> {
    let near = |from: &Point3, to: &Point3| {
        let p = from.lerp(to, eps);
        Point3::new(p.x, p.y, level.clone())
    };
    vec![a.clone(), near(a, b), near(b, a), b.clone()]
}
