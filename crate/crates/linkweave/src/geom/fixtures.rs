//! Small reference curve pairs with known linking numbers.

use super::curve::PLCurve;
use super::point::{ratio, Point3};

fn pt(x: (i64, i64), y: (i64, i64), z: (i64, i64)) -> Point3 {
    Point3::new(ratio(x.0, x.1), ratio(y.0, y.1), ratio(z.0, z.1))
}

fn square_xy(z: i64) -> PLCurve {
    PLCurve::new(vec![
        Point3::from_ints(-1, -1, z),
        Point3::from_ints(1, -1, z),
        Point3::from_ints(1, 1, z),
        Point3::from_ints(-1, 1, z),
    ])
    .expect("four vertices")
}

/// Counter-clockwise unit-ish square `[-1, 1]^2` in the plane `z = 0`.
pub fn base_square() -> PLCurve {
    square_xy(0)
}

/// Two squares far apart: linking number 0.
pub fn split_pair() -> (PLCurve, PLCurve) {
    let far = PLCurve::new(vec![
        Point3::from_ints(10, 0, 0),
        Point3::from_ints(12, 0, 0),
        Point3::from_ints(12, 2, 0),
        Point3::from_ints(10, 2, 0),
    ])
    .expect("four vertices");
    (base_square(), far)
}

/// Square in the xz-plane passing once through the base square's disk.
pub fn hopf_pair() -> (PLCurve, PLCurve) {
    let thread = PLCurve::new(vec![
        Point3::from_ints(0, 0, -1),
        Point3::from_ints(2, 0, -1),
        Point3::from_ints(2, 0, 1),
        Point3::from_ints(0, 0, 1),
    ])
    .expect("four vertices");
    (base_square(), thread)
}

/// A coil that winds twice around the edge `x = 1` of the base square.
///
/// Each turn passes over that edge, drops through the disk at `x = 3/5`, passes under the
/// edge and rises outside the square; the return path stays at `x >= 7/5`. Under the
/// vertical projection the diagram has exactly four crossings, all of one sign.
pub fn doubled_thread_pair() -> (PLCurve, PLCurve) {
    let mut v = Vec::new();
    for turn in 0..2i64 {
        let y0 = -2 + 4 * turn; // tenths
        v.push(pt((7, 5), (y0, 10), (3, 10)));
        v.push(pt((3, 5), (2 * y0 + 1, 20), (3, 10)));
        v.push(pt((3, 5), (y0 + 1, 10), (-3, 10)));
        v.push(pt((7, 5), (2 * y0 + 3, 20), (-3, 10)));
    }
    v.push(pt((3, 1), (7, 20), (-3, 10)));
    v.push(pt((3, 1), (-1, 5), (3, 10)));
    (base_square(), PLCurve::new(v).expect("enough vertices"))
}
