use linkweave::geom::fixtures::{doubled_thread_pair, hopf_pair, split_pair};
use linkweave::geom::{
    gauss_linking_raw, linking_details, linking_number, make_generic, rational_rotation, ratio, signed_crossings,
    validate_disjoint, CurveSide, GeomError, PLCurve, Point3, Rational,
};
use num_traits::Zero;
use proptest::prelude::*;

fn square_at(z: i64) -> PLCurve {
    PLCurve::new(vec![
        Point3::from_ints(0, 0, z),
        Point3::from_ints(1, 0, z),
        Point3::from_ints(1, 1, z),
        Point3::from_ints(0, 1, z),
    ])
    .unwrap()
}

#[test]
fn parallel_squares_are_disjoint() {
    assert_eq!(validate_disjoint(&square_at(0), &square_at(1)), Ok(()));
}

#[test]
fn repeated_vertex_is_self_intersection() {
    let bad = PLCurve::new(vec![
        Point3::from_ints(0, 0, 0),
        Point3::from_ints(1, 0, 0),
        Point3::from_ints(1, 0, 0),
        Point3::from_ints(0, 1, 0),
    ])
    .unwrap();
    assert!(matches!(
        validate_disjoint(&bad, &square_at(5)),
        Err(GeomError::SelfIntersection { curve: CurveSide::A, .. })
    ));
}

#[test]
fn shared_point_is_mutual_intersection() {
    let other = PLCurve::new(vec![
        Point3::from_ints(0, 0, 0),
        Point3::from_ints(-1, 0, 0),
        Point3::from_ints(-1, 0, 1),
    ])
    .unwrap();
    assert!(matches!(validate_disjoint(&square_at(0), &other), Err(GeomError::MutualIntersection { .. })));
}

#[test]
fn generic_squares_need_no_shear() {
    let (a, b) = split_pair();
    assert_eq!(make_generic(&a, &b).unwrap(), Rational::zero());
}

#[test]
fn vertical_segment_forces_shear() {
    let (a, b) = hopf_pair();
    let s = make_generic(&a, &b).unwrap();
    assert!(s > Rational::zero());
}

#[test]
fn split_pair_has_no_crossings() {
    let (a, b) = split_pair();
    assert!(signed_crossings(&a, &b).unwrap().is_empty());
    assert_eq!(linking_number(&a, &b).unwrap(), 0);
}

#[test]
fn hopf_pair_has_two_equal_crossings() {
    let (a, b) = hopf_pair();
    let d = linking_details(&a, &b).unwrap();
    assert_eq!(d.crossings.len(), 2);
    assert_eq!(d.crossings[0].sign, d.crossings[1].sign);
    assert_eq!(d.value.abs(), 1);
}

#[test]
fn doubled_thread_has_four_crossings() {
    let (a, b) = doubled_thread_pair();
    assert_eq!(make_generic(&a, &b).unwrap(), Rational::zero());
    let c = signed_crossings(&a, &b).unwrap();
    assert_eq!(c.len(), 4);
    let sum: i64 = c.iter().map(|x| x.sign as i64).sum();
    assert_eq!(sum.abs(), 4);
    assert_eq!(linking_number(&a, &b).unwrap().abs(), 2);
}

#[test]
fn gauss_oracle_matches_fixtures() {
    for (a, b) in [split_pair(), hopf_pair(), doubled_thread_pair()] {
        let est = gauss_linking_raw(&a, &b);
        assert!(est.certified(), "bound {}", est.error_bound);
        let exact = linking_number(&a, &b).unwrap();
        assert!((est.value - exact as f64).abs() < 0.25, "{} vs {}", est.value, exact);
    }
}

#[test]
fn sign_convention_is_right_handed() {
    // The base square runs counter-clockwise seen from +z; the thread crosses its disk
    // heading in the -z direction, so the right-hand rule gives -1.
    let (a, b) = hopf_pair();
    assert_eq!(linking_number(&a, &b).unwrap(), -1);
    assert_eq!(gauss_linking_raw(&a, &b).rounded(), -1);
}

fn fixtures() -> Vec<(PLCurve, PLCurve, i64)> {
    [split_pair(), hopf_pair(), doubled_thread_pair()]
        .into_iter()
        .map(|(a, b)| {
            let lk = linking_number(&a, &b).unwrap();
            (a, b, lk)
        })
        .collect()
}

#[test]
fn orientation_reversal_and_symmetry() {
    for (a, b, lk) in fixtures() {
        assert_eq!(linking_number(&a.reversed(), &b).unwrap(), -lk);
        assert_eq!(linking_number(&a, &b.reversed()).unwrap(), -lk);
        assert_eq!(linking_number(&b, &a).unwrap(), lk);
    }
}

#[test]
fn crossing_count_is_even() {
    for (a, b, _) in fixtures() {
        let d = linking_details(&a, &b).unwrap();
        assert_eq!(d.crossings.len() % 2, 0);
    }
}

#[test]
fn curve_text_round_trip() {
    let (_, b) = doubled_thread_pair();
    let text = format!("# coil\n{}", b.to_text());
    let back = PLCurve::from_text(&text).unwrap();
    assert_eq!(back, b);
    assert_eq!(back.to_text(), b.to_text());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn rotation_invariance(q in prop::array::uniform4(-6i64..7), shear in -3i64..4) {
        prop_assume!(q.iter().any(|&v| v != 0));
        let m = rational_rotation(q);
        let k = ratio(shear, 5);
        for (a, b, lk) in fixtures() {
            let f = |p: &Point3| {
                let r = p.transformed(&m);
                // Extra orientation-preserving shear of x along y.
                Point3::new(&r.x + &k * &r.y, r.y, r.z)
            };
            prop_assert_eq!(linking_number(&a.map(f), &b.map(f)).unwrap(), lk);
        }
    }
}
