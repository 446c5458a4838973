use linkweave::graphs::{all_triangles, enumerate_cycles, Cycle, OrientedTriangle};
use linkweave::linktable::{
    cycle_pair_linking, cycle_pair_linking_from, linkage_status, sample_status, validate_consistency, LinkageStatus,
    SampleOutcome, Side, TableError, TriangleLinkTable,
};
use linkweave::stars::Star;
use proptest::prelude::*;

fn tri(s: &str) -> OrientedTriangle {
    s.parse().unwrap()
}

/// Consistent table from values on fundamental cycles `0xy` (x < y, both nonzero) of each side.
fn table_from_chords(m: usize, n: usize, f: impl Fn(usize, usize, usize, usize) -> i64) -> TriangleLinkTable {
    let chord = |x: usize, y: usize| -> Option<(usize, usize, i64)> {
        if x == 0 || y == 0 || x == y {
            None
        } else if x < y {
            Some((x, y, 1))
        } else {
            Some((y, x, -1))
        }
    };
    let edges = |t: &OrientedTriangle| {
        let [a, b, c] = t.vertices();
        [(a, b), (b, c), (c, a)]
    };
    TriangleLinkTable::from_fn(m, n, |t, u| {
        let mut s = 0;
        for (a, b) in edges(t) {
            for (c, d) in edges(u) {
                if let (Some((x, y, e)), Some((z, w, g))) = (chord(a, b), chord(c, d)) {
                    s += e * g * f(x, y, z, w);
                }
            }
        }
        s
    })
}

fn brute_max(t: &TriangleLinkTable) -> i64 {
    let (m, n) = t.orders();
    let g = enumerate_cycles(m, None).unwrap();
    let h = enumerate_cycles(n, None).unwrap();
    let mut best = 0;
    for c in &g {
        for d in &h {
            best = best.max(cycle_pair_linking(t, c, d).unwrap().abs());
        }
    }
    best
}

#[test]
fn zero_table() {
    let t = TriangleLinkTable::zero(5, 4);
    assert_eq!(validate_consistency(&t), Ok(()));
    assert_eq!(linkage_status(&t).unwrap(), LinkageStatus::Unlinked);
    assert_eq!(t.to_text(), "5 4\n");
}

#[test]
fn single_entry_is_inconsistent() {
    let mut t = TriangleLinkTable::zero(4, 3);
    t.set(&tri("0.1.2"), &tri("0.1.2"), 1);
    assert!(matches!(validate_consistency(&t), Err(TableError::Inconsistent { side: Side::G, sum: -1, quadruple: [0, 1, 2, 3], .. })));
}

#[test]
fn antisymmetry_is_built_in() {
    let mut t = TriangleLinkTable::zero(4, 4);
    t.set(&tri("0.2.1"), &tri("1.2.3"), 3);
    assert_eq!(t.get(&tri("0.1.2"), &tri("1.2.3")), -3);
    assert_eq!(t.get(&tri("0.1.2"), &tri("1.3.2")), 3);
    assert_eq!(t.transposed().get(&tri("1.2.3"), &tri("0.2.1")), 3);
    assert_eq!(t.transposed().transposed(), t);
}

/// Two faces of a tetrahedron both linking one triangle positively.
fn square_table() -> TriangleLinkTable {
    let mut t = TriangleLinkTable::zero(4, 3);
    let u = tri("0.1.2");
    t.set(&tri("0.1.3"), &u, 1);
    t.set(&tri("2.1.0"), &u, 1);
    t.set(&tri("1.2.3"), &u, -1);
    t.set(&tri("3.2.0"), &u, -1);
    t
}

#[test]
fn square_of_two_linking_faces_is_strong() {
    let t = square_table();
    assert_eq!(validate_consistency(&t), Ok(()));
    let sq = Cycle::new(vec![0, 2, 1, 3]).unwrap();
    let u = Cycle::new(vec![0, 1, 2]).unwrap();
    assert_eq!(cycle_pair_linking(&t, &sq, &u).unwrap(), 2);
    match linkage_status(&t).unwrap() {
        LinkageStatus::Strong { witness } => {
            assert_eq!(witness.linking.abs(), 2);
            assert_eq!(witness.g_cycle.len() + witness.h_cycle.len(), 7);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn triangle_pair_is_raw_entry() {
    let t = square_table();
    let c = Cycle::new(vec![0, 1, 3]).unwrap();
    let d = Cycle::new(vec![0, 1, 2]).unwrap();
    assert_eq!(cycle_pair_linking(&t, &c, &d).unwrap(), 1);
}

#[test]
fn star_row_is_weak() {
    // One G triangle linking K6 in a star.
    let s: Star = "0|1 2|3 4 5".parse().unwrap();
    let map = s.indicator();
    let t = TriangleLinkTable::from_fn(3, 6, |_, u| map.get(u));
    assert_eq!(validate_consistency(&t), Ok(()));
    let status = linkage_status(&t).unwrap();
    assert!(status.is_weak(), "{status:?}");
    assert_eq!(status.witness().unwrap().linking.abs(), 1);
    assert_eq!(brute_max(&t), 1);
}

#[test]
fn inconsistent_table_is_detected_by_base_check() {
    let mut t = TriangleLinkTable::zero(4, 3);
    t.set(&tri("0.1.2"), &tri("0.1.2"), 1);
    let sq = Cycle::new(vec![0, 1, 2, 3]).unwrap();
    let d = Cycle::new(vec![0, 1, 2]).unwrap();
    assert_eq!(cycle_pair_linking(&t, &sq, &d), Err(TableError::InconsistentTable));
}

#[test]
fn text_round_trip_and_conflicts() {
    let t = square_table();
    let text = t.to_text();
    assert_eq!(TriangleLinkTable::from_text(&text).unwrap(), t);
    assert_eq!(TriangleLinkTable::from_text(&text).unwrap().to_text(), text);
    // Reverse orientation spelled out, consistent.
    let ok = "4 3\n0.3.1 0.1.2 -1\n0.1.3 0.1.2 1\n";
    assert!(TriangleLinkTable::from_text(ok).is_ok());
    let bad = "4 3\n0.3.1 0.1.2 1\n0.1.3 0.1.2 1\n";
    assert!(matches!(TriangleLinkTable::from_text(bad), Err(TableError::Conflict(..))));
    assert!(matches!(TriangleLinkTable::from_text("4 3\n0.1.7 0.1.2 1\n"), Err(TableError::VertexOutOfRange { vertex: 7, .. })));
}

#[test]
fn guard_and_sampling() {
    let t = TriangleLinkTable::zero(9, 9);
    assert!(matches!(linkage_status(&t), Err(TableError::OrderTooLarge { .. })));
    assert!(matches!(sample_status(&t, 50, 7).unwrap(), SampleOutcome::Inconclusive { samples: 50, seed: 7 }));
    let strong = table_from_chords(9, 9, |x, y, z, w| if (x, y, z, w) == (1, 2, 1, 2) { 3 } else { 0 });
    assert!(matches!(sample_status(&strong, 5000, 1).unwrap(), SampleOutcome::StrongFound { .. }));
    assert_eq!(sample_status(&strong, 5000, 1).unwrap(), sample_status(&strong, 5000, 1).unwrap());
}

#[test]
fn status_matches_brute_force_on_chord_tables() {
    // Small hand-picked chord values; the oracle is a direct max over all cycle pairs.
    let cases: Vec<Box<dyn Fn(usize, usize, usize, usize) -> i64>> = vec![
        Box::new(|x, y, z, w| ((x, y, z, w) == (1, 2, 1, 2)) as i64),
        Box::new(|x, y, z, w| ((x, y) == (1, 2) && (z == 1 || w == 3)) as i64),
        Box::new(|x, y, z, w| ((x + y + z + w) % 3 == 0) as i64 - ((x * w) % 4 == 1) as i64),
    ];
    for f in cases {
        let t = table_from_chords(5, 5, f);
        assert_eq!(validate_consistency(&t), Ok(()));
        let max = brute_max(&t);
        let status = linkage_status(&t).unwrap();
        let label = match max {
            0 => "Unlinked",
            1 => "Weak",
            _ => "Strong",
        };
        assert_eq!(status.label(), label);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn chord_tables_are_consistent_and_base_independent(seed in prop::collection::vec(-1i64..=1, 36)) {
        let f = |x: usize, y: usize, z: usize, w: usize| {
            let a = (x - 1) * 3 + (y - 2);
            let b = (z - 1) * 3 + (w - 2);
            seed[(a * 6 + b) % 36]
        };
        let t = table_from_chords(5, 5, f);
        prop_assert_eq!(validate_consistency(&t), Ok(()));
        prop_assert_eq!(validate_consistency(&t.transposed()), Ok(()));
        let g = enumerate_cycles(5, None).unwrap();
        for c in g.iter().step_by(3) {
            for d in g.iter().step_by(5) {
                let v = cycle_pair_linking_from(&t, c, c.vertices()[0], d, d.vertices()[0]).unwrap();
                for &cb in c.vertices() {
                    for &db in d.vertices() {
                        prop_assert_eq!(cycle_pair_linking_from(&t, c, cb, d, db).unwrap(), v);
                    }
                }
                prop_assert_eq!(cycle_pair_linking(&t.transposed(), d, c).unwrap(), v);
            }
        }
        let text = t.to_text();
        prop_assert_eq!(TriangleLinkTable::from_text(&text).unwrap(), t);
    }
}

#[test]
fn rows_and_columns_agree() {
    let t = square_table();
    for a in all_triangles(4) {
        for b in all_triangles(3) {
            assert_eq!(t.row(&a).get(&b), t.get(&a, &b));
            assert_eq!(t.column(&b).get(&a), t.get(&a, &b));
            assert_eq!(t.row(&a.reversed()).get(&b), -t.get(&a, &b));
        }
    }
}
