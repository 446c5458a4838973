use linkweave::classify::{classify_pair, classify_theta, PairClassification, ThetaClassification};
use linkweave::construct::{
    build_pq, build_star_cone, realize_table, realize_theta, sabotage_fixture, table_from_embeddings, theta_link_maps,
    theta_status, verify_embedding_pair, GraphEmbedding, PqParams,
};
use linkweave::corpus::{d1_corpus, k4_corpus};
use linkweave::geom::{linking_number, PLCurve, Point3};
use linkweave::graphs::{all_triangles, OrientedTriangle, VertexSet};
use linkweave::linktable::{linkage_status, LinkageStatus, Side, TriangleLinkTable};
use linkweave::stars::{LinkMap, Star};

fn set(v: &[usize]) -> VertexSet {
    v.iter().copied().collect()
}

fn triangle_curve(e: &GraphEmbedding, t: &OrientedTriangle) -> PLCurve {
    e.cycle_curve(&t.vertices()).unwrap()
}

#[test]
fn star_cone_six_matches_indicator() {
    let s: Star = "0|1 2|3 4 5".parse().unwrap();
    let (c, k6) = build_star_cone(6, &s).unwrap();
    let map = linkweave::construct::curve_link_map(&c, &k6).unwrap();
    assert_eq!(map, s.indicator());
    // Independent check with the curve-pair engine on every triangle.
    for t in all_triangles(6) {
        assert_eq!(linking_number(&c, &triangle_curve(&k6, &t)).unwrap(), s.value(&t), "{t}");
    }
}

#[test]
fn star_cone_small_and_proper() {
    let fan: Star = "0|1|2".parse().unwrap();
    let (c, k3) = build_star_cone(3, &fan).unwrap();
    assert_eq!(linkweave::construct::curve_link_map(&c, &k3).unwrap(), fan.indicator());

    let s = Star::new(7, 3, set(&[0, 5]), set(&[1, 2, 4, 6])).unwrap();
    let (c, k7) = build_star_cone(7, &s).unwrap();
    let map = linkweave::construct::curve_link_map(&c, &k7).unwrap();
    let linked = all_triangles(7).iter().filter(|t| map.get(t) != 0).count();
    assert_eq!(linked, 8);
    assert_eq!(all_triangles(7).len() - linked, 27);
}

fn pq_check(xs: &[usize], ys: &[usize]) -> i64 {
    let params = PqParams::new(xs.to_vec(), ys.to_vec()).unwrap();
    let (g, h) = build_pq(&params).unwrap();
    let t = table_from_embeddings(&g, &h).unwrap();
    let (m, n) = params.orders();
    let sign = [1, -1]
        .into_iter()
        .find(|&s| params.expected(s).pattern(m, n) == t)
        .unwrap_or_else(|| panic!("pq {xs:?}/{ys:?} table is not the pattern"));
    assert!(linkage_status(&t).unwrap().is_weak());
    sign
}

#[test]
fn pq_tables_equal_the_pattern() {
    let signs: Vec<i64> = [
        (vec![1, 1], vec![1, 1]),
        (vec![2, 1], vec![1, 2]),
        (vec![1, 1, 1], vec![1, 1, 1]),
        (vec![1, 2, 1], vec![2, 1, 1]),
        (vec![1, 1, 1, 1], vec![1, 1, 1, 1]),
    ]
    .iter()
    .map(|(x, y)| pq_check(x, y))
    .collect();
    // One orientation convention throughout.
    assert!(signs.iter().all(|&s| s == signs[0]), "{signs:?}");
}

#[test]
fn pq_triangle_entries_agree_with_curve_engine() {
    let params = PqParams::new(vec![1, 1], vec![1, 1]).unwrap();
    let (g, h) = build_pq(&params).unwrap();
    let t = table_from_embeddings(&g, &h).unwrap();
    for a in all_triangles(3) {
        for b in all_triangles(3) {
            let lk = linking_number(&triangle_curve(&g, &a), &triangle_curve(&h, &b)).unwrap();
            assert_eq!(lk, t.get(&a, &b));
        }
    }
}

#[test]
fn pq_separation_and_hypotheses() {
    let params = PqParams::new(vec![1, 2, 1], vec![2, 1, 1]).unwrap();
    let (g, h) = build_pq(&params).unwrap();
    let t = table_from_embeddings(&g, &h).unwrap();
    // Triangles avoiding p link nothing.
    for a in all_triangles(g.order()).iter().filter(|a| !a.contains(0)) {
        assert!(t.row(a).is_zero(), "{a}");
    }
    // q lies on every linking H triangle, and each links G in a star.
    for u in t.linking_triangles(Side::H) {
        assert!(u.contains(0));
        assert!(linkweave::stars::detect_star(&t.column(&u)).unwrap().is_some());
    }
    let r = classify_pair(&t).unwrap();
    match r.classification {
        PairClassification::PQ(c) => assert_eq!(c.ell(), 3),
        other => panic!("{other:?}"),
    }
}

#[test]
fn pq_rejects_bad_params() {
    assert!(PqParams::new(vec![1], vec![1]).is_err());
    assert!(PqParams::new(vec![1, 1], vec![1]).is_err());
    assert!(PqParams::new(vec![1, 0], vec![1, 1]).is_err());
}

#[test]
fn clasp_realizes_k4_and_d1_tables() {
    let b = k4_corpus(5);
    for pt in [&b[0], &b[b.len() - 1]] {
        let (g, h) = realize_table(&pt.table).unwrap();
        assert_eq!(table_from_embeddings(&g, &h).unwrap(), pt.table);
    }
    let d = d1_corpus(5, 5);
    let (g, h) = realize_table(&d[3].table).unwrap();
    assert_eq!(table_from_embeddings(&g, &h).unwrap(), d[3].table);
}

#[test]
fn clasp_realizes_theta_maps() {
    let a1 = ThetaClassification::A1 { p: 0, parts: [set(&[1]), set(&[2, 3]), set(&[4])], sign: -1 };
    let maps = a1.pattern(5);
    let (g, h) = realize_theta(&maps).unwrap();
    assert_eq!(theta_link_maps(&g, &h).unwrap(), maps);
    assert!(theta_status(&maps).unwrap().is_weak());
    assert_eq!(classify_theta(&maps).unwrap().label(), "A1");
}

#[test]
fn clasp_rejects_large_values() {
    let mut t = TriangleLinkTable::zero(3, 3);
    t.set(&OrientedTriangle::of(0, 1, 2), &OrientedTriangle::of(0, 1, 2), 2);
    assert!(realize_table(&t).is_err());
}

#[test]
fn theta_status_sees_strong_maps() {
    let m1 = Star::new(4, 0, set(&[1]), set(&[2, 3])).unwrap().indicator();
    let twice = m1.plus(&m1);
    let maps: [LinkMap; 3] = [m1.clone(), m1.clone(), twice.negated()];
    match theta_status(&maps).unwrap() {
        LinkageStatus::Strong { witness } => assert_eq!(witness.linking.abs(), 2),
        other => panic!("{other:?}"),
    }
}

#[test]
fn sabotage_fixture_is_strong() {
    let (g, h) = sabotage_fixture();
    let v = verify_embedding_pair(&g, &h).unwrap();
    match v.status {
        LinkageStatus::Strong { witness } => assert_eq!(witness.linking.abs(), 2),
        other => panic!("{other:?}"),
    }
    assert!(v.classification.is_none());
}

#[test]
fn split_embeddings_are_unlinked() {
    let (g, _) = build_pq(&PqParams::new(vec![1, 1], vec![1, 1]).unwrap()).unwrap();
    let far = g.clone();
    let shift = Point3::from_ints(100, 0, 0);
    let mut h = GraphEmbedding::new(far.vertices.iter().map(|p| p.add(&shift)).collect());
    for (&(a, b), r) in &far.edges {
        h.add_edge(a, b, r.iter().map(|p| p.add(&shift)).collect());
    }
    let v = verify_embedding_pair(&g, &h).unwrap();
    assert_eq!(v.status, LinkageStatus::Unlinked);
    assert!(v.table.is_zero());
}

#[test]
fn embedding_text_round_trip_and_validation() {
    let (g, _) = build_pq(&PqParams::new(vec![1, 2], vec![1, 1]).unwrap()).unwrap();
    let back = GraphEmbedding::from_text(&g.to_text()).unwrap();
    assert_eq!(back, g);
    // Route edge 1-2 straight through vertex 3's position.
    let mut bad = g.clone();
    let mid = bad.vertices[3].clone();
    let route = vec![bad.vertices[1].clone(), mid, bad.vertices[2].clone()];
    bad.add_edge(1, 2, route);
    assert!(bad.validate().is_err());
    assert!(GraphEmbedding::from_text("[vertices]\n0 0 0 0\n[edges]\n0 1 : 0 0 0 ; 1 1\n").is_err());
}
