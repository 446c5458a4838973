use std::collections::{BTreeMap, BTreeSet};

use linkweave::graphs::{
    boundary_quadruple, cycle_count, enumerate_cycles, triangle_decomposition, Cycle, GraphError, OrientedTriangle,
    VertexSet,
};
use linkweave::stars::{all_stars, common_apex, detect_star, mutual_orientation, LinkMap, Star, StarError};
use proptest::prelude::*;

fn factorial(k: u64) -> u64 {
    (1..=k).product()
}

#[test]
fn cycle_counts_match_closed_form() {
    // Independent oracle: C(n,k) (k-1)!/2 summed over k, in u64 arithmetic.
    for n in 3..=8u64 {
        let mut expect = 0;
        for k in 3..=n {
            expect += factorial(n) / (factorial(k) * factorial(n - k)) * factorial(k - 1) / 2;
        }
        let cycles = enumerate_cycles(n as usize, None).unwrap();
        assert_eq!(cycles.len() as u64, expect, "n={n}");
        assert_eq!(cycle_count(n as usize) as u64, expect);
    }
    assert_eq!(enumerate_cycles(3, None).unwrap().len(), 1);
    assert_eq!(enumerate_cycles(4, None).unwrap().len(), 7);
    assert_eq!(enumerate_cycles(5, None).unwrap().len(), 37);
}

#[test]
fn cycle_guard() {
    assert!(matches!(enumerate_cycles(10, None), Err(GraphError::OrderTooLarge { n: 10, .. })));
}

#[test]
fn cycles_are_unique_and_ordered() {
    let cycles = enumerate_cycles(6, None).unwrap();
    let mut seen = BTreeSet::new();
    for c in &cycles {
        // Fold out orientation: the set of undirected edges identifies a cycle.
        let mut edges: Vec<(usize, usize)> = c.directed_edges().map(|(a, b)| (a.min(b), a.max(b))).collect();
        edges.sort();
        assert!(seen.insert(edges), "duplicate {c}");
    }
    for w in cycles.windows(2) {
        assert!((w[0].len(), w[0].vertices()) < (w[1].len(), w[1].vertices()));
    }
}

#[test]
fn decomposition_examples() {
    let sq = Cycle::new(vec![0, 1, 2, 3]).unwrap();
    let d = triangle_decomposition(&sq, 0).unwrap();
    assert_eq!(d.terms, vec![(OrientedTriangle::of(0, 1, 2), 1), (OrientedTriangle::of(0, 2, 3), 1)]);
    let tri = Cycle::new(vec![0, 1, 2]).unwrap();
    assert_eq!(triangle_decomposition(&tri, 0).unwrap().terms, vec![(OrientedTriangle::of(0, 1, 2), 1)]);
    let pent = Cycle::new(vec![0, 1, 2, 3, 4]).unwrap();
    assert_eq!(triangle_decomposition(&pent, 2).unwrap().terms.len(), 3);
    assert_eq!(triangle_decomposition(&pent, 7), Err(GraphError::BaseNotOnCycle(7)));
}

#[test]
fn decomposition_preserves_boundary_for_every_base() {
    for n in 3..=7 {
        for c in enumerate_cycles(n, None).unwrap() {
            let want = c.edge_chain();
            for &b in c.vertices() {
                assert_eq!(triangle_decomposition(&c, b).unwrap().edge_chain(), want, "{c} base {b}");
            }
        }
    }
}

#[test]
fn boundary_quadruple_faces() {
    let f = boundary_quadruple([0, 1, 2, 3]).unwrap();
    let want = ["1.2.3", "3.2.0", "0.1.3", "2.1.0"].map(|s| s.parse::<OrientedTriangle>().unwrap());
    assert_eq!(f, want);
    assert!(matches!(boundary_quadruple([0, 1, 1, 3]), Err(GraphError::DuplicateVertex(1))));
}

#[test]
fn boundary_quadruple_cancels_for_all_orderings() {
    let base = [3usize, 5, 6, 9];
    let mut count = 0;
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let idx = [a, b, c, d];
                    if idx.iter().collect::<BTreeSet<_>>().len() != 4 {
                        continue;
                    }
                    count += 1;
                    let faces = boundary_quadruple(idx.map(|i| base[i])).unwrap();
                    let mut chain: BTreeMap<(usize, usize), i64> = BTreeMap::new();
                    for t in faces {
                        for (x, y) in t.directed_edges() {
                            *chain.entry((x.min(y), x.max(y))).or_default() += if x < y { 1 } else { -1 };
                        }
                    }
                    assert!(chain.values().all(|&v| v == 0));
                }
            }
        }
    }
    assert_eq!(count, 24);
}

#[test]
fn star_triangle_counts() {
    let fig: Star = "0|1 2|3 4 5".parse().unwrap();
    assert_eq!(fig.triangles().len(), 6);
    assert_eq!("0|1|2".parse::<Star>().unwrap().triangles().len(), 1);
    assert_eq!("0|1 2 3|4 5 6 7".parse::<Star>().unwrap().triangles().len(), 12);
}

#[test]
fn reversal() {
    let s: Star = "0|1 2|3 4 5".parse().unwrap();
    assert_eq!(s.reversed().literal(), "0|3 4 5|1 2");
    assert_eq!(s.reversed().reversed().literal(), s.literal());
    let a: BTreeSet<_> = s.reversed().triangles().into_iter().collect();
    let b: BTreeSet<_> = s.triangles().iter().map(|t| t.reversed()).collect();
    assert_eq!(a, b);
}

/// Brute-force oracle: distinct triangle sets over all (apex, out-set) choices.
fn brute_star_sets(n: usize) -> BTreeMap<Vec<OrientedTriangle>, ()> {
    let mut sets = BTreeMap::new();
    for p in 0..n {
        let rest: Vec<usize> = (0..n).filter(|&v| v != p).collect();
        for mask in 1u32..(1 << rest.len()) - 1 {
            let mut tris = Vec::new();
            for (i, &q) in rest.iter().enumerate() {
                for (j, &r) in rest.iter().enumerate() {
                    if mask >> i & 1 == 1 && mask >> j & 1 == 0 {
                        tris.push(OrientedTriangle::of(p, q, r));
                    }
                }
            }
            tris.sort();
            sets.insert(tris, ());
        }
    }
    sets
}

#[test]
fn star_enumeration_matches_brute_force() {
    for n in 3..=7 {
        let brute = brute_star_sets(n);
        let stars = all_stars(n);
        assert_eq!(stars.len(), brute.len(), "n={n}");
        for s in stars {
            let mut t = s.triangles();
            t.sort();
            assert!(brute.contains_key(&t));
        }
    }
}

#[test]
fn detect_inverts_indicator() {
    for n in 3..=7 {
        for s in all_stars(n) {
            assert_eq!(detect_star(&s.indicator()).unwrap(), Some(s.canonical()));
            assert_eq!(detect_star(&s.reversed().indicator()).unwrap(), Some(s.reversed().canonical()));
        }
    }
}

#[test]
fn detect_figure_one_star() {
    let s: Star = "0|1 2|3 4 5".parse().unwrap();
    let got = detect_star(&s.indicator()).unwrap().unwrap();
    assert_eq!(got.literal(), "0|1 2|3 4 5");
}

#[test]
fn detect_rejects_non_stars() {
    assert_eq!(detect_star(&LinkMap::zero(6)).unwrap(), None);
    let mut m = LinkMap::zero(6);
    m.set(&OrientedTriangle::of(0, 1, 2), 1);
    m.set(&OrientedTriangle::of(3, 4, 5), 1);
    assert_eq!(detect_star(&m).unwrap(), None);
    // Oracle: no star of K6 has this indicator.
    assert!(all_stars(6).iter().all(|s| s.indicator() != m && s.reversed().indicator() != m));
    m.set(&OrientedTriangle::of(0, 1, 2), 2);
    assert!(matches!(detect_star(&m), Err(StarError::ValuesOutOfRange { value: 2, .. })));
}

#[test]
fn mutual_orientation_examples() {
    let s1: Star = "1|2 3|0 4".parse().unwrap();
    let s2: Star = "2|1 3|0 4".parse().unwrap();
    assert_eq!(mutual_orientation(&s1, &s2).unwrap(), (1, 1));
    assert_eq!(mutual_orientation(&s1, &s2.reversed()).unwrap(), (1, -1));
    assert_eq!(mutual_orientation(&s1, &s1), Err(StarError::SameApex(1)));
}

#[test]
fn mutual_orientation_unique_on_k5() {
    let stars = all_stars(5);
    let mut pairs = 0;
    for a in &stars {
        for b in &stars {
            if a.apex == b.apex {
                continue;
            }
            let ok: Vec<(i64, i64)> = [(1, 1), (1, -1), (-1, 1), (-1, -1)]
                .into_iter()
                .filter(|&(e1, e2)| a.signed(e1).out.contains(b.apex) && b.signed(e2).out.contains(a.apex))
                .collect();
            assert_eq!(ok.len(), 1);
            assert_eq!(mutual_orientation(a, b).unwrap(), ok[0]);
            pairs += 1;
        }
    }
    assert!(pairs > 0);
}

#[test]
fn common_apex_cases() {
    let a: Star = "0|1 2|3 4".parse().unwrap();
    let b: Star = "0|3 1|2 4".parse().unwrap();
    assert_eq!(common_apex(&a, &b), Some(0));
    // Fan 1{2}I with I = {0,3,4} and a proper star at 2.
    let fan: Star = "1|2|0 3 4".parse().unwrap();
    let s2: Star = "2|1 3|0 4".parse().unwrap();
    assert_eq!(common_apex(&fan, &s2), Some(2));
    let c: Star = "1|0 2|3 4".parse().unwrap();
    assert_eq!(common_apex(&a, &c), None);
}

#[test]
fn fan_equals_its_alternate_form() {
    let fan: Star = "3|1|0 2 4".parse().unwrap();
    let alt = Star::new(5, 1, [0, 2, 4].into_iter().collect(), VertexSet::single(3)).unwrap();
    assert_eq!(fan, alt);
    assert_eq!(fan.indicator(), alt.indicator());
    assert_eq!(common_apex(&fan, &alt), Some(1));
}

fn star_sums_bounded(n: usize) {
    let cycles = enumerate_cycles(n, None).unwrap();
    for s in all_stars(n) {
        let m = s.indicator();
        let mut hit = false;
        for c in &cycles {
            let v: i64 = triangle_decomposition(c, c.vertices()[0]).unwrap().terms.iter().map(|(t, k)| m.get(t) * *k as i64).sum();
            assert!(v.abs() <= 1, "{s} on {c}: {v}");
            hit |= v.abs() == 1;
        }
        assert!(hit, "{s} links no cycle");
    }
}

#[test]
fn star_maps_never_exceed_one_on_cycles() {
    for n in 4..=6 {
        star_sums_bounded(n);
    }
}

proptest! {
    #[test]
    fn triangle_rotation_invariance(a in 0usize..20, b in 0usize..20, c in 0usize..20) {
        prop_assume!(a != b && b != c && a != c);
        let t = OrientedTriangle::of(a, b, c);
        prop_assert_eq!(t, OrientedTriangle::of(b, c, a));
        prop_assert_eq!(t, OrientedTriangle::of(c, a, b));
        prop_assert_ne!(t, OrientedTriangle::of(a, c, b));
        prop_assert_eq!(t.reversed().reversed(), t);
    }

    #[test]
    fn star_literal_round_trip(n in 3usize..10, apex_seed in 0usize..100, mask in 1u64..512) {
        let apex = apex_seed % n;
        let rest: Vec<usize> = (0..n).filter(|&v| v != apex).collect();
        let out: VertexSet = rest.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
        let all: VertexSet = rest.iter().copied().collect();
        prop_assume!(!out.is_empty() && out != all);
        let s = Star::new(n, apex, out, all.minus(out)).unwrap();
        let back: Star = s.literal().parse().unwrap();
        prop_assert_eq!(back.literal(), s.literal());
        prop_assert_eq!(detect_star(&s.indicator()).unwrap(), Some(s.canonical()));
    }
}
