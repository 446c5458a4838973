//! Parameter sweeps producing the pattern tables used by tests, examples and the CLI.
//!
//! Vertex relabelings of the common-triangle side are reduced to one triangle set per
//! order (all six orderings of it); every other parameter is swept exhaustively.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::classify::patterns::{k4_common_vertex, k4_three_apexes, pq_pattern};
use crate::classify::{PairClassification, PqClassification, ThetaClassification};
use crate::graphs::{VertexId, VertexSet};
use crate::linktable::TriangleLinkTable;
use crate::stars::LinkMap;

/// Every assignment of the elements of `set` to `k` labeled parts.
pub fn labeled_partitions(set: VertexSet, k: usize) -> Vec<Vec<VertexSet>> {
    let elems = set.to_vec();
    let total = k.pow(elems.len() as u32);
    (0..total)
        .map(|mut code| {
            let mut parts = vec![VertexSet::EMPTY; k];
            for &v in &elems {
                parts[code % k] = parts[code % k].with(v);
                code /= k;
            }
            parts
        })
        .collect()
}

fn ordered_triples(n: usize) -> Vec<[VertexId; 3]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if a != b && b != c && a != c {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

fn orderings(v: [VertexId; 3]) -> [[VertexId; 3]; 6] {
    let [a, b, c] = v;
    [[a, b, c], [a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]]
}

/// All theta patterns over K_n: A1 for every apex and parts with at most one empty,
/// A2 (n >= 5) for every ordered apex triple; both signs.
pub fn theta_corpus(n: usize) -> Vec<(ThetaClassification, [LinkMap; 3])> {
    let mut out = Vec::new();
    for sign in [1, -1] {
        for p in 0..n {
            for parts in labeled_partitions(VertexSet::full(n).without(p), 3) {
                if parts.iter().filter(|s| s.is_empty()).count() > 1 {
                    continue;
                }
                let c = ThetaClassification::A1 { p, parts: [parts[0], parts[1], parts[2]], sign };
                let maps = c.pattern(n);
                out.push((c, maps));
            }
        }
        if n >= 5 {
            for apexes in ordered_triples(n) {
                let inn = VertexSet::full(n).minus(apexes.into_iter().collect());
                let c = ThetaClassification::A2 { apexes, inn, sign };
                let maps = c.pattern(n);
                out.push((c, maps));
            }
        }
    }
    out
}

/// Generating parameters of a pattern table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    B1 { q: VertexId, parts: [VertexSet; 4], sign: i64 },
    B2 { labels: [VertexId; 4], q: [VertexId; 3], sign: i64 },
    Pair(PairClassification),
}

impl Generator {
    pub fn label(&self) -> &'static str {
        match self {
            Generator::B1 { .. } => "B1",
            Generator::B2 { .. } => "B2",
            Generator::Pair(c) => c.label(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct PatternTable {
    pub generator: Generator,
    pub table: TriangleLinkTable,
}

fn permutations4() -> Vec<[VertexId; 4]> {
    let mut out = Vec::new();
    for t in ordered_triples(4) {
        let last = (0..4).find(|v| !t.contains(v)).expect("one left");
        out.push([t[0], t[1], t[2], last]);
    }
    out
}

/// B1 tables (parts with at most two empty) and, for n >= 5, B2 tables for every labeling.
pub fn k4_corpus(n: usize) -> Vec<PatternTable> {
    let mut out = Vec::new();
    for sign in [1, -1] {
        for q in 0..n {
            for parts in labeled_partitions(VertexSet::full(n).without(q), 4) {
                if parts.iter().filter(|s| s.is_empty()).count() > 2 {
                    continue;
                }
                let parts = [parts[0], parts[1], parts[2], parts[3]];
                out.push(PatternTable { generator: Generator::B1 { q, parts, sign }, table: k4_common_vertex(n, q, parts, sign) });
            }
        }
        if n >= 5 {
            for labels in permutations4() {
                for q in ordered_triples(n) {
                    let table = k4_three_apexes(n, labels, q, sign);
                    out.push(PatternTable { generator: Generator::B2 { labels, q, sign }, table });
                }
            }
        }
    }
    out
}

/// The common-triangle set used for K_m: `{0,1,2}` for m = 5, otherwise spread out.
pub fn reference_triangle(m: usize) -> [VertexId; 3] {
    if m <= 5 {
        [0, 1, 2]
    } else {
        [1, 3, m - 1]
    }
}

/// D1 tables with `T*` any ordering of the reference triangle, every `q`, parts with
/// `I_1, I_2, I_3` nonempty; both signs.
pub fn d1_corpus(m: usize, n: usize) -> Vec<PatternTable> {
    let mut out = Vec::new();
    for t_star in orderings(reference_triangle(m)) {
        for sign in [1, -1] {
            for q in 0..n {
                for parts in labeled_partitions(VertexSet::full(n).without(q), 4) {
                    if parts[1..].iter().any(|s| s.is_empty()) {
                        continue;
                    }
                    let c = PairClassification::D1 { t_star, q, parts: [parts[0], parts[1], parts[2], parts[3]], sign };
                    let table = c.pattern(m, n);
                    out.push(PatternTable { generator: Generator::Pair(c), table });
                }
            }
        }
    }
    out
}

/// D2 tables with `T*` any ordering of the reference triangle and `U*` any ordered triple.
pub fn d2_corpus(m: usize, n: usize) -> Vec<PatternTable> {
    let mut out = Vec::new();
    for t_star in orderings(reference_triangle(m)) {
        for sign in [1, -1] {
            for u_star in ordered_triples(n) {
                let c = PairClassification::D2 { t_star, u_star, sign };
                let table = c.pattern(m, n);
                out.push(PatternTable { generator: Generator::Pair(c), table });
            }
        }
    }
    out
}

/// Common-vertex parameters: `ell` parts on each side with the given sizes, vertices
/// assigned in order (`shuffle_seed = None`) or by a seeded shuffle.
pub fn pq_params(x_sizes: &[usize], y_sizes: &[usize], sign: i64, shuffle_seed: Option<u64>) -> (usize, usize, PqClassification) {
    let m = 1 + x_sizes.iter().sum::<usize>();
    let n = 1 + y_sizes.iter().sum::<usize>();
    let mut gv: Vec<VertexId> = (0..m).collect();
    let mut hv: Vec<VertexId> = (0..n).collect();
    if let Some(seed) = shuffle_seed {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        gv.shuffle(&mut rng);
        hv.shuffle(&mut rng);
    }
    let split = |verts: &[VertexId], sizes: &[usize]| {
        let mut at = 1;
        sizes
            .iter()
            .map(|&s| {
                let part: VertexSet = verts[at..at + s].iter().copied().collect();
                at += s;
                part
            })
            .collect::<Vec<_>>()
    };
    let c = PqClassification { p: gv[0], q: hv[0], x_parts: split(&gv, x_sizes), y_parts: split(&hv, y_sizes), sign };
    (m, n, c)
}

/// All size vectors in `{1, 2}^ell` whose side order `1 + sum` is at most `max_order`.
pub fn part_sizes(ell: usize, max_order: usize) -> Vec<Vec<usize>> {
    (0..1usize << ell)
        .map(|bits| (0..ell).map(|i| 1 + (bits >> i & 1)).collect::<Vec<_>>())
        .filter(|s| 1 + s.iter().sum::<usize>() <= max_order)
        .collect()
}

/// Common-vertex tables for every `ell` in `ells` and part sizes in {1, 2} with orders at
/// most `max_order`; each configuration in plain and shuffled labeling, both signs.
pub fn pq_corpus(ells: &[usize], max_order: usize) -> Vec<PatternTable> {
    let mut out = Vec::new();
    for &ell in ells {
        let sizes = part_sizes(ell, max_order);
        for (i, xs) in sizes.iter().enumerate() {
            for (j, ys) in sizes.iter().enumerate() {
                for sign in [1, -1] {
                    for seed in [None, Some((ell * 10_000 + i * 100 + j) as u64)] {
                        let (m, n, c) = pq_params(xs, ys, sign, seed);
                        let table = pq_pattern(m, n, c.p, c.q, &c.x_parts, &c.y_parts, c.sign);
                        out.push(PatternTable { generator: Generator::Pair(PairClassification::PQ(c)), table });
                    }
                }
            }
        }
    }
    out
}
