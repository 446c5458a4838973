use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{TableError, TriangleLinkTable};
use crate::graphs::{enumerate_cycles, triangle_count, triangle_decomposition, Cycle};

/// Largest order per side for which weakness is decided exhaustively.
pub const EXHAUSTIVE_LIMIT: usize = 8;

/// A cycle pair and its linking number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub g_cycle: Cycle,
    pub h_cycle: Cycle,
    pub linking: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status")]
pub enum LinkageStatus {
    Unlinked,
    Weak { witness: Witness },
    Strong { witness: Witness },
}

impl LinkageStatus {
    pub fn label(&self) -> &'static str {
        match self {
            LinkageStatus::Unlinked => "Unlinked",
            LinkageStatus::Weak { .. } => "Weak",
            LinkageStatus::Strong { .. } => "Strong",
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            LinkageStatus::Unlinked => None,
            LinkageStatus::Weak { witness } | LinkageStatus::Strong { witness } => Some(witness),
        }
    }

    pub fn is_weak(&self) -> bool {
        matches!(self, LinkageStatus::Weak { .. })
    }
}

/// Per G cycle: its linking with every H triangle (increasing orientation, rank order).
fn g_vectors(t: &TriangleLinkTable, cycles: &[Cycle]) -> Vec<Vec<i64>> {
    let (_, n) = t.orders();
    let hs = crate::graphs::all_triangles(n);
    cycles
        .par_iter()
        .map(|c| {
            let dec = triangle_decomposition(c, c.vertices()[0]).expect("base on cycle");
            hs.iter().map(|u| dec.terms.iter().map(|(x, k)| t.get(x, u) * *k as i64).sum()).collect()
        })
        .collect()
}

/// Per H cycle: sparse (rank, sign) entries of its fan decomposition.
fn h_chains(cycles: &[Cycle]) -> Vec<Vec<(usize, i64)>> {
    cycles
        .iter()
        .map(|d| {
            triangle_decomposition(d, d.vertices()[0])
                .expect("base on cycle")
                .terms
                .iter()
                .map(|(u, k)| (u.rank(), u.orientation() * *k as i64))
                .collect()
        })
        .collect()
}

struct Scan {
    g: Vec<Cycle>,
    h: Vec<Cycle>,
    gv: Vec<Vec<i64>>,
    hc: Vec<Vec<(usize, i64)>>,
}

impl Scan {
    fn value(&self, i: usize, j: usize) -> i64 {
        self.hc[j].iter().map(|&(r, s)| self.gv[i][r] * s).sum()
    }

    fn witness(&self, i: usize, j: usize) -> Witness {
        Witness { g_cycle: self.g[i].clone(), h_cycle: self.h[j].clone(), linking: self.value(i, j) }
    }

    /// First pair (in `(i, j)` order) with `len_g + len_h == total` and `pred(value)`.
    fn first_with_total(&self, total: usize, pred: impl Fn(i64) -> bool + Sync) -> Option<(usize, usize)> {
        (0..self.g.len())
            .into_par_iter()
            .filter_map(|i| {
                let lg = self.g[i].len();
                if lg >= total {
                    return None;
                }
                let want = total - lg;
                (0..self.h.len()).find(|&j| self.h[j].len() == want && pred(self.value(i, j))).map(|j| (i, j))
            })
            .min()
    }
}

/// Exact status by enumeration of every cycle pair.
///
/// Triangle-square pairs are scanned first for a quick strong witness; otherwise pairs are
/// visited by increasing total length, then lexicographically, and the earliest witness is
/// reported.
pub fn linkage_status(t: &TriangleLinkTable) -> Result<LinkageStatus, TableError> {
    let (m, n) = t.orders();
    if m > EXHAUSTIVE_LIMIT || n > EXHAUSTIVE_LIMIT {
        return Err(TableError::OrderTooLarge { m, n, limit: EXHAUSTIVE_LIMIT });
    }
    if t.is_zero() {
        return Ok(LinkageStatus::Unlinked);
    }
    let g = enumerate_cycles(m, None)?;
    let h = enumerate_cycles(n, None)?;
    let gv = g_vectors(t, &g);
    let hc = h_chains(&h);
    debug_assert!(gv.iter().all(|v| v.len() == triangle_count(n)));
    let scan = Scan { g, h, gv, hc };
    let strong = |v: i64| v.abs() >= 2;

    for (lg, lh) in [(3, 4), (4, 3)] {
        let hit = (0..scan.g.len())
            .into_par_iter()
            .filter(|&i| scan.g[i].len() == lg)
            .filter_map(|i| (0..scan.h.len()).find(|&j| scan.h[j].len() == lh && strong(scan.value(i, j))).map(|j| (i, j)))
            .min();
        if let Some((i, j)) = hit {
            return Ok(LinkageStatus::Strong { witness: scan.witness(i, j) });
        }
    }

    let mut weak = None;
    for total in 6..=m + n {
        if let Some((i, j)) = scan.first_with_total(total, strong) {
            return Ok(LinkageStatus::Strong { witness: scan.witness(i, j) });
        }
        if weak.is_none() {
            weak = scan.first_with_total(total, |v| v != 0);
        }
    }
    Ok(match weak {
        Some((i, j)) => LinkageStatus::Weak { witness: scan.witness(i, j) },
        None => LinkageStatus::Unlinked,
    })
}

/// Result of random cycle-pair sampling. Never claims weakness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status")]
pub enum SampleOutcome {
    StrongFound { witness: Witness, seed: u64, samples: usize },
    Inconclusive { seed: u64, samples: usize },
}

fn random_cycle(rng: &mut ChaCha8Rng, order: usize) -> Cycle {
    let len = rng.random_range(3..=order);
    let mut pool: Vec<usize> = (0..order).collect();
    for i in 0..len {
        let j = rng.random_range(i..order);
        pool.swap(i, j);
    }
    pool.truncate(len);
    Cycle::new(pool).expect("distinct vertices")
}

/// Seeded random search for a strong cycle pair; works for any order.
pub fn sample_status(t: &TriangleLinkTable, samples: usize, seed: u64) -> Result<SampleOutcome, TableError> {
    let (m, n) = t.orders();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let c = random_cycle(&mut rng, m);
        let d = random_cycle(&mut rng, n);
        let v = super::cycle_pair_linking_from(t, &c, c.vertices()[0], &d, d.vertices()[0])?;
        if v.abs() >= 2 {
            return Ok(SampleOutcome::StrongFound { witness: Witness { g_cycle: c, h_cycle: d, linking: v }, seed, samples });
        }
    }
    Ok(SampleOutcome::Inconclusive { seed, samples })
}
