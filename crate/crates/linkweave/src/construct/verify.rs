use serde::Serialize;

use super::{edge_crossings, table_from_embeddings, theta_cycles, ConstructError, GraphEmbedding};
use crate::classify::{classify_table, Classification};
use crate::geom::fixtures::doubled_thread_pair;
use crate::geom::{PLCurve, Rational};
use crate::graphs::{enumerate_cycles, triangle_decomposition, Cycle};
use crate::linktable::{linkage_status, validate_consistency, LinkageStatus, TriangleLinkTable, Witness};
use crate::stars::LinkMap;

/// Result of the full geometry-to-classification pipeline on a complete-graph pair.
#[derive(Clone, Debug, Serialize)]
pub struct Verification {
    pub status: LinkageStatus,
    /// Present exactly when the status is Weak.
    pub classification: Option<Classification>,
    #[serde(skip)]
    pub table: TriangleLinkTable,
    #[serde(with = "crate::geom::rational_string")]
    pub shear: Rational,
}

/// Table, consistency, exhaustive status, and (for weak pairs) the classification.
pub fn verify_embedding_pair(g: &GraphEmbedding, h: &GraphEmbedding) -> Result<Verification, ConstructError> {
    let shear = edge_crossings(g, h)?.shear;
    let table = table_from_embeddings(g, h)?;
    validate_consistency(&table)?;
    let status = linkage_status(&table)?;
    let classification = if status.is_weak() { Some(classify_table(&table)?) } else { None };
    Ok(Verification { status, classification, table, shear })
}

/// Exhaustive status of a theta graph against K_n from the three cycle link maps.
///
/// Pairs are visited by increasing total length, then theta cycle, then H cycle order.
pub fn theta_status(maps: &[LinkMap; 3]) -> Result<LinkageStatus, ConstructError> {
    let n = maps[0].order();
    let cycles = enumerate_cycles(n, None)?;
    let thetas: Vec<Cycle> = theta_cycles().iter().map(|c| Cycle::new(c.to_vec())).collect::<Result<_, _>>()?;
    let mut pairs = Vec::new();
    for d in &cycles {
        let dec = triangle_decomposition(d, d.vertices()[0])?;
        for (i, map) in maps.iter().enumerate() {
            let lk: i64 = dec.terms.iter().map(|(u, k)| map.get(u) * *k as i64).sum();
            pairs.push((4 + d.len(), i, d, lk));
        }
    }
    pairs.sort_by_key(|&(len, i, d, _)| (len, i, d.clone()));
    let witness = |&(_, i, d, lk): &(usize, usize, &Cycle, i64)| Witness {
        g_cycle: thetas[i].clone(),
        h_cycle: d.clone(),
        linking: lk,
    };
    if let Some(x) = pairs.iter().find(|x| x.3.abs() >= 2) {
        return Ok(LinkageStatus::Strong { witness: witness(x) });
    }
    Ok(match pairs.iter().find(|x| x.3 != 0) {
        Some(x) => LinkageStatus::Weak { witness: witness(x) },
        None => LinkageStatus::Unlinked,
    })
}

fn curve_as_triangle(curve: &PLCurve, corners: [usize; 3]) -> GraphEmbedding {
    let v = curve.vertices();
    let mut emb = GraphEmbedding::new(corners.iter().map(|&i| v[i].clone()).collect());
    for k in 0..3 {
        let (from, to) = (corners[k], corners[(k + 1) % 3]);
        let mut route = Vec::new();
        let mut i = from;
        loop {
            route.push(v[i].clone());
            if i == to {
                break;
            }
            i = (i + 1) % v.len();
        }
        emb.add_edge(k, (k + 1) % 3, route);
    }
    emb
}

/// A K3 pair whose single cycle pair links twice: G is a coil wound twice around one side
/// of the square H. Used to check that strong linking is detected.
pub fn sabotage_fixture() -> (GraphEmbedding, GraphEmbedding) {
    let (square, coil) = doubled_thread_pair();
    (curve_as_triangle(&coil, [0, 4, 8]), curve_as_triangle(&square, [0, 1, 2]))
}
