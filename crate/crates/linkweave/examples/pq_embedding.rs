//! Builds a common-vertex embedding of K_5 and K_5, recomputes its linking table from the
//! geometry and classifies it.

use linkweave::construct::{build_pq, verify_embedding_pair, PqParams};

fn main() {
    let params = PqParams::new(vec![1, 2, 1], vec![2, 1, 1]).expect("valid sizes");
    let (g, h) = build_pq(&params).expect("construction succeeds");
    let v = verify_embedding_pair(&g, &h).expect("valid embeddings");
    println!("K_{} vs K_{}: {}", g.order(), h.order(), v.status.label());
    if let Some(w) = v.status.witness() {
        println!("witness: {} / {} with lk {:+}", w.g_cycle, w.h_cycle, w.linking);
    }
    println!("{} nonzero triangle pairs", v.table.nonzero().len());
    if let Some(c) = v.classification {
        println!("{}", c.describe());
    }
}
