//! Classifies one pattern table from each family without any geometry.

use linkweave::classify::{classify_table, ThetaClassification};
use linkweave::classify::classify_theta;
use linkweave::corpus::{d1_corpus, d2_corpus, k4_corpus, pq_params};
use linkweave::graphs::VertexSet;

fn main() {
    let parts: [VertexSet; 3] = [[1].into_iter().collect(), [2, 3].into_iter().collect(), [4].into_iter().collect()];
    let theta = ThetaClassification::A1 { p: 0, parts, sign: 1 };
    let got = classify_theta(&theta.pattern(5)).expect("A1 pattern");
    println!("theta: {}", got.describe(5));

    let (m, n, pq) = pq_params(&[1, 1, 2], &[2, 1, 1], -1, None);
    let tables = [
        ("K_4 vs K_5", k4_corpus(5)[3].table.clone()),
        ("D1", d1_corpus(5, 5)[10].table.clone()),
        ("D2", d2_corpus(6, 5)[4].table.clone()),
        ("common vertex", pq.pattern(m, n)),
    ];
    for (name, t) in tables {
        match classify_table(&t) {
            Ok(c) => println!("{name}: {}", c.describe()),
            Err(e) => println!("{name}: {e}"),
        }
    }
}
