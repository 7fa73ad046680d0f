//! Built-in matroids used by the identity suite and the verification runs.

use num_bigint::BigInt;

use crate::graphs::{cycle_matroid, enumerate_connected};
use crate::matroid::{ElementSet, Matroid};

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub matroid: Matroid,
}

fn entry(name: impl Into<String>, matroid: Matroid) -> CorpusEntry {
    CorpusEntry {
        name: name.into(),
        matroid,
    }
}

fn triangle() -> Matroid {
    Matroid::graphic(3, vec![(0, 1), (0, 2), (1, 2)]).expect("valid graph")
}

/// `U(r, m)` for `1 ≤ r < m ≤ 6`, cycle matroids of the connected simple
/// graphs on 2 to 5 vertices (named by graph6), `C3 ⊕ C3`, a single loop, a
/// single coloop, the rank-3 matroid of the seven nonzero 0/1 vectors, and a
/// matroid given by its bases.
pub fn builtin_corpus() -> Vec<CorpusEntry> {
    let mut corpus = Vec::new();
    for m in 2..=6 {
        for r in 1..m {
            corpus.push(entry(
                format!("U({r},{m})"),
                Matroid::uniform(r, m).expect("valid uniform"),
            ));
        }
    }
    for n in 2..=5 {
        for g in enumerate_connected(n).expect("order in range") {
            corpus.push(entry(
                format!("graph:{g}"),
                cycle_matroid(&g).expect("at most 10 edges"),
            ));
        }
    }
    corpus.push(entry(
        "C3+C3",
        Matroid::direct_sum(&triangle(), &triangle()).expect("6 elements"),
    ));
    corpus.push(entry("loop", Matroid::uniform(0, 1).expect("valid uniform")));
    corpus.push(entry("coloop", Matroid::uniform(1, 1).expect("valid uniform")));

    let columns: Vec<[i64; 3]> = (1..8).map(|c| [c & 1, c >> 1 & 1, c >> 2 & 1]).collect();
    let rows = (0..3)
        .map(|i| columns.iter().map(|c| BigInt::from(c[i])).collect())
        .collect();
    corpus.push(entry("non-Fano", Matroid::linear(rows).expect("rectangular")));

    // bases of the diamond graph: spanning trees of K4 minus an edge
    let diamond = Matroid::graphic(4, vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).expect("valid graph");
    let table = diamond.rank_table();
    let bases: Vec<ElementSet> = diamond
        .ground_set()
        .subsets()
        .filter(|s| s.len() == 3 && table.get(*s) == 3)
        .collect();
    corpus.push(entry("diamond-bases", Matroid::from_bases(5, bases).expect("valid bases")));
    corpus
}
