//! The graph catalog and the derived verification corpora.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use xconn_core::family::generate;
use xconn_core::graph::{random_connected_graph, Graph};

/// The named catalog: small cycles, paths, and completes plus the three
/// embedded cubic graphs. Everything the closed forms and the vertex-count
/// bound are exercised against comes from this list.
pub const CATALOG_SPECS: &[&str] = &[
    "cycle:3",
    "cycle:4",
    "cycle:5",
    "cycle:6",
    "cycle:7",
    "cycle:8",
    "path:2",
    "path:3",
    "path:4",
    "path:5",
    "path:6",
    "path:7",
    "complete:2",
    "complete:3",
    "complete:4",
    "petersen",
    "heawood",
    "mcgee",
];

/// Fixed seed for the random agreement corpus; part of the reproducibility
/// contract, so changing it invalidates archived reports.
pub const RANDOM_CORPUS_SEED: u64 = 177;

/// All catalog graphs, built.
pub fn catalog_graphs() -> Vec<Graph> {
    CATALOG_SPECS
        .iter()
        .map(|s| generate(s).expect("catalog specs are well-formed"))
        .collect()
}

/// Product specs (both kinds) over unordered catalog pairs whose product
/// order stays within `max_vertices`.
pub fn product_corpus_specs(max_vertices: usize) -> Vec<String> {
    let sizes: Vec<usize> = CATALOG_SPECS
        .iter()
        .map(|s| generate(s).expect("catalog specs are well-formed").n())
        .collect();
    let mut out = Vec::new();
    for i in 0..CATALOG_SPECS.len() {
        for j in i..CATALOG_SPECS.len() {
            if sizes[i] * sizes[j] <= max_vertices {
                out.push(format!("strong({},{})", CATALOG_SPECS[i], CATALOG_SPECS[j]));
                out.push(format!(
                    "cartesian({},{})",
                    CATALOG_SPECS[i], CATALOG_SPECS[j]
                ));
            }
        }
    }
    out
}

/// Deterministic batch of random connected graphs with 4..=`max_n`
/// vertices; one shared RNG stream, so the batch is a pure function of
/// (count, max_n, seed).
pub fn random_corpus(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    assert!(max_n >= 4, "corpus graphs need at least 4 vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let probabilities = [0.25, 0.4, 0.55];
    (0..count)
        .map(|i| {
            let n = 4 + i % (max_n - 3);
            let p = probabilities[i % probabilities.len()];
            random_connected_graph(n, p, &mut rng)
        })
        .collect()
}
