//! Shared fixtures for the criterion benchmarks.

use parcolor_core::graph::{generate_rmat, CsrGraph, RmatParams};

/// Erdős–Rényi-like R-MAT instance.
pub fn rmat_er(scale: u32, avg_degree: f64, seed: u64) -> CsrGraph {
    let list = generate_rmat(&RmatParams::erdos_renyi_like(scale, avg_degree, seed)).unwrap();
    CsrGraph::from_edge_list(&list.canonicalize()).unwrap()
}

/// Skewed R-MAT instance with the (0.45, 0.15, 0.15, 0.25) quadrants.
pub fn rmat_skewed(scale: u32, avg_degree: f64, seed: u64) -> CsrGraph {
    let list =
        generate_rmat(&RmatParams::with_skew(0.45, 0.15, 0.15, 0.25, scale, avg_degree, seed))
            .unwrap();
    CsrGraph::from_edge_list(&list.canonicalize()).unwrap()
}
