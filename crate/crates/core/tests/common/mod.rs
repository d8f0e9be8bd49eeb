//! Shared fixtures and helpers for the integration test suites.

// each test target compiles this module separately and uses a subset
#![allow(dead_code)]

use parcolor_core::graph::{generate_rmat, CsrGraph, EdgeList, RmatParams};

/// Tiny deterministic PRNG for test-local randomness (splitmix64).
pub struct TestRng {
    state: u64,
}

impl TestRng {
    pub fn new(seed: u64) -> Self {
        TestRng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }

    pub fn chance(&mut self, p: f64) -> bool {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64) < p
    }
}

pub fn graph_from_pairs(n: usize, pairs: &[(usize, usize)]) -> CsrGraph {
    let list = EdgeList::new(n, pairs.to_vec()).unwrap();
    CsrGraph::from_edge_list(&list.canonicalize()).unwrap()
}

pub fn complete_graph(n: usize) -> CsrGraph {
    let pairs: Vec<_> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    graph_from_pairs(n, &pairs)
}

pub fn cycle(n: usize) -> CsrGraph {
    let pairs: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    graph_from_pairs(n, &pairs)
}

pub fn path(n: usize) -> CsrGraph {
    let pairs: Vec<_> = (0..n - 1).map(|v| (v, v + 1)).collect();
    graph_from_pairs(n, &pairs)
}

pub fn star(leaves: usize) -> CsrGraph {
    let pairs: Vec<_> = (1..=leaves).map(|leaf| (0, leaf)).collect();
    graph_from_pairs(leaves + 1, &pairs)
}

pub fn edgeless(n: usize) -> CsrGraph {
    CsrGraph::try_from_parts(vec![0; n + 1], vec![]).unwrap()
}

/// Erdős–Rényi G(n, p) with a fixed seed.
pub fn gnp(n: usize, p: f64, seed: u64) -> CsrGraph {
    let mut rng = TestRng::new(seed);
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.chance(p) {
                pairs.push((u, v));
            }
        }
    }
    graph_from_pairs(n, &pairs)
}

pub fn rmat_er(scale: u32, avg_degree: f64, seed: u64) -> CsrGraph {
    let list = generate_rmat(&RmatParams::erdos_renyi_like(scale, avg_degree, seed)).unwrap();
    CsrGraph::from_edge_list(&list.canonicalize()).unwrap()
}

pub fn rmat_skewed(scale: u32, avg_degree: f64, seed: u64) -> CsrGraph {
    let list =
        generate_rmat(&RmatParams::with_skew(0.45, 0.15, 0.15, 0.25, scale, avg_degree, seed))
            .unwrap();
    CsrGraph::from_edge_list(&list.canonicalize()).unwrap()
}

/// The fixed fixture corpus plus random and synthetic instances used by the
/// cross-algorithm suites.
pub fn corpus() -> Vec<(String, CsrGraph)> {
    let mut graphs: Vec<(String, CsrGraph)> = vec![
        ("k3".into(), complete_graph(3)),
        ("k4".into(), complete_graph(4)),
        ("c4".into(), cycle(4)),
        ("c5".into(), cycle(5)),
        ("p4".into(), path(4)),
        ("star8".into(), star(8)),
        ("edgeless100".into(), edgeless(100)),
        ("gnp50".into(), gnp(50, 0.15, 11)),
        ("gnp500".into(), gnp(500, 0.02, 12)),
        ("gnp2000".into(), gnp(2000, 0.004, 13)),
        ("rmat-er-s14".into(), rmat_er(14, 10.0, 1)),
        ("rmat-g-s15".into(), rmat_skewed(15, 10.0, 2)),
        ("rmat-er-s16".into(), rmat_er(16, 10.0, 3)),
    ];
    graphs.shrink_to_fit();
    graphs
}

/// Worker counts exercised by the parallel suites: 1, 2 and the machine
/// maximum, deduplicated.
pub fn worker_counts() -> Vec<usize> {
    let max = std::thread::available_parallelism()
        .map(|p| p.get())
        .unwrap_or(1);
    let mut counts = vec![1, 2, max];
    counts.sort_unstable();
    counts.dedup();
    counts
}
