//! R-MAT synthetic graph generation.
//!
//! Recursive quadrant descent: at each of the `k = log2(n)` levels one of
//! the four quadrants is chosen with probabilities `(a, b, c, d)`, which
//! pins down one bit of each endpoint. Equal probabilities give an
//! Erdős–Rényi-like graph; skewed probabilities give a power-law-like
//! degree distribution.

use std::collections::HashSet;

use crate::error::Error;
use crate::graph::EdgeList;
use crate::rng::SplitMix64;
use crate::Result;

const PROBABILITY_SUM_TOLERANCE: f64 = 1e-9;

/// Maximum total draws, as a multiple of the requested edge count, before
/// generation reports the sampling as exhausted.
const MAX_ATTEMPT_FACTOR: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RmatParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    /// Must be a power of two, at least 2.
    pub num_vertices: usize,
    /// Number of distinct undirected edges to place.
    pub num_undirected_edges: usize,
    pub seed: u64,
}

impl RmatParams {
    /// Uniform quadrant probabilities with `num_undirected_edges` chosen so
    /// the average degree (directed entries per vertex) is `avg_degree`.
    pub fn erdos_renyi_like(scale: u32, avg_degree: f64, seed: u64) -> Self {
        Self::with_skew(0.25, 0.25, 0.25, 0.25, scale, avg_degree, seed)
    }

    /// Skewed quadrant probabilities, same sizing convention.
    pub fn with_skew(a: f64, b: f64, c: f64, d: f64, scale: u32, avg_degree: f64, seed: u64) -> Self {
        let num_vertices = 1usize << scale;
        let num_undirected_edges = ((num_vertices as f64) * avg_degree / 2.0).round() as usize;
        RmatParams {
            a,
            b,
            c,
            d,
            num_vertices,
            num_undirected_edges,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let ps = [self.a, self.b, self.c, self.d];
        if ps.iter().any(|p| !(0.0..=1.0).contains(p) || !p.is_finite()) {
            return Err(Error::InvalidRmatParams(
                "probabilities must lie in [0, 1]".into(),
            ));
        }
        let sum: f64 = ps.iter().sum();
        if (sum - 1.0).abs() > PROBABILITY_SUM_TOLERANCE {
            return Err(Error::InvalidRmatParams(format!(
                "probabilities sum to {sum}, expected 1"
            )));
        }
        if self.num_vertices < 2 || !self.num_vertices.is_power_of_two() {
            return Err(Error::InvalidRmatParams(format!(
                "num_vertices {} is not a power of two >= 2",
                self.num_vertices
            )));
        }
        Ok(())
    }
}

/// Generates the requested number of distinct undirected non-loop edges.
///
/// Self loops and duplicates are rejected and redrawn so the target edge
/// count is met exactly; the total number of draws is capped at
/// `100 * num_undirected_edges`. Deterministic for a fixed seed and
/// independent of thread count (generation is single-threaded).
pub fn generate_rmat(params: &RmatParams) -> Result<EdgeList> {
    params.validate()?;
    let n = params.num_vertices;
    let requested = params.num_undirected_edges;
    let max_pairs = n / 2 * (n - 1); // n * (n - 1) / 2 without overflow for even n
    if requested > max_pairs {
        return Err(Error::UnsatisfiableEdgeCount {
            requested,
            num_vertices: n,
        });
    }

    let levels = n.trailing_zeros();
    let mut rng = SplitMix64::new(params.seed);
    let mut seen: HashSet<(usize, usize)> = HashSet::with_capacity(requested * 2);
    let mut edges = Vec::with_capacity(requested);
    let max_attempts = requested.saturating_mul(MAX_ATTEMPT_FACTOR).max(1);
    let mut attempts = 0usize;

    while edges.len() < requested {
        if attempts == max_attempts {
            return Err(Error::RmatSamplingExhausted {
                attempts,
                placed: edges.len(),
                requested,
            });
        }
        attempts += 1;

        let mut u = 0usize;
        let mut v = 0usize;
        for _ in 0..levels {
            let r = rng.next_f64();
            let (bit_u, bit_v) = if r < params.a {
                (0, 0)
            } else if r < params.a + params.b {
                (0, 1)
            } else if r < params.a + params.b + params.c {
                (1, 0)
            } else {
                (1, 1)
            };
            u = (u << 1) | bit_u;
            v = (v << 1) | bit_v;
        }

        if u == v {
            continue;
        }
        let key = (u.min(v), u.max(v));
        if seen.insert(key) {
            edges.push((u, v));
        }
    }

    EdgeList::new(n, edges)
}
