//! CSR graph representation and construction.
//!
//! Graphs are undirected and immutable once built. Every undirected edge is
//! stored as two directed adjacency entries, so `num_edges` counts directed
//! entries (`m = 2 *` number of unordered pairs). Vertex ids are 0-based.

mod cache;
mod matrix_market;
mod rmat;

pub use cache::{read_csr_cache, write_csr_cache};
pub use matrix_market::{parse_matrix_market, write_matrix_market};
pub use rmat::{generate_rmat, RmatParams};

use crate::error::Error;
use crate::Result;

/// Unordered edge list, the construction intermediary for [`CsrGraph`].
///
/// Endpoints are validated against `num_vertices` at construction; other
/// than that the list may hold duplicates, self loops and both orientations
/// of the same pair. [`EdgeList::canonicalize`] cleans all of that up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeList {
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl EdgeList {
    /// Validates that every endpoint is in `[0, num_vertices)`.
    pub fn new(num_vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for (index, &(u, v)) in edges.iter().enumerate() {
            let bad = if u >= num_vertices {
                Some(u)
            } else if v >= num_vertices {
                Some(v)
            } else {
                None
            };
            if let Some(vertex) = bad {
                return Err(Error::EdgeOutOfRange {
                    index,
                    vertex,
                    num_vertices,
                });
            }
        }
        Ok(EdgeList {
            num_vertices,
            edges,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Canonical form: for each distinct unordered pair `{u, v}` with
    /// `u != v` the output holds both `(u, v)` and `(v, u)`, sorted by
    /// `(source, target)`. Self loops and duplicates are dropped.
    pub fn canonicalize(&self) -> EdgeList {
        let mut directed = Vec::with_capacity(self.edges.len() * 2);
        for &(u, v) in &self.edges {
            if u != v {
                directed.push((u, v));
                directed.push((v, u));
            }
        }
        directed.sort_unstable();
        directed.dedup();
        EdgeList {
            num_vertices: self.num_vertices,
            edges: directed,
        }
    }
}

/// Immutable undirected graph in compressed sparse row form.
///
/// `row_offsets` has `n + 1` entries; the neighbors of `v` are
/// `col_indices[row_offsets[v]..row_offsets[v + 1]]`, strictly increasing.
/// The adjacency is symmetric and free of self loops. The structure is safe
/// for unsynchronized shared reads from any number of workers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsrGraph {
    row_offsets: Vec<usize>,
    col_indices: Vec<usize>,
}

impl CsrGraph {
    /// Builds a CSR graph from a canonical edge list.
    ///
    /// Fails if the list is not canonical (self loop, duplicate, unsorted
    /// or asymmetric adjacency).
    pub fn from_edge_list(list: &EdgeList) -> Result<Self> {
        let n = list.num_vertices();
        let mut row_offsets = vec![0usize; n + 1];
        for &(u, _) in list.edges() {
            row_offsets[u + 1] += 1;
        }
        for v in 0..n {
            row_offsets[v + 1] += row_offsets[v];
        }
        let mut col_indices = vec![0usize; list.edges().len()];
        let mut cursor = row_offsets.clone();
        for &(u, v) in list.edges() {
            col_indices[cursor[u]] = v;
            cursor[u] += 1;
        }
        Self::try_from_parts(row_offsets, col_indices)
    }

    /// Validates raw CSR arrays and assembles the graph.
    ///
    /// Checks shape, monotone offsets, in-range targets, strictly
    /// increasing adjacency segments (no duplicates), absence of self loops
    /// and full symmetry.
    pub fn try_from_parts(row_offsets: Vec<usize>, col_indices: Vec<usize>) -> Result<Self> {
        if row_offsets.is_empty() {
            return Err(Error::NotCanonical("row offsets must have n + 1 entries".into()));
        }
        let n = row_offsets.len() - 1;
        let m = col_indices.len();
        if row_offsets[0] != 0 {
            return Err(Error::NotCanonical("row_offsets[0] must be 0".into()));
        }
        if row_offsets[n] != m {
            return Err(Error::NotCanonical(format!(
                "row_offsets[n] = {} does not match {} column indices",
                row_offsets[n], m
            )));
        }
        for v in 0..n {
            if row_offsets[v] > row_offsets[v + 1] {
                return Err(Error::NotCanonical(format!(
                    "row offsets decrease at vertex {v}"
                )));
            }
            let row = &col_indices[row_offsets[v]..row_offsets[v + 1]];
            for (i, &w) in row.iter().enumerate() {
                if w >= n {
                    return Err(Error::NotCanonical(format!(
                        "vertex {v} has neighbor {w} out of range"
                    )));
                }
                if w == v {
                    return Err(Error::NotCanonical(format!("self loop at vertex {v}")));
                }
                if i > 0 && row[i - 1] >= w {
                    return Err(Error::NotCanonical(format!(
                        "adjacency of vertex {v} is not strictly increasing"
                    )));
                }
            }
        }
        let graph = CsrGraph {
            row_offsets,
            col_indices,
        };
        for v in 0..n {
            for &w in graph.neighbors(v) {
                if graph.neighbors(w).binary_search(&v).is_err() {
                    return Err(Error::NotCanonical(format!(
                        "edge ({v}, {w}) has no reverse entry"
                    )));
                }
            }
        }
        Ok(graph)
    }

    pub fn num_vertices(&self) -> usize {
        self.row_offsets.len() - 1
    }

    /// Number of directed adjacency entries (twice the undirected edges).
    pub fn num_edges(&self) -> usize {
        self.col_indices.len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.col_indices[self.row_offsets[v]..self.row_offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row_offsets[v + 1] - self.row_offsets[v]
    }

    pub fn max_degree(&self) -> usize {
        (0..self.num_vertices())
            .map(|v| self.degree(v))
            .max()
            .unwrap_or(0)
    }

    pub fn row_offsets(&self) -> &[usize] {
        &self.row_offsets
    }

    pub fn col_indices(&self) -> &[usize] {
        &self.col_indices
    }

    /// Min/max/mean and population variance of the degree sequence.
    pub fn degree_stats(&self) -> Result<DegreeStats> {
        let n = self.num_vertices();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut min_degree = usize::MAX;
        let mut max_degree = 0usize;
        for v in 0..n {
            let d = self.degree(v);
            min_degree = min_degree.min(d);
            max_degree = max_degree.max(d);
        }
        let avg_degree = self.num_edges() as f64 / n as f64;
        let degree_variance = (0..n)
            .map(|v| {
                let diff = self.degree(v) as f64 - avg_degree;
                diff * diff
            })
            .sum::<f64>()
            / n as f64;
        Ok(DegreeStats {
            min_degree,
            max_degree,
            avg_degree,
            degree_variance,
        })
    }
}

/// Degree summary of a graph, matching the columns benchmark tables report.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DegreeStats {
    pub min_degree: usize,
    pub max_degree: usize,
    pub avg_degree: f64,
    pub degree_variance: f64,
}
