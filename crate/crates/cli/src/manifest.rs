//! Benchmark manifest: a JSON file describing the graph × algorithm matrix.
//!
//! ```json
//! {
//!   "repetitions": 10,
//!   "cells": [
//!     {"graph": {"type": "file", "path": "graphs/road.mtx"},
//!      "algorithm": "data", "policy": "degree", "workers": 8},
//!     {"graph": {"type": "rmat", "scale": 16, "avg_degree": 10.0,
//!                "a": 0.45, "b": 0.15, "c": 0.15, "d": 0.25, "seed": 1},
//!      "algorithm": "multihash", "hashes": 2, "seed": 1}
//!   ]
//! }
//! ```

use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use serde::Deserialize;

use parcolor_core::graph::RmatParams;
use parcolor_core::harness::{AlgorithmSpec, BenchCell, GraphSource};
use parcolor_core::independent_set::MultiHashConfig;
use parcolor_core::speculative::{BalanceMode, ConflictPolicy, SpecConfig};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Manifest {
    #[serde(default = "default_repetitions")]
    repetitions: usize,
    cells: Vec<ManifestCell>,
}

fn default_repetitions() -> usize {
    10
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ManifestCell {
    #[serde(default)]
    name: Option<String>,
    graph: ManifestGraph,
    algorithm: String,
    #[serde(default)]
    policy: Option<String>,
    #[serde(default)]
    workers: Option<usize>,
    #[serde(default)]
    coarsening: Option<usize>,
    #[serde(default)]
    balance: Option<String>,
    #[serde(default)]
    deterministic: Option<bool>,
    #[serde(default)]
    seed: Option<u64>,
    #[serde(default)]
    hashes: Option<usize>,
}

#[derive(Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
enum ManifestGraph {
    File {
        path: PathBuf,
    },
    Rmat {
        scale: u32,
        #[serde(default = "default_avg_degree")]
        avg_degree: f64,
        #[serde(default = "default_quadrant")]
        a: f64,
        #[serde(default = "default_quadrant")]
        b: f64,
        #[serde(default = "default_quadrant")]
        c: f64,
        #[serde(default = "default_quadrant")]
        d: f64,
        #[serde(default)]
        seed: u64,
    },
}

fn default_avg_degree() -> f64 {
    10.0
}

fn default_quadrant() -> f64 {
    0.25
}

pub fn load(path: &Path) -> anyhow::Result<(Vec<BenchCell>, usize)> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    let manifest: Manifest = serde_json::from_str(&text)
        .with_context(|| format!("parsing manifest {}", path.display()))?;
    if manifest.cells.is_empty() {
        bail!("manifest {} has no cells", path.display());
    }

    let base_dir = path.parent().unwrap_or(Path::new("."));
    let mut cells = Vec::with_capacity(manifest.cells.len());
    for (i, cell) in manifest.cells.into_iter().enumerate() {
        cells.push(
            convert_cell(cell, base_dir).with_context(|| format!("manifest cell {i}"))?,
        );
    }
    Ok((cells, manifest.repetitions))
}

fn convert_cell(cell: ManifestCell, base_dir: &Path) -> anyhow::Result<BenchCell> {
    let graph = match cell.graph {
        ManifestGraph::File { path } => {
            let resolved = if path.is_absolute() {
                path
            } else {
                base_dir.join(path)
            };
            if resolved.extension().is_some_and(|e| e == "pcsr") {
                GraphSource::CsrCache(resolved)
            } else {
                GraphSource::MatrixMarket(resolved)
            }
        }
        ManifestGraph::Rmat {
            scale,
            avg_degree,
            a,
            b,
            c,
            d,
            seed,
        } => {
            let num_vertices = 1usize
                .checked_shl(scale)
                .filter(|&n| n >= 2)
                .ok_or_else(|| anyhow::anyhow!("bad rmat scale {scale}"))?;
            GraphSource::Rmat(RmatParams {
                a,
                b,
                c,
                d,
                num_vertices,
                num_undirected_edges: ((num_vertices as f64) * avg_degree / 2.0).round() as usize,
                seed,
            })
        }
    };

    let seed = cell.seed.unwrap_or(1);
    let spec_cfg = || -> anyhow::Result<SpecConfig> {
        Ok(SpecConfig {
            policy: match cell.policy.as_deref() {
                None | Some("id") => ConflictPolicy::BaselineId,
                Some("degree") => ConflictPolicy::DegreeHeuristic,
                Some(other) => bail!("unknown policy `{other}` (expected id|degree)"),
            },
            coarsening: cell.coarsening.unwrap_or(128),
            balance: match cell.balance.as_deref() {
                None | Some("uniform") => BalanceMode::Uniform,
                Some("edge") => BalanceMode::EdgeBalanced,
                Some(other) => bail!("unknown balance `{other}` (expected uniform|edge)"),
            },
            workers: cell.workers.unwrap_or_else(|| {
                std::thread::available_parallelism()
                    .map(|p| p.get())
                    .unwrap_or(1)
            }),
            deterministic: cell.deterministic.unwrap_or(false),
            max_iterations: None,
        })
    };

    let algorithm = match cell.algorithm.as_str() {
        "serial" => AlgorithmSpec::Serial,
        "topo" => AlgorithmSpec::Topology(spec_cfg()?),
        "data" => AlgorithmSpec::DataDriven(spec_cfg()?),
        "jp" => AlgorithmSpec::JonesPlassmann { seed },
        "multihash" => AlgorithmSpec::MultiHash(MultiHashConfig {
            num_hashes: cell.hashes.unwrap_or(2),
            seed,
            max_rounds: None,
        }),
        other => bail!("unknown algorithm `{other}` (expected serial|topo|data|jp|multihash)"),
    };

    Ok(BenchCell {
        name: cell.name,
        graph,
        algorithm,
    })
}
