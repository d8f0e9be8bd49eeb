//! Work-chunk scheduling for the phase-parallel drivers.
//!
//! Chunks are contiguous index ranges into a worklist. Coarsening controls
//! how many vertices one worker claims at a time; the edge-balanced mode
//! instead bounds the summed degree per chunk, which evens out skewed
//! degree distributions. Scheduling only affects how work is distributed:
//! in deterministic mode the final coloring is invariant to it.

use std::ops::Range;

use crate::graph::CsrGraph;
use crate::speculative::{BalanceMode, SpecConfig};

/// Relative slack allowed above the per-chunk degree target in
/// edge-balanced mode.
const EDGE_BALANCE_SLACK_QUARTERS: usize = 1; // target / 4, i.e. 25%

/// Splits `work` into contiguous chunks.
///
/// Uniform mode emits `cfg.coarsening`-sized chunks (last one ragged).
/// Edge-balanced mode closes a chunk once adding the next vertex would push
/// its summed degree past `ceil(total_degree / uniform_chunk_count) * 1.25`;
/// a single vertex heavier than the cap still gets its own chunk. Every
/// vertex lands in exactly one chunk and input order is preserved.
pub fn chunk_schedule(work: &[usize], g: &CsrGraph, cfg: &SpecConfig) -> Vec<Range<usize>> {
    let len = work.len();
    if len == 0 {
        return Vec::new();
    }
    let coarsening = cfg.coarsening.max(1);
    match cfg.balance {
        BalanceMode::Uniform => (0..len)
            .step_by(coarsening)
            .map(|start| start..(start + coarsening).min(len))
            .collect(),
        BalanceMode::EdgeBalanced => {
            let uniform_chunks = len.div_ceil(coarsening);
            let total_degree: usize = work.iter().map(|&v| g.degree(v)).sum();
            let target = total_degree.div_ceil(uniform_chunks);
            let cap = target + target / 4 * EDGE_BALANCE_SLACK_QUARTERS;
            let mut chunks = Vec::with_capacity(uniform_chunks);
            let mut start = 0usize;
            let mut sum = 0usize;
            for (i, &v) in work.iter().enumerate() {
                let d = g.degree(v);
                if i > start && sum + d > cap {
                    chunks.push(start..i);
                    start = i;
                    sum = 0;
                }
                sum += d;
            }
            chunks.push(start..len);
            chunks
        }
    }
}

/// Splits a mutable slice into consecutive disjoint sub-slices of the given
/// lengths, which must sum to the slice length. Lets phase workers write
/// their chunk's outputs without synchronization.
pub(crate) fn split_by_lens<T>(
    mut data: &mut [T],
    lens: impl Iterator<Item = usize>,
) -> Vec<&mut [T]> {
    let mut out = Vec::new();
    for len in lens {
        let (head, tail) = std::mem::take(&mut data).split_at_mut(len);
        out.push(head);
        data = tail;
    }
    debug_assert!(data.is_empty(), "lengths do not cover the slice");
    out
}
