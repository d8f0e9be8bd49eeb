//! Independent-set coloring: Jones–Plassmann and the multi-hash variant.
//!
//! Both peel one or more independent sets off the uncolored subgraph per
//! bulk-synchronous round. Set membership is decided from hash-derived
//! priorities instead of stored random numbers, so rounds are deterministic
//! for a fixed seed and need no per-vertex state. Priorities compare as
//! `(value, vertex id)`, a strict total order, which guarantees the
//! round's maximum always enters a set and every round makes progress.

use rayon::prelude::*;

use std::time::Instant;

use crate::error::Error;
use crate::graph::CsrGraph;
use crate::greedy::{Coloring, UNCOLORED};
use crate::rng::mix64;
use crate::speculative::{compact_into, AtomicColors, ConvergenceTrace, Worklist};
use crate::Result;

/// Strict-total-order priority: hash value first, vertex id as tiebreak.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Priority {
    pub value: u64,
    pub tiebreak: usize,
}

/// Deterministic avalanche-quality hash of `(vertex, hash index, seed)`.
///
/// The composition of bijective mixing stages means two distinct vertices
/// never collide for the same `(k, seed)`; ties are broken downstream by
/// vertex id anyway.
#[inline]
pub fn hash_vertex(v: usize, k: u64, seed: u64) -> u64 {
    mix64(mix64(mix64(seed) ^ k) ^ v as u64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MultiHashConfig {
    /// Hash functions per round (`N`), yielding `2N` independent sets.
    pub num_hashes: usize,
    pub seed: u64,
    /// Round safety cap; `None` means `n + 1`.
    pub max_rounds: Option<usize>,
}

impl Default for MultiHashConfig {
    fn default() -> Self {
        MultiHashConfig {
            num_hashes: 2,
            seed: 0,
            max_rounds: None,
        }
    }
}

impl MultiHashConfig {
    pub fn validate(&self) -> Result<()> {
        if self.num_hashes == 0 {
            return Err(Error::InvalidConfig("num_hashes must be >= 1".into()));
        }
        if self.max_rounds == Some(0) {
            return Err(Error::InvalidConfig("max_rounds must be >= 1".into()));
        }
        Ok(())
    }
}

/// Jones–Plassmann coloring with hash-derived per-round priorities.
///
/// Per round, every pending vertex whose priority strictly exceeds all its
/// uncolored neighbors' joins the independent set and receives the round
/// number as its color, so the number of rounds equals the number of
/// colors. Deterministic for a fixed seed at any parallelism.
pub fn jp_color(g: &CsrGraph, seed: u64) -> Result<(Coloring, ConvergenceTrace)> {
    jp_color_with(g, g.num_vertices() + 1, |v, round| Priority {
        value: hash_vertex(v, round as u64, seed),
        tiebreak: v,
    })
}

fn jp_color_with<P>(g: &CsrGraph, round_cap: usize, priority: P) -> Result<(Coloring, ConvergenceTrace)>
where
    P: Fn(usize, usize) -> Priority + Sync,
{
    let n = g.num_vertices();
    let colors = AtomicColors::new(n);
    let mut worklist = Worklist::all_vertices(n);
    let mut next = Worklist::new();
    let mut trace = ConvergenceTrace::default();
    let mut round = 0usize;

    while !worklist.is_empty() {
        if round == round_cap {
            return Err(Error::NonConvergence {
                cap: round_cap,
                trace: Box::new(trace),
            });
        }
        round += 1;
        let pending = worklist.as_slice();

        let select_start = Instant::now();
        let selected: Vec<bool> = pending
            .par_iter()
            .map(|&v| {
                let pv = priority(v, round);
                g.neighbors(v).iter().all(|&w| {
                    colors.load(w) != UNCOLORED || priority(w, round) < pv
                })
            })
            .collect();
        let round_color = round as u32;
        pending.par_iter().zip(&selected).for_each(|(&v, &in_set)| {
            if in_set {
                colors.store(v, round_color);
            }
        });
        trace.add_assign_time(select_start.elapsed());

        let compact_start = Instant::now();
        let requeue: Vec<bool> = selected.iter().map(|&s| !s).collect();
        compact_into(pending, &requeue, next.items_mut());
        trace.add_conflict_time(compact_start.elapsed());

        trace.record(worklist.len(), 0);
        std::mem::swap(&mut worklist, &mut next);
    }

    Ok((colors.into_coloring(), trace))
}

/// Multi-hash independent-set coloring.
///
/// Each round computes `N` hash values per pending vertex. For hash `k`, a
/// vertex whose `(hash, id)` is a strict local maximum among its uncolored
/// neighbors qualifies for set `2k`, a strict local minimum for set
/// `2k + 1`; a vertex joins only the lowest-indexed set it qualifies for.
/// The round's sets map to colors `base + 1 ..= base + 2N`, the base
/// advancing by `2N` per round; leftover vertices go to the next round
/// with the hash reseeded as `seed ^ round`.
pub fn multihash_color(
    g: &CsrGraph,
    cfg: &MultiHashConfig,
) -> Result<(Coloring, ConvergenceTrace)> {
    cfg.validate()?;
    let n = g.num_vertices();
    let round_cap = cfg.max_rounds.unwrap_or(n + 1);
    let num_hashes = cfg.num_hashes;
    let sets_per_round = 2 * num_hashes as u32;

    let colors = AtomicColors::new(n);
    let mut worklist = Worklist::all_vertices(n);
    let mut next = Worklist::new();
    let mut trace = ConvergenceTrace::default();
    let mut base = 0u32;
    let mut round = 0usize;

    while !worklist.is_empty() {
        if round == round_cap {
            return Err(Error::NonConvergence {
                cap: round_cap,
                trace: Box::new(trace),
            });
        }
        let round_seed = cfg.seed ^ round as u64;
        let pending = worklist.as_slice();

        let select_start = Instant::now();
        let set_of: Vec<Option<u32>> = pending
            .par_iter()
            .map(|&v| {
                for k in 0..num_hashes {
                    let pv = Priority {
                        value: hash_vertex(v, k as u64, round_seed),
                        tiebreak: v,
                    };
                    let mut is_max = true;
                    let mut is_min = true;
                    for &w in g.neighbors(v) {
                        if colors.load(w) != UNCOLORED {
                            continue;
                        }
                        let pw = Priority {
                            value: hash_vertex(w, k as u64, round_seed),
                            tiebreak: w,
                        };
                        if pw > pv {
                            is_max = false;
                        } else {
                            is_min = false;
                        }
                        if !is_max && !is_min {
                            break;
                        }
                    }
                    if is_max {
                        return Some(2 * k as u32);
                    }
                    if is_min {
                        return Some(2 * k as u32 + 1);
                    }
                }
                None
            })
            .collect();
        pending.par_iter().zip(&set_of).for_each(|(&v, &set)| {
            if let Some(set) = set {
                colors.store(v, base + 1 + set);
            }
        });
        trace.add_assign_time(select_start.elapsed());

        let compact_start = Instant::now();
        let requeue: Vec<bool> = set_of.iter().map(Option::is_none).collect();
        compact_into(pending, &requeue, next.items_mut());
        trace.add_conflict_time(compact_start.elapsed());

        trace.record(worklist.len(), 0);
        std::mem::swap(&mut worklist, &mut next);
        base += sets_per_round;
        round += 1;
    }

    Ok((colors.into_coloring(), trace))
}
