//! Speculative-greedy parallel coloring drivers.
//!
//! Both drivers run bulk-synchronous iterations of two phases. Phase A
//! speculatively assigns every pending vertex its first-fit color in
//! parallel, tolerating conflicts. Phase B rescans the pending vertices:
//! for every edge whose endpoints drew the same color exactly one endpoint
//! loses (per the conflict policy), is uncolored on the spot and queued for
//! the next iteration. Clearing the loser's color inside the same phase
//! matters under wide parallelism: neighbors recoloring next iteration must
//! not see the stale color.
//!
//! The topology-driven driver sweeps all vertices every iteration and skips
//! finalized ones via a `colored` bitmask; the data-driven driver sweeps
//! only a worklist of pending vertices, double-buffered and compacted by
//! prefix sum.
//!
//! Two read disciplines are supported. In racy mode (the benchmarking
//! default) phases read the live shared color array; word-atomic access
//! keeps values untorn and conflict resolution absorbs the races. In
//! deterministic mode each phase reads an immutable snapshot taken at the
//! preceding barrier, which makes the whole run a pure function of the
//! graph and configuration, independent of worker count and scheduling.

mod schedule;
mod worklist;

pub use schedule::chunk_schedule;
pub use worklist::{compact_worklist, Worklist};

pub(crate) use worklist::compact_into;

use std::sync::atomic::{AtomicBool, AtomicU32, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::Error;
use crate::graph::CsrGraph;
use crate::greedy::{first_fit_bitset, ColorRead, Coloring, UNCOLORED};
use crate::speculative::schedule::split_by_lens;
use crate::Result;

/// Which endpoint of a conflicting edge must recolor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConflictPolicy {
    /// The smaller vertex id loses and is requeued.
    BaselineId,
    /// The smaller-degree vertex loses; large-degree vertices keep their
    /// color since they are the likelier source of future conflicts. Equal
    /// degrees fall back to keeping the smaller id.
    DegreeHeuristic,
}

/// How pending vertices are grouped into work chunks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BalanceMode {
    /// Fixed number of vertices per chunk.
    Uniform,
    /// Chunk boundaries bound the summed degree per chunk.
    EdgeBalanced,
}

/// Configuration for the speculative drivers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpecConfig {
    pub policy: ConflictPolicy,
    /// Vertices per work chunk, at least 1.
    pub coarsening: usize,
    pub balance: BalanceMode,
    /// Worker threads, at least 1.
    pub workers: usize,
    /// Snapshot reads (reproducible) instead of live reads (fast).
    pub deterministic: bool,
    /// Iteration safety cap; `None` means `n + 1`, which the progress
    /// guarantee can never reach on a correct build.
    pub max_iterations: Option<usize>,
}

impl Default for SpecConfig {
    fn default() -> Self {
        SpecConfig {
            policy: ConflictPolicy::BaselineId,
            coarsening: 128,
            balance: BalanceMode::Uniform,
            workers: std::thread::available_parallelism()
                .map(|p| p.get())
                .unwrap_or(1),
            deterministic: false,
            max_iterations: None,
        }
    }
}

impl SpecConfig {
    pub fn validate(&self) -> Result<()> {
        if self.coarsening == 0 {
            return Err(Error::InvalidConfig("coarsening must be >= 1".into()));
        }
        if self.workers == 0 {
            return Err(Error::InvalidConfig("workers must be >= 1".into()));
        }
        if self.max_iterations == Some(0) {
            return Err(Error::InvalidConfig("max_iterations must be >= 1".into()));
        }
        Ok(())
    }

    fn iteration_cap(&self, n: usize) -> usize {
        self.max_iterations.unwrap_or(n + 1)
    }
}

/// Per-iteration record of a driver run.
#[derive(Debug, Clone, Default)]
pub struct ConvergenceTrace {
    worklist_sizes: Vec<usize>,
    conflicts_per_iter: Vec<usize>,
    assign_time: Duration,
    conflict_time: Duration,
}

impl ConvergenceTrace {
    pub fn iterations(&self) -> usize {
        self.worklist_sizes.len()
    }

    /// Pending vertices at the start of each iteration.
    pub fn worklist_sizes(&self) -> &[usize] {
        &self.worklist_sizes
    }

    /// Vertices uncolored (requeued) by each iteration's conflict phase.
    pub fn conflicts_per_iter(&self) -> &[usize] {
        &self.conflicts_per_iter
    }

    /// Accumulated wall time of the assignment phases.
    pub fn assign_time(&self) -> Duration {
        self.assign_time
    }

    /// Accumulated wall time of the conflict-resolution phases.
    pub fn conflict_time(&self) -> Duration {
        self.conflict_time
    }

    pub(crate) fn record(&mut self, pending: usize, conflicts: usize) {
        self.worklist_sizes.push(pending);
        self.conflicts_per_iter.push(conflicts);
    }

    pub(crate) fn add_assign_time(&mut self, d: Duration) {
        self.assign_time += d;
    }

    pub(crate) fn add_conflict_time(&mut self, d: Duration) {
        self.conflict_time += d;
    }
}

/// Shared color array for phase-parallel writes. Word-atomic relaxed
/// access; phase barriers provide the ordering between phases.
pub(crate) struct AtomicColors {
    slots: Vec<AtomicU32>,
}

impl AtomicColors {
    pub(crate) fn new(n: usize) -> Self {
        AtomicColors {
            slots: (0..n).map(|_| AtomicU32::new(UNCOLORED)).collect(),
        }
    }

    #[inline]
    pub(crate) fn load(&self, v: usize) -> u32 {
        self.slots[v].load(Ordering::Relaxed)
    }

    #[inline]
    pub(crate) fn store(&self, v: usize, color: u32) {
        self.slots[v].store(color, Ordering::Relaxed);
    }

    pub(crate) fn snapshot_into(&self, buf: &mut Vec<u32>) {
        buf.clear();
        buf.extend(self.slots.iter().map(|c| c.load(Ordering::Relaxed)));
    }

    pub(crate) fn into_coloring(self) -> Coloring {
        Coloring::from_colors(self.slots.into_iter().map(AtomicU32::into_inner).collect())
    }
}

impl ColorRead for AtomicColors {
    #[inline]
    fn color_of(&self, v: usize) -> u32 {
        self.load(v)
    }
}

/// Decides which endpoint of the conflicting edge `(v, w)` must be
/// uncolored and requeued. Antisymmetric: exactly one of the pair loses.
#[inline]
pub fn resolve_loser(v: usize, w: usize, g: &CsrGraph, policy: ConflictPolicy) -> usize {
    debug_assert_ne!(v, w);
    match policy {
        ConflictPolicy::BaselineId => v.min(w),
        ConflictPolicy::DegreeHeuristic => {
            let (dv, dw) = (g.degree(v), g.degree(w));
            if dv != dw {
                if dv < dw {
                    v
                } else {
                    w
                }
            } else {
                v.max(w)
            }
        }
    }
}

/// True when `v` loses some conflict against a neighbor: a neighbor holds
/// the same color and the policy picks `v` as the loser. The driver clears
/// the loser's color in the same phase.
#[inline]
pub fn conflict_scan<C: ColorRead + ?Sized>(
    g: &CsrGraph,
    v: usize,
    coloring: &C,
    policy: ConflictPolicy,
) -> bool {
    let cv = coloring.color_of(v);
    debug_assert_ne!(cv, UNCOLORED, "conflict_scan requires a colored vertex");
    for &w in g.neighbors(v) {
        if coloring.color_of(w) == cv && resolve_loser(v, w, g, policy) == v {
            return true;
        }
    }
    false
}

fn build_pool(workers: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidConfig(format!("cannot build worker pool: {e}")))
}

/// Data-driven speculative coloring over a double-buffered worklist.
///
/// Starts with every vertex pending. Each iteration assigns first-fit
/// colors to the in-worklist, then scans it for conflicts, uncolors the
/// losers and compacts them into the out-worklist; the buffers swap and the
/// loop ends when nothing is requeued. At least one conflicting vertex
/// keeps its color each iteration, so the worklist shrinks strictly and the
/// run finishes within `n` iterations.
pub fn color_data_driven(g: &CsrGraph, cfg: &SpecConfig) -> Result<(Coloring, ConvergenceTrace)> {
    cfg.validate()?;
    let n = g.num_vertices();
    let cap = cfg.iteration_cap(n);
    let pool = build_pool(cfg.workers)?;

    pool.install(|| {
        let colors = AtomicColors::new(n);
        let mut trace = ConvergenceTrace::default();
        let mut w_in = Worklist::all_vertices(n);
        let mut w_out = Worklist::new();
        let mut snapshot: Vec<u32> = Vec::new();
        let mut flags: Vec<bool> = Vec::new();

        while !w_in.is_empty() {
            if trace.iterations() == cap {
                return Err(Error::NonConvergence {
                    cap,
                    trace: Box::new(trace),
                });
            }
            let pending = w_in.as_slice();
            let chunks = chunk_schedule(pending, g, cfg);

            let assign_start = Instant::now();
            if cfg.deterministic {
                colors.snapshot_into(&mut snapshot);
                let snap: &[u32] = &snapshot;
                chunks.par_iter().for_each(|chunk| {
                    for &v in &pending[chunk.clone()] {
                        colors.store(v, first_fit_bitset(g, v, snap));
                    }
                });
            } else {
                chunks.par_iter().for_each(|chunk| {
                    for &v in &pending[chunk.clone()] {
                        let c = first_fit_bitset(g, v, &colors);
                        colors.store(v, c);
                    }
                });
            }
            trace.add_assign_time(assign_start.elapsed());

            let conflict_start = Instant::now();
            flags.clear();
            flags.resize(pending.len(), false);
            let flag_slices = split_by_lens(&mut flags, chunks.iter().map(|c| c.len()));
            if cfg.deterministic {
                colors.snapshot_into(&mut snapshot);
                let snap: &[u32] = &snapshot;
                chunks
                    .par_iter()
                    .zip(flag_slices)
                    .for_each(|(chunk, chunk_flags)| {
                        for (i, &v) in pending[chunk.clone()].iter().enumerate() {
                            let loses = conflict_scan(g, v, snap, cfg.policy);
                            if loses {
                                colors.store(v, UNCOLORED);
                            }
                            chunk_flags[i] = loses;
                        }
                    });
            } else {
                chunks
                    .par_iter()
                    .zip(flag_slices)
                    .for_each(|(chunk, chunk_flags)| {
                        for (i, &v) in pending[chunk.clone()].iter().enumerate() {
                            let loses = conflict_scan(g, v, &colors, cfg.policy);
                            if loses {
                                colors.store(v, UNCOLORED);
                            }
                            chunk_flags[i] = loses;
                        }
                    });
            }
            compact_into(w_in.as_slice(), &flags, w_out.items_mut());
            trace.add_conflict_time(conflict_start.elapsed());

            trace.record(w_in.len(), w_out.len());
            std::mem::swap(&mut w_in, &mut w_out);
        }

        Ok((colors.into_coloring(), trace))
    })
}

/// Topology-driven speculative coloring.
///
/// Sweeps all `n` vertices every iteration; vertices verified conflict-free
/// are marked in a `colored` bitmask and skipped by later conflict scans.
/// Terminates when a sweep colors nothing new.
pub fn color_topology_driven(
    g: &CsrGraph,
    cfg: &SpecConfig,
) -> Result<(Coloring, ConvergenceTrace)> {
    cfg.validate()?;
    let n = g.num_vertices();
    let cap = cfg.iteration_cap(n);
    let pool = build_pool(cfg.workers)?;

    pool.install(|| {
        let colors = AtomicColors::new(n);
        let colored: Vec<AtomicBool> = (0..n).map(|_| AtomicBool::new(false)).collect();
        let all_vertices: Vec<usize> = (0..n).collect();
        // the sweep set never changes, so the schedule is computed once
        let chunks = chunk_schedule(&all_vertices, g, cfg);
        let mut trace = ConvergenceTrace::default();
        let mut snapshot: Vec<u32> = Vec::new();

        loop {
            let assign_start = Instant::now();
            let newly_colored: usize = if cfg.deterministic {
                colors.snapshot_into(&mut snapshot);
                let snap: &[u32] = &snapshot;
                chunks
                    .par_iter()
                    .map(|chunk| {
                        let mut colored_here = 0;
                        for v in chunk.clone() {
                            if colors.load(v) == UNCOLORED {
                                colors.store(v, first_fit_bitset(g, v, snap));
                                colored_here += 1;
                            }
                        }
                        colored_here
                    })
                    .sum()
            } else {
                chunks
                    .par_iter()
                    .map(|chunk| {
                        let mut colored_here = 0;
                        for v in chunk.clone() {
                            if colors.load(v) == UNCOLORED {
                                let c = first_fit_bitset(g, v, &colors);
                                colors.store(v, c);
                                colored_here += 1;
                            }
                        }
                        colored_here
                    })
                    .sum()
            };
            trace.add_assign_time(assign_start.elapsed());

            if newly_colored == 0 {
                break;
            }
            if trace.iterations() == cap {
                return Err(Error::NonConvergence {
                    cap,
                    trace: Box::new(trace),
                });
            }

            let conflict_start = Instant::now();
            let conflicts: usize = if cfg.deterministic {
                colors.snapshot_into(&mut snapshot);
                let snap: &[u32] = &snapshot;
                chunks
                    .par_iter()
                    .map(|chunk| {
                        let mut cleared = 0;
                        for v in chunk.clone() {
                            if colored[v].load(Ordering::Relaxed) {
                                continue;
                            }
                            if conflict_scan(g, v, snap, cfg.policy) {
                                colors.store(v, UNCOLORED);
                                cleared += 1;
                            } else {
                                colored[v].store(true, Ordering::Relaxed);
                            }
                        }
                        cleared
                    })
                    .sum()
            } else {
                chunks
                    .par_iter()
                    .map(|chunk| {
                        let mut cleared = 0;
                        for v in chunk.clone() {
                            if colored[v].load(Ordering::Relaxed) {
                                continue;
                            }
                            if conflict_scan(g, v, &colors, cfg.policy) {
                                colors.store(v, UNCOLORED);
                                cleared += 1;
                            } else {
                                colored[v].store(true, Ordering::Relaxed);
                            }
                        }
                        cleared
                    })
                    .sum()
            };
            trace.add_conflict_time(conflict_start.elapsed());

            trace.record(newly_colored, conflicts);
        }

        Ok((colors.into_coloring(), trace))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_rmat, EdgeList, RmatParams};
    use crate::harness::verify_coloring;
    use crate::rng::SplitMix64;

    fn graph(n: usize, pairs: &[(usize, usize)]) -> CsrGraph {
        let list = EdgeList::new(n, pairs.to_vec()).unwrap();
        CsrGraph::from_edge_list(&list.canonicalize()).unwrap()
    }

    fn det_cfg() -> SpecConfig {
        SpecConfig {
            deterministic: true,
            workers: 2,
            coarsening: 4,
            ..SpecConfig::default()
        }
    }

    #[test]
    fn baseline_policy_smaller_id_loses() {
        let g = graph(8, &[(3, 7)]);
        assert_eq!(resolve_loser(3, 7, &g, ConflictPolicy::BaselineId), 3);
        assert_eq!(resolve_loser(7, 3, &g, ConflictPolicy::BaselineId), 3);
    }

    #[test]
    fn degree_policy_smaller_degree_loses() {
        // deg(3) = 5, deg(7) = 2
        let g = graph(8, &[(3, 7), (3, 0), (3, 1), (3, 2), (3, 4), (7, 5)]);
        assert_eq!(g.degree(3), 5);
        assert_eq!(g.degree(7), 2);
        assert_eq!(resolve_loser(3, 7, &g, ConflictPolicy::DegreeHeuristic), 7);
        assert_eq!(resolve_loser(7, 3, &g, ConflictPolicy::DegreeHeuristic), 7);
    }

    #[test]
    fn degree_policy_tie_keeps_smaller_id() {
        let g = graph(8, &[(3, 7)]);
        assert_eq!(g.degree(3), g.degree(7));
        assert_eq!(resolve_loser(3, 7, &g, ConflictPolicy::DegreeHeuristic), 7);
    }

    #[test]
    fn resolve_loser_is_antisymmetric() {
        let list = generate_rmat(&RmatParams::erdos_renyi_like(8, 6.0, 3)).unwrap();
        let g = CsrGraph::from_edge_list(&list.canonicalize()).unwrap();
        for policy in [ConflictPolicy::BaselineId, ConflictPolicy::DegreeHeuristic] {
            for v in 0..g.num_vertices() {
                for &w in g.neighbors(v) {
                    let loser = resolve_loser(v, w, &g, policy);
                    assert_eq!(loser, resolve_loser(w, v, &g, policy));
                    assert!(loser == v || loser == w);
                }
            }
        }
    }

    #[test]
    fn conflict_scan_detects_equal_color_loss() {
        let g = graph(2, &[(0, 1)]);
        let colors = [2u32, 2u32];
        assert!(conflict_scan(&g, 0, &colors[..], ConflictPolicy::BaselineId));
        assert!(!conflict_scan(&g, 1, &colors[..], ConflictPolicy::BaselineId));
    }

    #[test]
    fn conflict_scan_ignores_distinct_colors() {
        let g = graph(3, &[(0, 1), (0, 2)]);
        let colors = [2u32, 1, 3];
        assert!(!conflict_scan(&g, 0, &colors[..], ConflictPolicy::BaselineId));
    }

    #[test]
    fn conflict_scan_exactly_one_endpoint_loses() {
        let mut rng = SplitMix64::new(5);
        let list = generate_rmat(&RmatParams::erdos_renyi_like(7, 5.0, 9)).unwrap();
        let g = CsrGraph::from_edge_list(&list.canonicalize()).unwrap();
        for policy in [ConflictPolicy::BaselineId, ConflictPolicy::DegreeHeuristic] {
            for _ in 0..200 {
                let v = (rng.next_u64() % g.num_vertices() as u64) as usize;
                if g.degree(v) == 0 {
                    continue;
                }
                let w = g.neighbors(v)[(rng.next_u64() % g.degree(v) as u64) as usize];
                // force just this edge into conflict
                let mut colors = vec![0u32; g.num_vertices()];
                colors[v] = 9;
                colors[w] = 9;
                let v_loses = conflict_scan(&g, v, &colors[..], policy);
                let w_loses = conflict_scan(&g, w, &colors[..], policy);
                assert!(v_loses ^ w_loses);
            }
        }
    }

    #[test]
    fn data_driven_triangle_uses_three_colors() {
        let g = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        let (coloring, _) = color_data_driven(&g, &det_cfg()).unwrap();
        assert!(verify_coloring(&g, &coloring).unwrap().is_empty());
        assert_eq!(coloring.num_colors(), 3);
    }

    #[test]
    fn data_driven_edgeless_single_iteration() {
        let g = CsrGraph::try_from_parts(vec![0; 101], vec![]).unwrap();
        let (coloring, trace) = color_data_driven(&g, &det_cfg()).unwrap();
        assert!(coloring.colors().iter().all(|&c| c == 1));
        assert_eq!(trace.iterations(), 1);
        assert_eq!(trace.worklist_sizes(), &[100]);
        assert_eq!(trace.conflicts_per_iter(), &[0]);
    }

    #[test]
    fn data_driven_deterministic_mode_ignores_scheduling() {
        let list = generate_rmat(&RmatParams::with_skew(0.45, 0.15, 0.15, 0.25, 9, 8.0, 21)).unwrap();
        let g = CsrGraph::from_edge_list(&list.canonicalize()).unwrap();
        let base = color_data_driven(&g, &det_cfg()).unwrap();
        assert!(verify_coloring(&g, &base.0).unwrap().is_empty());
        for workers in [1usize, 2, 4] {
            for coarsening in [1usize, 8, 128] {
                for balance in [BalanceMode::Uniform, BalanceMode::EdgeBalanced] {
                    let cfg = SpecConfig {
                        workers,
                        coarsening,
                        balance,
                        ..det_cfg()
                    };
                    let (coloring, trace) = color_data_driven(&g, &cfg).unwrap();
                    assert_eq!(coloring, base.0);
                    assert_eq!(trace.worklist_sizes(), base.1.worklist_sizes());
                }
            }
        }
    }

    #[test]
    fn data_driven_racy_mode_is_valid_for_all_policies() {
        let list = generate_rmat(&RmatParams::erdos_renyi_like(10, 10.0, 2)).unwrap();
        let g = CsrGraph::from_edge_list(&list.canonicalize()).unwrap();
        for policy in [ConflictPolicy::BaselineId, ConflictPolicy::DegreeHeuristic] {
            let cfg = SpecConfig {
                policy,
                deterministic: false,
                workers: 2,
                ..SpecConfig::default()
            };
            let (coloring, trace) = color_data_driven(&g, &cfg).unwrap();
            assert!(verify_coloring(&g, &coloring).unwrap().is_empty());
            assert!(trace.iterations() <= g.num_vertices());
        }
    }

    #[test]
    fn data_driven_worklist_shrinks_strictly() {
        let list = generate_rmat(&RmatParams::with_skew(0.45, 0.15, 0.15, 0.25, 10, 12.0, 4)).unwrap();
        let g = CsrGraph::from_edge_list(&list.canonicalize()).unwrap();
        let (_, trace) = color_data_driven(&g, &det_cfg()).unwrap();
        let sizes = trace.worklist_sizes();
        assert!(sizes.windows(2).all(|w| w[1] < w[0]), "sizes: {sizes:?}");
        assert_eq!(trace.conflicts_per_iter().last(), Some(&0));
    }

    #[test]
    fn data_driven_iteration_cap_reports_non_convergence() {
        let g = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        let cfg = SpecConfig {
            max_iterations: Some(1),
            ..det_cfg()
        };
        match color_data_driven(&g, &cfg) {
            Err(Error::NonConvergence { cap, trace }) => {
                assert_eq!(cap, 1);
                assert_eq!(trace.iterations(), 1);
                assert_eq!(trace.worklist_sizes(), &[3]);
            }
            other => panic!("expected non-convergence, got {other:?}"),
        }
    }

    #[test]
    fn single_worker_deterministic_matches_sequential_on_edgeless() {
        let g = CsrGraph::try_from_parts(vec![0; 51], vec![]).unwrap();
        let cfg = SpecConfig {
            workers: 1,
            ..det_cfg()
        };
        let (coloring, _) = color_data_driven(&g, &cfg).unwrap();
        let sequential =
            crate::greedy::color_sequential(&g, &crate::greedy::identity_order(50)).unwrap();
        assert_eq!(coloring, sequential);
    }

    #[test]
    fn topology_driven_edgeless_single_useful_iteration() {
        let g = CsrGraph::try_from_parts(vec![0; 101], vec![]).unwrap();
        let (coloring, trace) = color_topology_driven(&g, &det_cfg()).unwrap();
        assert!(coloring.colors().iter().all(|&c| c == 1));
        assert_eq!(trace.iterations(), 1);
    }

    #[test]
    fn topology_driven_clique_uses_four_colors() {
        let g = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let (coloring, _) = color_topology_driven(&g, &det_cfg()).unwrap();
        assert!(verify_coloring(&g, &coloring).unwrap().is_empty());
        assert_eq!(coloring.num_colors(), 4);
    }

    #[test]
    fn both_drivers_stay_within_greedy_bound() {
        let list = generate_rmat(&RmatParams::with_skew(0.45, 0.15, 0.15, 0.25, 9, 10.0, 8)).unwrap();
        let g = CsrGraph::from_edge_list(&list.canonicalize()).unwrap();
        let bound = g.max_degree() as u32 + 1;
        let (data, _) = color_data_driven(&g, &det_cfg()).unwrap();
        let (topo, _) = color_topology_driven(&g, &det_cfg()).unwrap();
        assert!(verify_coloring(&g, &data).unwrap().is_empty());
        assert!(verify_coloring(&g, &topo).unwrap().is_empty());
        assert!(data.num_colors() <= bound);
        assert!(topo.num_colors() <= bound);
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let g = graph(2, &[(0, 1)]);
        let bad_coarsening = SpecConfig {
            coarsening: 0,
            ..SpecConfig::default()
        };
        assert!(color_data_driven(&g, &bad_coarsening).is_err());
        let bad_workers = SpecConfig {
            workers: 0,
            ..SpecConfig::default()
        };
        assert!(color_topology_driven(&g, &bad_workers).is_err());
    }
}
