//! Kernel-level benchmarks: first-fit mask vs bitset, and prefix-sum
//! worklist compaction.

use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use parcolor_bench::rmat_er;
use parcolor_core::greedy::{
    color_sequential, first_fit_bitset, first_fit_mask, identity_order, FirstFitScratch,
};
use parcolor_core::speculative::compact_worklist;

fn bench_first_fit(c: &mut Criterion) {
    let graph = rmat_er(14, 10.0, 3);
    let n = graph.num_vertices();
    // a realistic mid-run state: a full valid coloring to scan against
    let coloring = color_sequential(&graph, &identity_order(n)).unwrap();

    let mut group = c.benchmark_group("first-fit");
    group.sample_size(20).measurement_time(Duration::from_secs(5));
    group.bench_function("mask", |b| {
        let mut scratch = FirstFitScratch::for_graph(&graph);
        b.iter(|| {
            let mut acc = 0u64;
            for v in 0..n {
                acc += first_fit_mask(&graph, v, &coloring, &mut scratch) as u64;
            }
            acc
        })
    });
    group.bench_function("bitset", |b| {
        b.iter(|| {
            let mut acc = 0u64;
            for v in 0..n {
                acc += first_fit_bitset(&graph, v, &coloring) as u64;
            }
            acc
        })
    });
    group.finish();
}

fn bench_compaction(c: &mut Criterion) {
    let len = 1 << 20;
    let candidates: Vec<usize> = (0..len).collect();
    let flags: Vec<bool> = (0..len).map(|i| i % 3 == 0).collect();

    let mut group = c.benchmark_group("compaction");
    group.sample_size(20).measurement_time(Duration::from_secs(5));
    group.bench_function("sequential-filter", |b| {
        b.iter(|| {
            candidates
                .iter()
                .zip(&flags)
                .filter(|(_, &f)| f)
                .map(|(&c, _)| c)
                .collect::<Vec<_>>()
        })
    });
    for workers in [1usize, 2] {
        group.bench_with_input(
            BenchmarkId::new("prefix-sum", workers),
            &workers,
            |b, &w| {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(w)
                    .build()
                    .unwrap();
                b.iter(|| pool.install(|| compact_worklist(&candidates, &flags)))
            },
        );
    }
    group.finish();
}

criterion_group!(benches, bench_first_fit, bench_compaction);
criterion_main!(benches);
