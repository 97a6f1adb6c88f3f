//! Parallel against sequential sweeps over all words or shapes of a length.

use criterion::{criterion_group, criterion_main, Criterion};

use clusterforge::core::Word;
use clusterforge::expansions::{expansion, expansion_sum, ExpansionKind};
use clusterforge::par;
use clusterforge::rank_analysis::rank_recursive;
use clusterforge::snakegraph::SnakeGraph;

fn oracle_check(w: &Word) -> bool {
    let x = clusterforge::cluster_engine::cluster_variable(w);
    ExpansionKind::ALL.iter().all(|&k| expansion_sum(&expansion(w, k), k, w.len() + 1) == x)
}

fn sweeps(c: &mut Criterion) {
    let words = Word::all_up_to(6);
    let mut g = c.benchmark_group("oracle sweep, length <= 6");
    g.sample_size(10);
    g.bench_function("parallel", |b| b.iter(|| par::map(&words, oracle_check)));
    g.bench_function("sequential", |b| b.iter(|| par::map_seq(&words, oracle_check)));
    g.finish();

    let shapes = Word::all_up_to(12);
    let rank = |s: &Word| rank_recursive(&SnakeGraph::of_shape(s));
    let mut g = c.benchmark_group("rank sweep, length <= 12");
    g.sample_size(10);
    g.bench_function("parallel", |b| b.iter(|| par::map(&shapes, rank)));
    g.bench_function("sequential", |b| b.iter(|| par::map_seq(&shapes, rank)));
    g.finish();
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
