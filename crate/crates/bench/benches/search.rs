use criterion::{black_box, criterion_group, criterion_main, Criterion};

use ordermetrics::laws::{run_suite, PosetSource, SUITE_LAWS};
use ordermetrics::path::{longest_induced_path, longest_isometric_path};
use ordermetrics::patterns::{embeds_induced, gen_pattern, is_bipartite_permutation, PatternParams};
use ordermetrics::PatternKind;
use ordermetrics_bench::{fence_graph, random_graph, staircase_graph, width3_graph};

fn paths(c: &mut Criterion) {
    let w3 = width3_graph(5);
    c.bench_function("induced/width3_n5", |b| b.iter(|| longest_induced_path(black_box(&w3), None, None)));
    let rnd = random_graph(24, 0.25, 3);
    c.bench_function("induced/random_24", |b| b.iter(|| longest_induced_path(black_box(&rnd), None, None)));
    let stairs = staircase_graph(10);
    c.bench_function("isometric/staircase_n10", |b| {
        b.iter(|| longest_isometric_path(black_box(&stairs), Some(0)))
    });
}

fn recognition(c: &mut Criterion) {
    let fence = fence_graph(200);
    c.bench_function("recognize/fence_200", |b| b.iter(|| is_bipartite_permutation(black_box(&fence))));
    let df = |k| gen_pattern(PatternKind::DoubleFork, &PatternParams::new(k, &[])).unwrap();
    let (small, big) = (df(4), df(9));
    c.bench_function("embed/df4_in_df9", |b| b.iter(|| embeds_induced(black_box(&small), black_box(&big))));
}

fn laws(c: &mut Criterion) {
    let mut group = c.benchmark_group("laws");
    group.sample_size(10);
    group.bench_function("exhaustive_n4", |b| {
        b.iter(|| run_suite(&SUITE_LAWS, &PosetSource::Exhaustive { max_n: 4 }).unwrap())
    });
    group.finish();
}

criterion_group!(benches, paths, recognition, laws);
criterion_main!(benches);
