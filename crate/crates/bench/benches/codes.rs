use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use gf2codes::fixtures;
use gf2codes::prover::verify_main_bound;
use gf2codes::search::{max_dimension_exhaustive, DEFAULT_NODE_CAP};
use gf2codes_bench::pseudo_random_code;

fn weight_distribution(c: &mut Criterion) {
    let mut group = c.benchmark_group("weight_distribution");
    let golay = fixtures::extended_golay();
    group.bench_function("golay_24_12", |b| {
        b.iter(|| golay.weight_distribution().unwrap())
    });
    for d in [12, 16, 20] {
        let code = pseudo_random_code(64, d, 7);
        group.bench_with_input(BenchmarkId::new("random_n64", d), &code, |b, code| {
            b.iter(|| code.weight_distribution().unwrap())
        });
    }
    group.finish();
}

fn macwilliams(c: &mut Criterion) {
    let mut group = c.benchmark_group("macwilliams_transform");
    for (n, d) in [(24, 12), (64, 16), (128, 16)] {
        let code = pseudo_random_code(n, d, 11);
        let we = code.weight_distribution().unwrap();
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("{n}_{d}")),
            &we,
            |b, we| b.iter(|| we.macwilliams_transform(d).unwrap()),
        );
    }
    group.finish();
}

fn search(c: &mut Criterion) {
    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    group.bench_function("n10_w246", |b| {
        b.iter(|| max_dimension_exhaustive(black_box(10), &[2, 4, 6], DEFAULT_NODE_CAP).unwrap())
    });
    group.bench_function("n12_w48", |b| {
        b.iter(|| max_dimension_exhaustive(black_box(12), &[4, 8], DEFAULT_NODE_CAP).unwrap())
    });
    group.finish();
}

fn prover(c: &mut Criterion) {
    let mut group = c.benchmark_group("prover");
    group.sample_size(10);
    group.bench_function("main_bound", |b| b.iter(verify_main_bound));
    group.finish();
}

criterion_group!(benches, weight_distribution, macwilliams, search, prover);
criterion_main!(benches);
