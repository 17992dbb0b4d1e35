use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use eiscensus_bench::bench_sieve;
use eiscensus_core::{
    density_constants, enumerate_census, exact_set_counts, mobius_sum, CountFamily, FactorSieve,
    SelectorKind,
};

fn sieve_build(c: &mut Criterion) {
    c.bench_function("sieve/build_1e6", |b| {
        b.iter(|| FactorSieve::new(black_box(1_000_000)).unwrap())
    });
}

fn census(c: &mut Criterion) {
    let sieve = bench_sieve();
    let mut group = c.benchmark_group("census/enumerate_d3");
    for height in [10u64, 20] {
        group.bench_with_input(BenchmarkId::new("h", height), &height, |b, &h| {
            b.iter(|| enumerate_census(3, black_box(h), &sieve, 1).unwrap())
        });
    }
    group.bench_function("h20_workers4", |b| {
        b.iter(|| enumerate_census(3, black_box(20), &sieve, 4).unwrap())
    });
    group.finish();
}

fn exact_counting(c: &mut Criterion) {
    let sieve = bench_sieve();
    let mut group = c.benchmark_group("moebius/exact_set_counts_d3");
    for height in [1_000u64, 10_000] {
        group.bench_with_input(BenchmarkId::new("h", height), &height, |b, &h| {
            b.iter(|| exact_set_counts(3, black_box(h), &sieve).unwrap())
        });
    }
    group.finish();

    c.bench_function("moebius/sum_gprime_d3_h10000", |b| {
        b.iter(|| {
            mobius_sum(
                3,
                black_box(10_000),
                SelectorKind::AllNonunitCoprimeD,
                CountFamily::GPrime,
                &sieve,
            )
            .unwrap()
        })
    });
}

fn densities(c: &mut Criterion) {
    let sieve = bench_sieve();
    c.bench_function("density/constants_d3_1e6", |b| {
        b.iter(|| density_constants(3, black_box(1_000_000), &sieve).unwrap())
    });
}

criterion_group!(benches, sieve_build, census, exact_counting, densities);
criterion_main!(benches);
