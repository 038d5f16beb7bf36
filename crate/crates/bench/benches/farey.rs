use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use farey_core::maps::{find, lemma_injection, verify_map, LRWord, Params};
use farey_core::{cardinality_full_recursive, generate, mobius_sieve, Counter, SeqSpec};

fn generation(c: &mut Criterion) {
    let mut g = c.benchmark_group("generate");
    for n in [100, 1_000, 3_000] {
        g.bench_with_input(BenchmarkId::new("full", n), &n, |b, &n| {
            b.iter(|| generate(black_box(&SeqSpec::full(n))).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("bool", n), &n, |b, &n| {
            b.iter(|| generate(black_box(&SeqSpec::boolean(n, n / 2))).unwrap())
        });
    }
    g.finish();
}

fn counting(c: &mut Criterion) {
    let mut g = c.benchmark_group("count");
    g.bench_function("sieve 1e6", |b| {
        b.iter(|| mobius_sieve(black_box(1_000_000)).unwrap())
    });
    let counter = Counter::new(1_000_000).unwrap();
    g.bench_function("full 1e6 by sum", |b| {
        b.iter(|| counter.full(black_box(1_000_000)).unwrap())
    });
    g.bench_function("full 1e6 by recursion", |b| {
        b.iter(|| cardinality_full_recursive(black_box(1_000_000)).unwrap())
    });
    g.bench_function("differences 1e6", |b| {
        b.iter(|| {
            counter
                .differences(black_box(1_000_000), black_box(500_000))
                .unwrap()
        })
    });
    g.finish();
}

fn verification(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify");
    let eq35 = find("eq35")
        .unwrap()
        .instantiate(&Params::ms(8, 2))
        .unwrap();
    g.bench_function("eq35 m=8 s=2", |b| {
        b.iter(|| verify_map(black_box(&eq35)).unwrap())
    });
    let w: LRWord = "LRRLL".parse().unwrap();
    let lemma = lemma_injection(&w, 8, 8 << 5).unwrap();
    g.bench_function("word embedding s=5 m=8", |b| {
        b.iter(|| verify_map(black_box(&lemma)).unwrap())
    });
    g.finish();
}

criterion_group!(benches, generation, counting, verification);
criterion_main!(benches);
