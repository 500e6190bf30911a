use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use markov_core::conjectures::{verify_family, SlopeTable};
use markov_core::counting::{count_triples, count_triples_parallel};
use markov_core::indexing::{markov_of_slope, markov_of_slope_via_trace};
use markov_core::norm::norm_real;
use markov_core::triples::walk_tree;
use markov_core::{Family, Slope};
use num_bigint::BigUint;

fn indexing(c: &mut Criterion) {
    let mut g = c.benchmark_group("slope_to_markov");
    for (p, q) in [(13u64, 34u64), (377, 987), (1, 500)] {
        let s = Slope::new(p, q).unwrap();
        g.bench_with_input(BenchmarkId::new("descent", s), &s, |b, &s| {
            b.iter(|| markov_of_slope(black_box(s)))
        });
        g.bench_with_input(BenchmarkId::new("trace", s), &s, |b, &s| {
            b.iter(|| markov_of_slope_via_trace(black_box(s)).unwrap())
        });
    }
    g.finish();
}

fn tree(c: &mut Criterion) {
    c.bench_function("walk_tree depth 14", |b| {
        b.iter(|| {
            let mut n = 0u64;
            walk_tree(14, |_, _| {
                n += 1;
                true
            });
            n
        })
    });
    c.bench_function("slope table q ≤ 300", |b| {
        b.iter(|| SlopeTable::new(black_box(300)))
    });
}

fn counting(c: &mut Criterion) {
    let r = BigUint::from(10u32).pow(60);
    c.bench_function("count_triples 10^60", |b| {
        b.iter(|| count_triples(black_box(&r)))
    });
    c.bench_function("count_triples_parallel 10^60", |b| {
        b.iter(|| count_triples_parallel(black_box(&r)))
    });
}

fn norm(c: &mut Criterion) {
    c.bench_function("norm_real golden direction", |b| {
        b.iter(|| norm_real(black_box(1.618033988749895), black_box(1.0), 1e-9).unwrap())
    });
}

fn verify(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify_family");
    g.sample_size(10);
    for family in [Family::Numerator, Family::Denominator, Family::Sum] {
        g.bench_function(family.tag(), |b| {
            b.iter(|| verify_family(family, black_box(150)).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, indexing, tree, counting, norm, verify);
criterion_main!(benches);
