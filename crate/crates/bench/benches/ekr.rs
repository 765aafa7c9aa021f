use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ekr_bench::dense_triples;
use ekr_core::{
    brute_alpha, psd_certify, verify_equality, wilson_descriptor, EqualityMode, Rational, SchemeParams,
    DEFAULT_MATERIALIZE_CAP,
};

fn coefficient_sweep(c: &mut Criterion) {
    let grid = SchemeParams::grid(24, 8);
    c.bench_function("coefficient_sweep_24_8", |b| {
        b.iter(|| {
            for &p in &grid {
                let r = verify_equality(p, EqualityMode::Coefficients, DEFAULT_MATERIALIZE_CAP).unwrap();
                black_box(r.equal);
            }
        })
    });
}

fn materialize(c: &mut Criterion) {
    let mut g = c.benchmark_group("materialize");
    for p in dense_triples() {
        let d = wilson_descriptor(p).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(p), &d, |b, d| {
            b.iter(|| black_box(d.materialize(DEFAULT_MATERIALIZE_CAP).unwrap()))
        });
    }
    g.finish();
}

fn shifted_psd(c: &mut Criterion) {
    let mut g = c.benchmark_group("psd_certify_shifted");
    g.sample_size(10);
    for p in dense_triples() {
        let m = wilson_descriptor(p).unwrap().materialize(DEFAULT_MATERIALIZE_CAP).unwrap().shifted(&Rational::one());
        g.bench_with_input(BenchmarkId::from_parameter(p), &m, |b, m| b.iter(|| black_box(psd_certify(m).unwrap())));
    }
    g.finish();
}

fn alpha(c: &mut Criterion) {
    let mut g = c.benchmark_group("brute_alpha");
    g.sample_size(10);
    for (n, k, t) in [(7, 3, 2), (8, 3, 1), (8, 4, 2)] {
        let p = SchemeParams::new(n, k, t).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(p), &p, |b, &p| {
            b.iter(|| black_box(brute_alpha(p, 100).unwrap().alpha))
        });
    }
    g.finish();
}

criterion_group!(benches, coefficient_sweep, materialize, shifted_psd, alpha);
criterion_main!(benches);
