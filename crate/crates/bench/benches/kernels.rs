//! Wall-time comparisons of the computational kernels: the two Bernoulli
//! routes, fast doubling against naive Fibonacci iteration, and the
//! Cauchy-product core of the series oracle. Correctness is asserted
//! once up front; the benchmarks then measure time only.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fibbern_core::bernoulli::{bernoulli_akiyama_tanigawa, bernoulli_sequence_recurrence};
use fibbern_core::egf::{egf_exp, egf_hyperbolic, fib_egf, HyperbolicKind};
use fibbern_core::exact::QuadExt;
use fibbern_core::sequences::{fib, fib_iterative};
use std::hint::black_box;

fn bench_bernoulli(c: &mut Criterion) {
    for n in [50usize, 100, 200] {
        assert_eq!(
            bernoulli_sequence_recurrence(n)[n],
            bernoulli_akiyama_tanigawa(n)
        );
    }
    let mut group = c.benchmark_group("bernoulli");
    for n in [50usize, 100, 200] {
        group.bench_with_input(BenchmarkId::new("recurrence", n), &n, |b, &n| {
            b.iter(|| black_box(bernoulli_sequence_recurrence(n)))
        });
        group.bench_with_input(BenchmarkId::new("akiyama_tanigawa", n), &n, |b, &n| {
            b.iter(|| black_box(bernoulli_akiyama_tanigawa(n)))
        });
    }
    group.finish();
}

fn bench_fib(c: &mut Criterion) {
    for n in [1_000i64, 100_000] {
        assert_eq!(fib(n), fib_iterative(n));
    }
    let mut group = c.benchmark_group("fib");
    for n in [1_000i64, 10_000, 100_000] {
        group.bench_with_input(BenchmarkId::new("fast_doubling", n), &n, |b, &n| {
            b.iter(|| black_box(fib(n)))
        });
        group.bench_with_input(BenchmarkId::new("naive_iteration", n), &n, |b, &n| {
            b.iter(|| black_box(fib_iterative(n)))
        });
    }
    group.finish();
}

fn bench_egf_mul(c: &mut Criterion) {
    let mut group = c.benchmark_group("egf_mul");
    for order in [16usize, 32, 64] {
        let f = fib_egf(1, order);
        let e = egf_exp(&QuadExt::from_int(1), order);
        group.bench_with_input(BenchmarkId::new("fib_times_exp", order), &order, |b, _| {
            b.iter(|| black_box(f.mul(&e)))
        });
        let coth = egf_hyperbolic(HyperbolicKind::Coth, &QuadExt::alpha(), order).unwrap();
        group.bench_with_input(BenchmarkId::new("exp_times_coth", order), &order, |b, _| {
            b.iter(|| black_box(e.mul(&coth)))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_bernoulli, bench_fib, bench_egf_mul);
criterion_main!(benches);
