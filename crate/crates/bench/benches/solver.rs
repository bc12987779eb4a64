use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use polyzero_bench::{random_polynomial, random_real_polynomial};
use polyzero_core::realroots::count_real_roots;
use polyzero_core::rootsolve::{solve_roots, DEFAULT_MAX_ITER, DEFAULT_TOL};

fn solve(c: &mut Criterion) {
    let mut g = c.benchmark_group("solve_roots");
    g.sample_size(10);
    for n in [100, 500, 1000] {
        let p = random_polynomial("complex_gaussian", n, 0);
        g.bench_with_input(BenchmarkId::new("complex_gaussian", n), &p, |b, p| {
            b.iter(|| solve_roots(black_box(p), DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap())
        });
    }
    let p = random_polynomial("exp_half_cauchy", 200, 0);
    g.bench_function("exp_half_cauchy/200", |b| {
        b.iter(|| solve_roots(black_box(&p), DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap())
    });
    g.finish();
}

fn real_count(c: &mut Criterion) {
    let mut g = c.benchmark_group("count_real_roots");
    g.sample_size(10);
    for n in [100, 400, 1600] {
        let p = random_real_polynomial(n, 0);
        g.bench_with_input(BenchmarkId::new("gaussian", n), &p, |b, p| {
            b.iter(|| count_real_roots(black_box(p)).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, solve, real_count);
criterion_main!(benches);
