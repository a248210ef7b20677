use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};

use f1_core::oracle::{hom_count_oracle_with, scheme_count_oracle_with};
use f1_core::spectrum::SpectrumLimits;
use f1_core::{exact_count, k0_q, smith_normal_form, zeta_polynomial, IntMatrix, OracleOptions, Presentation};

fn snf(c: &mut Criterion) {
    let mut rng = rand::rngs::StdRng::seed_from_u64(1);
    let mut group = c.benchmark_group("snf");
    for n in [4usize, 8, 12] {
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(-50..=50)).collect())
            .collect();
        let m = IntMatrix::from_rows(&rows);
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| {
            b.iter(|| smith_normal_form(black_box(m)))
        });
    }
    group.finish();
}

fn spectrum_and_zeta(c: &mut Criterion) {
    let mut group = c.benchmark_group("zeta");
    for x in f1_bench::schemes() {
        group.bench_with_input(BenchmarkId::new("polynomial", &x.name), &x, |b, x| {
            b.iter(|| zeta_polynomial(black_box(x)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("count_q64", &x.name), &x, |b, x| {
            b.iter(|| exact_count(black_box(x), 64).unwrap())
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(20);
    let free3 = Presentation::free(&["a", "b", "c"]);
    for threads in [1usize, 4] {
        let opts = OracleOptions {
            threads,
            ..OracleOptions::default()
        };
        group.bench_with_input(BenchmarkId::new("free3_k32", threads), &opts, |b, opts| {
            b.iter(|| hom_count_oracle_with(black_box(&free3), 32, opts).unwrap())
        });
    }
    let p2 = f1_core::scheme::proj_space(2);
    let opts = OracleOptions::default();
    group.bench_function("p2_q16", |b| {
        b.iter(|| scheme_count_oracle_with(black_box(&p2), 16, &opts, &SpectrumLimits::default()).unwrap())
    });
    group.finish();
}

fn k0(c: &mut Criterion) {
    let mut group = c.benchmark_group("k0");
    group.sample_size(10);
    for (name, base) in f1_bench::k_bases() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &base, |b, base| {
            b.iter(|| k0_q(black_box(base), 9).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, snf, spectrum_and_zeta, oracle, k0);
criterion_main!(benches);
