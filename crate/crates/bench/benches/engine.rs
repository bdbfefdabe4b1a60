use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use lefschetz_bench::random_matrix;
use lefschetz_core::theorem::counterexample_ambient;
use lefschetz_core::{search_strong, FieldSpec, GradedAlgebra};

fn rank(c: &mut Criterion) {
    let mut g = c.benchmark_group("rank");
    for (name, field) in [
        ("QQ", FieldSpec::rationals()),
        ("GF32003", FieldSpec::prime(32003).unwrap()),
    ] {
        for n in [16, 48] {
            let m = random_matrix(field, n, 3, 1);
            g.bench_function(format!("{name}/{n}"), |b| b.iter(|| black_box(&m).rank()));
        }
    }
    g.finish();
}

fn quotient(c: &mut Criterion) {
    let mut g = c.benchmark_group("quotient_by_random_form");
    g.sample_size(10);
    let gf = FieldSpec::prime(32003).unwrap();
    let mci = GradedAlgebra::monomial_complete_intersection(gf, &[3, 3, 3]).unwrap();
    g.bench_function("mci333/deg3", |b| {
        b.iter(|| mci.quotient_by_random_form(3, 7).unwrap())
    });
    let ambient = counterexample_ambient(gf).unwrap();
    g.bench_function("mci44442/deg8", |b| {
        b.iter(|| ambient.quotient_by_random_form(8, 1).unwrap())
    });
    g.finish();
}

fn strong(c: &mut Criterion) {
    let mut g = c.benchmark_group("search_strong");
    g.sample_size(10);
    for (name, field) in [
        ("QQ", FieldSpec::rationals()),
        ("GF32003", FieldSpec::prime(32003).unwrap()),
    ] {
        let alg = GradedAlgebra::monomial_complete_intersection(field, &[3, 3, 4]).unwrap();
        g.bench_function(format!("{name}/mci334"), |b| {
            b.iter(|| search_strong(&alg, 8, 0).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, rank, quotient, strong);
criterion_main!(benches);
