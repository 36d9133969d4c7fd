use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use ellimod_bench::generic_point;
use ellimod_core::{sl_class_from_mu, sl_classify, wp_space, Kind, RootSystem};

fn weight_tables(c: &mut Criterion) {
    let e8 = RootSystem::get(Kind::E, 8).unwrap();
    c.bench_function("wp weights E8", |b| b.iter(|| wp_space(black_box(&e8))));
}

fn canonicalization(c: &mut Criterion) {
    let f4 = generic_point(Kind::F, 4);
    c.bench_function("canonicalize F4 generic", |b| {
        b.iter(|| black_box(&f4).canonicalize())
    });
    let e6 = generic_point(Kind::E, 6);
    c.bench_function("canonicalize E6 generic", |b| {
        b.iter(|| black_box(&e6).canonicalize())
    });
}

fn orbit_enumeration(c: &mut Criterion) {
    let d5 = generic_point(Kind::D, 5);
    c.bench_function("enumerate orbit D5 generic", |b| {
        b.iter(|| black_box(&d5).enumerate_orbit(10_000).unwrap().len())
    });
    let d6 = RootSystem::get(Kind::D, 6).unwrap();
    let rho = vec![1i64; 6];
    c.bench_function("weight orbit D6 regular", |b| {
        b.iter(|| d6.weight_orbit(black_box(&rho), 50_000).unwrap().len())
    });
}

fn root_scans(c: &mut Criterion) {
    let e8 = generic_point(Kind::E, 8);
    c.bench_function("vanishing roots E8 generic", |b| {
        b.iter(|| black_box(&e8).split_aut_dim())
    });
}

fn classification(c: &mut Criterion) {
    let a7 = generic_point(Kind::A, 7);
    let v = sl_class_from_mu(&a7).unwrap();
    c.bench_function("classify SL(8) regular", |b| {
        b.iter(|| sl_classify(black_box(&v)).unwrap())
    });
}

criterion_group!(
    benches,
    weight_tables,
    canonicalization,
    orbit_enumeration,
    root_scans,
    classification
);
criterion_main!(benches);
