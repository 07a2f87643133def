use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use frobgp_bench::{algebra, extension, sample_matrix, sample_module};
use frobgp_core::corpus::standard_modules;
use frobgp_core::frobenius::{is_frobenius_extension, verify_gpd_transfer};
use frobgp_core::homology::{ext_dims, gorenstein_profile, resolve_projective, totalize_quasi_bicomplex};
use frobgp_core::modrep::structural_modules;
use frobgp_core::FieldSpec;

fn linear_algebra(c: &mut Criterion) {
    for (label, field, n) in [
        ("f2", FieldSpec::prime(2), 40),
        ("f7", FieldSpec::prime(7), 40),
        ("q", FieldSpec::rationals(), 12),
    ] {
        let m = sample_matrix(field, n, 7);
        c.bench_function(&format!("rref {n}x{n} {label}"), |b| b.iter(|| black_box(&m).rref()));
    }
}

fn resolutions(c: &mut Criterion) {
    let m = structural_modules(&algebra("nakayama")).unwrap().classes[0]
        .simple
        .clone();
    c.bench_function("resolve nakayama depth 8", |b| {
        b.iter(|| resolve_projective(black_box(&m), 8).unwrap())
    });
    let x = sample_module("A2[x]/x^2", 2, 5);
    let y = sample_module("A2[x]/x^2", 1, 6);
    c.bench_function("ext A2[x]/x^2 up to 3", |b| {
        b.iter(|| ext_dims(black_box(&x), black_box(&y), 3).unwrap())
    });
}

fn profiles(c: &mut Criterion) {
    let a = algebra("M2(F2[x]/x^2)");
    c.bench_function("profile M2(F2[x]/x^2)", |b| {
        b.iter(|| gorenstein_profile(black_box(&a), 20).unwrap())
    });
    let a2 = algebra("A2");
    let p = gorenstein_profile(&a2, 20).unwrap();
    let s = sample_module("A2", 1, 1);
    c.bench_function("totalize A2 module", |b| {
        b.iter(|| totalize_quasi_bicomplex(black_box(&s), &p).unwrap())
    });
}

fn frobenius(c: &mut Criterion) {
    let e = extension("A2-A2[x]/x^2");
    c.bench_function("frobenius A2 in A2[x]/x^2", |b| {
        b.iter(|| is_frobenius_extension(black_box(&e), 0).unwrap())
    });
    let total = standard_modules(e.total()).unwrap();
    let base = standard_modules(e.base()).unwrap();
    let mut group = c.benchmark_group("transfer");
    group.sample_size(10);
    group.bench_function("A2 in A2[x]/x^2", |b| {
        b.iter(|| verify_gpd_transfer(black_box(&e), &total, &base, 20, 0).unwrap())
    });
    group.finish();
}

criterion_group!(benches, linear_algebra, resolutions, profiles, frobenius);
criterion_main!(benches);
