use criterion::{criterion_group, criterion_main, Criterion};
use homcode_bench::group;
use homcode_core::{formula, homspace, structure};
use std::hint::black_box;

fn enumeration(c: &mut Criterion) {
    let a5 = group("A5");
    let a6 = group("A6");
    let s4 = group("S4");
    c.bench_function("hom A5 -> A5", |b| {
        b.iter(|| homspace::enumerate_homomorphisms(black_box(&a5), &a5).unwrap())
    });
    c.bench_function("hom S4 -> S4", |b| {
        b.iter(|| homspace::enumerate_homomorphisms(black_box(&s4), &s4).unwrap())
    });
    c.bench_function("hom A5 -> A6", |b| {
        b.iter(|| homspace::enumerate_homomorphisms(black_box(&a5), &a6).unwrap())
    });
}

fn lambda(c: &mut Criterion) {
    let a5 = group("A5");
    let d12 = group("D12");
    let s4 = group("S4");
    c.bench_function("lambda brute A5 A5", |b| {
        b.iter(|| homspace::lambda_bruteforce(black_box(&a5), &a5).unwrap())
    });
    c.bench_function("lambda brute D12 S4", |b| {
        b.iter(|| homspace::lambda_bruteforce(black_box(&d12), &s4).unwrap())
    });
    c.bench_function("lambda formula D12 S4", |b| {
        b.iter(|| formula::lambda_formula(black_box(&d12), &s4).unwrap())
    });
}

fn lattice(c: &mut Criterion) {
    let s5 = group("S5");
    let s4c2 = group("S4xC2");
    c.bench_function("normal subgroups S5", |b| {
        b.iter(|| structure::normal_subgroups(black_box(&s5)))
    });
    c.bench_function("all subgroups S4xC2", |b| {
        b.iter(|| structure::all_subgroups(black_box(&s4c2)).unwrap())
    });
}

criterion_group!(benches, enumeration, lambda, lattice);
criterion_main!(benches);
