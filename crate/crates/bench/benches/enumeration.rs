use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use b1_core::algebra::algebra_zoo;
use b1_core::enumerate::lattices;
use b1_core::free::automorphisms;
use b1_core::monogenic::enumerate_monogenic;
use b1_core::polynomial::{maxspec, Battery, Variables};

fn monogenic(c: &mut Criterion) {
    let mut g = c.benchmark_group("monogenic");
    g.sample_size(10);
    for n in [5, 6] {
        g.bench_function(format!("n={n}"), |b| b.iter(|| enumerate_monogenic(black_box(n)).unwrap()));
    }
    g.finish();
}

fn lattice_enumeration(c: &mut Criterion) {
    c.bench_function("lattices n=7", |b| b.iter(|| lattices(black_box(7))));
}

fn algebras(c: &mut Criterion) {
    let mut g = c.benchmark_group("algebra zoo");
    g.sample_size(10);
    g.bench_function("size<=5", |b| b.iter(|| algebra_zoo(black_box(5)).unwrap()));
    g.finish();
}

fn spectrum(c: &mut Criterion) {
    let vars = Variables::numbered(4);
    let battery = Battery::exhaustive(&vars);
    c.bench_function("maxspec n=4", |b| b.iter(|| maxspec(&vars, black_box(&battery)).unwrap()));
}

fn free_automorphisms(c: &mut Criterion) {
    c.bench_function("automorphisms n=5", |b| b.iter(|| automorphisms(black_box(5)).unwrap()));
}

criterion_group!(benches, monogenic, lattice_enumeration, algebras, spectrum, free_automorphisms);
criterion_main!(benches);
