use criterion::{criterion_group, criterion_main, Criterion};
use lr3_core::chamber::{ChamberComplex, LrPoint};
use lr3_core::ray_symmetry::ray_graph;
use lr3_core::{full_symmetry_group, lr_coefficient, Partition};
use std::hint::black_box;

fn evaluation(c: &mut Criterion) {
    let cx = ChamberComplex::standard();
    let points: Vec<LrPoint> = (0..1000)
        .map(|i| LrPoint([i % 9, i % 4, i % 7, i % 3, i % 11, i % 5]))
        .collect();
    c.bench_function("evaluate/1000 points", |b| {
        b.iter(|| {
            points
                .iter()
                .map(|p| cx.evaluate(black_box(*p)))
                .sum::<u64>()
        })
    });
    let p = |v: Vec<u32>| Partition::new(v).unwrap();
    let (lam, mu, nu) = (p(vec![6, 3]), p(vec![5, 2]), p(vec![8, 5, 3]));
    c.bench_function("lr_coefficient/(6,3)(5,2)(8,5,3)", |b| {
        b.iter(|| lr_coefficient(black_box(&lam), black_box(&mu), black_box(&nu)))
    });
}

fn symmetries(c: &mut Criterion) {
    let cx = ChamberComplex::standard();
    let graph = ray_graph(cx).unwrap();
    c.bench_function("ray graph automorphisms", |b| {
        b.iter(|| graph.automorphisms().len())
    });
    let mut group = c.benchmark_group("slow");
    group.sample_size(10);
    group.bench_function("full_symmetry_group", |b| {
        b.iter(|| full_symmetry_group(cx).unwrap().elements.len())
    });
    group.bench_function("cross_validate(3)", |b| {
        b.iter(|| cx.cross_validate(black_box(3)))
    });
    group.finish();
}

criterion_group!(benches, evaluation, symmetries);
criterion_main!(benches);
