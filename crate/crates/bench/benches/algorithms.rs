use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use tricyclic::annular::{is_three_annular, synthesize_drawing};
use tricyclic::builder::{extract_build_script, random_pinched_sum, random_safely_buildable};
use tricyclic::decomposition::decompose;
use tricyclic::fixtures;
use tricyclic::recognition::recognize_three_cyclic;
use tricyclic::weighting::{find_weak_double_cycle, zero_one_weighting};

fn recognition(c: &mut Criterion) {
    let mut group = c.benchmark_group("recognize");
    for n in [10, 20, 40] {
        let g = random_safely_buildable(1, n).unwrap();
        group.bench_with_input(BenchmarkId::new("safe", n), &g, |b, g| b.iter(|| recognize_three_cyclic(black_box(g))));
        let g = random_pinched_sum(1, n / 5, 5).unwrap();
        group.bench_with_input(BenchmarkId::new("pinched", n), &g, |b, g| {
            b.iter(|| recognize_three_cyclic(black_box(g)))
        });
    }
    group.finish();
}

fn structure(c: &mut Criterion) {
    let g = random_pinched_sum(2, 6, 6).unwrap();
    c.bench_function("decompose/pinched_sum", |b| b.iter(|| decompose(black_box(&g))));
    let g = random_safely_buildable(2, 30).unwrap();
    c.bench_function("extract_build_script/30", |b| b.iter(|| extract_build_script(black_box(&g))));
    c.bench_function("is_three_annular/30", |b| b.iter(|| is_three_annular(black_box(&g))));
    let g = fixtures::glue6();
    c.bench_function("synthesize_drawing/glue6", |b| b.iter(|| synthesize_drawing(black_box(&g))));
}

fn weighting(c: &mut Criterion) {
    let g = random_safely_buildable(3, 12).unwrap();
    c.bench_function("zero_one_weighting/12", |b| b.iter(|| zero_one_weighting(black_box(&g))));
    let mut group = c.benchmark_group("find_weak_double_cycle");
    for k in [3, 5] {
        let g = fixtures::double_cycle(k);
        group.bench_with_input(BenchmarkId::from_parameter(k), &g, |b, g| b.iter(|| find_weak_double_cycle(black_box(g))));
    }
    group.finish();
}

criterion_group!(benches, recognition, structure, weighting);
criterion_main!(benches);
