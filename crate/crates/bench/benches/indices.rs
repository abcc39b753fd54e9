use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use sombor_bench::fixtures;
use sombor_core::{compute_all, encode_graph6, parse_graph6, sombor_coindex};

fn indices(c: &mut Criterion) {
    let mut group = c.benchmark_group("indices");
    for (name, g) in fixtures() {
        group.bench_with_input(BenchmarkId::new("compute_all", &name), &g, |b, g| {
            b.iter(|| compute_all(black_box(g)))
        });
        group.bench_with_input(BenchmarkId::new("sombor_coindex", &name), &g, |b, g| {
            b.iter(|| sombor_coindex(black_box(g)))
        });
    }
    group.finish();
}

fn graph6(c: &mut Criterion) {
    let mut group = c.benchmark_group("graph6");
    for (name, g) in fixtures() {
        let Ok(code) = encode_graph6(&g) else {
            continue;
        };
        group.bench_with_input(BenchmarkId::new("parse", &name), &code, |b, s| {
            b.iter(|| parse_graph6(black_box(s)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("encode", &name), &g, |b, g| {
            b.iter(|| encode_graph6(black_box(g)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, indices, graph6);
criterion_main!(benches);
