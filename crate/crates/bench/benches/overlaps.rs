use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use latticedec::decoherence::overlap_qg_trapezoid;
use latticedec::{overlap_qg_asymptotic, overlap_qg_quadrature, CollectiveNoiseStrength};

fn collective_overlaps(c: &mut Criterion) {
    let mut group = c.benchmark_group("collective_overlap");
    for &(n, gamma) in &[(1usize, 1.0), (100, 10.0), (10_000, 1e-3), (10_000, 100.0)] {
        let g = CollectiveNoiseStrength::new(gamma).unwrap();
        let label = format!("N={n},gamma={gamma}");
        group.bench_with_input(BenchmarkId::new("quadrature", &label), &(n, g), |b, &(n, g)| {
            b.iter(|| overlap_qg_quadrature(black_box(n), black_box(g)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("trapezoid", &label), &(n, g), |b, &(n, g)| {
            b.iter(|| overlap_qg_trapezoid(black_box(n), black_box(g)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("asymptotic", &label), &(n, g), |b, &(n, g)| {
            b.iter(|| overlap_qg_asymptotic(black_box(n), black_box(g)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, collective_overlaps);
criterion_main!(benches);
