use std::f64::consts::PI;
use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use latticedec::transport::{rabi_for_acceleration, trap_frequency};
use latticedec::{
    lindblad_evolve, required_peak_acceleration, simulate_eom, species_rb87, sweep, DensityMatrix, LatticeConfig,
    SweepGrid, TrajectoryProfile,
};

fn master_equation(c: &mut Criterion) {
    let mut group = c.benchmark_group("lindblad_1000_steps");
    for n in [1usize, 2, 4] {
        let rho = DensityMatrix::product_plus(n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &rho, |b, rho| {
            b.iter(|| lindblad_evolve(black_box(rho), 0.5, |_| 0.3, 1.0, 1e-3).unwrap())
        });
    }
    group.finish();
}

fn equation_of_motion(c: &mut Criterion) {
    let rb = species_rb87();
    let profile = TrajectoryProfile::new(1e-3, 1e-3, 0.0).unwrap();
    let delta = 2.0 * PI * 1e12;
    let omega = rabi_for_acceleration(2.0 * required_peak_acceleration(&profile), delta, &rb).unwrap();
    let config = LatticeConfig::new(omega / 3.0, omega, delta, rb).unwrap();
    let dt = 0.01 * 2.0 * PI / trap_frequency(&config);
    c.bench_function("eom_desk_ramp", |b| {
        b.iter(|| simulate_eom(black_box(&config), &profile, 0.0, 0.0, dt).unwrap())
    });
}

fn parameter_sweep(c: &mut Criterion) {
    let omegas = (0..=40).map(|i| 1e8 * 10f64.powf((i as f64 - 20.0) / 10.0)).collect();
    let deltas = [1e10, 1e11, 1e12].iter().map(|hz| 2.0 * PI * hz).collect();
    let grid = SweepGrid::new(omegas, deltas, 1.0, 0.1, species_rb87());
    c.bench_function("sweep_41x3", |b| b.iter(|| sweep(black_box(&grid)).unwrap()));
}

criterion_group!(benches, master_equation, equation_of_motion, parameter_sweep);
criterion_main!(benches);
