use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use super::model::{qg_rate, LocalizationModel};
use super::point::{ratio_r, FeasibilityPoint, Ratio, DEFAULT_PI_TO_MINUS};
use crate::constants::AtomSpecies;
use crate::decoherence::scattering_rates;
use crate::error::{ensure_non_negative, ensure_positive, Error, Result};
use crate::transport::{LatticeConfig, TrajectoryProfile};

pub const SWEEP_CSV_HEADER: &str =
    "omega_minus,omega_pi,delta,tau,d_eff,gamma_sc,gamma_qg,ratio,trap_temp_K,accel_ok,detuning_ok";

/// Ω_− × Δ grid at a fixed effective distance and round-trip time. The ramp
/// is the symmetric one (T = τ/2) scaled to reach `d_eff`.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepGrid {
    pub omega_minus: Vec<f64>,
    pub delta: Vec<f64>,
    pub pi_to_minus: f64,
    pub tau: f64,
    pub d_eff: f64,
    pub species: AtomSpecies,
}

impl SweepGrid {
    pub fn new(omega_minus: Vec<f64>, delta: Vec<f64>, tau: f64, d_eff: f64, species: AtomSpecies) -> Self {
        SweepGrid { omega_minus, delta, pi_to_minus: DEFAULT_PI_TO_MINUS, tau, d_eff, species }
    }
}

/// Ω_− at which r = 1 on one detuning curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Crossing {
    pub delta: f64,
    pub omega_minus: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    /// Ordered by Δ then Ω_−, both ascending.
    pub points: Vec<FeasibilityPoint>,
    /// One per detuning, ascending in Δ.
    pub crossings: Vec<Crossing>,
}

/// Evaluates every (Δ, Ω_−) pair in parallel on the current rayon pool.
pub fn sweep(grid: &SweepGrid) -> Result<SweepResult> {
    if grid.omega_minus.is_empty() || grid.delta.is_empty() {
        return Err(Error::domain("grid", "omega_minus and delta grids must be non-empty"));
    }
    ensure_non_negative("pi_to_minus", grid.pi_to_minus)?;
    ensure_positive("tau", grid.tau)?;
    let profile = TrajectoryProfile::for_effective_distance(grid.d_eff, grid.tau / 2.0, 0.0)?;
    let mut omegas = grid.omega_minus.clone();
    let mut deltas = grid.delta.clone();
    omegas.sort_by(f64::total_cmp);
    deltas.sort_by(f64::total_cmp);

    let pairs: Vec<(f64, f64)> = deltas.iter().flat_map(|&d| omegas.iter().map(move |&o| (d, o))).collect();
    let points = pairs
        .par_iter()
        .map(|&(delta, omega)| {
            let config = LatticeConfig::new(grid.pi_to_minus * omega, omega, delta, grid.species.clone())?;
            ratio_r(&config, &profile)
        })
        .collect::<Result<Vec<_>>>()?;

    let gamma_qg = qg_rate(&LocalizationModel::for_species(&grid.species), grid.d_eff)?;
    let crossings = deltas
        .iter()
        .map(|&delta| {
            // Γ_sc ∝ Ω_−² at fixed Ω_π/Ω_−.
            let per_omega2 = scattering_rates(grid.pi_to_minus, 1.0, delta, &grid.species)?.gamma_sc;
            Ok(Crossing { delta, omega_minus: (gamma_qg / per_omega2).sqrt() })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepResult { points, crossings })
}

#[derive(Serialize)]
struct SweepRow {
    omega_minus: f64,
    omega_pi: f64,
    delta: f64,
    tau: f64,
    d_eff: f64,
    gamma_sc: f64,
    gamma_qg: f64,
    ratio: Ratio,
    #[serde(rename = "trap_temp_K")]
    trap_temp_k: f64,
    accel_ok: bool,
    detuning_ok: bool,
}

impl From<&FeasibilityPoint> for SweepRow {
    fn from(p: &FeasibilityPoint) -> Self {
        SweepRow {
            omega_minus: p.omega_minus,
            omega_pi: p.omega_pi,
            delta: p.delta,
            tau: p.profile.tau(),
            d_eff: p.d_eff,
            gamma_sc: p.gamma_sc,
            gamma_qg: p.gamma_qg_rate,
            ratio: p.ratio,
            trap_temp_k: p.trap_temp,
            accel_ok: p.accel_ok,
            detuning_ok: p.detuning_ok,
        }
    }
}

/// Writes rows under [`SWEEP_CSV_HEADER`]; values in SI units (rad/s, s, m, K).
pub fn write_sweep_csv<W: Write>(points: &[FeasibilityPoint], out: W) -> Result<()> {
    let mut writer = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    if points.is_empty() {
        writer.write_record(SWEEP_CSV_HEADER.split(','))?;
    }
    for p in points {
        writer.serialize(SweepRow::from(p))?;
    }
    writer.flush().map_err(|e| Error::Csv(e.to_string()))
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;
    use crate::constants::species_rb87;

    fn fig2a_grid() -> SweepGrid {
        let omegas = (0..=40).map(|i| 1e8 * 10f64.powf((i as f64 - 20.0) / 10.0)).collect();
        let deltas = vec![2.0 * PI * 1e12, 2.0 * PI * 1e10, 2.0 * PI * 1e11];
        SweepGrid::new(omegas, deltas, 1.0, 0.1, species_rb87())
    }

    #[test]
    fn ordering_and_monotone_curves() {
        let result = sweep(&fig2a_grid()).unwrap();
        assert_eq!(result.points.len(), 123);
        for w in result.points.windows(2) {
            assert!((w[0].delta, w[0].omega_minus) < (w[1].delta, w[1].omega_minus));
        }
        for curve in result.points.chunks(41) {
            for w in curve.windows(2) {
                assert!(w[1].ratio.value() < w[0].ratio.value());
            }
        }
        for w in result.crossings.windows(2) {
            assert!(w[1].omega_minus > w[0].omega_minus);
        }
    }

    #[test]
    fn crossing_is_unit_ratio() {
        let grid = fig2a_grid();
        let result = sweep(&grid).unwrap();
        for c in &result.crossings {
            let mut g = grid.clone();
            g.omega_minus = vec![c.omega_minus];
            g.delta = vec![c.delta];
            let r = sweep(&g).unwrap().points[0].ratio.value();
            assert!((r - 1.0).abs() < 1e-12, "{r}");
        }
    }

    #[test]
    fn detuning_squared_scaling() {
        let result = sweep(&fig2a_grid()).unwrap();
        let (low, rest) = result.points.split_at(41);
        let (mid, high) = rest.split_at(41);
        for i in 0..41 {
            let r0 = low[i].ratio.value();
            assert!((mid[i].ratio.value() / r0 - 100.0).abs() / 100.0 < 1e-9);
            assert!((high[i].ratio.value() / r0 - 1e4).abs() / 1e4 < 1e-9);
        }
    }

    #[test]
    fn single_point_matches_ratio_r() {
        let mut g = fig2a_grid();
        g.omega_minus = vec![1e8];
        g.delta = vec![2.0 * PI * 1e12];
        let p = &sweep(&g).unwrap().points[0];
        let config = LatticeConfig::new(1e8 / 3.0, 1e8, 2.0 * PI * 1e12, species_rb87()).unwrap();
        let profile = TrajectoryProfile::for_effective_distance(0.1, 0.5, 0.0).unwrap();
        assert_eq!(*p, ratio_r(&config, &profile).unwrap());
    }

    #[test]
    fn csv_header_is_stable() {
        let result = sweep(&fig2a_grid()).unwrap();
        let mut buf = Vec::new();
        write_sweep_csv(&result.points, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().next().unwrap(), SWEEP_CSV_HEADER);
        let mut empty = Vec::new();
        write_sweep_csv(&[], &mut empty).unwrap();
        assert_eq!(String::from_utf8(empty).unwrap().trim_end(), SWEEP_CSV_HEADER);
    }

    #[test]
    fn empty_grid_rejected() {
        let mut g = fig2a_grid();
        g.delta.clear();
        assert!(sweep(&g).is_err());
    }
}
