use std::env;
use std::f64::consts::PI;

use anyhow::{anyhow, Context as _, Result};
use clap::Args;
use latticedec::feasibility::SWEEP_CSV_HEADER;
use latticedec::{sweep, FeasibilityPoint, SweepGrid, SweepResult};
use serde::{Deserialize, Serialize};
use serde_json::json;

use super::{detuning, warn_detuning, DEFAULT_D_EFF, DEFAULT_PI_TO_MINUS, DEFAULT_TAU};
use crate::config::{at_least, non_negative, positive};
use crate::output::{fmt_num, Cell, Table};
use crate::Context;

pub const THREADS_ENV: &str = "LATTICEDEC_THREADS";

#[derive(Debug, Clone, Default, Args, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepArgs {
    /// Smallest Ω_− in rad/s [default: 1e7]
    #[arg(long)]
    pub omega_min: Option<f64>,
    /// Largest Ω_− in rad/s [default: 1e9]
    #[arg(long)]
    pub omega_max: Option<f64>,
    /// Log-spaced Ω_− values from omega_min to omega_max [default: 41]
    #[arg(long)]
    pub omega_points: Option<usize>,
    /// Comma-separated detunings Δ/2π in Hz [default: 1e10,1e11,1e12]
    #[arg(long, value_delimiter = ',')]
    pub delta_hz: Option<Vec<f64>>,
    /// Ω_π/Ω_− [default: 1/3]
    #[arg(long)]
    pub pi_to_minus: Option<f64>,
    /// Round-trip time τ in s [default: 1]
    #[arg(long)]
    pub tau: Option<f64>,
    /// Effective separation d_eff in m [default: 0.1]
    #[arg(long)]
    pub d_eff: Option<f64>,
}

pub fn run(ctx: &Context, flags: &SweepArgs) -> Result<Table> {
    let args = ctx.file.resolve(flags)?;
    let omega_min = positive("omega_min", args.omega_min.unwrap_or(1e7))?;
    let omega_max = positive("omega_max", args.omega_max.unwrap_or(1e9))?;
    if omega_max < omega_min {
        return Err(anyhow!("invalid `omega_max`: must not be below omega_min"));
    }
    let points = at_least("omega_points", args.omega_points.unwrap_or(41), 1)?;
    let omegas = log_grid(omega_min, omega_max, points);
    let deltas = args
        .delta_hz
        .unwrap_or_else(|| vec![1e10, 1e11, 1e12])
        .into_iter()
        .map(detuning)
        .collect::<Result<Vec<_>>>()?;
    if deltas.is_empty() {
        return Err(anyhow!("invalid `delta_hz`: at least one detuning is required"));
    }
    let mut grid = SweepGrid::new(
        omegas,
        deltas,
        positive("tau", args.tau.unwrap_or(DEFAULT_TAU))?,
        positive("d_eff", args.d_eff.unwrap_or(DEFAULT_D_EFF))?,
        ctx.species.clone(),
    );
    grid.pi_to_minus = non_negative("pi_to_minus", args.pi_to_minus.unwrap_or(DEFAULT_PI_TO_MINUS))?;
    let result = run_sweep(&grid)?;
    let mut table = Table::new(&header());
    for p in &result.points {
        table.push(row(p));
    }
    add_crossings(&mut table, &result);
    Ok(table)
}

/// `points` values from `lo` to `hi`, equally spaced in log.
pub fn log_grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    if points == 1 {
        return vec![lo];
    }
    let span = (hi / lo).ln();
    (0..points).map(|i| lo * (span * i as f64 / (points - 1) as f64).exp()).collect()
}

/// Runs the sweep on a pool capped by `LATTICEDEC_THREADS` when set.
pub fn run_sweep(grid: &SweepGrid) -> Result<SweepResult> {
    for &delta in &grid.delta {
        warn_detuning(delta, &grid.species);
    }
    let result = match env::var(THREADS_ENV) {
        Ok(value) => {
            let threads = value
                .trim()
                .parse::<usize>()
                .ok()
                .filter(|&n| n > 0)
                .ok_or_else(|| anyhow!("invalid `{THREADS_ENV}`: expected a positive integer, got `{value}`"))?;
            let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().context("thread pool")?;
            pool.install(|| sweep(grid))
        }
        Err(_) => sweep(grid),
    };
    Ok(result?)
}

pub fn header() -> Vec<&'static str> {
    SWEEP_CSV_HEADER.split(',').collect()
}

pub fn row(p: &FeasibilityPoint) -> Vec<Cell> {
    vec![
        p.omega_minus.into(),
        p.omega_pi.into(),
        p.delta.into(),
        p.profile.tau().into(),
        p.d_eff.into(),
        p.gamma_sc.into(),
        p.gamma_qg_rate.into(),
        p.ratio.value().into(),
        p.trap_temp.into(),
        p.accel_ok.into(),
        p.detuning_ok.into(),
    ]
}

/// r = 1 crossings: JSON summary entries, stderr lines for CSV.
pub fn add_crossings(table: &mut Table, result: &SweepResult) {
    let list: Vec<_> = result
        .crossings
        .iter()
        .map(|c| json!({ "delta": c.delta, "omega_minus": c.omega_minus }))
        .collect();
    table.summarize_json("crossings", list.into());
    for c in &result.crossings {
        table.note(format!(
            "r = 1 at omega_minus = {} rad/s for delta/2pi = {} Hz",
            fmt_num(c.omega_minus),
            fmt_num(c.delta / (2.0 * PI))
        ));
    }
}
