use std::f64::consts::PI;

use anyhow::{bail, Result};
use clap::Args;
use latticedec::transport::{rabi_for_acceleration, trap_frequency};
use latticedec::{
    max_acceleration, required_peak_acceleration, simulate_eom, EomResult, LatticeConfig, StaticLattice,
    TrajectoryProfile,
};
use serde::{Deserialize, Serialize};

use super::{detuning, warn_detuning, DEFAULT_DELTA_HZ, DEFAULT_PI_TO_MINUS};
use crate::config::{non_negative, positive};
use crate::output::{fmt_num, Table};
use crate::Context;

#[derive(Debug, Clone, Default, Args, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransportArgs {
    /// Peak separation d_max in m [default: 1e-3]
    #[arg(long)]
    pub d_max: Option<f64>,
    /// Duration T of each ramp in s [default: 1e-3]
    #[arg(long)]
    pub ramp_time: Option<f64>,
    /// Hold time t_w at d_max in s [default: 0]
    #[arg(long)]
    pub wait_time: Option<f64>,
    /// Detuning Δ/2π in Hz [default: 1e12]
    #[arg(long)]
    pub delta_hz: Option<f64>,
    /// σ⁻ Rabi frequency Ω_− in rad/s; conflicts with accel_ratio
    #[arg(long)]
    pub omega_minus: Option<f64>,
    /// Choose Ω_− so that a_peak/a_max equals this value [default: 0.5]
    #[arg(long)]
    pub accel_ratio: Option<f64>,
    /// Ω_π/Ω_− [default: 1/3]
    #[arg(long)]
    pub pi_to_minus: Option<f64>,
    /// Integration step in s [default: 1% of the trap period]
    #[arg(long)]
    pub dt: Option<f64>,
    /// Hold the lattice still for the duration of the ramp
    #[arg(long, num_args = 0..=1, default_missing_value = "true")]
    pub r#static: Option<bool>,
    /// Initial atom position in m [default: 0]
    #[arg(long)]
    pub x0: Option<f64>,
    /// Initial atom velocity in m/s [default: 0]
    #[arg(long)]
    pub v0: Option<f64>,
}

pub const HEADER: [&str; 4] = ["t", "x_atom", "x_lattice", "separation"];

pub fn run(ctx: &Context, flags: &TransportArgs) -> Result<Table> {
    let args = ctx.file.resolve(flags)?;
    let profile = TrajectoryProfile::new(
        positive("d_max", args.d_max.unwrap_or(1e-3))?,
        positive("ramp_time", args.ramp_time.unwrap_or(1e-3))?,
        non_negative("wait_time", args.wait_time.unwrap_or(0.0))?,
    )?;
    let delta = detuning(args.delta_hz.unwrap_or(DEFAULT_DELTA_HZ))?;
    let pi_to_minus = non_negative("pi_to_minus", args.pi_to_minus.unwrap_or(DEFAULT_PI_TO_MINUS))?;
    let a_peak = required_peak_acceleration(&profile);
    let omega_minus = match (args.omega_minus, args.accel_ratio) {
        (Some(_), Some(_)) => bail!("invalid `accel_ratio`: give either omega_minus or accel_ratio, not both"),
        (Some(w), None) => positive("omega_minus", w)?,
        (None, ratio) => {
            let ratio = positive("accel_ratio", ratio.unwrap_or(0.5))?;
            rabi_for_acceleration(a_peak / ratio, delta, &ctx.species)?
        }
    };
    let config = LatticeConfig::new(pi_to_minus * omega_minus, omega_minus, delta, ctx.species.clone())?;
    warn_detuning(delta, &ctx.species);
    let dt = match args.dt {
        Some(dt) => positive("dt", dt)?,
        None => 0.01 * 2.0 * PI / trap_frequency(&config),
    };
    let x0 = args.x0.unwrap_or(0.0);
    let v0 = args.v0.unwrap_or(0.0);
    if !x0.is_finite() || !v0.is_finite() {
        bail!("invalid `x0`/`v0`: initial conditions must be finite");
    }

    let is_static = args.r#static.unwrap_or(false);
    let result = if is_static {
        simulate_eom(&config, &StaticLattice { duration: profile.tau() }, x0, v0, dt)?
    } else {
        simulate_eom(&config, &profile, x0, v0, dt)?
    };
    let ratio = if is_static { 0.0 } else { a_peak / max_acceleration(&config) };
    Ok(table(&result, ratio, ctx.species.wavelength() / 4.0))
}

fn table(result: &EomResult, accel_ratio: f64, lag_limit: f64) -> Table {
    let mut table = Table::new(&HEADER);
    for i in 0..result.times.len() {
        table.push(vec![
            result.times[i].into(),
            result.atom_positions[i].into(),
            (0.0 - result.lattice_positions[i]).into(),
            result.lattice_positions[i].into(),
        ]);
    }
    let verdict = if result.follows { "follows" } else { "slips" };
    table.summarize("verdict", verdict);
    table.summarize("accel_ratio", accel_ratio);
    table.summarize("max_lag", result.max_lag);
    table.summarize("lag_limit", lag_limit);
    table.note(format!(
        "verdict: {verdict} (a_peak/a_max = {}, max lag = {} m, limit = {} m)",
        fmt_num(accel_ratio),
        fmt_num(result.max_lag),
        fmt_num(lag_limit)
    ));
    table
}
