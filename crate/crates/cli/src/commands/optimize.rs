use anyhow::{bail, Result};
use clap::Args;
use latticedec::{optimize_profile, LatticeConfig, ProfileTarget};
use serde::{Deserialize, Serialize};

use super::sweep::{header as sweep_header, row as sweep_row};
use super::{detuning, warn_detuning, DEFAULT_DELTA_HZ, DEFAULT_D_EFF, DEFAULT_PI_TO_MINUS, DEFAULT_TAU};
use crate::config::{non_negative, positive};
use crate::output::Table;
use crate::Context;

#[derive(Debug, Clone, Default, Args, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptimizeArgs {
    /// Target effective separation d_eff in m [default: 0.1]; conflicts with d_max
    #[arg(long)]
    pub d_eff: Option<f64>,
    /// Target peak separation d_max in m
    #[arg(long)]
    pub d_max: Option<f64>,
    /// Round-trip time τ in s [default: 1]
    #[arg(long)]
    pub tau: Option<f64>,
    /// Largest available σ⁻ Rabi frequency Ω_− in rad/s [default: 1e9]
    #[arg(long)]
    pub omega_minus: Option<f64>,
    /// Ω_π/Ω_− [default: 1/3]
    #[arg(long)]
    pub pi_to_minus: Option<f64>,
    /// Detuning Δ/2π in Hz [default: 1e12]
    #[arg(long)]
    pub delta_hz: Option<f64>,
}

pub fn run(ctx: &Context, flags: &OptimizeArgs) -> Result<Table> {
    let args = ctx.file.resolve(flags)?;
    let target = match (args.d_eff, args.d_max) {
        (Some(_), Some(_)) => bail!("invalid `d_max`: give either d_eff or d_max, not both"),
        (None, Some(d)) => ProfileTarget::MaxSeparation(positive("d_max", d)?),
        (d, None) => ProfileTarget::EffectiveDistance(positive("d_eff", d.unwrap_or(DEFAULT_D_EFF))?),
    };
    let tau = positive("tau", args.tau.unwrap_or(DEFAULT_TAU))?;
    let omega = positive("omega_minus", args.omega_minus.unwrap_or(1e9))?;
    let pi_to_minus = non_negative("pi_to_minus", args.pi_to_minus.unwrap_or(DEFAULT_PI_TO_MINUS))?;
    let delta = detuning(args.delta_hz.unwrap_or(DEFAULT_DELTA_HZ))?;
    let config = LatticeConfig::new(pi_to_minus * omega, omega, delta, ctx.species.clone())?;
    warn_detuning(delta, &ctx.species);
    let best = optimize_profile(target, tau, &config)?;

    let mut header = vec!["d_max", "ramp_time", "wait_time"];
    header.extend(sweep_header());
    let mut table = Table::new(&header);
    let mut row = vec![best.profile.d_max().into(), best.profile.ramp_time().into(), best.profile.wait_time().into()];
    row.extend(sweep_row(&best.point));
    table.push(row);
    Ok(table)
}
