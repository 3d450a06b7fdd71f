use std::f64::consts::PI;

use anyhow::Result;
use clap::Args;
use latticedec::transport::required_peak_acceleration;
use latticedec::{max_acceleration, ratio_r, scattering_rates, LocalizationModel, TrajectoryProfile};
use serde::{Deserialize, Serialize};

use super::{lattice, DEFAULT_DELTA_HZ, DEFAULT_D_EFF, DEFAULT_OMEGA_MINUS, DEFAULT_TAU};
use crate::config::positive;
use crate::output::{fmt_num, warn, Cell, Table};
use crate::Context;

#[derive(Debug, Clone, Default, Args, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RatesArgs {
    /// σ⁻ Rabi frequency Ω_− in rad/s [default: 1e8]
    #[arg(long)]
    pub omega_minus: Option<f64>,
    /// π Rabi frequency Ω_π in rad/s [default: Ω_−/3]
    #[arg(long)]
    pub omega_pi: Option<f64>,
    /// Detuning Δ/2π in Hz [default: 1e12]
    #[arg(long)]
    pub delta_hz: Option<f64>,
    /// Round-trip time τ in s; the ramp is out-and-back with no hold [default: 1]
    #[arg(long)]
    pub tau: Option<f64>,
    /// Effective separation d_eff in m [default: 0.1]
    #[arg(long)]
    pub d_eff: Option<f64>,
}

pub const HEADER: [&str; 5] = ["quantity", "value", "unit", "value_over_2pi", "unit_over_2pi"];

pub fn run(ctx: &Context, flags: &RatesArgs) -> Result<Table> {
    let args = ctx.file.resolve(flags)?;
    let config = lattice(
        &ctx.species,
        args.omega_minus.unwrap_or(DEFAULT_OMEGA_MINUS),
        args.omega_pi,
        args.delta_hz.unwrap_or(DEFAULT_DELTA_HZ),
    )?;
    let tau = positive("tau", args.tau.unwrap_or(DEFAULT_TAU))?;
    let d_eff = positive("d_eff", args.d_eff.unwrap_or(DEFAULT_D_EFF))?;
    let profile = TrajectoryProfile::for_effective_distance(d_eff, tau / 2.0, 0.0)?;

    let rates = scattering_rates(config.omega_pi(), config.omega_minus(), config.delta(), &ctx.species)?;
    let model = LocalizationModel::for_species(&ctx.species);
    let point = ratio_r(&config, &profile)?;
    let a_required = required_peak_acceleration(&profile);
    let a_max = max_acceleration(&config);
    if point.ratio.is_infinite() {
        warn("no trapping light: scattering vanishes and the ratio is infinite");
    }
    if !point.accel_ok {
        warn(format!(
            "the lattice cannot drag the atom along this ramp: a_required = {} m/s^2 > a_max = {} m/s^2",
            fmt_num(a_required),
            fmt_num(a_max)
        ));
    }

    let mut table = Table::new(&HEADER);
    let mut rate = |name: &str, value: f64, unit: &str| {
        table.push(vec![name.into(), value.into(), unit.into(), (value / (2.0 * PI)).into(), "Hz".into()]);
    };
    rate("gamma_g", rates.gamma_g, "1/s");
    rate("gamma_s", rates.gamma_s, "1/s");
    rate("gamma_sc", rates.gamma_sc, "1/s");
    rate("gamma_qg", point.gamma_qg_rate, "1/s");
    let mut plain = |name: &str, value: Cell, unit: &str| {
        table.push(vec![name.into(), value, unit.into(), Cell::Text(String::new()), Cell::Text(String::new())]);
    };
    plain("gamma_qg_strength", model.gamma_qg().into(), "1/(m^2 s)");
    plain("ratio", point.ratio.value().into(), "1");
    plain("trap_temp", point.trap_temp.into(), "K");
    plain("a_max", a_max.into(), "m/s^2");
    plain("a_required", a_required.into(), "m/s^2");
    plain("d_eff", point.d_eff.into(), "m");
    plain("d_max", profile.d_max().into(), "m");
    plain("accel_ok", point.accel_ok.into(), "");
    plain("detuning_ok", point.detuning_ok.into(), "");
    Ok(table)
}
