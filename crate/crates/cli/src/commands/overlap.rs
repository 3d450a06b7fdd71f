use anyhow::Result;
use clap::Args;
use latticedec::{
    overlap_ghz, overlap_qg_asymptotic, overlap_qg_quadrature, overlap_sc, qg_rate, scattering_rates,
    CollectiveNoiseStrength, GhzChannel, LocalizationModel,
};
use serde::{Deserialize, Serialize};

use super::{lattice, DEFAULT_DELTA_HZ, DEFAULT_D_EFF, DEFAULT_OMEGA_MINUS};
use crate::config::{at_least, non_negative, positive};
use crate::output::{fmt_num, warn, Table};
use crate::Context;

#[derive(Debug, Clone, Default, Args, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OverlapArgs {
    /// Number of atoms N [default: 1]
    #[arg(long)]
    pub n_atoms: Option<usize>,
    /// σ⁻ Rabi frequency Ω_− in rad/s [default: 1e8]
    #[arg(long)]
    pub omega_minus: Option<f64>,
    /// π Rabi frequency Ω_π in rad/s [default: Ω_−/3]
    #[arg(long)]
    pub omega_pi: Option<f64>,
    /// Detuning Δ/2π in Hz [default: 1e12]
    #[arg(long)]
    pub delta_hz: Option<f64>,
    /// Separation held constant over the run, in m [default: 0.1]
    #[arg(long)]
    pub d_eff: Option<f64>,
    /// Last time on the grid, in s [default: 3]
    #[arg(long)]
    pub t_max: Option<f64>,
    /// Number of equally spaced times from 0 to t_max [default: 31]
    #[arg(long)]
    pub points: Option<usize>,
    /// Add the large-N collective estimate
    #[arg(long, num_args = 0..=1, default_missing_value = "true")]
    pub asymptotic: Option<bool>,
    /// Add GHZ-state overlaps for both channels
    #[arg(long, num_args = 0..=1, default_missing_value = "true")]
    pub ghz: Option<bool>,
}

pub fn run(ctx: &Context, flags: &OverlapArgs) -> Result<Table> {
    let args = ctx.file.resolve(flags)?;
    let n_atoms = at_least("n_atoms", args.n_atoms.unwrap_or(1), 1)?;
    let config = lattice(
        &ctx.species,
        args.omega_minus.unwrap_or(DEFAULT_OMEGA_MINUS),
        args.omega_pi,
        args.delta_hz.unwrap_or(DEFAULT_DELTA_HZ),
    )?;
    let d_eff = non_negative("d_eff", args.d_eff.unwrap_or(DEFAULT_D_EFF))?;
    let t_max = positive("t_max", args.t_max.unwrap_or(3.0))?;
    let points = at_least("points", args.points.unwrap_or(31), 2)?;
    let asymptotic = args.asymptotic.unwrap_or(false);
    let ghz = args.ghz.unwrap_or(false);
    if asymptotic && n_atoms < 10 {
        warn(format!("the asymptotic estimate assumes N >> 1; N = {n_atoms} is outside its range"));
    }

    let gamma_sc = scattering_rates(config.omega_pi(), config.omega_minus(), config.delta(), &ctx.species)?.gamma_sc;
    let gamma_qg = qg_rate(&LocalizationModel::for_species(&ctx.species), d_eff)?;

    let mut header = vec!["t", "o_sc", "o_qg_quadrature"];
    if asymptotic {
        header.push("o_qg_asymptotic");
    }
    if ghz {
        header.extend(["o_ghz_local", "o_ghz_collective"]);
    }
    let mut table = Table::new(&header);
    table.summarize("gamma_sc", gamma_sc);
    table.summarize("gamma_qg", gamma_qg);
    table.note(format!("gamma_sc = {} 1/s, gamma_qg = {} 1/s", fmt_num(gamma_sc), fmt_num(gamma_qg)));
    for i in 0..points {
        let t = t_max * i as f64 / (points - 1) as f64;
        let gamma_t = CollectiveNoiseStrength::from_constant_rate(gamma_qg, t)?;
        let mut row = vec![
            t.into(),
            overlap_sc(n_atoms, gamma_sc, t)?.into(),
            overlap_qg_quadrature(n_atoms, gamma_t)?.into(),
        ];
        if asymptotic {
            // At γ = 0 no dephasing has happened; the large-N form itself diverges there.
            let value = if gamma_t.value() == 0.0 { 1.0 } else { overlap_qg_asymptotic(n_atoms, gamma_t)? };
            row.push(value.into());
        }
        if ghz {
            row.push(overlap_ghz(n_atoms, GhzChannel::Local, gamma_sc * t)?.into());
            row.push(overlap_ghz(n_atoms, GhzChannel::Collective, gamma_t.value() / 4.0)?.into());
        }
        table.push(row);
    }
    Ok(table)
}
