use std::f64::consts::PI;

use anyhow::{anyhow, Result};
use clap::{Args, ValueEnum};
use latticedec::{qg_rate, LocalizationModel, SweepGrid};
use serde::{Deserialize, Serialize};

use super::sweep::{add_crossings, header as sweep_header, row as sweep_row, run_sweep};
use super::{DEFAULT_D_EFF, DEFAULT_OMEGA_MINUS, DEFAULT_TAU};
use crate::output::Table;
use crate::Context;

const POINT_A_DELTA: f64 = 2.0 * PI * 1e12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Figure {
    /// Ratio r against Ω_− for Δ/2π = 10, 100, 1000 GHz.
    Fig2a,
    /// Γ_QG against d_eff from 1 mm to 1 m.
    Fig2b,
}

#[derive(Debug, Clone, Default, Args, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReproduceArgs {
    #[arg(value_enum)]
    pub figure: Option<Figure>,
}

pub fn run(ctx: &Context, flags: &ReproduceArgs) -> Result<Table> {
    let args = ctx.file.resolve(flags)?;
    match args.figure.ok_or_else(|| anyhow!("invalid `figure`: choose fig2a or fig2b"))? {
        Figure::Fig2a => fig2a(ctx),
        Figure::Fig2b => fig2b(ctx),
    }
}

/// Ω_− = 1e8·10^((i−20)/10) rad/s, i = 0..=40, so point A sits exactly on the grid.
fn fig2a(ctx: &Context) -> Result<Table> {
    let omegas = (0..=40).map(|i| DEFAULT_OMEGA_MINUS * 10f64.powf((i as f64 - 20.0) / 10.0)).collect();
    let deltas = [1e10, 1e11, 1e12].iter().map(|hz| 2.0 * PI * hz).collect();
    let grid = SweepGrid::new(omegas, deltas, DEFAULT_TAU, DEFAULT_D_EFF, ctx.species.clone());
    let result = run_sweep(&grid)?;
    let mut header = sweep_header();
    header.push("point_a");
    let mut table = Table::new(&header);
    for p in &result.points {
        let mut row = sweep_row(p);
        row.push((p.delta == POINT_A_DELTA && p.omega_minus == DEFAULT_OMEGA_MINUS).into());
        table.push(row);
    }
    add_crossings(&mut table, &result);
    Ok(table)
}

/// d_eff = 0.1·10^((i−40)/20) m, i = 0..=60.
fn fig2b(ctx: &Context) -> Result<Table> {
    let model = LocalizationModel::for_species(&ctx.species);
    let mut table = Table::new(&["d_eff", "gamma_qg", "point_a"]);
    for i in 0..=60 {
        let d_eff = DEFAULT_D_EFF * 10f64.powf((i as f64 - 40.0) / 20.0);
        table.push(vec![d_eff.into(), qg_rate(&model, d_eff)?.into(), (i == 40).into()]);
    }
    Ok(table)
}
