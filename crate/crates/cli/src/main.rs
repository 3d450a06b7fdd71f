//! `latticedec`: rates, overlap curves, transport runs and parameter sweeps
//! for atoms delocalized in a state-dependent optical lattice.

mod commands;
mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};

use crate::config::ConfigFile;
use crate::output::Format;

#[derive(Debug, Parser)]
#[command(name = "latticedec", version, about = "Local vs collective dephasing of lattice-transported atoms")]
struct Cli {
    /// JSON file with the command's parameters; flags override its values.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Write results here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Output format [default: csv]
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Atomic species [default: rb87]
    #[arg(long, global = true)]
    species: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Scattering and quantum-gravity rates, trap temperature and a_max.
    #[command(allow_negative_numbers = true)]
    Rates(commands::rates::RatesArgs),
    /// Overlap Tr(ρ(0)ρ(t)) on a time grid.
    #[command(allow_negative_numbers = true)]
    Overlap(commands::overlap::OverlapArgs),
    /// Classical equation of motion of an atom dragged by the lattice.
    #[command(allow_negative_numbers = true)]
    Transport(commands::transport::TransportArgs),
    /// Ratio r over an Ω_− × Δ grid.
    #[command(allow_negative_numbers = true)]
    Sweep(commands::sweep::SweepArgs),
    /// Best separation ramp for a round-trip time.
    #[command(allow_negative_numbers = true)]
    Optimize(commands::optimize::OptimizeArgs),
    /// Regenerate the data behind a published figure.
    Reproduce(commands::reproduce::ReproduceArgs),
}

/// Settings shared by every command after merging file and flags.
pub struct Context {
    pub file: ConfigFile,
    pub species: latticedec::AtomSpecies,
    pub format: Format,
    pub out: Option<PathBuf>,
}

fn run(cli: Cli) -> Result<()> {
    let file = match &cli.config {
        Some(path) => ConfigFile::load(path)?,
        None => ConfigFile::default(),
    };
    let species_name = cli.species.or(file.species.clone()).unwrap_or_else(|| "rb87".into());
    let ctx = Context {
        species: config::species(&species_name)?,
        format: cli.format.or(file.format).unwrap_or(Format::Csv),
        out: cli.out.or(file.out.clone()),
        file,
    };
    let table = match &cli.command {
        Command::Rates(args) => commands::rates::run(&ctx, args)?,
        Command::Overlap(args) => commands::overlap::run(&ctx, args)?,
        Command::Transport(args) => commands::transport::run(&ctx, args)?,
        Command::Sweep(args) => commands::sweep::run(&ctx, args)?,
        Command::Optimize(args) => commands::optimize::run(&ctx, args)?,
        Command::Reproduce(args) => commands::reproduce::run(&ctx, args)?,
    };
    table.write(ctx.format, ctx.out.as_deref())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
