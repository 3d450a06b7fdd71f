pub mod optimize;
pub mod overlap;
pub mod rates;
pub mod reproduce;
pub mod sweep;
pub mod transport;

use std::f64::consts::PI;

use anyhow::{Context as _, Result};
use latticedec::transport::DETUNING_WARNING_FRACTION;
use latticedec::{AtomSpecies, LatticeConfig};

use crate::config::{non_negative, positive};
use crate::output::{fmt_num, warn};

/// Point-A defaults shared by the lattice-based commands.
pub const DEFAULT_OMEGA_MINUS: f64 = 1e8;
pub const DEFAULT_DELTA_HZ: f64 = 1e12;
pub const DEFAULT_PI_TO_MINUS: f64 = 1.0 / 3.0;
pub const DEFAULT_TAU: f64 = 1.0;
pub const DEFAULT_D_EFF: f64 = 0.1;

/// Converts Δ/2π in Hz to rad/s.
pub fn detuning(delta_hz: f64) -> Result<f64> {
    Ok(2.0 * PI * positive("delta_hz", delta_hz)?)
}

/// Lattice from Ω_− (rad/s), optional Ω_π (rad/s, default Ω_−/3) and Δ/2π (Hz).
pub fn lattice(species: &AtomSpecies, omega_minus: f64, omega_pi: Option<f64>, delta_hz: f64) -> Result<LatticeConfig> {
    let omega_minus = non_negative("omega_minus", omega_minus)?;
    let omega_pi = match omega_pi {
        Some(w) => non_negative("omega_pi", w)?,
        None => DEFAULT_PI_TO_MINUS * omega_minus,
    };
    let config = LatticeConfig::new(omega_pi, omega_minus, detuning(delta_hz)?, species.clone())
        .context("invalid `delta_hz`")?;
    warn_detuning(config.delta(), species);
    Ok(config)
}

pub fn warn_detuning(delta: f64, species: &AtomSpecies) {
    if delta > DETUNING_WARNING_FRACTION * species.fine_structure_splitting() {
        warn(format!(
            "detuning Δ/2π = {} Hz exceeds {} of the fine-structure splitting; \
             coupling to the upper excited manifold is no longer negligible",
            fmt_num(delta / (2.0 * PI)),
            DETUNING_WARNING_FRACTION
        ));
    }
}
