use serde::Serialize;

use crate::constants::{AtomSpecies, CODATA_2018};
use crate::error::{ensure_non_negative, ensure_positive, Error, Result};

/// Detunings above this fraction of the fine-structure splitting raise the
/// P₃/₂-coupling validity warning.
pub const DETUNING_WARNING_FRACTION: f64 = 0.3;

/// Rabi frequencies and detuning of the π and σ⁻ trapping lattices.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LatticeConfig {
    omega_pi: f64,
    omega_minus: f64,
    delta: f64,
    species: AtomSpecies,
    v0_pi: f64,
    v0_minus: f64,
}

impl LatticeConfig {
    /// Requires Ω ≥ 0 and 0 < Δ < fine-structure splitting.
    pub fn new(omega_pi: f64, omega_minus: f64, delta: f64, species: AtomSpecies) -> Result<Self> {
        ensure_non_negative("omega_pi", omega_pi)?;
        ensure_non_negative("omega_minus", omega_minus)?;
        if delta == 0.0 {
            return Err(Error::ResonantTrapping);
        }
        ensure_positive("delta", delta)?;
        if delta >= species.fine_structure_splitting() {
            return Err(Error::domain(
                "delta",
                format!(
                    "{delta:e} rad/s reaches the fine-structure splitting {:e} rad/s",
                    species.fine_structure_splitting()
                ),
            ));
        }
        let depth = |omega: f64| CODATA_2018.hbar * omega * omega / (4.0 * delta);
        Ok(LatticeConfig { omega_pi, omega_minus, delta, v0_pi: depth(omega_pi), v0_minus: depth(omega_minus), species })
    }

    pub fn omega_pi(&self) -> f64 {
        self.omega_pi
    }

    pub fn omega_minus(&self) -> f64 {
        self.omega_minus
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn species(&self) -> &AtomSpecies {
        &self.species
    }

    /// V⁰_π = ħΩ_π²/(4Δ) (J).
    pub fn v0_pi(&self) -> f64 {
        self.v0_pi
    }

    /// V⁰_− = ħΩ_−²/(4Δ) (J).
    pub fn v0_minus(&self) -> f64 {
        self.v0_minus
    }

    /// False when Δ exceeds [`DETUNING_WARNING_FRACTION`] of the splitting.
    pub fn detuning_ok(&self) -> bool {
        self.delta <= DETUNING_WARNING_FRACTION * self.species.fine_structure_splitting()
    }
}

/// V_g(x) = V⁰_π cos²(kx).
pub fn potential_g(x: f64, config: &LatticeConfig) -> f64 {
    config.v0_pi * (config.species.k() * x).cos().powi(2)
}

/// V_s(x) = V⁰_π cos²(kx) + V⁰_− cos²(kx + φ).
pub fn potential_s(x: f64, phi: f64, config: &LatticeConfig) -> f64 {
    let kx = config.species.k() * x;
    config.v0_pi * kx.cos().powi(2) + config.v0_minus * (kx + phi).cos().powi(2)
}

/// Largest lattice acceleration the σ⁻ trapping force can sustain:
/// (ħk/m)·Ω_−²/(4Δ).
pub fn max_acceleration(config: &LatticeConfig) -> f64 {
    let s = &config.species;
    CODATA_2018.hbar * s.k() / s.mass() * config.omega_minus.powi(2) / (4.0 * config.delta)
}

/// Ω_− for which [`max_acceleration`] equals `acceleration`.
pub fn rabi_for_acceleration(acceleration: f64, delta: f64, species: &AtomSpecies) -> Result<f64> {
    ensure_non_negative("acceleration", acceleration)?;
    ensure_positive("delta", delta)?;
    Ok((4.0 * delta * acceleration * species.mass() / (CODATA_2018.hbar * species.k())).sqrt())
}

/// Small-oscillation angular frequency of the σ⁻ wells, k·√(2V⁰_−/m).
pub fn trap_frequency(config: &LatticeConfig) -> f64 {
    config.species.k() * (2.0 * config.v0_minus / config.species.mass()).sqrt()
}

/// T_tr = (ħ^{3/2}/k_B)·(√2 k/√m)·Ω_−/√Δ (K).
pub fn trap_temperature(config: &LatticeConfig) -> f64 {
    let s = &config.species;
    let c = CODATA_2018;
    c.hbar.powf(1.5) / c.k_b * std::f64::consts::SQRT_2 * s.k() / s.mass().sqrt() * config.omega_minus
        / config.delta.sqrt()
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;
    use crate::constants::species_rb87;

    fn point_a() -> LatticeConfig {
        LatticeConfig::new(1e8 / 3.0, 1e8, 2.0 * PI * 1e12, species_rb87()).unwrap()
    }

    #[test]
    fn potentials() {
        let c = point_a();
        assert_eq!(potential_g(0.0, &c), c.v0_pi());
        assert_eq!(potential_s(0.0, 0.0, &c), c.v0_pi() + c.v0_minus());
        let node = PI / (2.0 * c.species().k());
        assert!(potential_g(node, &c).abs() < 1e-12 * c.v0_pi());
        assert!(potential_s(node, 0.0, &c).abs() < 1e-12 * c.v0_minus());
        let period = PI / c.species().k();
        for i in 0..50 {
            let x = i as f64 * 1.3e-8;
            let a = potential_s(x, 0.7, &c);
            let b = potential_s(x + period, 0.7, &c);
            assert!((a - b).abs() <= 1e-12 * c.v0_minus());
            assert!((potential_g(x, &c) - potential_g(x + period, &c)).abs() <= 1e-12 * c.v0_pi());
        }
    }

    #[test]
    fn depth_ratio_for_rabi_ratio_three() {
        let c = point_a();
        assert!((c.v0_minus() / c.v0_pi() - 9.0).abs() < 1e-12);
    }

    #[test]
    fn acceleration_point_a() {
        let c = point_a();
        let a = max_acceleration(&c);
        assert!((a - 2.3).abs() < 0.01, "{a}");
        let doubled = LatticeConfig::new(c.omega_pi(), 2e8, c.delta(), species_rb87()).unwrap();
        assert!((max_acceleration(&doubled) / a - 4.0).abs() < 1e-12);
        let dark = LatticeConfig::new(0.0, 0.0, c.delta(), species_rb87()).unwrap();
        assert_eq!(max_acceleration(&dark), 0.0);
        let omega = rabi_for_acceleration(a, c.delta(), c.species()).unwrap();
        assert!((omega - 1e8).abs() / 1e8 < 1e-12);
    }

    #[test]
    fn temperature_scalings() {
        let c = point_a();
        let t = trap_temperature(&c);
        // Direct evaluation of the closed form with CODATA and Rb-87 D1 data.
        assert!((t - 9.2069e-8).abs() / 9.2069e-8 < 1e-4, "{t}");
        let quarter = LatticeConfig::new(c.omega_pi(), c.omega_minus(), c.delta() / 4.0, species_rb87()).unwrap();
        assert!((trap_temperature(&c) / trap_temperature(&quarter) - 0.5).abs() < 1e-12);
        let dark = LatticeConfig::new(0.0, 0.0, c.delta(), species_rb87()).unwrap();
        assert_eq!(trap_temperature(&dark), 0.0);
    }

    #[test]
    fn detuning_validity() {
        let rb = species_rb87();
        assert!(point_a().detuning_ok());
        let far = LatticeConfig::new(1.0, 1.0, 2.0 * PI * 3e12, rb.clone()).unwrap();
        assert!(!far.detuning_ok());
        assert!(LatticeConfig::new(1.0, 1.0, 2.0 * PI * 8e12, rb.clone()).is_err());
        assert_eq!(LatticeConfig::new(1.0, 1.0, 0.0, rb.clone()), Err(Error::ResonantTrapping));
        assert!(LatticeConfig::new(1.0, 1.0, -1.0, rb).is_err());
    }
}
