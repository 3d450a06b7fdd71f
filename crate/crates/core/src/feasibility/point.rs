use std::fmt;

use serde::{Serialize, Serializer};

use super::model::{qg_rate, LocalizationModel};
use crate::constants::AtomSpecies;
use crate::decoherence::scattering_rates;
use crate::error::Result;
use crate::transport::{
    effective_distance, max_acceleration, rabi_for_acceleration, required_peak_acceleration, trap_temperature,
    LatticeConfig, TrajectoryProfile,
};

/// Default Ω_π/Ω_−; Ω_−/Ω_π = 3 gives V⁰_−/V⁰_π ≈ 10.
pub const DEFAULT_PI_TO_MINUS: f64 = 1.0 / 3.0;

/// Γ_QG/Γ_sc, infinite when no trapping light scatters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Ratio {
    Finite(f64),
    Infinite,
}

impl Ratio {
    pub fn value(self) -> f64 {
        match self {
            Ratio::Finite(r) => r,
            Ratio::Infinite => f64::INFINITY,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Ratio::Infinite)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ratio::Finite(r) => write!(f, "{r}"),
            Ratio::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Ratio {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Ratio::Finite(r) => serializer.serialize_f64(*r),
            Ratio::Infinite => serializer.serialize_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FeasibilityPoint {
    pub omega_minus: f64,
    pub omega_pi: f64,
    pub delta: f64,
    pub profile: TrajectoryProfile,
    pub d_eff: f64,
    pub gamma_sc: f64,
    pub gamma_qg_rate: f64,
    pub ratio: Ratio,
    pub trap_temp: f64,
    pub accel_ok: bool,
    pub detuning_ok: bool,
}

/// Evaluates a lattice configuration against a separation ramp.
pub fn ratio_r(config: &LatticeConfig, profile: &TrajectoryProfile) -> Result<FeasibilityPoint> {
    let species = config.species();
    let rates = scattering_rates(config.omega_pi(), config.omega_minus(), config.delta(), species)?;
    let d_eff = effective_distance(profile);
    let gamma_qg_rate = qg_rate(&LocalizationModel::for_species(species), d_eff)?;
    let ratio = if rates.gamma_sc > 0.0 { Ratio::Finite(gamma_qg_rate / rates.gamma_sc) } else { Ratio::Infinite };
    Ok(FeasibilityPoint {
        omega_minus: config.omega_minus(),
        omega_pi: config.omega_pi(),
        delta: config.delta(),
        profile: *profile,
        d_eff,
        gamma_sc: rates.gamma_sc,
        gamma_qg_rate,
        ratio,
        trap_temp: trap_temperature(config),
        accel_ok: required_peak_acceleration(profile) <= max_acceleration(config),
        detuning_ok: config.detuning_ok(),
    })
}

/// [`ratio_r`] with the weakest σ⁻ lattice that still drags the atom along
/// `profile`: Ω_− saturates the acceleration constraint, Ω_π = `pi_to_minus`·Ω_−.
pub fn ratio_at_saturation(
    delta: f64,
    pi_to_minus: f64,
    species: &AtomSpecies,
    profile: &TrajectoryProfile,
) -> Result<FeasibilityPoint> {
    let needed = required_peak_acceleration(profile);
    let mut omega = rabi_for_acceleration(needed, delta, species)?;
    loop {
        let config = LatticeConfig::new(pi_to_minus * omega, omega, delta, species.clone())?;
        if max_acceleration(&config) >= needed {
            return ratio_r(&config, profile);
        }
        omega = omega.next_up();
    }
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;
    use crate::constants::species_rb87;

    fn point_a_profile() -> TrajectoryProfile {
        TrajectoryProfile::for_effective_distance(0.1, 0.5, 0.0).unwrap()
    }

    #[test]
    fn point_a() {
        let config = LatticeConfig::new(1e8 / 3.0, 1e8, 2.0 * PI * 1e12, species_rb87()).unwrap();
        let p = ratio_r(&config, &point_a_profile()).unwrap();
        let r = p.ratio.value();
        // 1.089 / 1.398e-3
        assert!((r - 779.0).abs() < 2.0, "{r}");
        assert!((p.d_eff - 0.1).abs() < 1e-15);
        assert!(!p.accel_ok);
        assert!(p.detuning_ok);
    }

    #[test]
    fn dark_lattice_is_infinite() {
        let config = LatticeConfig::new(0.0, 0.0, 2.0 * PI * 1e12, species_rb87()).unwrap();
        let p = ratio_r(&config, &point_a_profile()).unwrap();
        assert_eq!(p.ratio, Ratio::Infinite);
        assert_eq!(p.ratio.to_string(), "inf");
        assert_eq!(p.gamma_sc, 0.0);
    }

    #[test]
    fn rabi_and_detuning_scalings() {
        let rb = species_rb87();
        let delta = 2.0 * PI * 1e12;
        let base = ratio_r(&LatticeConfig::new(1e8 / 3.0, 1e8, delta, rb.clone()).unwrap(), &point_a_profile()).unwrap();
        let bright = ratio_r(&LatticeConfig::new(1e9 / 3.0, 1e9, delta, rb.clone()).unwrap(), &point_a_profile()).unwrap();
        assert!((base.ratio.value() / bright.ratio.value() - 100.0).abs() < 1e-9);
        let om = 1e8 * 2f64.sqrt();
        let wide = ratio_r(&LatticeConfig::new(om / 3.0, om, 2.0 * delta, rb).unwrap(), &point_a_profile()).unwrap();
        assert!((wide.ratio.value() / base.ratio.value() - 2.0).abs() < 1e-9);
    }

    #[test]
    fn saturation_is_feasible() {
        let p = ratio_at_saturation(2.0 * PI * 1e12, DEFAULT_PI_TO_MINUS, &species_rb87(), &point_a_profile()).unwrap();
        assert!(p.accel_ok);
        let omega = rabi_for_acceleration(required_peak_acceleration(&p.profile), p.delta, &species_rb87()).unwrap();
        assert!((p.omega_minus - omega).abs() / omega < 1e-14);
        assert!((p.omega_pi - p.omega_minus / 3.0).abs() / p.omega_pi < 1e-15);
    }
}
