use std::ops::Add;

use serde::Serialize;

use super::density::{hamming_distance, total_spin, DensityMatrix};
use crate::constants::AtomSpecies;
use crate::error::{ensure_non_negative, Error, Result};

/// Far-detuned photon-scattering rates of the two ground states (1/s).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScatteringRates {
    pub gamma_g: f64,
    pub gamma_s: f64,
    pub gamma_sc: f64,
}

/// Γ_g = (Γ₀/8)(Ω_π/Δ)², Γ_s = (Γ₀/8)(Ω_π² + Ω_−²)/Δ².
///
/// |g⟩ sees only the π lattice; |s⟩ sees both.
pub fn scattering_rates(omega_pi: f64, omega_minus: f64, delta: f64, species: &AtomSpecies) -> Result<ScatteringRates> {
    ensure_non_negative("omega_pi", omega_pi)?;
    ensure_non_negative("omega_minus", omega_minus)?;
    if delta == 0.0 {
        return Err(Error::ResonantTrapping);
    }
    if !delta.is_finite() {
        return Err(Error::domain("delta", "must be finite"));
    }
    let prefactor = species.gamma_0() / (8.0 * delta * delta);
    let gamma_g = prefactor * omega_pi * omega_pi;
    let gamma_s = prefactor * (omega_pi * omega_pi + omega_minus * omega_minus);
    Ok(ScatteringRates { gamma_g, gamma_s, gamma_sc: gamma_g + gamma_s })
}

/// Accumulated collective phase variance γ(t) (rad²).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default, Serialize)]
pub struct CollectiveNoiseStrength(f64);

impl CollectiveNoiseStrength {
    pub fn new(gamma: f64) -> Result<Self> {
        ensure_non_negative("gamma_t", gamma)?;
        Ok(CollectiveNoiseStrength(gamma))
    }

    /// γ(t) = 2 Γ_QG t for a constant rate.
    pub fn from_constant_rate(gamma_qg_rate: f64, t: f64) -> Result<Self> {
        ensure_non_negative("gamma_qg_rate", gamma_qg_rate)?;
        ensure_non_negative("t", t)?;
        Ok(CollectiveNoiseStrength(2.0 * gamma_qg_rate * t))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl Add for CollectiveNoiseStrength {
    type Output = CollectiveNoiseStrength;

    fn add(self, rhs: Self) -> Self {
        CollectiveNoiseStrength(self.0 + rhs.0)
    }
}

/// Product of N single-atom phase-damping maps after time `t`.
pub fn apply_local_dephasing(rho: &DensityMatrix, gamma_sc: f64, t: f64) -> Result<DensityMatrix> {
    ensure_non_negative("gamma_sc", gamma_sc)?;
    ensure_non_negative("t", t)?;
    let per_flip = (-gamma_sc * t).exp();
    let factors: Vec<f64> = (0..=rho.n_atoms() as i32).map(|h| per_flip.powi(h)).collect();
    Ok(rho.scaled_by(|l, lp| factors[hamming_distance(l, lp) as usize]))
}

/// Gaussian average of exp(iΛS_z/2) ρ exp(−iΛS_z/2) over Λ ~ N(0, γ).
pub fn apply_collective_dephasing(rho: &DensityMatrix, gamma_t: CollectiveNoiseStrength) -> DensityMatrix {
    let n = rho.n_atoms();
    let gamma = gamma_t.value();
    // (ΔS_z)² = 4 m² with m the difference of excitation counts.
    let factors: Vec<f64> = (0..=n).map(|m| (-gamma * (m * m) as f64 / 2.0).exp()).collect();
    rho.scaled_by(|l, lp| {
        let ds = (total_spin(l, n) - total_spin(lp, n)).unsigned_abs() as usize / 2;
        factors[ds]
    })
}

#[cfg(test)]
mod tests {
    use std::f64::consts::LN_2;

    use super::*;
    use crate::constants::species_rb87;

    fn unit_species() -> AtomSpecies {
        AtomSpecies::new("unit", 1.0, 1.0, 1.0, 1.0).unwrap()
    }

    #[test]
    fn scattering_unit_ratio() {
        let r = scattering_rates(2.0, 0.0, 2.0, &unit_species()).unwrap();
        assert_eq!(r.gamma_g, 0.125);
        assert_eq!(r.gamma_s, 0.125);
        assert_eq!(r.gamma_sc, 0.25);
    }

    #[test]
    fn scattering_dark_and_resonant() {
        let r = scattering_rates(0.0, 0.0, 1e12, &species_rb87()).unwrap();
        assert_eq!((r.gamma_g, r.gamma_s, r.gamma_sc), (0.0, 0.0, 0.0));
        assert_eq!(scattering_rates(1.0, 1.0, 0.0, &species_rb87()), Err(Error::ResonantTrapping));
        assert!(scattering_rates(-1.0, 1.0, 1.0, &species_rb87()).is_err());
    }

    #[test]
    fn scattering_point_a() {
        let om = 1e8;
        let r = scattering_rates(om / 3.0, om, 2.0 * std::f64::consts::PI * 1e12, &species_rb87()).unwrap();
        assert!((r.gamma_sc - 1.40e-3).abs() / 1.40e-3 < 5e-3, "{}", r.gamma_sc);
        assert_eq!(r.gamma_sc, r.gamma_g + r.gamma_s);
    }

    #[test]
    fn local_single_atom_half_life() {
        let rho = DensityMatrix::product_plus(1).unwrap();
        let out = apply_local_dephasing(&rho, LN_2, 1.0).unwrap();
        assert!((out.get(0, 1).re - 0.25).abs() < 1e-15);
        assert!((out.get(0, 0).re - 0.5).abs() < 1e-15);
        assert_eq!(apply_local_dephasing(&rho, LN_2, 0.0).unwrap(), rho);
        assert!(apply_local_dephasing(&rho, LN_2, -1.0).is_err());
    }

    #[test]
    fn local_two_atoms_hamming_two() {
        let rho = DensityMatrix::product_plus(2).unwrap();
        let out = apply_local_dephasing(&rho, 1.0, LN_2).unwrap();
        // |gg⟩ = 0, |ss⟩ = 3
        assert!((out.get(0, 3).re / rho.get(0, 3).re - 0.25).abs() < 1e-15);
        assert!((out.get(0, 1).re / rho.get(0, 1).re - 0.5).abs() < 1e-15);
    }

    #[test]
    fn collective_factors() {
        let one = DensityMatrix::product_plus(1).unwrap();
        let g = CollectiveNoiseStrength::new(2.0 * LN_2).unwrap();
        let out = apply_collective_dephasing(&one, g);
        assert!((out.get(0, 1).re / one.get(0, 1).re - 0.5).abs() < 1e-15);

        let two = DensityMatrix::product_plus(2).unwrap();
        let out = apply_collective_dephasing(&two, g);
        assert!((out.get(0, 1).re / two.get(0, 1).re - 0.5).abs() < 1e-15);
        assert!((out.get(0, 3).re / two.get(0, 3).re - 1.0 / 16.0).abs() < 1e-15);
        // |gs⟩ and |sg⟩ share S_z and are untouched.
        assert_eq!(out.get(1, 2), two.get(1, 2));
        assert_eq!(apply_collective_dephasing(&two, CollectiveNoiseStrength::default()), two);
        assert!(CollectiveNoiseStrength::new(-1e-3).is_err());
    }
}
