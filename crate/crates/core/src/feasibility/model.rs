use serde::Serialize;

use crate::constants::{AtomSpecies, CODATA_2018};
use crate::error::{ensure_non_negative, Result};

/// Quadratic-limit strength of the quantum-gravity localisation,
/// γ_QG = (c m₀)⁴/(ħ m_Pl)³ · m_at², in 1/(m²·s).
///
/// This is the combination γ₀μ²Φ″₀/2 of the general localisation kernel once Φ
/// is expanded to second order and the atoms are tightly bound to their
/// lattice sites.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LocalizationModel {
    gamma_qg: f64,
}

impl LocalizationModel {
    pub fn for_species(species: &AtomSpecies) -> Self {
        let c = CODATA_2018;
        let gamma_qg = (c.c * c.m_0).powi(4) / (c.hbar * c.m_pl).powi(3) * species.mass().powi(2);
        LocalizationModel { gamma_qg }
    }

    pub fn gamma_qg(&self) -> f64 {
        self.gamma_qg
    }
}

/// Γ_QG = γ_QG · d_eff².
pub fn qg_rate(model: &LocalizationModel, d_eff: f64) -> Result<f64> {
    ensure_non_negative("d_eff", d_eff)?;
    Ok(model.gamma_qg * d_eff * d_eff)
}
