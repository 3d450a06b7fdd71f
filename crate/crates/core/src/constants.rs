//! Physical constants (CODATA 2018) and atom-species data.
//!
//! ⁸⁷Rb values follow D. A. Steck, "Rubidium 87 D Line Data" (D1 line, since the
//! trapping light couples the ground states to the P₁/₂ manifold).

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{ensure_positive, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhysicalConstants {
    /// Speed of light (m/s).
    pub c: f64,
    /// Reduced Planck constant (J·s).
    pub hbar: f64,
    /// Boltzmann constant (J/K).
    pub k_b: f64,
    /// Nucleon mass (kg). The proton mass is used.
    pub m_0: f64,
    /// Planck mass (kg).
    pub m_pl: f64,
    /// Unified atomic mass unit (kg).
    pub u: f64,
}

pub const CODATA_2018: PhysicalConstants = PhysicalConstants {
    c: 299_792_458.0,
    hbar: 1.054_571_817e-34,
    k_b: 1.380_649e-23,
    m_0: 1.672_621_923_69e-27,
    m_pl: 2.176_434e-8,
    u: 1.660_539_066_60e-27,
};

/// Trapped-atom data. New species are plain values built with [`AtomSpecies::new`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AtomSpecies {
    name: String,
    mass: f64,
    gamma_0: f64,
    wavelength: f64,
    k: f64,
    fine_structure_splitting: f64,
}

impl AtomSpecies {
    /// `mass` in kg, `gamma_0` and `fine_structure_splitting` in rad/s,
    /// `wavelength` in m.
    pub fn new(
        name: impl Into<String>,
        mass: f64,
        gamma_0: f64,
        wavelength: f64,
        fine_structure_splitting: f64,
    ) -> Result<Self> {
        ensure_positive("mass", mass)?;
        ensure_positive("gamma_0", gamma_0)?;
        ensure_positive("wavelength", wavelength)?;
        ensure_positive("fine_structure_splitting", fine_structure_splitting)?;
        Ok(AtomSpecies {
            name: name.into(),
            mass,
            gamma_0,
            wavelength,
            k: 2.0 * PI / wavelength,
            fine_structure_splitting,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    /// Free-space decay rate Γ₀ (rad/s).
    pub fn gamma_0(&self) -> f64 {
        self.gamma_0
    }

    pub fn wavelength(&self) -> f64 {
        self.wavelength
    }

    /// Trapping wavevector 2π/λ (1/m).
    pub fn k(&self) -> f64 {
        self.k
    }

    /// P₃/₂–P₁/₂ splitting (rad/s).
    pub fn fine_structure_splitting(&self) -> f64 {
        self.fine_structure_splitting
    }

    /// Same species trapped at a different wavelength.
    pub fn with_wavelength(&self, wavelength: f64) -> Result<Self> {
        AtomSpecies::new(self.name.clone(), self.mass, self.gamma_0, wavelength, self.fine_structure_splitting)
    }
}

pub const RB87_MASS_U: f64 = 86.909_180_520;
pub const RB87_D1_LINEWIDTH_HZ: f64 = 5.75e6;
pub const RB87_TRAP_WAVELENGTH: f64 = 795e-9;
pub const RB87_FINE_STRUCTURE_HZ: f64 = 7e12;

pub fn species_rb87() -> AtomSpecies {
    AtomSpecies {
        name: "rb87".to_owned(),
        mass: RB87_MASS_U * CODATA_2018.u,
        gamma_0: 2.0 * PI * RB87_D1_LINEWIDTH_HZ,
        wavelength: RB87_TRAP_WAVELENGTH,
        k: 2.0 * PI / RB87_TRAP_WAVELENGTH,
        fine_structure_splitting: 2.0 * PI * RB87_FINE_STRUCTURE_HZ,
    }
}

/// Looks up a built-in species by its CLI name.
pub fn species_by_name(name: &str) -> Option<AtomSpecies> {
    match name.to_ascii_lowercase().as_str() {
        "rb87" | "87rb" => Some(species_rb87()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // CODATA 2018 reference values, 5 significant digits.
    const REFERENCE: [(&str, f64); 6] = [
        ("c", 2.9979e8),
        ("hbar", 1.0546e-34),
        ("k_b", 1.3806e-23),
        ("m_0", 1.6726e-27),
        ("m_pl", 2.1764e-8),
        ("u", 1.6605e-27),
    ];

    #[test]
    fn constants_match_reference_table() {
        let c = CODATA_2018;
        let values = [c.c, c.hbar, c.k_b, c.m_0, c.m_pl, c.u];
        for ((name, reference), value) in REFERENCE.iter().zip(values) {
            assert!(value > 0.0);
            let rel = (value - reference).abs() / reference;
            assert!(rel < 5e-5, "{name}: {value} vs {reference}");
        }
    }

    #[test]
    fn rb87_data() {
        let rb = species_rb87();
        assert!((rb.mass() - 1.4431e-25).abs() / 1.4431e-25 < 1e-4);
        assert!((rb.k() - 7.9034e6).abs() / 7.9034e6 < 1e-4);
        assert_eq!(rb.fine_structure_splitting(), 2.0 * PI * 7e12);
        assert!((rb.k() * rb.wavelength() - 2.0 * PI).abs() / (2.0 * PI) < 1e-12);
        assert_eq!(species_by_name("Rb87"), Some(rb));
        assert!(species_by_name("cs133").is_none());
    }

    #[test]
    fn custom_species_validation() {
        assert!(AtomSpecies::new("x", -1.0, 1.0, 1e-6, 1.0).is_err());
        let s = AtomSpecies::new("x", 1e-25, 1.0, 1e-6, 1.0).unwrap();
        assert!((s.k() * s.wavelength() - 2.0 * PI).abs() < 1e-12);
    }
}
