//! Local and collective dephasing of N two-level atoms.
//!
//! Basis convention: index bit `i` is atom `i`; bit value 0 is |g⟩, 1 is |s⟩.
//! The total z-spin of basis state `l` is `S_z(l) = Σᵢ (2ℓᵢ − 1)`.
//!
//! Both channels are diagonal in this product basis, so each acts by scaling
//! the element (l, l′) of ρ:
//!
//! - local (photon scattering): `exp(−Γ_sc t · hamming(l, l′))`;
//! - collective (quantum gravity): `exp(−γ(t) (S_z(l) − S_z(l′))² / 8)`,
//!   with `γ(t) = 2 ∫ Γ_QG(t′) dt′`.
//!
//! The collective factor is the one generated by
//! `ρ̇ = (Γ_QG/2)(S_z ρ S_z − ½{S_z², ρ})`: a single atom's coherence decays as
//! `exp(−Γ_QG t)`, and the product-state overlap is the Gaussian average of
//! `cos^{2N}(Λ/2)` with variance γ.

mod channels;
mod density;
mod lindblad;
mod noise;
mod overlap;
mod theta;

pub use channels::{
    apply_collective_dephasing, apply_local_dephasing, scattering_rates, CollectiveNoiseStrength, ScatteringRates,
};
pub use density::{hamming_distance, total_spin, DensityMatrix, MAX_ATOMS};
pub use lindblad::{lindblad_evolve, MAX_LINDBLAD_ATOMS};
pub use noise::gamma_of_t;
pub use overlap::{
    overlap_ghz, overlap_qg_asymptotic, overlap_qg_quadrature, overlap_qg_trapezoid, overlap_sc, GhzChannel,
};
pub use theta::theta3;
