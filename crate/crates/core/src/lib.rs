//! Local (photon-scattering) and collective (quantum-gravity) dephasing of
//! atoms delocalized in a state-dependent optical lattice.
//!
//! The crate is organised bottom-up:
//!
//! - [`constants`]: physical constants and atom-species data.
//! - [`decoherence`]: both dephasing channels, overlap formulas and a
//!   Runge–Kutta Lindblad integrator used as an independent check.
//! - [`transport`]: lattice potentials, the separation ramp `d(t)` and the
//!   classical equation of motion of the displaced atom.
//! - [`feasibility`]: the decoherence-rate ratio, parameter sweeps and the
//!   trajectory optimisation.
//!
//! All frequencies are angular (rad/s).

pub mod constants;
pub mod decoherence;
pub mod error;
pub mod feasibility;
pub mod numerics;
pub mod transport;

pub use constants::{species_rb87, AtomSpecies, PhysicalConstants, CODATA_2018};
pub use decoherence::{
    apply_collective_dephasing, apply_local_dephasing, gamma_of_t, lindblad_evolve, overlap_ghz,
    overlap_qg_asymptotic, overlap_qg_quadrature, overlap_sc, scattering_rates, CollectiveNoiseStrength,
    DensityMatrix, GhzChannel, ScatteringRates,
};
pub use error::{Error, Result};
pub use feasibility::{
    optimize_profile, qg_rate, ratio_r, sweep, FeasibilityPoint, LocalizationModel, ProfileTarget, Ratio,
    SweepGrid, SweepResult,
};
pub use transport::{
    max_acceleration, required_peak_acceleration, simulate_eom, trap_temperature, EomResult, LatticeConfig,
    LatticeMotion, StaticLattice, TrajectoryProfile,
};
