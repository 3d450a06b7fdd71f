//! State-dependent lattice potentials, the separation ramp and the classical
//! motion of an atom dragged by the σ⁻ lattice.

mod eom;
mod lattice;
mod trajectory;

pub use eom::{simulate_eom, EomResult, LatticeMotion, StaticLattice, MAX_STEP_FRACTION};
pub use lattice::{
    max_acceleration, potential_g, potential_s, rabi_for_acceleration, trap_frequency, trap_temperature,
    LatticeConfig, DETUNING_WARNING_FRACTION,
};
pub use trajectory::{effective_distance, effective_distance_quadrature, required_peak_acceleration, TrajectoryProfile, ALPHA};
