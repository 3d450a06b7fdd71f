//! Decoherence-rate ratio r = Γ_QG/Γ_sc, parameter sweeps and ramp optimisation.

mod model;
mod optimize;
mod point;
mod sweep;

pub use model::{qg_rate, LocalizationModel};
pub use optimize::{grid_search_profile, minimal_round_trip, optimize_profile, OptimizedProfile, ProfileTarget};
pub use point::{ratio_at_saturation, ratio_r, FeasibilityPoint, Ratio, DEFAULT_PI_TO_MINUS};
pub use sweep::{sweep, write_sweep_csv, Crossing, SweepGrid, SweepResult, SWEEP_CSV_HEADER};
