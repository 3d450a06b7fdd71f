use serde::Serialize;

use super::point::{ratio_at_saturation, FeasibilityPoint};
use crate::error::{ensure_positive, Error, Result};
use crate::transport::{max_acceleration, required_peak_acceleration, LatticeConfig, TrajectoryProfile, ALPHA};

/// What the ramp must achieve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum ProfileTarget {
    MaxSeparation(f64),
    EffectiveDistance(f64),
}

impl ProfileTarget {
    fn profile(self, ramp_time: f64, tau: f64) -> Result<TrajectoryProfile> {
        let wait_time = (tau - 2.0 * ramp_time).max(0.0);
        match self {
            ProfileTarget::MaxSeparation(d_max) => TrajectoryProfile::new(d_max, ramp_time, wait_time),
            ProfileTarget::EffectiveDistance(d_eff) => {
                TrajectoryProfile::for_effective_distance(d_eff, ramp_time, wait_time)
            }
        }
    }

    fn validate(self) -> Result<()> {
        match self {
            ProfileTarget::MaxSeparation(d) => ensure_positive("d_max", d),
            ProfileTarget::EffectiveDistance(d) => ensure_positive("d_eff", d),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OptimizedProfile {
    pub profile: TrajectoryProfile,
    /// Evaluated with the weakest σ⁻ lattice that still drags the atom.
    pub point: FeasibilityPoint,
}

/// Shortest round trip over which the symmetric ramp reaches `d_max` with
/// acceleration at most `a_max`: 2√(2π d_max/a_max).
pub fn minimal_round_trip(d_max: f64, a_max: f64) -> f64 {
    if a_max <= 0.0 {
        return f64::INFINITY;
    }
    2.0 * (2.0 * std::f64::consts::PI * d_max / a_max).sqrt()
}

/// Best ramp of the form "out in T, hold t_w, back in T" with 2T + t_w = τ.
///
/// With the σ⁻ Rabi frequency set by the acceleration constraint,
/// r ∝ d_max k Δ (1 + 2(α − 1)T/τ) T², which grows monotonically up to the
/// boundary T = τ/2; the optimum is therefore the plateau-free ramp. `config`
/// supplies Δ, Ω_π/Ω_− and the largest available Ω_−.
pub fn optimize_profile(target: ProfileTarget, tau: f64, config: &LatticeConfig) -> Result<OptimizedProfile> {
    ensure_positive("tau", tau)?;
    target.validate()?;
    let profile = target.profile(tau / 2.0, tau)?;
    let needed = required_peak_acceleration(&profile);
    let available = max_acceleration(config);
    if needed > available {
        let d_max = match target {
            ProfileTarget::MaxSeparation(d) => d,
            ProfileTarget::EffectiveDistance(d) => d / ALPHA.sqrt(),
        };
        return Err(Error::Unreachable { required: needed, available, min_tau: minimal_round_trip(d_max, available) });
    }
    let point = ratio_at_saturation(config.delta(), pi_to_minus(config), config.species(), &profile)?;
    Ok(OptimizedProfile { profile, point })
}

/// Evaluates `steps` ramp times T = (i/steps)·τ/2, i = 1..=steps, each at its
/// saturating Ω_−. Ramps needing more than the available Ω_− are skipped.
pub fn grid_search_profile(
    target: ProfileTarget,
    tau: f64,
    config: &LatticeConfig,
    steps: usize,
) -> Result<Vec<FeasibilityPoint>> {
    ensure_positive("tau", tau)?;
    target.validate()?;
    let available = max_acceleration(config);
    let mut out = Vec::with_capacity(steps);
    for i in 1..=steps {
        let ramp_time = tau / 2.0 * i as f64 / steps as f64;
        let profile = target.profile(ramp_time, tau)?;
        if required_peak_acceleration(&profile) > available {
            continue;
        }
        out.push(ratio_at_saturation(config.delta(), pi_to_minus(config), config.species(), &profile)?);
    }
    Ok(out)
}

fn pi_to_minus(config: &LatticeConfig) -> f64 {
    if config.omega_minus() > 0.0 {
        config.omega_pi() / config.omega_minus()
    } else {
        0.0
    }
}
