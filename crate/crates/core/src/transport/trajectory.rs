use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{ensure_non_negative, ensure_positive, Error, Result};

/// Mean of (d/d_max)² over one sinusoidal ramp: (8 + 15/π²)/24 ≈ 0.3967.
pub const ALPHA: f64 = (8.0 + 15.0 / (PI * PI)) / 24.0;

/// Round trip of the |s⟩ lattice: ramp out in `ramp_time`, hold `d_max` for
/// `wait_time`, ramp back in `ramp_time`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrajectoryProfile {
    d_max: f64,
    ramp_time: f64,
    wait_time: f64,
    tau: f64,
}

impl TrajectoryProfile {
    pub fn new(d_max: f64, ramp_time: f64, wait_time: f64) -> Result<Self> {
        ensure_positive("d_max", d_max)?;
        ensure_positive("ramp_time", ramp_time)?;
        ensure_non_negative("wait_time", wait_time)?;
        Ok(TrajectoryProfile { d_max, ramp_time, wait_time, tau: 2.0 * ramp_time + wait_time })
    }

    /// Ramp out and straight back (T = τ/2, no plateau).
    pub fn symmetric(d_max: f64, tau: f64) -> Result<Self> {
        ensure_positive("tau", tau)?;
        TrajectoryProfile::new(d_max, tau / 2.0, 0.0)
    }

    /// The profile with the given ramp and wait times whose effective distance is `d_eff`.
    pub fn for_effective_distance(d_eff: f64, ramp_time: f64, wait_time: f64) -> Result<Self> {
        ensure_positive("d_eff", d_eff)?;
        ensure_positive("ramp_time", ramp_time)?;
        ensure_non_negative("wait_time", wait_time)?;
        let tau = 2.0 * ramp_time + wait_time;
        let d_max = d_eff / shape_factor(ramp_time, tau).sqrt();
        TrajectoryProfile::new(d_max, ramp_time, wait_time)
    }

    pub fn d_max(&self) -> f64 {
        self.d_max
    }

    pub fn ramp_time(&self) -> f64 {
        self.ramp_time
    }

    pub fn wait_time(&self) -> f64 {
        self.wait_time
    }

    /// Total round-trip time 2T + t_w.
    pub fn tau(&self) -> f64 {
        self.tau
    }

    /// d(t) for t ∈ [0, τ].
    pub fn separation(&self, t: f64) -> Result<f64> {
        if !(0.0..=self.tau).contains(&t) {
            return Err(Error::domain("t", format!("must lie in [0, {}], got {t}", self.tau)));
        }
        Ok(self.separation_at(t))
    }

    /// d(t), clamping t into [0, τ].
    pub fn separation_at(&self, t: f64) -> f64 {
        let t = t.clamp(0.0, self.tau);
        let hold_end = self.ramp_time + self.wait_time;
        if t < self.ramp_time {
            self.d_max * ramp((self.ramp_time - t) / self.ramp_time)
        } else if t <= hold_end {
            self.d_max
        } else {
            self.d_max * ramp((t - hold_end) / self.ramp_time)
        }
    }
}

/// Fraction of the way back from the plateau edge: 1 − s + sin(2πs)/(2π).
fn ramp(s: f64) -> f64 {
    if s >= 1.0 {
        return 0.0;
    }
    1.0 - s + (2.0 * PI * s).sin() / (2.0 * PI)
}

/// d_eff²/d_max² = 1 + (2T/τ)(α − 1).
fn shape_factor(ramp_time: f64, tau: f64) -> f64 {
    1.0 + 2.0 * ramp_time / tau * (ALPHA - 1.0)
}

/// RMS separation over the round trip, closed form d_max·√(1 + (2T/τ)(α − 1)).
pub fn effective_distance(profile: &TrajectoryProfile) -> f64 {
    profile.d_max * shape_factor(profile.ramp_time, profile.tau).sqrt()
}

/// RMS separation over the round trip by direct quadrature of d(t)².
pub fn effective_distance_quadrature(profile: &TrajectoryProfile) -> f64 {
    (profile.integrated_squared_separation(profile.tau) / profile.tau).sqrt()
}

/// Peak |d″(t)| of the ramp, 2π d_max/T².
pub fn required_peak_acceleration(profile: &TrajectoryProfile) -> f64 {
    2.0 * PI * profile.d_max / (profile.ramp_time * profile.ramp_time)
}
