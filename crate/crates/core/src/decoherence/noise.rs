use super::channels::CollectiveNoiseStrength;
use crate::error::{ensure_non_negative, Error, Result};
use crate::numerics::adaptive_simpson;
use crate::transport::TrajectoryProfile;

/// γ(t) = 2 γ_QG ∫₀ᵗ d(t′)² dt′ along the separation ramp.
///
/// `gamma_qg` is the localisation strength γ_QG in 1/(m²·s).
pub fn gamma_of_t(profile: &TrajectoryProfile, gamma_qg: f64, t: f64) -> Result<CollectiveNoiseStrength> {
    ensure_non_negative("gamma_qg", gamma_qg)?;
    if !(0.0..=profile.tau()).contains(&t) {
        return Err(Error::domain("t", format!("must lie in [0, {}], got {t}", profile.tau())));
    }
    let integral = profile.integrated_squared_separation(t);
    CollectiveNoiseStrength::new(2.0 * gamma_qg * integral)
}

impl TrajectoryProfile {
    /// ∫₀ᵗ d(t′)² dt′ by adaptive Simpson on each smooth piece.
    pub fn integrated_squared_separation(&self, t: f64) -> f64 {
        let t = t.clamp(0.0, self.tau());
        let breaks = [0.0, self.ramp_time(), self.ramp_time() + self.wait_time(), self.tau()];
        let tol = 1e-14 * self.d_max() * self.d_max() * self.tau();
        breaks
            .windows(2)
            .filter(|w| w[0] < t)
            .map(|w| {
                let upper = w[1].min(t);
                adaptive_simpson(|s| self.separation_at(s).powi(2), w[0], upper, tol / 3.0)
            })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transport::ALPHA;

    #[test]
    fn zero_at_start() {
        let p = TrajectoryProfile::new(0.1, 0.5, 0.2).unwrap();
        assert_eq!(gamma_of_t(&p, 100.0, 0.0).unwrap().value(), 0.0);
    }

    #[test]
    fn plateau_segment_is_linear() {
        let p = TrajectoryProfile::new(0.2, 0.1, 1.0).unwrap();
        let a = gamma_of_t(&p, 50.0, 0.3).unwrap().value();
        let b = gamma_of_t(&p, 50.0, 0.8).unwrap().value();
        let expected = 2.0 * 50.0 * 0.2 * 0.2 * 0.5;
        assert!(((b - a) - expected).abs() / expected < 1e-10);
    }

    #[test]
    fn full_round_trip_closed_form() {
        let tau = 1.0;
        let d_max = 0.15;
        let p = TrajectoryProfile::new(d_max, tau / 2.0, 0.0).unwrap();
        let got = gamma_of_t(&p, 108.9, tau).unwrap().value();
        let expected = 2.0 * 108.9 * ALPHA * d_max * d_max * tau;
        assert!((got - expected).abs() / expected < 1e-9);
    }

    #[test]
    fn outside_round_trip_is_rejected() {
        let p = TrajectoryProfile::new(0.1, 0.5, 0.0).unwrap();
        assert!(gamma_of_t(&p, 1.0, 1.0 + 1e-6).is_err());
        assert!(gamma_of_t(&p, 1.0, -1e-6).is_err());
    }

    #[test]
    fn monotone_in_time() {
        let p = TrajectoryProfile::new(0.1, 0.3, 0.4).unwrap();
        let mut last = 0.0;
        for i in 0..=100 {
            let g = gamma_of_t(&p, 10.0, p.tau() * i as f64 / 100.0).unwrap().value();
            assert!(g >= last);
            last = g;
        }
    }
}
