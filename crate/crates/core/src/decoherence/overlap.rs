use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::channels::CollectiveNoiseStrength;
use super::theta::theta3;
use crate::error::{ensure_non_negative, Error, Result};
use crate::numerics::{gauss_hermite, MAX_GAUSS_HERMITE_NODES};

const GH_START_NODES: usize = 64;
const GH_CONVERGENCE: f64 = 1e-12;
const TRAPEZOID_CONVERGENCE: f64 = 1e-13;
const TRAPEZOID_MAX_POINTS: usize = 1 << 24;

/// Tr(ρ(0)ρ(t)) for the product state under local dephasing: ((1 + e^{−Γ_sc t})/2)^N.
pub fn overlap_sc(n_atoms: usize, gamma_sc: f64, t: f64) -> Result<f64> {
    check_atoms(n_atoms)?;
    ensure_non_negative("gamma_sc", gamma_sc)?;
    ensure_non_negative("t", t)?;
    Ok((0.5 * (1.0 + (-gamma_sc * t).exp())).powi(exponent(n_atoms)?))
}

/// ∫ cos^{2N}(Λ/2) N(Λ; 0, γ) dΛ, the product-state overlap under collective dephasing.
///
/// Gauss–Hermite after Λ = √(2γ) u, doubling from 64 nodes until two rules agree
/// to 1e-12. When the comb cos^{2N}(Λ/2) is too fine for the largest rule, the
/// integral is folded onto one period and evaluated with the periodic
/// trapezoid rule ([`overlap_qg_trapezoid`]).
pub fn overlap_qg_quadrature(n_atoms: usize, gamma_t: CollectiveNoiseStrength) -> Result<f64> {
    check_atoms(n_atoms)?;
    let gamma = gamma_t.value();
    if gamma == 0.0 {
        return Ok(1.0);
    }
    let power = exponent(n_atoms)?;
    let half_scale = (0.5 * gamma).sqrt();
    let integrand = |u: f64| (half_scale * u).cos().powi(2).powi(power);

    if !gauss_hermite_resolves(n_atoms, gamma) {
        return overlap_qg_trapezoid(n_atoms, gamma_t);
    }
    let mut nodes = GH_START_NODES;
    let mut previous = gauss_hermite(nodes).integrate(integrand) / PI.sqrt();
    while nodes < MAX_GAUSS_HERMITE_NODES {
        nodes *= 2;
        let current = gauss_hermite(nodes).integrate(integrand) / PI.sqrt();
        if (current - previous).abs() < GH_CONVERGENCE {
            return Ok(current.clamp(0.0, 1.0));
        }
        previous = current;
    }
    overlap_qg_trapezoid(n_atoms, gamma_t)
}

/// In u the integrand carries frequencies up to N√(γ/2), but its binomial
/// spectrum is concentrated within ~8√N of zero. The largest rule resolves
/// frequencies up to about √(2n)/2.
fn gauss_hermite_resolves(n_atoms: usize, gamma: f64) -> bool {
    let n = n_atoms as f64;
    let bandwidth = (0.5 * gamma).sqrt() * n.min(8.0 * n.sqrt());
    bandwidth < 0.5 * (2.0 * MAX_GAUSS_HERMITE_NODES as f64).sqrt()
}

/// Periodic route for the collective overlap: ∫_{−π}^{π} cos^{2N}(Λ/2) w_γ(Λ) dΛ
/// with w_γ the 2π-wrapped Gaussian, by the trapezoid rule (spectrally accurate
/// for periodic integrands). Points double until successive sums agree to 1e-13,
/// just above the summation rounding floor.
pub fn overlap_qg_trapezoid(n_atoms: usize, gamma_t: CollectiveNoiseStrength) -> Result<f64> {
    check_atoms(n_atoms)?;
    let gamma = gamma_t.value();
    if gamma == 0.0 {
        return Ok(1.0);
    }
    let power = exponent(n_atoms)?;
    let wrapped = WrappedGaussian::new(gamma);
    let rule = |points: usize| {
        let h = 2.0 * PI / points as f64;
        let sum: f64 = (0..points)
            .map(|j| {
                let lambda = -PI + h * j as f64;
                (0.5 * lambda).cos().powi(2).powi(power) * wrapped.density(lambda)
            })
            .sum();
        h * sum
    };
    let mut points = (2 * n_atoms + 2).next_power_of_two().max(64);
    let mut previous = rule(points);
    loop {
        points *= 2;
        let current = rule(points);
        if (current - previous).abs() < TRAPEZOID_CONVERGENCE || points >= TRAPEZOID_MAX_POINTS {
            return Ok(current.clamp(0.0, 1.0));
        }
        previous = current;
    }
}

/// Density of Λ mod 2π for Λ ~ N(0, γ).
struct WrappedGaussian {
    gamma: f64,
    images: i64,
    fourier: Option<Vec<f64>>,
}

impl WrappedGaussian {
    fn new(gamma: f64) -> Self {
        if gamma < 1.0 {
            let images = (9.0 * gamma.sqrt() / (2.0 * PI)).ceil() as i64 + 1;
            WrappedGaussian { gamma, images, fourier: None }
        } else {
            // Fourier series (1/2π)(1 + 2 Σ e^{−k²γ/2} cos kΛ).
            let coefficients: Vec<f64> = (1..)
                .map(|k: i64| (-((k * k) as f64) * gamma / 2.0).exp())
                .take_while(|&c| c > 1e-18)
                .collect();
            WrappedGaussian { gamma, images: 0, fourier: Some(coefficients) }
        }
    }

    fn density(&self, lambda: f64) -> f64 {
        match &self.fourier {
            Some(coefficients) => {
                let series: f64 =
                    coefficients.iter().enumerate().map(|(i, c)| c * ((i + 1) as f64 * lambda).cos()).sum();
                (1.0 + 2.0 * series) / (2.0 * PI)
            }
            None => {
                let norm = 1.0 / (2.0 * PI * self.gamma).sqrt();
                (-self.images..=self.images)
                    .map(|m| {
                        let x = lambda + 2.0 * PI * m as f64;
                        (-x * x / (2.0 * self.gamma)).exp()
                    })
                    .sum::<f64>()
                    * norm
            }
        }
    }
}

/// Large-N form of the collective overlap: √(2/(Nγ)) θ₃(0, e^{−(2π)²/(2γ)}).
///
/// cos^{2N}(Λ/2) tends to a comb of peaks at Λ = 2πk, each of weight
/// ∫_{−π}^{π} cos^{2N}(Λ/2) dΛ = 2π C(2N, N)/4^N → 2√(π/N); summing the
/// Gaussian over the comb gives the θ₃ series.
pub fn overlap_qg_asymptotic(n_atoms: usize, gamma_t: CollectiveNoiseStrength) -> Result<f64> {
    check_atoms(n_atoms)?;
    let gamma = gamma_t.value();
    if gamma == 0.0 {
        return Err(Error::domain("gamma_t", "asymptotic overlap is singular at gamma = 0"));
    }
    let nome = (-(2.0 * PI).powi(2) / (2.0 * gamma)).exp();
    Ok((2.0 / (n_atoms as f64 * gamma)).sqrt() * theta3(nome)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GhzChannel {
    Local,
    Collective,
}

/// GHZ-state overlap: local `(1 + e^{−N Γ_sc t})/2`, collective `(1 + e^{−2N²γ})/2`.
///
/// `rate_time` is Γ_sc·t for [`GhzChannel::Local`] and γ for
/// [`GhzChannel::Collective`]. The collective exponent is written for the
/// phase parametrisation exp(iΛS_z); in the channel parametrisation used by
/// [`apply_collective_dephasing`](super::apply_collective_dephasing) the same
/// state decays as `overlap_ghz(N, Collective, γ/4)`.
pub fn overlap_ghz(n_atoms: usize, channel: GhzChannel, rate_time: f64) -> Result<f64> {
    check_atoms(n_atoms)?;
    ensure_non_negative("rate_time", rate_time)?;
    let n = n_atoms as f64;
    let exponent = match channel {
        GhzChannel::Local => n * rate_time,
        GhzChannel::Collective => 2.0 * n * n * rate_time,
    };
    Ok(0.5 * (1.0 + (-exponent).exp()))
}

fn check_atoms(n_atoms: usize) -> Result<()> {
    if n_atoms == 0 {
        return Err(Error::domain("n_atoms", "must be at least 1"));
    }
    Ok(())
}

fn exponent(n_atoms: usize) -> Result<i32> {
    i32::try_from(n_atoms).map_err(|_| Error::domain("n_atoms", "too large"))
}

#[cfg(test)]
mod tests {
    use std::f64::consts::LN_2;

    use super::*;

    fn g(value: f64) -> CollectiveNoiseStrength {
        CollectiveNoiseStrength::new(value).unwrap()
    }

    /// Fourier expansion of cos^{2N}(Λ/2) averaged term by term:
    /// Σ_k C(2N, N+k) 4^{−N} e^{−k²γ/2}, evaluated with log-binomials.
    // Σ_k C(2N, N+k) 4^{−N} e^{−k²γ/2}, with the binomial weights built outward
    // from the centre by their ratio C(2N, N+k+1)/C(2N, N+k) = (N−k)/(N+k+1).
    fn binomial_oracle(n: usize, gamma: f64) -> f64 {
        let centre: f64 = (1..=n).map(|j| 1.0 - 0.5 / j as f64).product();
        let mut weight = centre;
        let mut sum = centre;
        for k in 0..n {
            weight *= (n - k) as f64 / (n + k + 1) as f64;
            let kk = (k + 1) as f64;
            sum += 2.0 * weight * (-kk * kk * gamma / 2.0).exp();
        }
        sum
    }

    #[test]
    fn sc_values() {
        assert_eq!(overlap_sc(5, 1.0, 0.0).unwrap(), 1.0);
        assert!((overlap_sc(1, LN_2, 1.0).unwrap() - 0.75).abs() < 1e-15);
        assert!((overlap_sc(4, 1.0, LN_2).unwrap() - 0.316_406_25).abs() < 1e-15);
        assert!(overlap_sc(0, 1.0, 1.0).is_err());
        assert!(overlap_sc(1, 1.0, -1.0).is_err());
    }

    #[test]
    fn qg_quadrature_closed_forms() {
        assert_eq!(overlap_qg_quadrature(7, g(0.0)).unwrap(), 1.0);
        let single = overlap_qg_quadrature(1, g(2.0 * LN_2)).unwrap();
        assert!((single - 0.75).abs() < 1e-12);
        for gamma in [0.01, 0.5, 3.0, 40.0] {
            let expected = 0.5 * (1.0 + (-gamma / 2.0_f64).exp());
            assert!((overlap_qg_quadrature(1, g(gamma)).unwrap() - expected).abs() < 1e-12, "gamma={gamma}");
        }
    }

    #[test]
    fn qg_quadrature_against_binomial_sum() {
        for &n in &[1usize, 2, 3, 10, 100, 1000, 10_000] {
            for &gamma in &[1e-3, 0.1, 1.0, 10.0, 100.0, 1000.0] {
                let quad = overlap_qg_quadrature(n, g(gamma)).unwrap();
                let oracle = binomial_oracle(n, gamma);
                assert!((quad - oracle).abs() < 1e-10, "N={n} gamma={gamma}: {quad} vs {oracle}");
            }
        }
    }

    #[test]
    fn trapezoid_route_agrees_with_gauss_hermite_where_both_converge() {
        for &(n, gamma) in &[(1usize, 0.3), (3, 1.0), (5, 2.0), (20, 0.05)] {
            let a = overlap_qg_quadrature(n, g(gamma)).unwrap();
            let b = overlap_qg_trapezoid(n, g(gamma)).unwrap();
            assert!((a - b).abs() < 1e-12, "N={n} gamma={gamma}");
        }
    }

    #[test]
    fn asymptotic_values() {
        let q = (-(2.0 * PI).powi(2) / 20.0_f64).exp();
        let expected = (2.0_f64 / 1000.0).sqrt() * (1.0 + 2.0 * q + 2.0 * q.powi(4) + 2.0 * q.powi(9));
        let got = overlap_qg_asymptotic(100, g(10.0)).unwrap();
        assert!((got - expected).abs() < 1e-12);
        assert!((got - 0.057_18).abs() < 1e-4, "{got}");
        let quarter = overlap_qg_asymptotic(400, g(10.0)).unwrap();
        assert!((quarter - got / 2.0).abs() < 1e-15);
        assert!(overlap_qg_asymptotic(10, g(0.0)).is_err());
    }

    #[test]
    fn asymptotic_large_n_cross_check() {
        let quad = overlap_qg_quadrature(10_000, g(1000.0)).unwrap();
        let asym = overlap_qg_asymptotic(10_000, g(1000.0)).unwrap();
        assert!((asym - quad).abs() / quad < 0.01);
    }

    #[test]
    fn ghz_values() {
        assert!((overlap_ghz(3, GhzChannel::Local, LN_2).unwrap() - 0.5625).abs() < 1e-15);
        assert!((overlap_ghz(2, GhzChannel::Collective, LN_2 / 8.0).unwrap() - 0.75).abs() < 1e-15);
        for n in 1..6 {
            assert_eq!(overlap_ghz(n, GhzChannel::Local, 0.0).unwrap(), 1.0);
            assert_eq!(overlap_ghz(n, GhzChannel::Collective, 0.0).unwrap(), 1.0);
        }
        assert!(overlap_ghz(2, GhzChannel::Local, -1.0).is_err());
    }
}
