use nalgebra::DMatrix;
use num_complex::Complex64;

use super::density::DensityMatrix;
use crate::error::{ensure_non_negative, ensure_positive, Error, Result};

/// The integrator is an oracle for small systems only.
pub const MAX_LINDBLAD_ATOMS: usize = 8;

/// Diagonal jump operators σ_z^i and S_z, stored by their eigenvalues.
struct Dephasing {
    /// σ_z^i ρ σ_z^i = sandwich[i] ∘ ρ.
    sandwich: Vec<DMatrix<f64>>,
    spin: Vec<f64>,
}

impl Dephasing {
    fn new(n_atoms: usize) -> Self {
        let dim = 1usize << n_atoms;
        let sigma = |atom: usize, l: usize| if (l >> atom) & 1 == 1 { 1.0 } else { -1.0 };
        let sandwich =
            (0..n_atoms).map(|atom| DMatrix::from_fn(dim, dim, |a, b| sigma(atom, a) * sigma(atom, b))).collect();
        let spin = (0..dim).map(|l| (0..n_atoms).map(|atom| sigma(atom, l)).sum()).collect();
        Dephasing { sandwich, spin }
    }

    /// (Γ_sc/2) Σᵢ (σ_z^i ρ σ_z^i − ρ) + (Γ_QG/2)(S_z ρ S_z − ½{S_z², ρ})
    fn generator(&self, rho: &DMatrix<Complex64>, gamma_sc: f64, gamma_qg: f64) -> DMatrix<Complex64> {
        let dim = rho.nrows();
        let mut out = DMatrix::zeros(dim, dim);
        if gamma_sc != 0.0 {
            for z in &self.sandwich {
                out += rho.zip_map(z, |r, s| (r * s - r) * (0.5 * gamma_sc));
            }
        }
        if gamma_qg != 0.0 {
            let s = &self.spin;
            out += DMatrix::from_fn(dim, dim, |a, b| {
                let r = rho[(a, b)];
                let sandwich = s[a] * s[b];
                let anticommutator = 0.5 * (s[a] * s[a] + s[b] * s[b]);
                r * (0.5 * gamma_qg * (sandwich - anticommutator))
            });
        }
        out
    }
}

/// Classic RK4 integration of the combined local + collective dephasing master
/// equation from 0 to `t_final`. The step is `t_final / ceil(t_final / dt)`.
pub fn lindblad_evolve<F: Fn(f64) -> f64>(
    rho0: &DensityMatrix,
    gamma_sc: f64,
    gamma_qg_rate: F,
    t_final: f64,
    dt: f64,
) -> Result<DensityMatrix> {
    ensure_positive("dt", dt)?;
    ensure_non_negative("t_final", t_final)?;
    ensure_non_negative("gamma_sc", gamma_sc)?;
    let n_atoms = rho0.n_atoms();
    if n_atoms > MAX_LINDBLAD_ATOMS {
        return Err(Error::TooManyAtoms { n_atoms, max: MAX_LINDBLAD_ATOMS });
    }
    if t_final == 0.0 {
        return Ok(rho0.clone());
    }
    let ops = Dephasing::new(n_atoms);
    let steps = (t_final / dt).ceil().max(1.0) as usize;
    let h = t_final / steps as f64;
    let mut rho = rho0.elements().clone();
    for step in 0..steps {
        let t = step as f64 * h;
        let rate_start = gamma_qg_rate(t);
        let rate_mid = gamma_qg_rate(t + 0.5 * h);
        let rate_end = gamma_qg_rate(t + h);
        let k1 = ops.generator(&rho, gamma_sc, rate_start);
        let k2 = ops.generator(&(&rho + &k1 * Complex64::from(0.5 * h)), gamma_sc, rate_mid);
        let k3 = ops.generator(&(&rho + &k2 * Complex64::from(0.5 * h)), gamma_sc, rate_mid);
        let k4 = ops.generator(&(&rho + &k3 * Complex64::from(h)), gamma_sc, rate_end);
        rho += (k1 + k2 * Complex64::from(2.0) + k3 * Complex64::from(2.0) + k4) * Complex64::from(h / 6.0);
    }
    Ok(DensityMatrix::from_raw(n_atoms, rho))
}
