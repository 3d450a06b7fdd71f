//! Quadrature primitives shared by the decoherence and transport modules.

use std::f64::consts::PI;
use std::sync::OnceLock;

use nalgebra::DMatrix;

/// Adaptive Simpson integration of `f` over `[a, b]` to absolute tolerance `tol`.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson_step(&f, a, b, fa, fm, fb, whole, tol, 50)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
        + simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
}

/// Gauss–Hermite rule for weight `exp(-x²)` on the real line.
#[derive(Debug, Clone)]
pub struct GaussHermite {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

/// Largest rule [`gauss_hermite`] will build.
pub const MAX_GAUSS_HERMITE_NODES: usize = 512;

impl GaussHermite {
    /// Golub–Welsch eigenvalues of the Jacobi matrix as starting points, polished
    /// by Newton on the orthonormal Hermite recurrence. Weights come from p_n'.
    pub fn new(n: usize) -> Self {
        assert!((1..=MAX_GAUSS_HERMITE_NODES).contains(&n), "unsupported Gauss-Hermite order {n}");
        let pim4 = PI.powf(-0.25);
        let jacobi = DMatrix::from_fn(n, n, |i, j| {
            if i.abs_diff(j) == 1 { (0.5 * i.max(j) as f64).sqrt() } else { 0.0 }
        });
        let mut guesses: Vec<f64> = jacobi.symmetric_eigenvalues().iter().copied().collect();
        guesses.sort_by(f64::total_cmp);
        let mut nodes = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        for mut z in guesses {
            for _ in 0..8 {
                let (p, d) = hermite_orthonormal(n, z, pim4);
                if !(p.is_finite() && d.is_finite()) || d == 0.0 {
                    break;
                }
                let step = p / d;
                z -= step;
                if step.abs() <= 1e-16 * z.abs().max(1.0) {
                    break;
                }
            }
            let (_, d) = hermite_orthonormal(n, z, pim4);
            nodes.push(z);
            weights.push(if d.is_finite() { 2.0 / (d * d) } else { 0.0 });
        }
        // Symmetrize so odd moments cancel exactly.
        for i in 0..n / 2 {
            let x = 0.5 * (nodes[n - 1 - i] - nodes[i]);
            let w = 0.5 * (weights[i] + weights[n - 1 - i]);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        GaussHermite { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// ∫ exp(-x²) f(x) dx.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }
}

/// Returns (p_n(z), p_n'(z)) for the orthonormal Hermite polynomials.
fn hermite_orthonormal(n: usize, z: f64, pim4: f64) -> (f64, f64) {
    let mut p1 = pim4;
    let mut p2 = 0.0;
    for j in 1..=n {
        let p3 = p2;
        p2 = p1;
        let jf = j as f64;
        p1 = z * (2.0 / jf).sqrt() * p2 - ((jf - 1.0) / jf).sqrt() * p3;
    }
    (p1, (2.0 * n as f64).sqrt() * p2)
}

/// Cached rules with 2^k nodes, 1 ≤ 2^k ≤ [`MAX_GAUSS_HERMITE_NODES`].
pub fn gauss_hermite(n: usize) -> &'static GaussHermite {
    static RULES: [OnceLock<GaussHermite>; 10] = [const { OnceLock::new() }; 10];
    assert!(n.is_power_of_two() && n <= MAX_GAUSS_HERMITE_NODES, "cached rules are powers of two up to 512");
    RULES[n.trailing_zeros() as usize].get_or_init(|| GaussHermite::new(n))
}
