use crate::error::{Error, Result};

const TERM_CUTOFF: f64 = 1e-16;

/// Jacobi θ₃(0, q) = 1 + 2 Σ_{n≥1} q^{n²}, summed until a term drops below 1e-16.
pub fn theta3(q: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&q) {
        return Err(Error::domain("nome", format!("theta3 needs 0 <= q < 1, got {q}")));
    }
    if q == 0.0 {
        return Ok(1.0);
    }
    let ln_q = q.ln();
    let mut sum = 1.0;
    let mut n = 1.0_f64;
    loop {
        let term = 2.0 * (ln_q * n * n).exp();
        sum += term;
        if term < TERM_CUTOFF {
            return Ok(sum);
        }
        n += 1.0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_nome_series() {
        let q = (-1.9739_f64).exp();
        let expected = 1.0 + 2.0 * q + 2.0 * q.powi(4) + 2.0 * q.powi(9);
        assert!((theta3(q).unwrap() - expected).abs() < 1e-12);
        assert_eq!(theta3(0.0).unwrap(), 1.0);
        assert!(theta3(1.0).is_err());
    }

    #[test]
    fn jacobi_imaginary_transform() {
        // θ₃(e^{-πt}) = t^{-1/2} θ₃(e^{-π/t})
        for t in [0.3_f64, 1.0, 2.5] {
            let pi = std::f64::consts::PI;
            let lhs = theta3((-pi * t).exp()).unwrap();
            let rhs = theta3((-pi / t).exp()).unwrap() / t.sqrt();
            assert!((lhs - rhs).abs() < 1e-13, "t={t}");
        }
    }
}
