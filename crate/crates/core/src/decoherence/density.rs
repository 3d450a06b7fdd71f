use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Dense-representation cap on the number of atoms.
pub const MAX_ATOMS: usize = 12;

const HERMITIAN_TOL: f64 = 1e-12;
const TRACE_TOL: f64 = 1e-12;

/// Number of atoms in |s⟩ minus number in |g⟩ for basis index `l`.
pub fn total_spin(l: usize, n_atoms: usize) -> i64 {
    2 * i64::from(l.count_ones()) - n_atoms as i64
}

pub fn hamming_distance(l: usize, lp: usize) -> u32 {
    (l ^ lp).count_ones()
}

/// Density matrix of N two-level atoms in the tensor-product z-basis.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    n_atoms: usize,
    elements: DMatrix<Complex64>,
}

impl DensityMatrix {
    /// Validates dimension, hermiticity and unit trace.
    pub fn new(n_atoms: usize, elements: DMatrix<Complex64>) -> Result<Self> {
        check_atoms(n_atoms)?;
        let dim = 1usize << n_atoms;
        if elements.nrows() != dim || elements.ncols() != dim {
            return Err(Error::domain(
                "density matrix",
                format!("expected {dim}x{dim} for {n_atoms} atoms, got {}x{}", elements.nrows(), elements.ncols()),
            ));
        }
        let rho = DensityMatrix { n_atoms, elements };
        if !rho.is_hermitian(HERMITIAN_TOL) {
            return Err(Error::domain("density matrix", "not Hermitian"));
        }
        let tr = rho.trace();
        if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
            return Err(Error::domain("density matrix", format!("trace {tr} is not 1")));
        }
        Ok(rho)
    }

    /// |ψ⟩⟨ψ| for a normalised state vector.
    pub fn from_state_vector(n_atoms: usize, psi: &[Complex64]) -> Result<Self> {
        check_atoms(n_atoms)?;
        let dim = 1usize << n_atoms;
        if psi.len() != dim {
            return Err(Error::domain("state vector", format!("expected length {dim}, got {}", psi.len())));
        }
        let elements = DMatrix::from_fn(dim, dim, |i, j| psi[i] * psi[j].conj());
        DensityMatrix::new(n_atoms, elements)
    }

    /// The product state ((|g⟩ + |s⟩)/√2)^⊗N.
    pub fn product_plus(n_atoms: usize) -> Result<Self> {
        check_atoms(n_atoms)?;
        let dim = 1usize << n_atoms;
        let value = Complex64::new(1.0 / dim as f64, 0.0);
        Ok(DensityMatrix { n_atoms, elements: DMatrix::from_element(dim, dim, value) })
    }

    /// (|g…g⟩ + |s…s⟩)/√2.
    pub fn ghz(n_atoms: usize) -> Result<Self> {
        check_atoms(n_atoms)?;
        let dim = 1usize << n_atoms;
        let mut elements = DMatrix::zeros(dim, dim);
        let corners = [0, dim - 1];
        for &i in &corners {
            for &j in &corners {
                elements[(i, j)] = Complex64::new(0.5, 0.0);
            }
        }
        Ok(DensityMatrix { n_atoms, elements })
    }

    pub fn n_atoms(&self) -> usize {
        self.n_atoms
    }

    pub fn dim(&self) -> usize {
        self.elements.nrows()
    }

    pub fn elements(&self) -> &DMatrix<Complex64> {
        &self.elements
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.elements[(row, col)]
    }

    pub fn trace(&self) -> Complex64 {
        self.elements.trace()
    }

    /// Tr(ρ σ), real for Hermitian arguments.
    pub fn overlap(&self, other: &DensityMatrix) -> f64 {
        assert_eq!(self.dim(), other.dim(), "overlap of mismatched dimensions");
        // Tr(AB) = Σ_ij A_ij B_ji
        self.elements.iter().zip(other.elements.transpose().iter()).map(|(a, b)| (a * b).re).sum()
    }

    pub fn purity(&self) -> f64 {
        self.overlap(self)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        let dim = self.dim();
        (0..dim).all(|i| (i..dim).all(|j| (self.elements[(i, j)] - self.elements[(j, i)].conj()).norm() <= tol))
    }

    pub fn min_eigenvalue(&self) -> f64 {
        let eig = self.elements.clone().symmetric_eigen();
        eig.eigenvalues.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// Scales element (l, l′) by `factor(l, l′)`. Used by the diagonal channels.
    pub(crate) fn scaled_by<F: Fn(usize, usize) -> f64>(&self, factor: F) -> DensityMatrix {
        let elements = DMatrix::from_fn(self.dim(), self.dim(), |i, j| self.elements[(i, j)] * factor(i, j));
        DensityMatrix { n_atoms: self.n_atoms, elements }
    }

    pub(crate) fn from_raw(n_atoms: usize, elements: DMatrix<Complex64>) -> DensityMatrix {
        DensityMatrix { n_atoms, elements }
    }
}

fn check_atoms(n_atoms: usize) -> Result<()> {
    if n_atoms == 0 {
        return Err(Error::domain("n_atoms", "must be at least 1"));
    }
    if n_atoms > MAX_ATOMS {
        return Err(Error::TooManyAtoms { n_atoms, max: MAX_ATOMS });
    }
    Ok(())
}
