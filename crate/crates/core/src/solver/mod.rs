//! Direct solvers for the per-residue systems of the normal equations.
//!
//! Every residue `i ∈ [0, L_w/2)` yields a real symmetric positive definite
//! system, tridiagonal for the standard inversion and periodic tridiagonal
//! (corner couplings) for the periodic one. The general solvers run in
//! O(n); when the coefficients are constant along a residue the matrix is
//! Toeplitz or circulant and is diagonalized by DST-I or the FFT.

mod alternating;
mod circulant;
mod dst;
mod periodic;
mod tridiagonal;

use num_complex::Complex64;

use crate::error::{FustftError, Result};

pub use alternating::{
    alternating_sign_reduce, cycle_phase as alternating_cycle_phase, ReducedSystem,
};
pub use circulant::{
    circulant_condition, circulant_eigenvalues, solve_circulant_fft, solve_hermitian_circulant,
    CirculantSolution,
};
pub use dst::{dst1, solve_toeplitz_dst, toeplitz_condition, toeplitz_eigenvalues};
pub use periodic::{solve_periodic_tridiagonal, solve_periodic_tridiagonal_counted};
pub use tridiagonal::{solve_tridiagonal, solve_tridiagonal_counted, TridiagonalLu};

/// Pivots below `PIVOT_TOL · max|diag|` signal near-singularity.
pub const PIVOT_TOL: f64 = 1e-14;

/// One residue system `A x = rhs`.
///
/// `offdiag[j]` couples unknowns `j` and `j + 1`. Open-boundary systems carry
/// `n − 1` couplings; periodic systems carry `n`, the last one coupling
/// unknown `n − 1` back to unknown `0`.
#[derive(Debug, Clone, PartialEq)]
pub struct BinSystem {
    pub diag: Vec<f64>,
    pub offdiag: Vec<f64>,
    pub rhs: Vec<Complex64>,
    pub periodic: bool,
}

impl BinSystem {
    pub fn open(diag: Vec<f64>, offdiag: Vec<f64>, rhs: Vec<Complex64>) -> Self {
        Self {
            diag,
            offdiag,
            rhs,
            periodic: false,
        }
    }

    pub fn periodic(diag: Vec<f64>, offdiag: Vec<f64>, rhs: Vec<Complex64>) -> Self {
        Self {
            diag,
            offdiag,
            rhs,
            periodic: true,
        }
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    pub(crate) fn check_shape(&self) -> Result<()> {
        let n = self.diag.len();
        let expected_off = if self.periodic {
            n
        } else {
            n.saturating_sub(1)
        };
        if self.rhs.len() != n || self.offdiag.len() != expected_off {
            return Err(FustftError::DimensionMismatch(format!(
                "system with {n} unknowns has {} couplings and {} right-hand sides",
                self.offdiag.len(),
                self.rhs.len()
            )));
        }
        Ok(())
    }

    /// `A·v`, including corner couplings for periodic systems.
    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        let n = self.diag.len();
        let mut out: Vec<Complex64> = (0..n).map(|j| v[j] * self.diag[j]).collect();
        let links = if self.periodic {
            n
        } else {
            n.saturating_sub(1)
        };
        for j in 0..links {
            let k = (j + 1) % n;
            out[j] += v[k] * self.offdiag[j];
            out[k] += v[j] * self.offdiag[j];
        }
        out
    }

    /// `‖A x − rhs‖₂ / ‖rhs‖₂` (absolute when `rhs` vanishes).
    pub fn relative_residual(&self, x: &[Complex64]) -> f64 {
        let ax = self.apply(x);
        let num: f64 = ax
            .iter()
            .zip(&self.rhs)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt();
        let den: f64 = self.rhs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if den > 0.0 {
            num / den
        } else {
            num
        }
    }

    /// Dispatches to the open or periodic general solver.
    pub fn solve(&self) -> Result<Vec<Complex64>> {
        if self.periodic {
            solve_periodic_tridiagonal(self)
        } else {
            solve_tridiagonal(self)
        }
    }
}

pub(crate) fn max_abs(values: &[f64]) -> f64 {
    values.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
}

/// Rejects `a − 2|b| ≤ 0`, where the constant-coefficient matrix can be singular.
pub(crate) fn check_margin(a: f64, b: f64) -> Result<()> {
    let margin = a - 2.0 * b.abs();
    if margin > 0.0 {
        Ok(())
    } else {
        Err(FustftError::NotPositiveDefinite { margin })
    }
}
