use num_complex::Complex64;

use super::{max_abs, BinSystem, PIVOT_TOL};
use crate::error::{FustftError, Result};

/// LU factors of a real symmetric tridiagonal matrix (Thomas algorithm).
#[derive(Debug, Clone)]
pub struct TridiagonalLu {
    /// Pivots `d_j` of `U`.
    pivots: Vec<f64>,
    /// Multipliers `l_j = b_j / d_j` of the unit lower factor.
    multipliers: Vec<f64>,
    offdiag: Vec<f64>,
}

impl TridiagonalLu {
    /// Factors `diag`/`offdiag` (length `n − 1`), adding one to `steps` per
    /// elimination step.
    pub fn factor(diag: &[f64], offdiag: &[f64], steps: &mut usize) -> Result<Self> {
        let n = diag.len();
        debug_assert_eq!(offdiag.len(), n.saturating_sub(1));
        let threshold = PIVOT_TOL * max_abs(diag);
        let mut pivots = Vec::with_capacity(n);
        let mut multipliers = Vec::with_capacity(n.saturating_sub(1));
        let mut prev = 0.0;
        for j in 0..n {
            let mut d = diag[j];
            if j > 0 {
                let m = offdiag[j - 1] / prev;
                multipliers.push(m);
                d -= m * offdiag[j - 1];
            }
            if !(d.abs() >= threshold) || d == 0.0 {
                return Err(FustftError::NearSingular {
                    bin: None,
                    pivot: d,
                    threshold,
                });
            }
            pivots.push(d);
            prev = d;
            *steps += 1;
        }
        Ok(Self {
            pivots,
            multipliers,
            offdiag: offdiag.to_vec(),
        })
    }

    pub fn len(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pivots.is_empty()
    }

    /// Overwrites `rhs` with the solution.
    pub fn solve_in_place(&self, rhs: &mut [Complex64], steps: &mut usize) {
        let n = self.pivots.len();
        for j in 1..n {
            let prev = rhs[j - 1];
            rhs[j] -= prev * self.multipliers[j - 1];
            *steps += 1;
        }
        rhs[n - 1] /= self.pivots[n - 1];
        for j in (0..n - 1).rev() {
            let next = rhs[j + 1];
            rhs[j] = (rhs[j] - next * self.offdiag[j]) / self.pivots[j];
            *steps += 1;
        }
    }
}

/// Solves an open-boundary symmetric tridiagonal system in O(n).
pub fn solve_tridiagonal(sys: &BinSystem) -> Result<Vec<Complex64>> {
    let mut steps = 0;
    solve_tridiagonal_counted(sys, &mut steps)
}

/// [`solve_tridiagonal`] that also counts elimination and substitution steps.
pub fn solve_tridiagonal_counted(sys: &BinSystem, steps: &mut usize) -> Result<Vec<Complex64>> {
    if sys.periodic {
        return Err(FustftError::DimensionMismatch(
            "periodic system passed to the open-boundary solver".into(),
        ));
    }
    sys.check_shape()?;
    if sys.is_empty() {
        return Ok(Vec::new());
    }
    let lu = TridiagonalLu::factor(&sys.diag, &sys.offdiag, steps)?;
    let mut x = sys.rhs.clone();
    lu.solve_in_place(&mut x, steps);
    Ok(x)
}
