//! Reduction of alternating-sign couplings to constant coefficients.
//!
//! FUSTFT-III with `L_w/2` an odd multiple of `ξ` produces residue systems
//! with constant diagonal `a` and couplings `(−1)^j b`. A unitary diagonal
//! `D` with `d_{j+1} = d_j·γ·(−1)^j` turns `D^H A D` into a constant-coupling
//! matrix with coupling `γb`. For open boundaries `γ = 1` and `D` has entries
//! `±1`. For periodic systems the corner closes the cycle only if
//! `γ^n·(−1)^{n(n−1)/2} = 1`, which picks `γ ∈ {1, −1, i}` from `n mod 4`;
//! the entries of `D` are then fourth roots of unity.

use num_complex::Complex64;

use super::circulant::solve_hermitian_circulant;
use super::dst::solve_toeplitz_dst;
use super::BinSystem;
use crate::error::{FustftError, Result};

const PATTERN_TOL: f64 = 1e-14;

/// Constant-coefficient system `D^H A D` plus the scaling `D`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedSystem {
    pub diag: f64,
    /// Coupling from unknown `j` to `j+1`; the reverse coupling is its conjugate.
    pub coupling: Complex64,
    pub periodic: bool,
    /// Diagonal of `D`.
    pub scaling: Vec<Complex64>,
    /// Transformed right-hand side `D^H rhs`.
    pub rhs: Vec<Complex64>,
}

impl ReducedSystem {
    pub fn len(&self) -> usize {
        self.scaling.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scaling.is_empty()
    }

    /// Maps a solution of the reduced system back: `x = D z`.
    pub fn restore(&self, z: &[Complex64]) -> Vec<Complex64> {
        z.iter().zip(&self.scaling).map(|(v, d)| v * d).collect()
    }

    /// Solves with DST-I (open) or the FFT (periodic) and maps back.
    pub fn solve_fast(&self) -> Result<(Vec<Complex64>, f64)> {
        let (z, condition) = if self.periodic {
            let sol = solve_hermitian_circulant(self.diag, self.coupling, &self.rhs)?;
            (sol.x, sol.condition)
        } else {
            let b = self.coupling.re;
            let z = solve_toeplitz_dst(self.diag, b, &self.rhs)?;
            (z, super::toeplitz_condition(self.diag, b, self.len()))
        };
        Ok((self.restore(&z), condition))
    }

    /// `(D^H A D)·v` for checking the reduction entrywise.
    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        let n = v.len();
        let mut out: Vec<Complex64> = v.iter().map(|x| x * self.diag).collect();
        let links = if self.periodic {
            n
        } else {
            n.saturating_sub(1)
        };
        for j in 0..links {
            let k = (j + 1) % n;
            out[j] += v[k] * self.coupling;
            out[k] += v[j] * self.coupling.conj();
        }
        out
    }
}

/// Coupling phase `γ` closing a periodic cycle of length `n`.
pub fn cycle_phase(n: usize) -> Complex64 {
    match n % 4 {
        0 | 1 => Complex64::new(1.0, 0.0),
        3 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, 1.0),
    }
}

/// Reduces a system with constant diagonal and couplings `(−1)^j b`.
pub fn alternating_sign_reduce(sys: &BinSystem) -> Result<ReducedSystem> {
    sys.check_shape()?;
    let n = sys.len();
    if n == 0 {
        return Err(FustftError::DimensionMismatch("empty system".into()));
    }
    let a = sys.diag[0];
    if let Some(j) = sys
        .diag
        .iter()
        .position(|&d| (d - a).abs() > PATTERN_TOL * a.abs())
    {
        return Err(FustftError::PatternMismatch { index: j });
    }
    let b = sys.offdiag.first().copied().unwrap_or(0.0);
    for (j, &v) in sys.offdiag.iter().enumerate() {
        let expected = if j % 2 == 0 { b } else { -b };
        if (v - expected).abs() > PATTERN_TOL * b.abs().max(a.abs()) {
            return Err(FustftError::PatternMismatch { index: j });
        }
    }

    let one = Complex64::new(1.0, 0.0);
    let gamma = if b == 0.0 || !sys.periodic {
        one
    } else {
        cycle_phase(n)
    };
    let mut scaling = Vec::with_capacity(n);
    let mut d = one;
    for j in 0..n {
        scaling.push(d);
        // With b = 0 every sign choice works; keep D = I.
        if b != 0.0 {
            d *= if j % 2 == 0 { gamma } else { -gamma };
        }
    }
    let rhs = sys
        .rhs
        .iter()
        .zip(&scaling)
        .map(|(r, d)| d.conj() * r)
        .collect();
    Ok(ReducedSystem {
        diag: a,
        coupling: gamma * b,
        periodic: sys.periodic,
        scaling,
        rhs,
    })
}
