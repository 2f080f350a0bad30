//! Hermitian circulant tridiagonal systems via the FFT.
//!
//! The matrix has diagonal `a`, coupling `c` from unknown `j` to `j+1`
//! (mod n) and `conj(c)` back. On the Fourier basis its eigenvalues are
//! `λ_q = a + 2·Re(c·e^{i2πq/n})`, which reduces to `a + 2b cos(2πq/n)` for
//! a real coupling `b`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rustfft::FftPlanner;

use super::check_margin;
use super::dst::condition;
use crate::error::{FustftError, Result};

/// Solution together with the condition number `max λ / min λ`.
#[derive(Debug, Clone)]
pub struct CirculantSolution {
    pub x: Vec<Complex64>,
    pub condition: f64,
}

pub fn circulant_eigenvalues(a: f64, coupling: Complex64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|q| {
            let w = Complex64::from_polar(1.0, 2.0 * PI * q as f64 / n as f64);
            a + 2.0 * (coupling * w).re
        })
        .collect()
}

pub fn circulant_condition(a: f64, coupling: Complex64, n: usize) -> f64 {
    condition(&circulant_eigenvalues(a, coupling, n))
}

/// Symmetric circulant system with diagonal `a` and real coupling `b`.
pub fn solve_circulant_fft(a: f64, b: f64, rhs: &[Complex64]) -> Result<CirculantSolution> {
    solve_hermitian_circulant(a, Complex64::new(b, 0.0), rhs)
}

/// Hermitian circulant system; requires `a − 2|c| > 0`.
pub fn solve_hermitian_circulant(
    a: f64,
    coupling: Complex64,
    rhs: &[Complex64],
) -> Result<CirculantSolution> {
    check_margin(a, coupling.norm())?;
    let n = rhs.len();
    if n < 3 {
        return Err(FustftError::DimensionMismatch(format!(
            "circulant tridiagonal systems need at least 3 unknowns, got {n}"
        )));
    }
    let lambda = circulant_eigenvalues(a, coupling, n);
    let mut planner = FftPlanner::new();
    let mut buf = rhs.to_vec();
    planner.plan_fft_forward(n).process(&mut buf);
    for (v, l) in buf.iter_mut().zip(&lambda) {
        *v /= *l * n as f64;
    }
    planner.plan_fft_inverse(n).process(&mut buf);
    Ok(CirculantSolution {
        x: buf,
        condition: condition(&lambda),
    })
}
