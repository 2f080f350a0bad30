//! Tridiagonal Toeplitz systems via the Type-I discrete sine transform.
//!
//! `DST-I(x)_q = Σ_{j=1}^{n} x_j sin(πjq/(n+1))`, `q = 1..n`, unnormalized,
//! so `DST-I ∘ DST-I = (n+1)/2 · I`. The matrix with diagonal `a` and
//! couplings `b` has eigenvalues `λ_q = a + 2b cos(qπ/(n+1))` on the DST-I
//! basis.

use std::f64::consts::PI;

use num_complex::Complex64;
use rustfft::FftPlanner;

use super::check_margin;
use crate::error::Result;

/// Unnormalized DST-I through an FFT of length `2(n+1)`.
pub fn dst1(x: &[Complex64]) -> Vec<Complex64> {
    let n = x.len();
    if n == 0 {
        return Vec::new();
    }
    let m = 2 * (n + 1);
    let mut buf = vec![Complex64::new(0.0, 0.0); m];
    for (j, &v) in x.iter().enumerate() {
        buf[j + 1] = v;
        buf[m - 1 - j] = -v;
    }
    FftPlanner::new().plan_fft_forward(m).process(&mut buf);
    // FFT of the odd extension is −2i·DST-I.
    let half_i = Complex64::new(0.0, 0.5);
    buf[1..=n].iter().map(|v| v * half_i).collect()
}

pub fn toeplitz_eigenvalues(a: f64, b: f64, n: usize) -> Vec<f64> {
    (1..=n)
        .map(|q| a + 2.0 * b * (q as f64 * PI / (n + 1) as f64).cos())
        .collect()
}

/// `max λ / min λ` of the tridiagonal Toeplitz matrix.
pub fn toeplitz_condition(a: f64, b: f64, n: usize) -> f64 {
    condition(&toeplitz_eigenvalues(a, b, n))
}

pub(crate) fn condition(eigenvalues: &[f64]) -> f64 {
    let (lo, hi) = eigenvalues
        .iter()
        .fold((f64::INFINITY, 0.0_f64), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        });
    hi / lo
}

/// Solves the Toeplitz system with diagonal `a` and couplings `b`.
pub fn solve_toeplitz_dst(a: f64, b: f64, rhs: &[Complex64]) -> Result<Vec<Complex64>> {
    check_margin(a, b)?;
    let n = rhs.len();
    if b == 0.0 {
        return Ok(rhs.iter().map(|v| v / a).collect());
    }
    let lambda = toeplitz_eigenvalues(a, b, n);
    let mut spectrum = dst1(rhs);
    for (s, l) in spectrum.iter_mut().zip(&lambda) {
        *s /= *l;
    }
    let scale = 2.0 / (n + 1) as f64;
    Ok(dst1(&spectrum).into_iter().map(|v| v * scale).collect())
}
