//! Dense reference implementations for tests.
//!
//! Everything here is assembled from the literal summation definitions with
//! O(n²)–O(n³) dense linear algebra and shares no code with the fast paths.

use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::config::TransformConfig;
use crate::error::{FustftError, Result};
use crate::normal_eq::periodic_extension;
use crate::window::Window;

/// Largest signal length the dense oracle accepts.
pub const MAX_DENSE_LEN: usize = 256;

/// Dense matrix of a transform: row `k·frames + l`, one column per sample.
#[derive(Debug, Clone)]
pub struct DenseOperator {
    pub matrix: DMatrix<Complex64>,
    pub bins: usize,
    pub frames: usize,
}

impl DenseOperator {
    pub fn rows(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn cols(&self) -> usize {
        self.matrix.ncols()
    }

    pub fn apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        let v = DVector::from_column_slice(x);
        (&self.matrix * v).iter().copied().collect()
    }

    pub fn apply_adjoint(&self, y: &[Complex64]) -> Vec<Complex64> {
        let v = DVector::from_column_slice(y);
        (self.matrix.adjoint() * v).iter().copied().collect()
    }

    /// `AᴴA`.
    pub fn gram(&self) -> DMatrix<Complex64> {
        self.matrix.adjoint() * &self.matrix
    }
}

fn phase(config: &TransformConfig, bin: usize, frame: usize, tau: usize) -> Complex64 {
    let g = config.grid_index(bin, frame) as f64;
    Complex64::from_polar(1.0, -2.0 * PI * g * tau as f64 / config.dft_len() as f64)
}

/// Dense operator for zero padding (`periodic = false`, `L_x` columns) or
/// for the periodic condition (`L_p` columns, `F + p` frames).
pub fn assemble_dense(
    config: &TransformConfig,
    window: &Window,
    signal_len: usize,
    periodic: bool,
) -> Result<DenseOperator> {
    if signal_len > MAX_DENSE_LEN {
        return Err(FustftError::SizeGuard(format!(
            "L_x = {signal_len} exceeds {MAX_DENSE_LEN}"
        )));
    }
    let frames = config.frame_count(signal_len)?;
    if periodic {
        let ext = periodic_extension(signal_len, config)?;
        Ok(build(
            config,
            window,
            ext.periodic_len,
            ext.total_frames,
            true,
        ))
    } else {
        Ok(build(config, window, signal_len, frames, false))
    }
}

/// Dense periodic operator for an explicit length `L_p` (`L_p/ξ` frames).
pub fn assemble_dense_periodic(
    config: &TransformConfig,
    window: &Window,
    periodic_len: usize,
) -> Result<DenseOperator> {
    if periodic_len > 2 * MAX_DENSE_LEN {
        return Err(FustftError::SizeGuard(format!(
            "L_p = {periodic_len} exceeds {}",
            2 * MAX_DENSE_LEN
        )));
    }
    Ok(build(
        config,
        window,
        periodic_len,
        periodic_len / config.hop(),
        true,
    ))
}

fn build(
    config: &TransformConfig,
    window: &Window,
    cols: usize,
    frames: usize,
    periodic: bool,
) -> DenseOperator {
    let bins = config.bins();
    let lw = config.frame_len();
    let hop = config.hop();
    let mut m = DMatrix::<Complex64>::zeros(bins * frames, cols);
    for k in 0..bins {
        for l in 0..frames {
            let row = k * frames + l;
            for tau in 0..lw {
                let idx = (l * hop + tau) as isize - (lw - hop) as isize;
                let col = if periodic {
                    idx.rem_euclid(cols as isize) as usize
                } else if idx >= 0 && (idx as usize) < cols {
                    idx as usize
                } else {
                    continue;
                };
                m[(row, col)] += window.samples()[tau] * phase(config, k, l, tau);
            }
        }
    }
    DenseOperator {
        matrix: m,
        bins,
        frames,
    }
}

/// Naive per-entry summation of the forward transform.
pub fn naive_forward(
    x: &[Complex64],
    window: &Window,
    config: &TransformConfig,
    periodic: bool,
) -> Vec<Complex64> {
    let lw = config.frame_len();
    let hop = config.hop();
    let frames = if periodic {
        x.len() / hop
    } else {
        (x.len() + lw - hop).div_ceil(hop)
    };
    let mut out = Vec::with_capacity(config.bins() * frames);
    for k in 0..config.bins() {
        for l in 0..frames {
            let mut acc = Complex64::new(0.0, 0.0);
            for tau in 0..lw {
                let idx = (l * hop + tau) as isize - (lw - hop) as isize;
                let s = if periodic {
                    x[idx.rem_euclid(x.len() as isize) as usize]
                } else if idx >= 0 && (idx as usize) < x.len() {
                    x[idx as usize]
                } else {
                    continue;
                };
                acc += s * window.samples()[tau] * phase(config, k, l, tau);
            }
            out.push(acc);
        }
    }
    out
}

/// Real form `[[Re A, −Im A], [Im A, Re A]]`, on which the real SVD is run.
fn real_embedding(m: &DMatrix<Complex64>) -> DMatrix<f64> {
    let (r, c) = m.shape();
    DMatrix::from_fn(2 * r, 2 * c, |i, j| {
        let z = m[(i % r, j % c)];
        match (i < r, j < c) {
            (true, true) | (false, false) => z.re,
            (true, false) => -z.im,
            (false, true) => z.im,
        }
    })
}

/// Numerical rank from the singular values of the real form, in which each
/// complex singular value appears twice.
pub fn dense_rank(op: &DenseOperator) -> usize {
    let sv = real_embedding(&op.matrix).singular_values();
    let tol = 2.0 * op.rows().max(op.cols()) as f64 * f64::EPSILON * sv.max();
    sv.iter().filter(|&&s| s > tol).count() / 2
}

/// Least-squares solution for an operator of full column rank, by
/// Householder QR. Rank deficiency is detected from the singular values and
/// reported as an error.
pub fn dense_least_squares(op: &DenseOperator, rhs: &[Complex64]) -> Result<Vec<Complex64>> {
    if rhs.len() != op.rows() {
        return Err(FustftError::DimensionMismatch(format!(
            "rhs has {} entries, operator {} rows",
            rhs.len(),
            op.rows()
        )));
    }
    let rank = dense_rank(op);
    if rank < op.cols() {
        return Err(FustftError::RankDeficient {
            rank,
            cols: op.cols(),
        });
    }
    let qr = op.matrix.clone().qr();
    let qtb = qr.q().adjoint() * DVector::from_column_slice(rhs);
    let x = qr
        .r()
        .solve_upper_triangular(&qtb)
        .ok_or(FustftError::RankDeficient {
            rank,
            cols: op.cols(),
        })?;
    Ok(x.iter().copied().collect())
}

/// `(AᴴA)^{-1} Aᴴ rhs` through a dense LU of the Gram matrix.
pub fn dense_normal_solve(op: &DenseOperator, rhs: &[Complex64]) -> Result<Vec<Complex64>> {
    let y = DVector::from_vec(op.apply_adjoint(rhs));
    let x = op.gram().lu().solve(&y).ok_or(FustftError::RankDeficient {
        rank: 0,
        cols: op.cols(),
    })?;
    Ok(x.iter().copied().collect())
}

/// Dense solve of a symmetric (periodic) tridiagonal system.
pub fn dense_tridiagonal_solve(
    diag: &[f64],
    offdiag: &[f64],
    periodic: bool,
    rhs: &[Complex64],
) -> Option<Vec<Complex64>> {
    let n = diag.len();
    let mut m = DMatrix::<Complex64>::zeros(n, n);
    for j in 0..n {
        m[(j, j)] += Complex64::new(diag[j], 0.0);
    }
    let links = if periodic { n } else { n.saturating_sub(1) };
    for j in 0..links {
        let k = (j + 1) % n;
        m[(j, k)] += Complex64::new(offdiag[j], 0.0);
        m[(k, j)] += Complex64::new(offdiag[j], 0.0);
    }
    let x = m.lu().solve(&DVector::from_column_slice(rhs))?;
    Some(x.iter().copied().collect())
}
