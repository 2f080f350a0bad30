//! Coefficients of the FUSTFT normal-equation matrix `S^H∘S`.
//!
//! The Gram matrix has only three nonzero diagonals: `a_i` on the main
//! diagonal and `b_i` coupling samples `i` and `i + L_w/2`. With
//! `m_i = mod_ξ(i + L_w)`:
//!
//! ```text
//! a_i = (L_w/2) Σ_{l<⌈L_w/ξ⌉}  w²[m_i + lξ]
//! b_i = (L_w/2) Σ_{l<⌈L_w/2ξ⌉} s_{i,l} w[m_i + lξ] w[m_i + lξ + L_w/2]
//! ```
//!
//! where `s_{i,l}` is `+1` (Type I), `−1` (Type II) or
//! `(−1)^{⌊(i+L_w−ξ)/ξ⌋+l}` (Type III). `a` has period `ξ`; `b` has period
//! `ξ`, or `2ξ` for Type III, so one period of each is stored.

use crate::config::{TransformConfig, TransformKind};
use crate::error::{FustftError, Result};
use crate::window::Window;

#[derive(Debug, Clone, PartialEq)]
pub struct NormalCoefficients {
    a: Vec<f64>,
    b: Vec<f64>,
    kind: TransformKind,
    frame_len: usize,
}

impl NormalCoefficients {
    /// Coefficients for a FUSTFT configuration and matching window.
    pub fn compute(window: &Window, config: &TransformConfig) -> Result<Self> {
        if !config.kind().is_undersampled() {
            return Err(FustftError::InvalidConfig(format!(
                "normal-equation coefficients are defined for FUSTFT kinds, got {}",
                config.kind()
            )));
        }
        if window.len() != config.frame_len() {
            return Err(FustftError::DimensionMismatch(format!(
                "window length {} differs from frame length {}",
                window.len(),
                config.frame_len()
            )));
        }
        Ok(Self::compute_unchecked(window, config.hop(), config.kind()))
    }

    /// Assumes `L_w ≡ 0 (mod 4)` and `1 ≤ ξ ≤ L_w/2`.
    pub(crate) fn compute_unchecked(window: &Window, hop: usize, kind: TransformKind) -> Self {
        Self {
            a: compute_a(window, hop),
            b: compute_b(window, hop, kind),
            kind,
            frame_len: window.len(),
        }
    }

    pub fn kind(&self) -> TransformKind {
        self.kind
    }

    /// Period of `a`, equal to `ξ`.
    pub fn period_a(&self) -> usize {
        self.a.len()
    }

    /// Period of `b`: `ξ` for Types I/II, `2ξ` for Type III.
    pub fn period_b(&self) -> usize {
        self.b.len()
    }

    pub fn a_period(&self) -> &[f64] {
        &self.a
    }

    pub fn b_period(&self) -> &[f64] {
        &self.b
    }

    /// Diagonal entry `a_i` for any sample index `i`.
    #[inline]
    pub fn a(&self, i: usize) -> f64 {
        self.a[i % self.a.len()]
    }

    /// Coupling `b_i` between samples `i` and `i + L_w/2`.
    #[inline]
    pub fn b(&self, i: usize) -> f64 {
        self.b[i % self.b.len()]
    }

    /// Diagonal `a^⟨i⟩_j = a_{i + jL_w/2}` of the residue-`i` system.
    pub fn bin_diagonal(&self, residue: usize, n: usize) -> Vec<f64> {
        let h = self.frame_len / 2;
        (0..n).map(|j| self.a(residue + j * h)).collect()
    }

    /// Couplings `b^⟨i⟩_j = b_{i + jL_w/2}` for `j < count`.
    pub fn bin_offdiagonal(&self, residue: usize, count: usize) -> Vec<f64> {
        let h = self.frame_len / 2;
        (0..count).map(|j| self.b(residue + j * h)).collect()
    }

    /// `min_i (a_i − 2|b_i|)` over one period of `b`.
    pub fn margin(&self) -> f64 {
        (0..self.period_b())
            .map(|i| self.a(i) - 2.0 * self.b(i).abs())
            .fold(f64::INFINITY, f64::min)
    }
}

/// One period (length `ξ`) of the diagonal coefficients.
pub fn compute_a(window: &Window, hop: usize) -> Vec<f64> {
    let lw = window.len();
    let h = (lw / 2) as f64;
    let terms = lw.div_ceil(hop);
    (0..hop)
        .map(|i| {
            let m = (i + lw) % hop;
            h * (0..terms)
                .map(|l| window.at(m + l * hop).powi(2))
                .sum::<f64>()
        })
        .collect()
}

/// One period of the off-diagonal coefficients (length `ξ`, or `2ξ` for
/// Type III).
pub fn compute_b(window: &Window, hop: usize, kind: TransformKind) -> Vec<f64> {
    let lw = window.len();
    let half = lw / 2;
    let h = half as f64;
    let terms = lw.div_ceil(2 * hop);
    let period = if kind == TransformKind::FustftIII {
        2 * hop
    } else {
        hop
    };
    (0..period)
        .map(|i| {
            let m = (i + lw) % hop;
            let base = (i + lw - hop) / hop;
            h * (0..terms)
                .map(|l| {
                    let sign = match kind {
                        TransformKind::FustftII => -1.0,
                        TransformKind::FustftIII if (base + l) % 2 == 1 => -1.0,
                        _ => 1.0,
                    };
                    let tau = m + l * hop;
                    sign * window.at(tau) * window.at(tau + half)
                })
                .sum::<f64>()
        })
        .collect()
}

/// Extra frames `p` and periodic length `L_p` for the periodic inversion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeriodicExtension {
    pub extra_frames: usize,
    pub periodic_len: usize,
    /// `⌈(L_x + L_w − ξ)/ξ⌉ + p`.
    pub total_frames: usize,
}

impl PeriodicExtension {
    /// Size `2L_p/L_w` shared by all residue systems.
    pub fn system_len(&self, config: &TransformConfig) -> usize {
        self.periodic_len / config.half()
    }
}

/// Minimal `p ≥ 0` with `mod_{L_w/2}((F + p)ξ) = 0`, and `F + p` even for
/// Type III. STFT/FOSTFT need no divisibility, so `p = 0` there.
pub fn periodic_extension(
    signal_len: usize,
    config: &TransformConfig,
) -> Result<PeriodicExtension> {
    let frames = config.frame_count(signal_len)?;
    let hop = config.hop();
    let fits = |p: usize| {
        let total = frames + p;
        match config.kind() {
            TransformKind::Stft | TransformKind::Fostft => true,
            TransformKind::FustftIII => (total * hop) % config.half() == 0 && total % 2 == 0,
            _ => (total * hop) % config.half() == 0,
        }
    };
    // (F + p)·ξ ≡ 0 (mod L_w/2) is periodic in p with period ≤ L_w/2, and
    // the parity constraint at most doubles it.
    let p = (0..=config.frame_len())
        .find(|&p| fits(p))
        .expect("a periodic extension always exists for ξ ≤ L_w/2");
    Ok(PeriodicExtension {
        extra_frames: p,
        periodic_len: (frames + p) * hop,
        total_frames: frames + p,
    })
}
