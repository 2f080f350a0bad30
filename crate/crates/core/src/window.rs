//! Discrete analysis windows.
//!
//! Windows are sampled half-point-even, `w[τ] = w((τ + 1/2) T_s)`, so every
//! sample on the support is strictly positive and `w[τ] = w[L_w - 1 - τ]`.
//! The whole-point-even sine window exists only for diagnostics: it produces
//! a singular periodic normal matrix at `ξ = L_w/2`.

use std::f64::consts::PI;

use crate::config::TransformKind;
use crate::error::{FustftError, Result};
use crate::normal_eq::NormalCoefficients;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WindowKind {
    Sine,
    Hann,
    Custom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sampling {
    HalfPointEven,
    WholePointEven,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Window {
    samples: Vec<f64>,
    kind: WindowKind,
    sampling: Sampling,
}

const SYMMETRY_TOL: f64 = 1e-12;

impl Window {
    /// Normalized sine window `(1/√L_w)·sin((τ+½)π/L_w)`.
    pub fn sine(len: usize) -> Result<Self> {
        check_len(len)?;
        let scale = 1.0 / (len as f64).sqrt();
        let samples = mirrored(len, |t| scale * ((t as f64 + 0.5) * PI / len as f64).sin());
        Ok(Self {
            samples,
            kind: WindowKind::Sine,
            sampling: Sampling::HalfPointEven,
        })
    }

    /// Normalized Hann window `(1/(2√L_w))·(1 − cos(2(τ+½)π/L_w))`.
    pub fn hann(len: usize) -> Result<Self> {
        check_len(len)?;
        let scale = 0.5 / (len as f64).sqrt();
        let samples = mirrored(len, |t| {
            scale * (1.0 - (2.0 * (t as f64 + 0.5) * PI / len as f64).cos())
        });
        Ok(Self {
            samples,
            kind: WindowKind::Hann,
            sampling: Sampling::HalfPointEven,
        })
    }

    /// Whole-point-even sine window `(1/√L_w)·sin(τπ/L_w)`.
    ///
    /// Its first sample is zero, so it is not a valid analysis window. Only
    /// the diagnostics and the dense oracle accept it.
    pub fn sine_whole_point(len: usize) -> Result<Self> {
        check_len(len)?;
        let scale = 1.0 / (len as f64).sqrt();
        let samples = (0..len)
            .map(|t| scale * (t as f64 * PI / len as f64).sin())
            .collect();
        Ok(Self {
            samples,
            kind: WindowKind::Sine,
            sampling: Sampling::WholePointEven,
        })
    }

    /// A user-supplied window. It must be symmetric (to 1e-12 relative) and
    /// strictly positive.
    pub fn custom(samples: Vec<f64>) -> Result<Self> {
        check_len(samples.len())?;
        let peak = samples.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        if let Some(t) = samples.iter().position(|&v| !(v > 0.0) || !v.is_finite()) {
            return Err(FustftError::InvalidWindow(format!(
                "sample {t} is not strictly positive"
            )));
        }
        let n = samples.len();
        for t in 0..n / 2 {
            if (samples[t] - samples[n - 1 - t]).abs() > SYMMETRY_TOL * peak {
                return Err(FustftError::InvalidWindow(format!(
                    "window is not symmetric at sample {t}"
                )));
            }
        }
        Ok(Self {
            samples,
            kind: WindowKind::Custom,
            sampling: Sampling::HalfPointEven,
        })
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn kind(&self) -> WindowKind {
        self.kind
    }

    pub fn sampling(&self) -> Sampling {
        self.sampling
    }

    /// `w[τ]`, zero outside the support.
    #[inline]
    pub fn at(&self, tau: usize) -> f64 {
        self.samples.get(tau).copied().unwrap_or(0.0)
    }

    pub fn energy(&self) -> f64 {
        self.samples.iter().map(|v| v * v).sum()
    }

    /// Checks the window can be used by a transform of the given kind.
    pub(crate) fn check_usable(&self, kind: TransformKind) -> Result<()> {
        if self.sampling != Sampling::HalfPointEven {
            return Err(FustftError::InvalidWindow(
                "transforms require a half-point-even window".into(),
            ));
        }
        if kind.is_undersampled() && self.samples.windows(2).all(|p| p[0] == p[1]) {
            return Err(FustftError::InvalidWindow(
                "the rectangular window cannot be used with FUSTFT".into(),
            ));
        }
        Ok(())
    }
}

fn check_len(len: usize) -> Result<()> {
    if len < 2 {
        return Err(FustftError::InvalidWindow(format!(
            "window length {len} is below 2"
        )));
    }
    Ok(())
}

/// Evaluates the first half and mirrors it, so symmetry is bit-exact.
fn mirrored(len: usize, f: impl Fn(usize) -> f64) -> Vec<f64> {
    let mut samples = vec![0.0; len];
    for t in 0..len.div_ceil(2) {
        let v = f(t);
        samples[t] = v;
        samples[len - 1 - t] = v;
    }
    samples
}

/// Positive-definiteness margin `min_i (a_i − 2|b_i|)` for one FUSTFT type.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KindMargin {
    pub kind: TransformKind,
    pub margin: f64,
    /// Index `i` (within one coefficient period) attaining the minimum.
    pub argmin: usize,
    /// `a_i` at the minimizing index.
    pub diagonal: f64,
}

impl KindMargin {
    pub fn is_positive(&self) -> bool {
        self.margin > 0.0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WindowReport {
    pub margins: Vec<KindMargin>,
}

impl WindowReport {
    pub fn all_positive(&self) -> bool {
        self.margins.iter().all(KindMargin::is_positive)
    }

    pub fn min_margin(&self) -> f64 {
        self.margins
            .iter()
            .map(|m| m.margin)
            .fold(f64::INFINITY, f64::min)
    }

    pub fn get(&self, kind: TransformKind) -> Option<&KindMargin> {
        self.margins.iter().find(|m| m.kind == kind)
    }
}

/// Reports `min_i (a_i − 2|b_i|)` for the three FUSTFT types.
///
/// This is report-only and also accepts whole-point-even windows so the
/// degenerate case can be demonstrated. `ξ` must lie in `[1, L_w/2]` and
/// `L_w` must be a multiple of 4.
pub fn validate_fustft_window(window: &Window, hop: usize) -> Result<WindowReport> {
    let len = window.len();
    if len % 4 != 0 {
        return Err(FustftError::InvalidConfig(format!(
            "frame length {len} is not a multiple of 4"
        )));
    }
    if hop == 0 || hop > len / 2 {
        return Err(FustftError::InvalidConfig(format!(
            "frame shift {hop} outside [1, {}]",
            len / 2
        )));
    }
    let margins = TransformKind::UNDERSAMPLED
        .iter()
        .map(|&kind| {
            let coeffs = NormalCoefficients::compute_unchecked(window, hop, kind);
            let period = coeffs.period_b();
            let (argmin, margin) = (0..period)
                .map(|i| (i, coeffs.a(i) - 2.0 * coeffs.b(i).abs()))
                .fold(
                    (0, f64::INFINITY),
                    |best, cur| {
                        if cur.1 < best.1 {
                            cur
                        } else {
                            best
                        }
                    },
                );
            KindMargin {
                kind,
                margin,
                argmin,
                diagonal: coeffs.a(argmin),
            }
        })
        .collect();
    Ok(WindowReport { margins })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sine_of_length_two_is_flat() {
        let w = Window::sine(2).unwrap();
        let expected = (PI / 4.0).sin() / 2f64.sqrt();
        assert_eq!(w.samples()[0], w.samples()[1]);
        assert!((w.samples()[0] - expected).abs() < 1e-15);
    }

    #[test]
    fn sine_energy_is_one_half() {
        // Σ sin²((τ+½)π/L) = L/2, so the normalized energy is 1/2.
        for len in [8, 12, 512] {
            let direct: f64 = (0..len)
                .map(|t| ((t as f64 + 0.5) * PI / len as f64).sin().powi(2) / len as f64)
                .sum();
            assert!((direct - 0.5).abs() < 1e-14);
            assert!((Window::sine(len).unwrap().energy() - 0.5).abs() < 1e-14);
        }
    }

    #[test]
    fn sine_matches_formula() {
        let w = Window::sine(512).unwrap();
        for t in [0, 1, 100, 255, 256, 511] {
            let v = ((t as f64 + 0.5) * PI / 512.0).sin() / 512f64.sqrt();
            assert!((w.samples()[t] - v).abs() < 1e-16);
        }
    }

    #[test]
    fn hann_value_at_three_of_eight() {
        // 1/(2√8)·(1 − cos(7π/8)), cos(7π/8) = −√(2+√2)/2.
        let cos = -(2.0 + 2f64.sqrt()).sqrt() / 2.0;
        let expected = (1.0 - cos) / (2.0 * 8f64.sqrt());
        let w = Window::hann(8).unwrap();
        assert!((w.samples()[3] - expected).abs() < 1e-15);
    }

    #[test]
    fn windows_are_symmetric_and_positive() {
        for len in [2, 3, 4, 7, 8, 64, 2048] {
            for w in [Window::sine(len).unwrap(), Window::hann(len).unwrap()] {
                let s = w.samples();
                for t in 0..len {
                    assert_eq!(s[t].to_bits(), s[len - 1 - t].to_bits());
                    assert!(s[t] > 0.0);
                }
            }
        }
    }

    #[test]
    fn rejects_short_windows() {
        assert!(Window::sine(1).is_err());
        assert!(Window::hann(0).is_err());
        assert!(Window::custom(vec![1.0]).is_err());
    }

    #[test]
    fn custom_window_checks() {
        assert!(Window::custom(vec![0.5, 1.0, 1.0, 0.5]).is_ok());
        assert!(Window::custom(vec![0.5, 1.0, 1.0, 0.6]).is_err());
        assert!(Window::custom(vec![0.0, 1.0, 1.0, 0.0]).is_err());
        let rect = Window::custom(vec![1.0; 8]).unwrap();
        assert!(rect.check_usable(TransformKind::Stft).is_ok());
        assert!(rect.check_usable(TransformKind::FustftII).is_err());
    }

    #[test]
    fn half_point_even_margin_is_positive() {
        let w = Window::sine(512).unwrap();
        let report = validate_fustft_window(&w, 256).unwrap();
        assert!(report.all_positive());
    }

    #[test]
    fn whole_point_even_margin_vanishes_at_quarter_bin() {
        let len = 512;
        let w = Window::sine_whole_point(len).unwrap();
        let report = validate_fustft_window(&w, len / 2).unwrap();
        for m in &report.margins {
            assert!(m.margin <= 1e-12 * m.diagonal, "{m:?}");
        }
        let coeffs = NormalCoefficients::compute_unchecked(&w, len / 2, TransformKind::FustftI);
        let i = len / 4;
        assert!((coeffs.a(i) - 2.0 * coeffs.b(i).abs()).abs() <= 1e-12 * coeffs.a(i));
    }

    #[test]
    fn validation_preconditions() {
        let w = Window::sine(10).unwrap();
        assert!(validate_fustft_window(&w, 2).is_err());
        let w = Window::sine(8).unwrap();
        assert!(validate_fustft_window(&w, 5).is_err());
        assert!(validate_fustft_window(&w, 0).is_err());
    }
}
