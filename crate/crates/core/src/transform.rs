//! Forward transforms and their adjoints.
//!
//! Every kind evaluates
//! `X[k,l] = Σ_τ x[τ + lξ − L_w + ξ]·w[τ]·e^{−i2π g_k τ / N}`
//! where the grid `g_k/N` is `k/L_w` (STFT), `k/(L_w+N_z)` (FOSTFT),
//! `2k/L_w` (FUSTFT-I), `(2k+1)/L_w` (FUSTFT-II), or alternates by frame
//! parity (FUSTFT-III). Samples outside `[0, L_x)` read as zero; the periodic
//! variants instead wrap indices modulo `L_p`.
//!
//! FUSTFT frames are folded to length `L_w/2` before a half-length FFT:
//! even bins see `v[τ] + v[τ+L_w/2]`, odd bins see
//! `(v[τ] − v[τ+L_w/2])·e^{−i2πτ/L_w}`.

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::config::{TransformConfig, TransformKind};
use crate::error::{FustftError, Result};
use crate::signal::Signal;
use crate::spectrogram::Spectrogram;
use crate::window::Window;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Per-configuration FFT plans and twiddles, reusable across frames.
pub(crate) struct FrameKernel {
    config: TransformConfig,
    window: Vec<f64>,
    fft: Arc<dyn Fft<f64>>,
    ifft: Arc<dyn Fft<f64>>,
    /// `e^{−i2πτ/L_w}` for `τ < L_w`; used by the odd FUSTFT grid.
    modulation: Vec<Complex64>,
}

impl FrameKernel {
    pub(crate) fn new(config: &TransformConfig, window: &Window) -> Result<Self> {
        if window.len() != config.frame_len() {
            return Err(FustftError::DimensionMismatch(format!(
                "window length {} differs from frame length {}",
                window.len(),
                config.frame_len()
            )));
        }
        window.check_usable(config.kind())?;
        Ok(Self::new_unchecked(config, window.samples()))
    }

    fn new_unchecked(config: &TransformConfig, window: &[f64]) -> Self {
        let lw = config.frame_len();
        let fft_len = if config.kind().is_undersampled() {
            lw / 2
        } else {
            config.dft_len()
        };
        let mut planner = FftPlanner::new();
        let modulation = (0..lw)
            .map(|t| Complex64::from_polar(1.0, -2.0 * PI * t as f64 / lw as f64))
            .collect();
        Self {
            config: *config,
            window: window.to_vec(),
            fft: planner.plan_fft_forward(fft_len),
            ifft: planner.plan_fft_inverse(fft_len),
            modulation,
        }
    }

    /// Transforms one windowed frame `v` (length `L_w`) into `out`
    /// (length `bins`).
    fn analyze_frame(&self, frame: usize, v: &[Complex64], out: &mut [Complex64]) {
        let lw = self.config.frame_len();
        match self.config.kind() {
            TransformKind::Stft | TransformKind::Fostft => {
                out[..lw].copy_from_slice(v);
                out[lw..].fill(ZERO);
                self.fft.process(out);
            }
            kind => {
                let h = lw / 2;
                if kind.odd_grid(frame) {
                    for t in 0..h {
                        out[t] = (v[t] - v[t + h]) * self.modulation[t];
                    }
                } else {
                    for t in 0..h {
                        out[t] = v[t] + v[t + h];
                    }
                }
                self.fft.process(out);
            }
        }
    }

    /// Adjoint of [`Self::analyze_frame`] without the window: maps a column of
    /// bins to `Σ_k X[k]·e^{+i2π g_k τ / N}` for `τ < L_w`.
    fn synthesize_frame(&self, frame: usize, column: &mut [Complex64], v: &mut [Complex64]) {
        let lw = self.config.frame_len();
        self.ifft.process(column);
        match self.config.kind() {
            TransformKind::Stft | TransformKind::Fostft => v.copy_from_slice(&column[..lw]),
            kind => {
                let h = lw / 2;
                if kind.odd_grid(frame) {
                    for t in 0..lw {
                        v[t] = column[t % h] * self.modulation[t].conj();
                    }
                } else {
                    for t in 0..lw {
                        v[t] = column[t % h];
                    }
                }
            }
        }
    }

    fn column_len(&self) -> usize {
        if self.config.kind().is_undersampled() {
            self.config.frame_len() / 2
        } else {
            self.config.dft_len()
        }
    }

    /// Shared analysis loop; `sample` maps a signal position to a sample.
    fn forward_with(
        &self,
        frames: usize,
        signal_len: usize,
        sample: impl Fn(isize) -> Complex64,
    ) -> Spectrogram {
        let lw = self.config.frame_len();
        let mut spec = Spectrogram::zeros(self.config, frames, signal_len);
        let mut v = vec![ZERO; lw];
        let mut col = vec![ZERO; self.column_len()];
        for l in 0..frames {
            let start = self.config.frame_start(l);
            for (t, slot) in v.iter_mut().enumerate() {
                *slot = sample(start + t as isize) * self.window[t];
            }
            self.analyze_frame(l, &v, &mut col);
            spec.write_column(l, &col);
        }
        spec
    }

    fn adjoint_with(
        &self,
        spec: &Spectrogram,
        synthesis_window: &[f64],
        out_len: usize,
        position: impl Fn(isize) -> Option<usize>,
    ) -> Vec<Complex64> {
        let lw = self.config.frame_len();
        let mut y = vec![ZERO; out_len];
        let mut v = vec![ZERO; lw];
        let mut col = vec![ZERO; self.column_len()];
        for l in 0..spec.frames() {
            spec.read_column(l, &mut col[..spec.bins()]);
            self.synthesize_frame(l, &mut col, &mut v);
            let start = self.config.frame_start(l);
            for t in 0..lw {
                if let Some(idx) = position(start + t as isize) {
                    y[idx] += v[t] * synthesis_window[t];
                }
            }
        }
        y
    }

    pub(crate) fn forward(&self, x: &[Complex64]) -> Spectrogram {
        let lx = x.len();
        let frames = self.config.frames_unchecked(lx);
        self.forward_with(frames, lx, |i| {
            if i >= 0 && (i as usize) < lx {
                x[i as usize]
            } else {
                ZERO
            }
        })
    }

    pub(crate) fn adjoint(&self, spec: &Spectrogram) -> Vec<Complex64> {
        self.synthesize(spec, &self.window)
    }

    /// Overlap-add of inverse-transformed frames weighted by
    /// `synthesis_window`; the adjoint when it equals the analysis window.
    pub(crate) fn synthesize(
        &self,
        spec: &Spectrogram,
        synthesis_window: &[f64],
    ) -> Vec<Complex64> {
        let lx = spec.signal_len();
        self.adjoint_with(spec, synthesis_window, lx, |i| {
            (i >= 0 && (i as usize) < lx).then_some(i as usize)
        })
    }

    pub(crate) fn forward_periodic(&self, x: &[Complex64]) -> Spectrogram {
        let lp = x.len();
        let frames = lp / self.config.hop();
        self.forward_with(frames, lp, |i| x[i.rem_euclid(lp as isize) as usize])
    }

    pub(crate) fn adjoint_periodic(&self, spec: &Spectrogram) -> Vec<Complex64> {
        self.synthesize_periodic(spec, &self.window)
    }

    pub(crate) fn synthesize_periodic(
        &self,
        spec: &Spectrogram,
        synthesis_window: &[f64],
    ) -> Vec<Complex64> {
        let lp = spec.frames() * self.config.hop();
        self.adjoint_with(spec, synthesis_window, lp, |i| {
            Some(i.rem_euclid(lp as isize) as usize)
        })
    }
}

/// Frame `l` of `x` before windowing; out-of-range samples read as zero.
pub fn extract_frame(x: &Signal, frame: usize, config: &TransformConfig) -> Result<Vec<Complex64>> {
    let frames = config.frame_count(x.len())?;
    if frame >= frames {
        return Err(FustftError::DimensionMismatch(format!(
            "frame {frame} out of range 0..{frames}"
        )));
    }
    let start = config.frame_start(frame);
    Ok((0..config.frame_len())
        .map(|t| {
            let i = start + t as isize;
            if i >= 0 && (i as usize) < x.len() {
                x.samples[i as usize]
            } else {
                ZERO
            }
        })
        .collect())
}

/// Forward transform with zero padding outside the signal.
pub fn forward(x: &Signal, window: &Window, config: &TransformConfig) -> Result<Spectrogram> {
    config.check_signal_len(x.len())?;
    let kernel = FrameKernel::new(config, window)?;
    let mut spec = kernel.forward(&x.samples);
    spec.sample_rate = x.sample_rate;
    spec.real_source = x.is_real;
    Ok(spec)
}

/// `S^H(X)`: a signal of length `L_x`. Contributions that land in the
/// padding are discarded.
pub fn adjoint(spec: &Spectrogram, window: &Window) -> Result<Signal> {
    let config = spec.config();
    let expected = config.frame_count(spec.signal_len())?;
    if spec.frames() != expected {
        return Err(FustftError::DimensionMismatch(format!(
            "spectrogram has {} frames, L_x = {} requires {expected}",
            spec.frames(),
            spec.signal_len()
        )));
    }
    let kernel = FrameKernel::new(config, window)?;
    Ok(wrap_signal(kernel.adjoint(spec), spec))
}

/// Checks `L_p` against the periodic preconditions.
pub(crate) fn check_periodic_len(config: &TransformConfig, lp: usize) -> Result<()> {
    let hop = config.hop();
    if lp <= config.frame_len() || lp % hop != 0 {
        return Err(FustftError::InvalidConfig(format!(
            "periodic length {lp} must exceed L_w and be a multiple of ξ = {hop}"
        )));
    }
    if config.kind().is_undersampled() && lp % config.half() != 0 {
        return Err(FustftError::InvalidConfig(format!(
            "periodic length {lp} must be a multiple of L_w/2 = {}",
            config.half()
        )));
    }
    if config.kind() == TransformKind::FustftIII && (lp / hop) % 2 != 0 {
        return Err(FustftError::InvalidConfig(format!(
            "FUSTFT-III needs an even number of periodic frames, got {}",
            lp / hop
        )));
    }
    Ok(())
}

/// Forward transform of a length-`L_p` signal under the periodic condition
/// `x[τ] = x[L_p + τ]` for `τ < 0`. Produces `L_p/ξ` frames.
pub fn forward_periodic(
    x: &Signal,
    window: &Window,
    config: &TransformConfig,
) -> Result<Spectrogram> {
    check_periodic_len(config, x.len())?;
    let kernel = FrameKernel::new(config, window)?;
    let mut spec = kernel.forward_periodic(&x.samples);
    spec.sample_rate = x.sample_rate;
    spec.real_source = x.is_real;
    Ok(spec)
}

/// `S_p^H(X_p)`: a signal of length `L_p = frames·ξ`, accumulating with
/// wrap-around.
pub fn adjoint_periodic(spec: &Spectrogram, window: &Window) -> Result<Signal> {
    let config = spec.config();
    check_periodic_len(config, spec.frames() * config.hop())?;
    let kernel = FrameKernel::new(config, window)?;
    Ok(wrap_signal(kernel.adjoint_periodic(spec), spec))
}

fn wrap_signal(samples: Vec<Complex64>, spec: &Spectrogram) -> Signal {
    Signal {
        samples,
        sample_rate: spec.sample_rate,
        is_real: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive(x: &[Complex64], w: &[f64], cfg: &TransformConfig) -> Vec<Vec<Complex64>> {
        let frames = cfg.frame_count(x.len()).unwrap();
        let n = cfg.dft_len() as f64;
        (0..cfg.bins())
            .map(|k| {
                (0..frames)
                    .map(|l| {
                        let g = cfg.grid_index(k, l) as f64;
                        (0..cfg.frame_len())
                            .map(|t| {
                                let i = cfg.frame_start(l) + t as isize;
                                let s = if i >= 0 && (i as usize) < x.len() {
                                    x[i as usize]
                                } else {
                                    ZERO
                                };
                                s * w[t] * Complex64::from_polar(1.0, -2.0 * PI * g * t as f64 / n)
                            })
                            .sum()
                    })
                    .collect()
            })
            .collect()
    }

    fn ramp(n: usize) -> Signal {
        Signal::from_complex(
            (0..n)
                .map(|i| Complex64::new((i as f64 * 0.7).sin(), (i as f64 * 0.3).cos()))
                .collect(),
        )
    }

    #[test]
    fn first_frame_starts_with_padding() {
        let cfg = TransformConfig::new(TransformKind::Stft, 4, 1).unwrap();
        let x = ramp(10);
        let f = extract_frame(&x, 0, &cfg).unwrap();
        assert_eq!(&f[..3], &[ZERO; 3]);
        assert_eq!(f[3], x.samples[0]);
    }

    #[test]
    fn last_frame_reads_trailing_zeros() {
        let cfg = TransformConfig::new(TransformKind::Stft, 4, 2).unwrap();
        let x = ramp(10);
        // frames = 6, last starts at 5·2 − 2 = 8: [x8, x9, 0, 0]
        let f = extract_frame(&x, 5, &cfg).unwrap();
        assert_eq!(f, vec![x.samples[8], x.samples[9], ZERO, ZERO]);
        assert!(extract_frame(&x, 6, &cfg).is_err());
        assert!(extract_frame(&Signal::zeros(10), 2, &cfg)
            .unwrap()
            .iter()
            .all(|c| *c == ZERO));
    }

    #[test]
    fn fast_path_matches_naive_sum() {
        let x = ramp(37);
        for (kind, nz) in [
            (TransformKind::Stft, 0),
            (TransformKind::Fostft, 3),
            (TransformKind::FustftI, 0),
            (TransformKind::FustftII, 0),
            (TransformKind::FustftIII, 0),
        ] {
            for hop in [1, 3, 4] {
                let cfg = TransformConfig::with_zero_pad(kind, 8, hop, nz).unwrap();
                let w = Window::hann(8).unwrap();
                let spec = forward(&x, &w, &cfg).unwrap();
                let reference = naive(&x.samples, w.samples(), &cfg);
                for k in 0..cfg.bins() {
                    for l in 0..spec.frames() {
                        let d = (spec.get(k, l) - reference[k][l]).norm();
                        assert!(d < 1e-12, "{kind} hop={hop} k={k} l={l} d={d}");
                    }
                }
            }
        }
    }

    #[test]
    fn zero_signal_gives_zero_spectrogram() {
        let cfg = TransformConfig::new(TransformKind::FustftIII, 8, 2).unwrap();
        let w = Window::sine(8).unwrap();
        let spec = forward(&Signal::zeros(20), &w, &cfg).unwrap();
        assert!(spec.data().iter().all(|c| *c == ZERO));
        let y = adjoint(&spec, &w).unwrap();
        assert!(y.samples.iter().all(|c| *c == ZERO));
    }

    #[test]
    fn rejects_mismatched_window_and_short_signal() {
        let cfg = TransformConfig::new(TransformKind::FustftI, 8, 2).unwrap();
        let w = Window::sine(12).unwrap();
        assert!(forward(&ramp(20), &w, &cfg).is_err());
        let w = Window::sine(8).unwrap();
        assert!(forward(&ramp(8), &w, &cfg).is_err());
        let wpe = Window::sine_whole_point(8).unwrap();
        assert!(forward(&ramp(20), &wpe, &cfg).is_err());
    }

    #[test]
    fn periodic_preconditions() {
        let cfg = TransformConfig::new(TransformKind::FustftIII, 8, 2).unwrap();
        let w = Window::sine(8).unwrap();
        assert!(forward_periodic(&ramp(18), &w, &cfg).is_err());
        assert!(forward_periodic(&ramp(20), &w, &cfg).is_ok());
        let odd = TransformConfig::new(TransformKind::FustftIII, 8, 4).unwrap();
        assert!(forward_periodic(&ramp(20), &w, &odd).is_err());
        let cfg3 = TransformConfig::new(TransformKind::FustftI, 8, 3).unwrap();
        assert!(forward_periodic(&ramp(18), &w, &cfg3).is_err());
        assert!(forward_periodic(&ramp(24), &w, &cfg3).is_ok());
    }
}
