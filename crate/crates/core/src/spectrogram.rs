use num_complex::Complex64;

use crate::config::TransformConfig;
use crate::error::{FustftError, Result};

/// Complex time-frequency matrix, `bins × frames`, stored bin-major.
///
/// Carries the configuration that produced it and the original signal
/// length, since FUSTFT inversion depends on `L_x`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrogram {
    data: Vec<Complex64>,
    bins: usize,
    frames: usize,
    config: TransformConfig,
    signal_len: usize,
    pub sample_rate: Option<f64>,
    /// Whether the analysed signal was real-valued.
    pub real_source: bool,
}

impl Spectrogram {
    pub fn zeros(config: TransformConfig, frames: usize, signal_len: usize) -> Self {
        let bins = config.bins();
        Self {
            data: vec![Complex64::new(0.0, 0.0); bins * frames],
            bins,
            frames,
            config,
            signal_len,
            sample_rate: None,
            real_source: false,
        }
    }

    /// Wraps bin-major data for a (non-periodic) signal of length `signal_len`.
    pub fn from_data(
        config: TransformConfig,
        signal_len: usize,
        data: Vec<Complex64>,
    ) -> Result<Self> {
        let frames = config.frame_count(signal_len)?;
        Self::with_frames(config, signal_len, frames, data)
    }

    /// Wraps bin-major data with an explicit frame count.
    pub fn with_frames(
        config: TransformConfig,
        signal_len: usize,
        frames: usize,
        data: Vec<Complex64>,
    ) -> Result<Self> {
        let bins = config.bins();
        if data.len() != bins * frames {
            return Err(FustftError::DimensionMismatch(format!(
                "payload has {} entries, expected {bins}×{frames}",
                data.len()
            )));
        }
        Ok(Self {
            data,
            bins,
            frames,
            config,
            signal_len,
            sample_rate: None,
            real_source: false,
        })
    }

    pub fn bins(&self) -> usize {
        self.bins
    }

    pub fn frames(&self) -> usize {
        self.frames
    }

    pub fn config(&self) -> &TransformConfig {
        &self.config
    }

    pub fn signal_len(&self) -> usize {
        self.signal_len
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [Complex64] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<Complex64> {
        self.data
    }

    #[inline]
    pub fn get(&self, bin: usize, frame: usize) -> Complex64 {
        self.data[bin * self.frames + frame]
    }

    #[inline]
    pub fn set(&mut self, bin: usize, frame: usize, value: Complex64) {
        self.data[bin * self.frames + frame] = value;
    }

    /// Copies column `frame` into `out` (length `bins`).
    pub fn read_column(&self, frame: usize, out: &mut [Complex64]) {
        for (k, v) in out.iter_mut().enumerate() {
            *v = self.get(k, frame);
        }
    }

    pub fn write_column(&mut self, frame: usize, values: &[Complex64]) {
        for (k, &v) in values.iter().enumerate() {
            self.set(k, frame, v);
        }
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.frames_norm(0..self.frames)
    }

    /// Frobenius norm restricted to the frame range `frames`.
    pub fn frames_norm(&self, frames: std::ops::Range<usize>) -> f64 {
        let mut acc = 0.0;
        for k in 0..self.bins {
            for l in frames.clone() {
                acc += self.get(k, l).norm_sqr();
            }
        }
        acc.sqrt()
    }

    /// `⟨self, other⟩_F = Σ conj(self)·other`.
    pub fn inner(&self, other: &Spectrogram) -> Complex64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Appends `extra` zero frames, `[X, O]`.
    pub fn zero_extended(&self, extra: usize) -> Spectrogram {
        let frames = self.frames + extra;
        let mut out = Spectrogram::zeros(self.config, frames, self.signal_len);
        for k in 0..self.bins {
            let src = &self.data[k * self.frames..(k + 1) * self.frames];
            out.data[k * frames..k * frames + self.frames].copy_from_slice(src);
        }
        out.sample_rate = self.sample_rate;
        out.real_source = self.real_source;
        out
    }

    /// Element-wise `self − other`.
    pub fn difference(&self, other: &Spectrogram) -> Result<Spectrogram> {
        if self.bins != other.bins || self.frames != other.frames {
            return Err(FustftError::DimensionMismatch(format!(
                "{}×{} vs {}×{}",
                self.bins, self.frames, other.bins, other.frames
            )));
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        Ok(out)
    }

    /// Spectrogram entries per signal sample.
    pub fn redundancy(&self) -> f64 {
        (self.bins * self.frames) as f64 / self.signal_len as f64
    }
}
