//! Seeded test signals and noise.
//!
//! [`voiced`] is a synthetic stand-in for speech: a gliding fundamental with
//! decaying harmonics, a syllable-rate envelope and a little breath noise.
//! It is not a recording.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::SeedableRng;
use rand_distr::{Distribution, Normal, StandardNormal};

use crate::signal::Signal;
use crate::spectrogram::Spectrogram;

#[derive(Debug, Clone)]
pub struct VoicedParams {
    pub sample_rate: f64,
    pub seconds: f64,
    /// Fundamental at the start and end of each syllable, Hz.
    pub f0: (f64, f64),
    pub harmonics: usize,
    /// Syllables per second.
    pub syllable_rate: f64,
    /// Breath noise relative to the voiced part's RMS.
    pub noise_level: f64,
    pub target_rms: f64,
    pub seed: u64,
}

impl Default for VoicedParams {
    fn default() -> Self {
        Self {
            sample_rate: 44_100.0,
            seconds: 1.0,
            f0: (140.0, 95.0),
            harmonics: 24,
            syllable_rate: 2.5,
            noise_level: 0.02,
            target_rms: 0.1,
            seed: 1,
        }
    }
}

pub fn voiced(p: &VoicedParams) -> Signal {
    let n = (p.seconds * p.sample_rate).round() as usize;
    let mut rng = StdRng::seed_from_u64(p.seed);
    let phases: Vec<f64> = (0..p.harmonics)
        .map(|_| 2.0 * PI * rand::Rng::random::<f64>(&mut rng))
        .collect();
    let syllable = p.sample_rate / p.syllable_rate;
    let mut phase = 0.0;
    let mut x = Vec::with_capacity(n);
    for t in 0..n {
        let pos = (t as f64 % syllable) / syllable;
        let f0 = p.f0.0 + (p.f0.1 - p.f0.0) * pos;
        phase += 2.0 * PI * f0 / p.sample_rate;
        let envelope = (PI * pos).sin().powi(2);
        let mut v = 0.0;
        for (h, ph) in phases.iter().enumerate() {
            let order = (h + 1) as f64;
            if order * f0 < p.sample_rate / 2.0 {
                v += (order * phase + ph).sin() / order;
            }
        }
        x.push(envelope * v);
    }
    let rms = (x.iter().map(|v| v * v).sum::<f64>() / n.max(1) as f64).sqrt();
    let breath = Normal::new(0.0, p.noise_level * rms).expect("finite noise level");
    for v in &mut x {
        *v += breath.sample(&mut rng);
    }
    let rms = (x.iter().map(|v| v * v).sum::<f64>() / n.max(1) as f64).sqrt();
    if rms > 0.0 {
        let scale = p.target_rms / rms;
        x.iter_mut().for_each(|v| *v *= scale);
    }
    Signal::from_real(&x).with_sample_rate(p.sample_rate)
}

/// Circular complex Gaussian samples with `E|z|² = variance`.
pub fn complex_noise(len: usize, variance: f64, rng: &mut StdRng) -> Vec<Complex64> {
    let s = (variance / 2.0).sqrt();
    (0..len)
        .map(|_| {
            let re: f64 = StandardNormal.sample(rng);
            let im: f64 = StandardNormal.sample(rng);
            Complex64::new(s * re, s * im)
        })
        .collect()
}

/// Random complex signal with unit-variance entries.
pub fn random_complex(len: usize, seed: u64) -> Signal {
    let mut rng = StdRng::seed_from_u64(seed);
    Signal::from_complex(complex_noise(len, 1.0, &mut rng))
}

/// Copy of `spec` with complex white Gaussian noise of `variance` added.
pub fn add_noise(spec: &Spectrogram, variance: f64, seed: u64) -> Spectrogram {
    let mut out = spec.clone();
    let mut rng = StdRng::seed_from_u64(seed);
    let noise = complex_noise(out.data().len(), variance, &mut rng);
    for (z, e) in out.data_mut().iter_mut().zip(noise) {
        *z += e;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn voiced_is_seeded_and_scaled() {
        let p = VoicedParams {
            seconds: 0.5,
            ..Default::default()
        };
        let a = voiced(&p);
        assert_eq!(a, voiced(&p));
        assert_eq!(a.len(), 22_050);
        let rms = a.norm() / (a.len() as f64).sqrt();
        assert!((rms - 0.1).abs() < 1e-12);
        assert!(a.is_real);
    }

    #[test]
    fn noise_variance() {
        let mut rng = StdRng::seed_from_u64(3);
        let z = complex_noise(200_000, 1e-6, &mut rng);
        let var = z.iter().map(|v| v.norm_sqr()).sum::<f64>() / z.len() as f64;
        assert!((var / 1e-6 - 1.0).abs() < 0.02);
    }
}
