#![allow(dead_code)]

use fustft::{Complex64, Signal, Spectrogram};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_vec(rng: &mut StdRng, n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect()
}

pub fn random_signal(rng: &mut StdRng, n: usize) -> Signal {
    Signal::from_complex(random_vec(rng, n))
}

pub fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// `‖a − b‖ / ‖b‖`.
pub fn rel_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    let d: f64 = a
        .iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm_sqr())
        .sum::<f64>()
        .sqrt();
    let n = norm(b);
    if n == 0.0 {
        d
    } else {
        d / n
    }
}

pub fn random_spectrogram(rng: &mut StdRng, like: &Spectrogram) -> Spectrogram {
    let mut s = like.clone();
    let data = random_vec(rng, s.data().len());
    s.data_mut().copy_from_slice(&data);
    s
}

pub fn dot(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}
