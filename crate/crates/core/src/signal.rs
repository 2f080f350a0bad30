use num_complex::Complex64;

/// A sampled signal. Real signals are stored as complex with zero imaginary
/// part and flagged so synthesis can return a real result.
#[derive(Debug, Clone, PartialEq)]
pub struct Signal {
    pub samples: Vec<Complex64>,
    pub sample_rate: Option<f64>,
    pub is_real: bool,
}

impl Signal {
    pub fn from_real(samples: &[f64]) -> Self {
        Self {
            samples: samples.iter().map(|&v| Complex64::new(v, 0.0)).collect(),
            sample_rate: None,
            is_real: true,
        }
    }

    pub fn from_complex(samples: Vec<Complex64>) -> Self {
        Self {
            samples,
            sample_rate: None,
            is_real: false,
        }
    }

    pub fn zeros(len: usize) -> Self {
        Self::from_complex(vec![Complex64::new(0.0, 0.0); len])
    }

    pub fn with_sample_rate(mut self, rate: f64) -> Self {
        self.sample_rate = Some(rate);
        self
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn norm(&self) -> f64 {
        l2_norm(&self.samples)
    }

    pub fn real_part(&self) -> Vec<f64> {
        self.samples.iter().map(|c| c.re).collect()
    }

    /// `‖Im x‖₂`.
    pub fn imag_norm(&self) -> f64 {
        self.samples.iter().map(|c| c.im * c.im).sum::<f64>().sqrt()
    }

    /// `Σ conj(self[t])·other[t]`.
    pub fn inner(&self, other: &Signal) -> Complex64 {
        self.samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }
}

pub(crate) fn l2_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

/// `‖a − b‖₂ / ‖a‖₂`, `None` when `a` vanishes.
pub fn relative_error(reference: &[Complex64], estimate: &[Complex64]) -> Option<f64> {
    assert_eq!(reference.len(), estimate.len());
    let denom = l2_norm(reference);
    if denom == 0.0 {
        return None;
    }
    let num = reference
        .iter()
        .zip(estimate)
        .map(|(a, b)| (a - b).norm_sqr())
        .sum::<f64>()
        .sqrt();
    Some(num / denom)
}
