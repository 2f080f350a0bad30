//! Consistency of a reconstruction with the spectrogram it came from.

use crate::error::{FustftError, Result};
use crate::signal::{relative_error, Signal};
use crate::spectrogram::Spectrogram;
use crate::transform::FrameKernel;
use crate::window::Window;

/// Relative errors; `None` where the denominator vanishes or no ground
/// truth was given.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ConsistencyMetrics {
    /// `‖X − S(x̂)‖_F / ‖X‖_F`.
    pub full_residual: Option<f64>,
    /// Same ratio over interior frames only.
    pub interior_residual: Option<f64>,
    /// `‖x − x̂‖₂ / ‖x‖₂`.
    pub signal_error: Option<f64>,
}

/// Frames counted by the interior Frobenius norm: all but the first
/// `⌈(L_w − ξ)/ξ⌉` and the last `⌈F − L_x/ξ⌉`.
pub fn interior_frames(spec: &Spectrogram) -> std::ops::Range<usize> {
    let cfg = spec.config();
    let lead = cfg.leading_boundary_frames();
    let trail = cfg.trailing_boundary_frames(spec.signal_len());
    let end = spec.frames().saturating_sub(trail);
    lead.min(end)..end
}

pub fn consistency_metrics(
    spec: &Spectrogram,
    estimate: &Signal,
    window: &Window,
    truth: Option<&Signal>,
) -> Result<ConsistencyMetrics> {
    if estimate.len() != spec.signal_len() {
        return Err(FustftError::DimensionMismatch(format!(
            "estimate has {} samples, spectrogram records L_x = {}",
            estimate.len(),
            spec.signal_len()
        )));
    }
    let kernel = FrameKernel::new(spec.config(), window)?;
    let reanalysed = kernel.forward(&estimate.samples);
    let residual = spec.difference(&reanalysed)?;
    let ratio = |num: f64, den: f64| (den > 0.0).then(|| num / den);

    let interior = interior_frames(spec);
    let signal_error = match truth {
        Some(t) => {
            if t.len() != estimate.len() {
                return Err(FustftError::DimensionMismatch(format!(
                    "ground truth has {} samples, estimate {}",
                    t.len(),
                    estimate.len()
                )));
            }
            relative_error(&t.samples, &estimate.samples)
        }
        None => None,
    };
    Ok(ConsistencyMetrics {
        full_residual: ratio(residual.frobenius_norm(), spec.frobenius_norm()),
        interior_residual: ratio(
            residual.frames_norm(interior.clone()),
            spec.frames_norm(interior),
        ),
        signal_error,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{TransformConfig, TransformKind};
    use crate::transform::forward;

    /// Enumerates frames whose support touches the leading padding or lies
    /// (partly) beyond `⌊L_x/ξ⌋ξ`, the complement of the interior.
    fn boundary_frames_by_enumeration(cfg: &TransformConfig, lx: usize) -> (usize, usize) {
        let frames = cfg.frame_count(lx).unwrap();
        let lead = (0..frames).filter(|&l| cfg.frame_start(l) < 0).count();
        let last_full = (lx / cfg.hop()) * cfg.hop();
        let trail = (0..frames)
            .filter(|&l| (l * cfg.hop()) as isize >= last_full as isize)
            .count();
        (lead, trail)
    }

    #[test]
    fn interior_bounds_match_enumeration() {
        let cfg = TransformConfig::new(TransformKind::FustftI, 8, 2).unwrap();
        let spec = Spectrogram::zeros(cfg, cfg.frame_count(21).unwrap(), 21);
        let (lead, trail) = boundary_frames_by_enumeration(&cfg, 21);
        assert_eq!(interior_frames(&spec), lead..spec.frames() - trail);
        for hop in 1..=4 {
            let cfg = TransformConfig::new(TransformKind::FustftII, 8, hop).unwrap();
            for lx in 9..40 {
                let spec = Spectrogram::zeros(cfg, cfg.frame_count(lx).unwrap(), lx);
                let (lead, trail) = boundary_frames_by_enumeration(&cfg, lx);
                assert_eq!(
                    interior_frames(&spec),
                    lead..spec.frames() - trail,
                    "hop={hop} lx={lx}"
                );
            }
        }
    }

    #[test]
    fn exact_reconstruction_scores_zero() {
        let cfg = TransformConfig::new(TransformKind::FustftII, 8, 2).unwrap();
        let w = Window::hann(8).unwrap();
        let x = Signal::from_real(&(0..30).map(|i| (i as f64).sin()).collect::<Vec<_>>());
        let spec = forward(&x, &w, &cfg).unwrap();
        let m = consistency_metrics(&spec, &x, &w, Some(&x)).unwrap();
        assert_eq!(m.full_residual, Some(0.0));
        assert_eq!(m.interior_residual, Some(0.0));
        assert_eq!(m.signal_error, Some(0.0));
    }

    #[test]
    fn zero_spectrogram_is_undefined() {
        let cfg = TransformConfig::new(TransformKind::FustftI, 8, 4).unwrap();
        let w = Window::sine(8).unwrap();
        let spec = Spectrogram::zeros(cfg, cfg.frame_count(20).unwrap(), 20);
        let m =
            consistency_metrics(&spec, &Signal::zeros(20), &w, Some(&Signal::zeros(20))).unwrap();
        assert_eq!(m, ConsistencyMetrics::default());
    }
}
