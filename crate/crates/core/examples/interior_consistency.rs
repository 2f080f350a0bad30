//! A noisy spectrogram is not the transform of any signal. At `ξ = L_w/2`
//! the periodic inversion still reproduces it exactly away from the first
//! and last frames.

use fustft::synth::{add_noise, voiced, VoicedParams};
use fustft::{
    consistency_metrics, forward, invert, InversionMode, TransformConfig, TransformKind, Window,
};

fn main() -> fustft::Result<()> {
    let x = voiced(&VoicedParams {
        seconds: 2.0,
        ..Default::default()
    });
    for lw in [2048, 8192] {
        for hop in [lw / 2, lw / 8] {
            let w = Window::hann(lw)?;
            let cfg = TransformConfig::new(TransformKind::FustftII, lw, hop)?;
            let noisy = add_noise(&forward(&x, &w, &cfg)?, 1e-6, 3);
            for mode in [InversionMode::standard(), InversionMode::periodic()] {
                let y = invert(&noisy, &w, mode)?.signal;
                let m = consistency_metrics(&noisy, &y, &w, Some(&x))?;
                println!(
                    "L_w={lw:<5} xi={hop:<5} {:<8?} error {:.1e}  full {:.1e}  interior {:.1e}",
                    mode.boundary,
                    m.signal_error.unwrap(),
                    m.full_residual.unwrap(),
                    m.interior_residual.unwrap()
                );
            }
        }
    }
    Ok(())
}
