//! STFT and zero-padded FOSTFT inverted with the canonical dual window.

use fustft::inversion::DualWindow;
use fustft::synth::random_complex;
use fustft::{forward, istft_painless, TransformConfig, Window};

fn main() -> fustft::Result<()> {
    let x = random_complex(10_000, 2);
    let (lw, hop) = (256, 64);
    let w = Window::hann(lw)?;
    for nz in [0, 1, lw] {
        let cfg = if nz == 0 {
            TransformConfig::new(fustft::TransformKind::Stft, lw, hop)?
        } else {
            TransformConfig::fostft(lw, hop, nz)?
        };
        let dual = DualWindow::canonical(&w, &cfg)?;
        let y = istft_painless(&forward(&x, &w, &cfg)?, &w)?;
        let err = fustft::signal::relative_error(&x.samples, &y.samples).unwrap();
        println!(
            "{} N_z={nz:<3} dual peak {:.4}, round-trip error {err:.1e}",
            cfg.kind(),
            dual.samples.iter().cloned().fold(0.0, f64::max)
        );
    }
    Ok(())
}
