//! Analyse a synthetic voiced signal with every transform kind and write the
//! FUSTFT-II power spectrogram as CSV.
//!
//! ```text
//! cargo run --example spectrogram -- power.csv
//! ```

use fustft::io::write_power_csv;
use fustft::synth::{voiced, VoicedParams};
use fustft::{forward, TransformConfig, TransformKind, Window};

fn main() -> fustft::Result<()> {
    let x = voiced(&VoicedParams {
        seconds: 0.5,
        ..Default::default()
    });
    let (lw, hop) = (512, 256);
    let w = Window::sine(lw)?;

    for kind in TransformKind::ALL {
        let cfg = TransformConfig::with_zero_pad(
            kind,
            lw,
            hop,
            if kind == TransformKind::Fostft { lw } else { 0 },
        )?;
        let spec = forward(&x, &w, &cfg)?;
        println!(
            "{:<10} {:>4} bins x {:>3} frames, {:.3} entries per sample",
            kind.to_string(),
            spec.bins(),
            spec.frames(),
            spec.redundancy()
        );
    }

    if let Some(path) = std::env::args().nth(1) {
        let mut spec = forward(
            &x,
            &w,
            &TransformConfig::new(TransformKind::FustftII, lw, hop)?,
        )?;
        spec.sample_rate = x.sample_rate;
        write_power_csv(&path, &spec)?;
        println!("wrote {path}");
    }
    Ok(())
}
