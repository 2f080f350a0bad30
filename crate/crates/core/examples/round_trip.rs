//! Analysis followed by both least-squares inversions.

use fustft::synth::random_complex;
use fustft::{
    consistency_metrics, forward, invert, InversionMode, TransformConfig, TransformKind, Window,
};

fn main() -> fustft::Result<()> {
    let x = random_complex(44_100, 1);
    for kind in TransformKind::UNDERSAMPLED {
        for (lw, hop) in [(2048, 1024), (2048, 256), (256, 48)] {
            let w = Window::hann(lw)?;
            let spec = forward(&x, &w, &TransformConfig::new(kind, lw, hop)?)?;
            for mode in [InversionMode::standard(), InversionMode::periodic()] {
                let report = invert(&spec, &w, mode)?;
                let m = consistency_metrics(&spec, &report.signal, &w, Some(&x))?;
                println!(
                    "{:<10} L_w={lw:<5} xi={hop:<5} {:?}/{:?}: error {:.1e}, residual {:.1e}",
                    kind.to_string(),
                    report.boundary,
                    report.path,
                    m.signal_error.unwrap(),
                    m.full_residual.unwrap()
                );
            }
        }
    }
    Ok(())
}
