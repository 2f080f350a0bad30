//! Writes a spectrogram container, reads it back and checks the bytes.

use fustft::io::{read_spectrogram, write_spectrogram};
use fustft::synth::{voiced, VoicedParams};
use fustft::{forward, TransformConfig, TransformKind, Window};

fn main() -> fustft::Result<()> {
    let x = voiced(&VoicedParams {
        seconds: 0.25,
        ..Default::default()
    });
    let mut spec = forward(
        &x,
        &Window::hann(1024)?,
        &TransformConfig::new(TransformKind::FustftIII, 1024, 128)?,
    )?;
    spec.sample_rate = x.sample_rate;

    let dir = tempfile::tempdir()?;
    let (a, b) = (dir.path().join("a.fust"), dir.path().join("b.fust"));
    write_spectrogram(&a, &spec)?;
    let back = read_spectrogram(&a)?;
    write_spectrogram(&b, &back)?;
    let bytes = std::fs::read(&a)?;
    println!(
        "{} bytes, {} x {} entries",
        bytes.len(),
        back.bins(),
        back.frames()
    );
    println!("identical bytes: {}", bytes == std::fs::read(&b)?);
    Ok(())
}
