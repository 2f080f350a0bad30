//! Mono WAV input (16-bit PCM or 32-bit float) and float output.

use std::path::Path;

use hound::{SampleFormat, WavSpec, WavWriter};

use crate::error::{FustftError, Result};
use crate::signal::Signal;

/// Reads a mono WAV file into a real signal with its sample rate.
pub fn read_wav(path: impl AsRef<Path>) -> Result<Signal> {
    let mut reader = hound::WavReader::open(path)?;
    let spec = reader.spec();
    if spec.channels != 1 {
        return Err(FustftError::UnsupportedAudio(format!(
            "{} channels; only mono input is supported",
            spec.channels
        )));
    }
    let samples: Vec<f64> = match (spec.sample_format, spec.bits_per_sample) {
        (SampleFormat::Int, 16) => reader
            .samples::<i16>()
            .map(|s| s.map(|v| v as f64 / 32768.0))
            .collect::<std::result::Result<_, _>>()?,
        (SampleFormat::Float, 32) => reader
            .samples::<f32>()
            .map(|s| s.map(f64::from))
            .collect::<std::result::Result<_, _>>()?,
        (fmt, bits) => {
            return Err(FustftError::UnsupportedAudio(format!(
                "{bits}-bit {fmt:?}; expected 16-bit PCM or 32-bit float"
            )))
        }
    };
    Ok(Signal::from_real(&samples).with_sample_rate(spec.sample_rate as f64))
}

/// Writes the real part of `signal` as mono 32-bit float.
pub fn write_wav(path: impl AsRef<Path>, signal: &Signal, sample_rate: u32) -> Result<()> {
    let spec = WavSpec {
        channels: 1,
        sample_rate,
        bits_per_sample: 32,
        sample_format: SampleFormat::Float,
    };
    let mut bytes = std::io::Cursor::new(Vec::new());
    {
        let mut writer = WavWriter::new(&mut bytes, spec)?;
        for s in &signal.samples {
            writer.write_sample(s.re as f32)?;
        }
        writer.finalize()?;
    }
    super::atomic_write(path.as_ref(), |out| Ok(out.write_all(bytes.get_ref())?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("a.wav");
        let x = Signal::from_real(&[0.0, 0.5, -0.25, 0.125]);
        write_wav(&path, &x, 8000).unwrap();
        let y = read_wav(&path).unwrap();
        assert_eq!(y.sample_rate, Some(8000.0));
        assert_eq!(y.real_part(), vec![0.0, 0.5, -0.25, 0.125]);
    }

    #[test]
    fn pcm16_scaling() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("p.wav");
        let spec = WavSpec {
            channels: 1,
            sample_rate: 16_000,
            bits_per_sample: 16,
            sample_format: SampleFormat::Int,
        };
        let mut w = WavWriter::create(&path, spec).unwrap();
        for v in [0i16, 16384, -32768] {
            w.write_sample(v).unwrap();
        }
        w.finalize().unwrap();
        assert_eq!(read_wav(&path).unwrap().real_part(), vec![0.0, 0.5, -1.0]);
    }

    #[test]
    fn stereo_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("s.wav");
        let spec = WavSpec {
            channels: 2,
            sample_rate: 16_000,
            bits_per_sample: 16,
            sample_format: SampleFormat::Int,
        };
        let mut w = WavWriter::create(&path, spec).unwrap();
        w.write_sample(0i16).unwrap();
        w.write_sample(0i16).unwrap();
        w.finalize().unwrap();
        assert!(matches!(
            read_wav(&path),
            Err(FustftError::UnsupportedAudio(_))
        ));
    }
}
