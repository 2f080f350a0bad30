//! Binary spectrogram container.
//!
//! Layout, all integers little-endian:
//!
//! | bytes | field |
//! |---|---|
//! | 4 | magic `FUST` |
//! | 2 | format version (u16) |
//! | 1 | kind tag: 0 STFT, 1 FOSTFT, 2 FUSTFT-I, 3 FUSTFT-II, 4 FUSTFT-III |
//! | 1 | reserved, 0 |
//! | 8 × 4 | `L_w`, `ξ`, `N_z`, `L_x` (u64) |
//! | 8 | sample rate (f64, 0 when unknown) |
//! | 8 × 2 | bins, frames (u64) |
//! | 16 × bins × frames | bin-major entries, (re, im) as f64 |

use std::io::{Read, Write};
use std::path::Path;

use num_complex::Complex64;

use crate::config::{TransformConfig, TransformKind};
use crate::error::{FustftError, Result};
use crate::spectrogram::Spectrogram;

pub const MAGIC: &[u8; 4] = b"FUST";
pub const FORMAT_VERSION: u16 = 1;
const HEADER_LEN: usize = 4 + 2 + 1 + 1 + 8 * 4 + 8 + 8 * 2;

pub fn encode<W: Write + ?Sized>(spec: &Spectrogram, out: &mut W) -> Result<()> {
    let cfg = spec.config();
    let mut header = Vec::with_capacity(HEADER_LEN);
    header.extend_from_slice(MAGIC);
    header.extend_from_slice(&FORMAT_VERSION.to_le_bytes());
    header.push(cfg.kind().tag());
    header.push(0);
    for v in [
        cfg.frame_len(),
        cfg.hop(),
        cfg.zero_pad(),
        spec.signal_len(),
    ] {
        header.extend_from_slice(&(v as u64).to_le_bytes());
    }
    header.extend_from_slice(&spec.sample_rate.unwrap_or(0.0).to_le_bytes());
    header.extend_from_slice(&(spec.bins() as u64).to_le_bytes());
    header.extend_from_slice(&(spec.frames() as u64).to_le_bytes());
    out.write_all(&header)?;

    let mut payload = Vec::with_capacity(spec.data().len() * 16);
    for z in spec.data() {
        payload.extend_from_slice(&z.re.to_le_bytes());
        payload.extend_from_slice(&z.im.to_le_bytes());
    }
    out.write_all(&payload)?;
    Ok(())
}

fn corrupt(msg: impl Into<String>) -> FustftError {
    FustftError::Container(msg.into())
}

fn u64_at(bytes: &[u8], at: usize) -> u64 {
    u64::from_le_bytes(bytes[at..at + 8].try_into().unwrap())
}

fn f64_at(bytes: &[u8], at: usize) -> f64 {
    f64::from_le_bytes(bytes[at..at + 8].try_into().unwrap())
}

fn to_usize(v: u64, field: &str) -> Result<usize> {
    usize::try_from(v).map_err(|_| corrupt(format!("{field} = {v} does not fit in memory")))
}

pub fn decode(bytes: &[u8]) -> Result<Spectrogram> {
    if bytes.len() < HEADER_LEN {
        return Err(corrupt(format!(
            "file is {} bytes, header needs {HEADER_LEN}",
            bytes.len()
        )));
    }
    if &bytes[..4] != MAGIC {
        return Err(corrupt("bad magic, not a FUST file"));
    }
    let version = u16::from_le_bytes([bytes[4], bytes[5]]);
    if version != FORMAT_VERSION {
        return Err(corrupt(format!("unsupported format version {version}")));
    }
    let kind = TransformKind::from_tag(bytes[6])
        .ok_or_else(|| corrupt(format!("unknown kind tag {}", bytes[6])))?;
    let frame_len = to_usize(u64_at(bytes, 8), "L_w")?;
    let hop = to_usize(u64_at(bytes, 16), "shift")?;
    let zero_pad = to_usize(u64_at(bytes, 24), "N_z")?;
    let signal_len = to_usize(u64_at(bytes, 32), "L_x")?;
    let rate = f64_at(bytes, 40);
    let bins = to_usize(u64_at(bytes, 48), "bins")?;
    let frames = to_usize(u64_at(bytes, 56), "frames")?;

    let config = TransformConfig::with_zero_pad(kind, frame_len, hop, zero_pad)
        .map_err(|e| corrupt(format!("invalid header: {e}")))?;
    if bins != config.bins() {
        return Err(corrupt(format!(
            "header declares {bins} bins, {kind} with L_w = {frame_len} has {}",
            config.bins()
        )));
    }
    config
        .frame_count(signal_len)
        .map_err(|e| corrupt(format!("invalid header: {e}")))?;
    let expected = bins
        .checked_mul(frames)
        .and_then(|n| n.checked_mul(16))
        .ok_or_else(|| corrupt("payload size overflows"))?;
    let payload = &bytes[HEADER_LEN..];
    if payload.len() != expected {
        return Err(corrupt(format!(
            "payload is {} bytes, header implies {expected}",
            payload.len()
        )));
    }
    let data = payload
        .chunks_exact(16)
        .map(|c| Complex64::new(f64_at(c, 0), f64_at(c, 8)))
        .collect();
    let mut spec = Spectrogram::with_frames(config, signal_len, frames, data)?;
    spec.sample_rate = (rate.is_finite() && rate > 0.0).then_some(rate);
    Ok(spec)
}

pub fn write_spectrogram(path: impl AsRef<Path>, spec: &Spectrogram) -> Result<()> {
    super::atomic_write(path.as_ref(), |w| encode(spec, w))
}

pub fn read_spectrogram(path: impl AsRef<Path>) -> Result<Spectrogram> {
    let mut bytes = Vec::new();
    std::fs::File::open(path)?.read_to_end(&mut bytes)?;
    decode(&bytes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Spectrogram {
        let cfg = TransformConfig::new(TransformKind::FustftIII, 8, 2).unwrap();
        let frames = cfg.frame_count(13).unwrap();
        let data = (0..cfg.bins() * frames)
            .map(|i| Complex64::new((i as f64).sin() * 1e-300, 1.0 / (i as f64 + 0.3)))
            .collect();
        let mut s = Spectrogram::with_frames(cfg, 13, frames, data).unwrap();
        s.sample_rate = Some(44_100.0);
        s
    }

    #[test]
    fn header_layout() {
        let mut buf = Vec::new();
        encode(&sample(), &mut buf).unwrap();
        assert_eq!(&buf[..4], b"FUST");
        assert_eq!(buf[4..6], [1, 0]);
        assert_eq!(buf[6], 4);
        assert_eq!(buf[7], 0);
        assert_eq!(u64_at(&buf, 8), 8);
        assert_eq!(u64_at(&buf, 16), 2);
        assert_eq!(u64_at(&buf, 32), 13);
        assert_eq!(buf.len(), HEADER_LEN + 4 * 10 * 16);
    }

    #[test]
    fn byte_identical_round_trip() {
        let s = sample();
        let mut a = Vec::new();
        encode(&s, &mut a).unwrap();
        let back = decode(&a).unwrap();
        let mut b = Vec::new();
        encode(&back, &mut b).unwrap();
        assert_eq!(a, b);
        assert_eq!(back, s);
    }

    #[test]
    fn rejects_corruption() {
        let mut buf = Vec::new();
        encode(&sample(), &mut buf).unwrap();
        assert!(decode(&buf[..buf.len() - 1]).is_err());
        let mut bad = buf.clone();
        bad[0] = b'X';
        assert!(decode(&bad).is_err());
        let mut bad = buf.clone();
        bad[6] = 9;
        assert!(decode(&bad).is_err());
        let mut bad = buf.clone();
        bad[48] = 5;
        assert!(decode(&bad).is_err());
        assert!(decode(&buf[..10]).is_err());
    }

    #[test]
    fn file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("s.fust");
        write_spectrogram(&path, &sample()).unwrap();
        assert_eq!(read_spectrogram(&path).unwrap(), sample());
    }
}
