//! Transform configuration and the index arithmetic every module shares.

use std::fmt;
use std::str::FromStr;

use crate::error::{FustftError, Result};

/// Which frequency grid a transform samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TransformKind {
    /// Discrete STFT, bins `k/L_w`.
    Stft,
    /// Frequency-oversampled STFT, bins `k/(L_w + N_z)`.
    Fostft,
    /// Even bins `2k/L_w`.
    FustftI,
    /// Odd bins `(2k+1)/L_w`.
    FustftII,
    /// Type I on even frames, Type II on odd frames.
    FustftIII,
}

impl TransformKind {
    pub const ALL: [TransformKind; 5] = [
        TransformKind::Stft,
        TransformKind::Fostft,
        TransformKind::FustftI,
        TransformKind::FustftII,
        TransformKind::FustftIII,
    ];

    pub const UNDERSAMPLED: [TransformKind; 3] = [
        TransformKind::FustftI,
        TransformKind::FustftII,
        TransformKind::FustftIII,
    ];

    pub fn is_undersampled(self) -> bool {
        matches!(
            self,
            TransformKind::FustftI | TransformKind::FustftII | TransformKind::FustftIII
        )
    }

    /// Tag byte used by the spectrogram container.
    pub fn tag(self) -> u8 {
        match self {
            TransformKind::Stft => 0,
            TransformKind::Fostft => 1,
            TransformKind::FustftI => 2,
            TransformKind::FustftII => 3,
            TransformKind::FustftIII => 4,
        }
    }

    pub fn from_tag(tag: u8) -> Option<Self> {
        Self::ALL.get(tag as usize).copied()
    }

    /// Whether frame `l` uses the odd (Type II) grid.
    #[inline]
    pub fn odd_grid(self, frame: usize) -> bool {
        match self {
            TransformKind::FustftII => true,
            TransformKind::FustftIII => frame % 2 == 1,
            _ => false,
        }
    }
}

impl fmt::Display for TransformKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            TransformKind::Stft => "STFT",
            TransformKind::Fostft => "FOSTFT",
            TransformKind::FustftI => "FUSTFT-I",
            TransformKind::FustftII => "FUSTFT-II",
            TransformKind::FustftIII => "FUSTFT-III",
        };
        f.write_str(name)
    }
}

impl FromStr for TransformKind {
    type Err = FustftError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "stft" => Ok(TransformKind::Stft),
            "fostft" => Ok(TransformKind::Fostft),
            "fi" | "fustfti" | "i" => Ok(TransformKind::FustftI),
            "fii" | "fustftii" | "ii" => Ok(TransformKind::FustftII),
            "fiii" | "fustftiii" | "iii" => Ok(TransformKind::FustftIII),
            _ => Err(FustftError::InvalidConfig(format!(
                "unknown transform kind `{s}`"
            ))),
        }
    }
}

/// Frame length `L_w`, frame shift `ξ`, kind and FOSTFT zero-pad count `N_z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TransformConfig {
    frame_len: usize,
    hop: usize,
    kind: TransformKind,
    zero_pad: usize,
}

impl TransformConfig {
    /// Any kind except FOSTFT (which needs a zero-pad count, see [`Self::fostft`]).
    pub fn new(kind: TransformKind, frame_len: usize, hop: usize) -> Result<Self> {
        if kind == TransformKind::Fostft {
            return Err(FustftError::InvalidConfig(
                "FOSTFT requires a zero-pad count N_z >= 1".into(),
            ));
        }
        Self::with_zero_pad(kind, frame_len, hop, 0)
    }

    pub fn fostft(frame_len: usize, hop: usize, zero_pad: usize) -> Result<Self> {
        Self::with_zero_pad(TransformKind::Fostft, frame_len, hop, zero_pad)
    }

    /// General constructor; validates every invariant.
    pub fn with_zero_pad(
        kind: TransformKind,
        frame_len: usize,
        hop: usize,
        zero_pad: usize,
    ) -> Result<Self> {
        let cfg = Self {
            frame_len,
            hop,
            kind,
            zero_pad,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<()> {
        let (lw, hop) = (self.frame_len, self.hop);
        let err = |m: String| Err(FustftError::InvalidConfig(m));
        if lw < 2 {
            return err(format!("frame length {lw} is below 2"));
        }
        if hop == 0 || hop > lw {
            return err(format!("frame shift {hop} outside [1, {lw}]"));
        }
        if self.kind.is_undersampled() {
            if lw % 4 != 0 {
                return err(format!(
                    "{} requires a frame length that is a multiple of 4, got {lw}",
                    self.kind
                ));
            }
            if hop > lw / 2 {
                return err(format!(
                    "{} requires frame shift <= L_w/2 = {}, got {hop}",
                    self.kind,
                    lw / 2
                ));
            }
        }
        match (self.kind, self.zero_pad) {
            (TransformKind::Fostft, 0) => err("FOSTFT requires N_z >= 1".into()),
            (TransformKind::Fostft, _) | (_, 0) => Ok(()),
            (kind, nz) => err(format!("{kind} takes no zero padding, got N_z = {nz}")),
        }
    }

    pub fn frame_len(&self) -> usize {
        self.frame_len
    }

    pub fn hop(&self) -> usize {
        self.hop
    }

    pub fn kind(&self) -> TransformKind {
        self.kind
    }

    pub fn zero_pad(&self) -> usize {
        self.zero_pad
    }

    /// `L_w/2`, the stride of the per-bin systems.
    pub fn half(&self) -> usize {
        self.frame_len / 2
    }

    /// Frequency bins per frame.
    pub fn bins(&self) -> usize {
        match self.kind {
            TransformKind::Stft => self.frame_len,
            TransformKind::Fostft => self.frame_len + self.zero_pad,
            _ => self.frame_len / 2,
        }
    }

    /// DFT length whose grid the phases are drawn from.
    pub fn dft_len(&self) -> usize {
        self.frame_len + self.zero_pad
    }

    /// Phase grid index `g` for bin `k` in frame `l`: the summand phase is
    /// `e^{−i2π g τ / dft_len}`.
    #[inline]
    pub fn grid_index(&self, bin: usize, frame: usize) -> usize {
        if self.kind.is_undersampled() {
            2 * bin + usize::from(self.kind.odd_grid(frame))
        } else {
            bin
        }
    }

    /// Bin centre frequency as a multiple of `f_s` for frame parity `frame`.
    pub fn bin_frequency(&self, bin: usize, frame: usize) -> f64 {
        self.grid_index(bin, frame) as f64 / self.dft_len() as f64
    }

    /// Zeros prepended to the signal, `L_w − ξ`.
    pub fn lead_pad(&self) -> usize {
        self.frame_len - self.hop
    }

    /// Frames for a signal of length `L_x`: `⌈(L_x + L_w − ξ)/ξ⌉`.
    pub fn frame_count(&self, signal_len: usize) -> Result<usize> {
        self.check_signal_len(signal_len)?;
        Ok(self.frames_unchecked(signal_len))
    }

    pub(crate) fn frames_unchecked(&self, signal_len: usize) -> usize {
        (signal_len + self.lead_pad()).div_ceil(self.hop)
    }

    pub(crate) fn check_signal_len(&self, signal_len: usize) -> Result<()> {
        if signal_len <= self.frame_len {
            return Err(FustftError::SignalTooShort {
                len: signal_len,
                frame_len: self.frame_len,
            });
        }
        Ok(())
    }

    /// Zeros appended at the end, `⌈(L_x + L_w − ξ)/ξ⌉ξ − L_x`.
    pub fn tail_pad(&self, signal_len: usize) -> usize {
        self.frames_unchecked(signal_len) * self.hop - signal_len
    }

    /// Signal index of the first sample of frame `l`, `lξ − L_w + ξ`.
    #[inline]
    pub fn frame_start(&self, frame: usize) -> isize {
        (frame * self.hop) as isize - self.lead_pad() as isize
    }

    /// Frames at the start whose support reaches into the leading padding,
    /// `⌈(L_w − ξ)/ξ⌉`.
    pub fn leading_boundary_frames(&self) -> usize {
        self.lead_pad().div_ceil(self.hop)
    }

    /// Frames at the end excluded from the interior norm,
    /// `⌈⌈(L_x + L_w − ξ)/ξ⌉ − L_x/ξ⌉`.
    pub fn trailing_boundary_frames(&self, signal_len: usize) -> usize {
        self.frames_unchecked(signal_len) - signal_len / self.hop
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Walks frame starts `lξ − L_w + ξ` and counts the frames that begin
    /// before the end of the signal.
    fn brute_force_frames(lx: usize, lw: usize, hop: usize) -> usize {
        (0..)
            .take_while(|&l| (l * hop) as isize - ((lw - hop) as isize) < lx as isize)
            .count()
    }

    #[test]
    fn frame_count_examples() {
        let c = TransformConfig::new(TransformKind::Stft, 4, 2).unwrap();
        assert_eq!(c.frame_count(10).unwrap(), 6);
        assert_eq!(brute_force_frames(10, 4, 2), 6);
        let c = TransformConfig::new(TransformKind::Stft, 8, 8).unwrap();
        assert_eq!(c.frame_count(9).unwrap(), 2);
        let c = TransformConfig::new(TransformKind::FustftII, 512, 256).unwrap();
        assert_eq!(c.frame_count(8820).unwrap(), 36);
    }

    #[test]
    fn frame_count_matches_enumeration() {
        for lw in [4, 8, 12] {
            for hop in 1..=lw {
                let c = TransformConfig::new(TransformKind::Stft, lw, hop).unwrap();
                for lx in lw + 1..5 * lw {
                    assert_eq!(c.frame_count(lx).unwrap(), brute_force_frames(lx, lw, hop));
                    // last index reached equals L_x − 1 + tail padding
                    let last = c.frame_start(c.frame_count(lx).unwrap() - 1) + lw as isize;
                    assert_eq!(last as usize, lx + c.tail_pad(lx));
                }
            }
        }
    }

    #[test]
    fn rejects_short_signal() {
        let c = TransformConfig::new(TransformKind::FustftI, 8, 4).unwrap();
        assert!(matches!(
            c.frame_count(8),
            Err(FustftError::SignalTooShort { .. })
        ));
    }

    #[test]
    fn config_invariants() {
        use TransformKind::*;
        assert!(TransformConfig::new(FustftI, 10, 2).is_err());
        assert!(TransformConfig::new(FustftII, 8, 5).is_err());
        assert!(TransformConfig::new(FustftIII, 8, 4).is_ok());
        assert!(TransformConfig::new(Stft, 8, 9).is_err());
        assert!(TransformConfig::new(Stft, 8, 0).is_err());
        assert!(TransformConfig::new(Stft, 8, 8).is_ok());
        assert!(TransformConfig::new(Fostft, 8, 4).is_err());
        assert!(TransformConfig::fostft(8, 4, 0).is_err());
        assert!(TransformConfig::with_zero_pad(Stft, 8, 4, 2).is_err());
        assert_eq!(TransformConfig::fostft(8, 4, 3).unwrap().bins(), 11);
        assert_eq!(TransformConfig::new(FustftIII, 8, 4).unwrap().bins(), 4);
    }

    #[test]
    fn kind_parsing_and_tags() {
        for k in TransformKind::ALL {
            assert_eq!(TransformKind::from_tag(k.tag()), Some(k));
        }
        assert_eq!(
            "FII".parse::<TransformKind>().unwrap(),
            TransformKind::FustftII
        );
        assert_eq!(
            "fustft-iii".parse::<TransformKind>().unwrap(),
            TransformKind::FustftIII
        );
        assert!("wavelet".parse::<TransformKind>().is_err());
    }

    #[test]
    fn boundary_frames() {
        let c = TransformConfig::new(TransformKind::FustftI, 8, 2).unwrap();
        assert_eq!(c.leading_boundary_frames(), 3);
        // F = ⌈27/2⌉ = 14, L_x/ξ = 10.5 → ⌈3.5⌉ = 4
        assert_eq!(c.frame_count(21).unwrap(), 14);
        assert_eq!(c.trailing_boundary_frames(21), 4);
    }
}
