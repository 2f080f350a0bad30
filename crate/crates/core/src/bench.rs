//! Round-trip and noisy-inversion measurements in the layout of the
//! reference tables: for each `(L_w, ξ)` and each inversion, the signal
//! error and the full and interior relative residuals, first for the exact
//! spectrogram and then with complex white noise added.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use crate::config::{TransformConfig, TransformKind};
use crate::error::{FustftError, Result};
use crate::inversion::{Boundary, InversionMode, Inverter};
use crate::metrics::consistency_metrics;
use crate::signal::Signal;
use crate::synth::add_noise;
use crate::transform::forward;
use crate::window::Window;

/// Frame shift given relative to the frame length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shift {
    /// `L_w / d`.
    Fraction(usize),
    Samples(usize),
}

impl Shift {
    pub fn resolve(self, frame_len: usize) -> usize {
        match self {
            Shift::Fraction(d) => frame_len / d,
            Shift::Samples(s) => s,
        }
    }
}

impl FromStr for Shift {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let named = match s.trim().to_ascii_lowercase().as_str() {
            "half" => Some(2),
            "quarter" => Some(4),
            "eighth" => Some(8),
            "sixteenth" => Some(16),
            _ => None,
        };
        if let Some(d) = named {
            return Ok(Shift::Fraction(d));
        }
        if let Some(d) = s.trim().strip_prefix('/') {
            return d
                .parse()
                .ok()
                .filter(|&d| d > 0)
                .map(Shift::Fraction)
                .ok_or_else(|| format!("bad shift divisor {s:?}"));
        }
        s.trim()
            .parse()
            .ok()
            .filter(|&v| v > 0)
            .map(Shift::Samples)
            .ok_or_else(|| format!("bad shift {s:?}; use half, eighth, /N or a sample count"))
    }
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub frame_lens: Vec<usize>,
    pub shifts: Vec<Shift>,
    pub noise_variance: f64,
    pub kind: TransformKind,
    pub seed: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            frame_lens: vec![2048, 8192],
            shifts: vec![Shift::Fraction(2), Shift::Fraction(8)],
            noise_variance: 1e-6,
            kind: TransformKind::FustftII,
            seed: 7,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Table {
    /// Exact spectrogram.
    InRange,
    /// Noise added to the spectrogram.
    Noisy,
}

impl Table {
    pub fn number(self) -> u8 {
        match self {
            Table::InRange => 1,
            Table::Noisy => 2,
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchRow {
    pub table: Table,
    pub frame_len: usize,
    pub hop: usize,
    pub boundary: Boundary,
    pub signal_error: f64,
    pub full_residual: f64,
    pub interior_residual: f64,
}

impl fmt::Display for BenchRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "table {} L_w={:<5} xi={:<5} {:<3} err={:.2e} full={:.2e} interior={:.2e}",
            self.table.number(),
            self.frame_len,
            self.hop,
            inverse_label(self.boundary),
            self.signal_error,
            self.full_residual,
            self.interior_residual
        )
    }
}

fn inverse_label(b: Boundary) -> &'static str {
    match b {
        Boundary::Standard => "S",
        Boundary::Periodic => "S_p",
    }
}

/// Runs every `(L_w, ξ)` pair in both tables with both inversions.
pub fn run(x: &Signal, cfg: &BenchConfig) -> Result<Vec<BenchRow>> {
    let longest = cfg.frame_lens.iter().copied().max().unwrap_or(0);
    if x.len() <= longest {
        return Err(FustftError::SignalTooShort {
            len: x.len(),
            frame_len: longest,
        });
    }
    let mut rows = Vec::new();
    for table in [Table::InRange, Table::Noisy] {
        for &lw in &cfg.frame_lens {
            for &shift in &cfg.shifts {
                let hop = shift.resolve(lw);
                rows.extend(run_case(x, cfg, table, lw, hop)?);
            }
        }
    }
    Ok(rows)
}

/// Both inversions of one `(L_w, ξ)` configuration.
pub fn run_case(
    x: &Signal,
    cfg: &BenchConfig,
    table: Table,
    frame_len: usize,
    hop: usize,
) -> Result<Vec<BenchRow>> {
    let config = TransformConfig::new(cfg.kind, frame_len, hop)?;
    let window = Window::hann(frame_len)?;
    let mut spec = forward(x, &window, &config)?;
    if table == Table::Noisy && cfg.noise_variance > 0.0 {
        spec = add_noise(&spec, cfg.noise_variance, cfg.seed);
        spec.real_source = false;
    }
    let inverter = Inverter::new(&window, &config)?;
    let mut rows = Vec::new();
    for mode in [InversionMode::standard(), InversionMode::periodic()] {
        let report = inverter.invert(&spec, mode)?;
        let m = consistency_metrics(&spec, &report.signal, &window, Some(x))?;
        rows.push(BenchRow {
            table,
            frame_len,
            hop,
            boundary: mode.boundary,
            signal_error: m.signal_error.unwrap_or(f64::NAN),
            full_residual: m.full_residual.unwrap_or(f64::NAN),
            interior_residual: m.interior_residual.unwrap_or(f64::NAN),
        });
    }
    Ok(rows)
}

pub fn write_csv(path: impl AsRef<Path>, rows: &[BenchRow]) -> Result<()> {
    crate::io::atomic_write(path.as_ref(), |out| {
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "table",
            "L_w",
            "xi",
            "inverse",
            "signal_error",
            "full_residual",
            "interior_residual",
        ])?;
        for r in rows {
            w.write_record([
                r.table.number().to_string(),
                r.frame_len.to_string(),
                r.hop.to_string(),
                inverse_label(r.boundary).to_string(),
                format!("{:.6e}", r.signal_error),
                format!("{:.6e}", r.full_residual),
                format!("{:.6e}", r.interior_residual),
            ])?;
        }
        w.flush()?;
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synth::{voiced, VoicedParams};

    #[test]
    fn shift_parsing() {
        assert_eq!("half".parse(), Ok(Shift::Fraction(2)));
        assert_eq!("/8".parse(), Ok(Shift::Fraction(8)));
        assert_eq!("12".parse(), Ok(Shift::Samples(12)));
        assert!("0".parse::<Shift>().is_err());
        assert_eq!(Shift::Fraction(8).resolve(2048), 256);
    }

    #[test]
    fn zero_noise_matches_in_range() {
        let x = voiced(&VoicedParams {
            seconds: 0.05,
            ..Default::default()
        });
        let cfg = BenchConfig {
            frame_lens: vec![64],
            shifts: vec![Shift::Fraction(2), Shift::Fraction(8)],
            noise_variance: 0.0,
            ..Default::default()
        };
        let rows = run(&x, &cfg).unwrap();
        assert_eq!(rows.len(), 8);
        let (a, b) = rows.split_at(4);
        for (p, q) in a.iter().zip(b) {
            assert_eq!(p.signal_error, q.signal_error);
            assert_eq!(p.full_residual, q.full_residual);
            assert!(p.signal_error < 1e-10);
        }
    }

    #[test]
    fn too_short_input() {
        let x = Signal::from_real(&[0.0; 100]);
        assert!(run(&x, &BenchConfig::default()).is_err());
    }
}
