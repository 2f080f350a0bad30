//! Power spectrogram export for plotting.
//!
//! One row per bin. The leading column holds the bin frequency; FUSTFT-III
//! gets two, for even and for odd frames. The header row carries the frame
//! centre times. Without a sample rate, bin and frame indices are written
//! instead of Hz and seconds.

use std::path::Path;

use crate::config::TransformKind;
use crate::error::{FustftError, Result};
use crate::spectrogram::Spectrogram;

#[derive(Debug, Clone, PartialEq)]
pub struct PowerTable {
    /// Frequency columns, one per frame parity for FUSTFT-III.
    pub frequencies: Vec<Vec<f64>>,
    pub times: Vec<f64>,
    /// `|X[k, l]|²`, bin-major.
    pub power: Vec<Vec<f64>>,
    pub in_hz: bool,
}

impl PowerTable {
    pub fn from_spectrogram(spec: &Spectrogram) -> Self {
        let cfg = spec.config();
        let rate = spec.sample_rate;
        let parities: &[usize] = if cfg.kind() == TransformKind::FustftIII {
            &[0, 1]
        } else {
            &[0]
        };
        let frequencies = parities
            .iter()
            .map(|&frame| {
                (0..spec.bins())
                    .map(|k| match rate {
                        Some(fs) => cfg.bin_frequency(k, frame) * fs,
                        None => k as f64,
                    })
                    .collect()
            })
            .collect();
        let times = (0..spec.frames())
            .map(|l| match rate {
                Some(fs) => (cfg.frame_start(l) as f64 + cfg.frame_len() as f64 / 2.0) / fs,
                None => l as f64,
            })
            .collect();
        let power = (0..spec.bins())
            .map(|k| {
                (0..spec.frames())
                    .map(|l| spec.get(k, l).norm_sqr())
                    .collect()
            })
            .collect();
        Self {
            frequencies,
            times,
            power,
            in_hz: rate.is_some(),
        }
    }
}

fn fmt(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn write_power_csv(path: impl AsRef<Path>, spec: &Spectrogram) -> Result<PowerTable> {
    if spec.sample_rate.is_none() {
        log::warn!("no sample rate recorded; writing bin and frame indices instead of Hz and s");
    }
    let table = PowerTable::from_spectrogram(spec);
    super::atomic_write(path.as_ref(), |out| {
        let mut w = csv::Writer::from_writer(out);
        let unit = if table.in_hz { "hz" } else { "bin" };
        let mut header: Vec<String> = match table.frequencies.len() {
            1 => vec![format!("freq_{unit}")],
            _ => vec![format!("freq_{unit}_even"), format!("freq_{unit}_odd")],
        };
        header.extend(table.times.iter().map(|&t| fmt(t)));
        w.write_record(&header)?;
        for (k, row) in table.power.iter().enumerate() {
            let mut rec: Vec<String> = table.frequencies.iter().map(|f| fmt(f[k])).collect();
            rec.extend(row.iter().map(|&p| fmt(p)));
            w.write_record(&rec)?;
        }
        w.flush()?;
        Ok(())
    })?;
    Ok(table)
}

pub fn read_power_csv(path: impl AsRef<Path>) -> Result<PowerTable> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(false)
        .from_path(path)?;
    let mut rows = r.records();
    let header = rows
        .next()
        .ok_or_else(|| FustftError::Container("empty CSV".into()))??;
    let freq_cols = header.iter().take_while(|h| h.starts_with("freq_")).count();
    if freq_cols == 0 {
        return Err(FustftError::Container("missing frequency column".into()));
    }
    let in_hz = header.get(0).is_some_and(|h| h.starts_with("freq_hz"));
    let parse = |s: &str| {
        s.parse::<f64>()
            .map_err(|_| FustftError::Container(format!("bad number {s:?}")))
    };
    let times = header
        .iter()
        .skip(freq_cols)
        .map(parse)
        .collect::<Result<Vec<_>>>()?;
    let mut frequencies = vec![Vec::new(); freq_cols];
    let mut power = Vec::new();
    for rec in rows {
        let rec = rec?;
        for (c, col) in frequencies.iter_mut().enumerate() {
            col.push(parse(&rec[c])?);
        }
        power.push(
            rec.iter()
                .skip(freq_cols)
                .map(parse)
                .collect::<Result<Vec<_>>>()?,
        );
    }
    Ok(PowerTable {
        frequencies,
        times,
        power,
        in_hz,
    })
}
