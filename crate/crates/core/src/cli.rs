//! Command-line front end: `analyze`, `synthesize`, `bench`, `export-power`.
//!
//! Exit codes: 0 success, 2 usage or parameter error, 3 data error,
//! 4 numerical failure.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::bench::{self, BenchConfig, Shift};
use crate::config::{TransformConfig, TransformKind};
use crate::error::{FustftError, Result};
use crate::inversion::{Boundary, InversionMode, Inverter, SolverPath};
use crate::io;
use crate::metrics::consistency_metrics;
use crate::synth::{voiced, VoicedParams};
use crate::transform::forward;
use crate::window::Window;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DATA: i32 = 3;
pub const EXIT_NUMERICAL: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "fustft",
    version,
    about = "Frequency-undersampled STFT analysis and synthesis"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum WindowArg {
    Sine,
    Hann,
}

impl WindowArg {
    fn build(self, len: usize) -> Result<Window> {
        match self {
            WindowArg::Sine => Window::sine(len),
            WindowArg::Hann => Window::hann(len),
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    Standard,
    Periodic,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SolverArg {
    General,
    Fast,
    Auto,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analyse a mono WAV file into a spectrogram container.
    Analyze {
        input: PathBuf,
        output: PathBuf,
        /// stft, fostft, fi, fii or fiii.
        #[arg(long, default_value = "fii")]
        kind: TransformKind,
        #[arg(long, value_enum, default_value = "hann")]
        window: WindowArg,
        #[arg(long = "frame-len")]
        frame_len: usize,
        #[arg(long)]
        shift: usize,
        /// Zero padding `N_z` per frame (FOSTFT only).
        #[arg(long, default_value_t = 0)]
        oversample: usize,
    },
    /// Invert a spectrogram container back to audio.
    Synthesize {
        input: PathBuf,
        output: PathBuf,
        #[arg(long, value_enum, default_value = "standard")]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "auto")]
        solver: SolverArg,
        /// Must match the window used for analysis.
        #[arg(long, value_enum, default_value = "hann")]
        window: WindowArg,
        /// Original WAV, for reporting the signal error.
        #[arg(long)]
        reference: Option<PathBuf>,
    },
    /// Tabulate inversion errors for exact and noisy spectrograms.
    Bench {
        /// Input WAV; omit to use the synthetic voiced signal.
        #[arg(long)]
        input: Option<PathBuf>,
        output: PathBuf,
        #[arg(
            long = "frame-lens",
            value_delimiter = ',',
            default_value = "2048,8192"
        )]
        frame_lens: Vec<usize>,
        /// Shifts as half, eighth, /N or a sample count.
        #[arg(long, value_delimiter = ',', default_value = "half,eighth")]
        shifts: Vec<Shift>,
        #[arg(long = "noise-var", default_value_t = 1e-6)]
        noise_var: f64,
        #[arg(long, default_value = "fii")]
        kind: TransformKind,
        /// Length of the synthetic signal when no input is given.
        #[arg(long, default_value_t = 15.0)]
        seconds: f64,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Write `|X|²` with frequency and time axes as CSV.
    ExportPower { input: PathBuf, output: PathBuf },
}

/// Exit status for a library error.
pub fn exit_code(err: &FustftError) -> i32 {
    match err {
        e if e.is_numerical() => EXIT_NUMERICAL,
        FustftError::InvalidConfig(_)
        | FustftError::InvalidWindow(_)
        | FustftError::SignalTooShort { .. } => EXIT_USAGE,
        _ => EXIT_DATA,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(cli.command) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn execute(command: Command) -> Result<()> {
    match command {
        Command::Analyze {
            input,
            output,
            kind,
            window,
            frame_len,
            shift,
            oversample,
        } => {
            let config = TransformConfig::with_zero_pad(kind, frame_len, shift, oversample)?;
            let window = window.build(frame_len)?;
            let x = io::read_wav(&input)?;
            let mut spec = forward(&x, &window, &config)?;
            spec.sample_rate = x.sample_rate;
            io::write_spectrogram(&output, &spec)?;
            println!(
                "{} bins x {} frames, {} entries for {} samples (ratio {:.4})",
                spec.bins(),
                spec.frames(),
                spec.bins() * spec.frames(),
                spec.signal_len(),
                spec.redundancy()
            );
            Ok(())
        }
        Command::Synthesize {
            input,
            output,
            mode,
            solver,
            window,
            reference,
        } => {
            let mut spec = io::read_spectrogram(&input)?;
            let reference = reference.map(io::read_wav).transpose()?;
            spec.real_source = reference.as_ref().is_some_and(|r| r.is_real);
            let window = window.build(spec.config().frame_len())?;
            let mode = match mode {
                ModeArg::Standard => InversionMode::standard(),
                ModeArg::Periodic => InversionMode::periodic(),
            }
            .with_solver(match solver {
                SolverArg::General => SolverPath::General,
                SolverArg::Fast => SolverPath::Fast,
                SolverArg::Auto => SolverPath::Auto,
            });
            let report = Inverter::new(&window, spec.config())?.invert(&spec, mode)?;
            for w in &report.warnings {
                log::warn!("{w}");
            }
            let metrics = consistency_metrics(&spec, &report.signal, &window, reference.as_ref())?;
            let show = |v: Option<f64>| v.map_or("undefined".to_string(), |v| format!("{v:.3e}"));
            eprintln!("full residual     {}", show(metrics.full_residual));
            eprintln!("interior residual {}", show(metrics.interior_residual));
            if reference.is_some() {
                eprintln!("signal error      {}", show(metrics.signal_error));
            }
            if report.boundary == Boundary::Periodic {
                eprintln!("condition number  {}", show(report.condition));
                eprintln!("tail residue      {}", show(report.tail_residue));
            }
            let rate = match spec.sample_rate {
                Some(r) => r.round() as u32,
                None => {
                    log::warn!("no sample rate in container; writing 44100 Hz");
                    44_100
                }
            };
            io::write_wav(&output, &report.signal, rate)
        }
        Command::Bench {
            input,
            output,
            frame_lens,
            shifts,
            noise_var,
            kind,
            seconds,
            seed,
        } => {
            let x = match input {
                Some(p) => io::read_wav(p)?,
                None => {
                    log::warn!("no input given; using the synthetic voiced signal");
                    voiced(&VoicedParams {
                        seconds,
                        ..Default::default()
                    })
                }
            };
            let cfg = BenchConfig {
                frame_lens,
                shifts,
                noise_variance: noise_var,
                kind,
                seed,
            };
            let rows = bench::run(&x, &cfg)?;
            for r in &rows {
                println!("{r}");
            }
            bench::write_csv(&output, &rows)
        }
        Command::ExportPower { input, output } => {
            let spec = io::read_spectrogram(&input)?;
            io::write_power_csv(&output, &spec)?;
            Ok(())
        }
    }
}
