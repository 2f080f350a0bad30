//! Frequency-undersampled short-time Fourier transform (FUSTFT).
//!
//! FUSTFT keeps only `L_w/2` frequency bins per frame: the even bins
//! (Type I), the odd bins (Type II), or the two alternately by frame parity
//! (Type III). At frame shift `ξ = L_w/2` the spectrogram has about as many
//! entries as the signal has samples.
//!
//! Inversion is by least squares. The normal matrix `S^H∘S` splits into
//! `L_w/2` tridiagonal systems (or periodic tridiagonal ones under the
//! periodic condition), each solved in O(n). When the coefficients are
//! constant along a system, DST-I or the FFT diagonalizes it.
//!
//! ```no_run
//! use fustft::{forward, invert, InversionMode, Signal, TransformConfig, TransformKind, Window};
//!
//! let x = Signal::from_real(&vec![0.1; 44_100]);
//! let window = Window::hann(2048)?;
//! let config = TransformConfig::new(TransformKind::FustftII, 2048, 1024)?;
//! let spec = forward(&x, &window, &config)?;
//! let y = invert(&spec, &window, InversionMode::standard())?;
//! # Ok::<(), fustft::FustftError>(())
//! ```

pub mod bench;
pub mod cli;
pub mod config;
pub mod error;
pub mod inversion;
pub mod io;
pub mod metrics;
pub mod normal_eq;
#[cfg(any(test, feature = "oracle"))]
pub mod oracle;
pub mod signal;
pub mod solver;
pub mod spectrogram;
pub mod synth;
pub mod transform;
pub mod window;

pub use config::{TransformConfig, TransformKind};
pub use error::{FustftError, Result};
pub use inversion::{
    ifustft_periodic, ifustft_standard, invert, istft_painless, InversionMode, InversionReport,
    Inverter, SolverPath,
};
pub use metrics::{consistency_metrics, ConsistencyMetrics};
pub use normal_eq::{periodic_extension, NormalCoefficients, PeriodicExtension};
pub use signal::Signal;
pub use spectrogram::Spectrogram;
pub use transform::{adjoint, adjoint_periodic, extract_frame, forward, forward_periodic};
pub use window::{validate_fustft_window, Sampling, Window, WindowKind, WindowReport};

pub use num_complex::Complex64;
