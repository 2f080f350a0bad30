//! Least-squares inversions.
//!
//! * STFT/FOSTFT: `S^H∘S` is diagonal with period `ξ`, so the pseudoinverse
//!   is overlap-add with the canonical dual window.
//! * FUSTFT, standard: `x = (S^H∘S)^{-1} S^H(X)`, split into `L_w/2`
//!   tridiagonal systems of size `n_i = ⌈2(L_x − i)/L_w⌉`.
//! * FUSTFT, periodic: `X` is extended by `p` zero frames to `X_p`, the
//!   periodic normal equations split into `L_w/2` periodic tridiagonal
//!   systems of size `2L_p/L_w`, and the first `L_x` samples are kept.

use log::warn;
use num_complex::Complex64;

use crate::config::{TransformConfig, TransformKind};
use crate::error::{FustftError, Result};
use crate::normal_eq::{periodic_extension, NormalCoefficients};
use crate::signal::{l2_norm, Signal};
use crate::solver::{
    alternating_cycle_phase, alternating_sign_reduce, circulant_eigenvalues, solve_circulant_fft,
    solve_periodic_tridiagonal, solve_toeplitz_dst, solve_tridiagonal, toeplitz_eigenvalues,
    BinSystem,
};
use crate::spectrogram::Spectrogram;
use crate::transform::FrameKernel;
use crate::window::Window;

/// Imaginary residue tolerated before a real-source result is made real.
pub const REAL_OUTPUT_TOL: f64 = 1e-9;
/// Condition number above which `auto` falls back to the general solver
/// and the periodic inversion at `ξ = L_w/2` warns.
pub const CONDITION_LIMIT: f64 = 1e8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    /// Zero padding outside the signal.
    Standard,
    /// Periodic condition on the extended length `L_p`.
    Periodic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolverPath {
    /// Thomas / Sherman–Morrison on every residue system.
    General,
    /// DST-I or FFT diagonalization; requires constant coefficients.
    Fast,
    /// Fast when it applies and is well conditioned, general otherwise.
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InversionMode {
    pub boundary: Boundary,
    pub solver: SolverPath,
}

impl InversionMode {
    pub fn standard() -> Self {
        Self {
            boundary: Boundary::Standard,
            solver: SolverPath::Auto,
        }
    }

    pub fn periodic() -> Self {
        Self {
            boundary: Boundary::Periodic,
            solver: SolverPath::Auto,
        }
    }

    pub fn with_solver(mut self, solver: SolverPath) -> Self {
        self.solver = solver;
        self
    }
}

/// Canonical dual window `w[τ] / (N·Σ_j w²[mod_ξ(τ) + jξ])`.
#[derive(Debug, Clone, PartialEq)]
pub struct DualWindow {
    pub samples: Vec<f64>,
}

impl DualWindow {
    pub fn canonical(window: &Window, config: &TransformConfig) -> Result<Self> {
        if config.kind().is_undersampled() {
            return Err(FustftError::InvalidConfig(format!(
                "{} has no canonical dual window",
                config.kind()
            )));
        }
        let hop = config.hop();
        let lw = window.len();
        let n = config.dft_len() as f64;
        let mut energy = vec![0.0; hop];
        for (t, w) in window.samples().iter().enumerate() {
            energy[t % hop] += w * w;
        }
        if let Some(offset) = energy.iter().position(|&e| !(e > 0.0)) {
            return Err(FustftError::CoverageGap { offset });
        }
        let samples = (0..lw)
            .map(|t| window.samples()[t] / (n * energy[t % hop]))
            .collect();
        Ok(Self { samples })
    }
}

/// Result of an inversion with diagnostics.
#[derive(Debug, Clone)]
pub struct InversionReport {
    pub signal: Signal,
    pub boundary: Boundary,
    /// Path actually taken (`General` or `Fast`).
    pub path: SolverPath,
    /// `max λ / min λ` over all residue systems when the coefficients are
    /// constant along each system.
    pub condition: Option<f64>,
    /// `‖Im x̂‖₂ / ‖x̂‖₂` for real-source spectrograms.
    pub imag_residue: Option<f64>,
    /// Periodic mode: `‖x_p[L_x..]‖₂ / ‖x_p‖₂`, zero for in-range input.
    pub tail_residue: Option<f64>,
    pub warnings: Vec<String>,
}

/// Precomputed state for repeated inversions with one window/configuration.
pub struct Inverter {
    config: TransformConfig,
    window: Window,
    kernel: FrameKernel,
    coefficients: Option<NormalCoefficients>,
    dual: Option<DualWindow>,
}

/// How residue systems may be diagonalized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Structure {
    Variable,
    Constant,
    Alternating,
}

impl Inverter {
    pub fn new(window: &Window, config: &TransformConfig) -> Result<Self> {
        let kernel = FrameKernel::new(config, window)?;
        let (coefficients, dual) = if config.kind().is_undersampled() {
            (Some(NormalCoefficients::compute(window, config)?), None)
        } else {
            (None, Some(DualWindow::canonical(window, config)?))
        };
        Ok(Self {
            config: *config,
            window: window.clone(),
            kernel,
            coefficients,
            dual,
        })
    }

    pub fn config(&self) -> &TransformConfig {
        &self.config
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    pub fn coefficients(&self) -> Option<&NormalCoefficients> {
        self.coefficients.as_ref()
    }

    pub fn dual_window(&self) -> Option<&DualWindow> {
        self.dual.as_ref()
    }

    fn structure(&self) -> Structure {
        let half = self.config.half();
        let hop = self.config.hop();
        match self.config.kind() {
            TransformKind::FustftIII if half % (2 * hop) == 0 => Structure::Constant,
            TransformKind::FustftIII if half % hop == 0 => Structure::Alternating,
            TransformKind::FustftIII => Structure::Variable,
            _ if half % hop == 0 => Structure::Constant,
            _ => Structure::Variable,
        }
    }

    /// Residue system sizes.
    fn system_sizes(&self, signal_len: usize, boundary: Boundary) -> Result<Vec<usize>> {
        let half = self.config.half();
        Ok(match boundary {
            Boundary::Standard => (0..half).map(|i| (signal_len - i).div_ceil(half)).collect(),
            Boundary::Periodic => {
                let ext = periodic_extension(signal_len, &self.config)?;
                vec![ext.periodic_len / half; half]
            }
        })
    }

    /// `max λ / min λ` of `S^H∘S` (or its periodic counterpart) when every
    /// residue system has constant coefficients up to alternating signs.
    pub fn condition_number(&self, signal_len: usize, boundary: Boundary) -> Result<Option<f64>> {
        let coeffs = match &self.coefficients {
            Some(c) if self.structure() != Structure::Variable => c,
            _ => return Ok(None),
        };
        let sizes = self.system_sizes(signal_len, boundary)?;
        let (mut lo, mut hi) = (f64::INFINITY, 0.0_f64);
        for (i, &n) in sizes.iter().enumerate() {
            let (a, b) = (coeffs.a(i), coeffs.b(i));
            let eig = match boundary {
                Boundary::Standard => toeplitz_eigenvalues(a, b, n),
                Boundary::Periodic => {
                    let gamma = if self.structure() == Structure::Alternating {
                        alternating_cycle_phase(n)
                    } else {
                        Complex64::new(1.0, 0.0)
                    };
                    circulant_eigenvalues(a, gamma * b, n)
                }
            };
            for v in eig {
                lo = lo.min(v);
                hi = hi.max(v);
            }
        }
        Ok(Some(hi / lo))
    }

    pub fn invert(&self, spec: &Spectrogram, mode: InversionMode) -> Result<InversionReport> {
        self.check_spectrogram(spec)?;
        let mut report = if self.config.kind().is_undersampled() {
            self.invert_fustft(spec, mode)?
        } else {
            self.invert_painless(spec, mode.boundary)?
        };
        report.signal.sample_rate = spec.sample_rate;
        if spec.real_source {
            let norm = report.signal.norm();
            let residue = if norm > 0.0 {
                report.signal.imag_norm() / norm
            } else {
                0.0
            };
            report.imag_residue = Some(residue);
            if residue <= REAL_OUTPUT_TOL {
                for v in &mut report.signal.samples {
                    v.im = 0.0;
                }
                report.signal.is_real = true;
            } else {
                let msg = format!(
                    "real-source spectrogram produced imaginary residue {residue:.3e}; keeping complex output"
                );
                warn!("{msg}");
                report.warnings.push(msg);
            }
        }
        Ok(report)
    }

    fn check_spectrogram(&self, spec: &Spectrogram) -> Result<()> {
        if spec.config() != &self.config {
            return Err(FustftError::DimensionMismatch(
                "spectrogram configuration differs from the inverter's".into(),
            ));
        }
        let frames = self.config.frame_count(spec.signal_len())?;
        if spec.frames() != frames {
            return Err(FustftError::DimensionMismatch(format!(
                "spectrogram has {} frames, L_x = {} requires {frames}",
                spec.frames(),
                spec.signal_len()
            )));
        }
        Ok(())
    }

    fn invert_painless(&self, spec: &Spectrogram, boundary: Boundary) -> Result<InversionReport> {
        let dual = self
            .dual
            .as_ref()
            .expect("painless kinds carry a dual window");
        let lx = spec.signal_len();
        let samples = match boundary {
            Boundary::Standard => self.kernel.synthesize(spec, &dual.samples),
            Boundary::Periodic => {
                let ext = periodic_extension(lx, &self.config)?;
                let padded = spec.zero_extended(ext.extra_frames);
                let mut xp = self.kernel.synthesize_periodic(&padded, &dual.samples);
                xp.truncate(lx);
                xp
            }
        };
        Ok(InversionReport {
            signal: Signal::from_complex(samples),
            boundary,
            path: SolverPath::Fast,
            condition: None,
            imag_residue: None,
            tail_residue: None,
            warnings: Vec::new(),
        })
    }

    fn invert_fustft(&self, spec: &Spectrogram, mode: InversionMode) -> Result<InversionReport> {
        let coeffs = self
            .coefficients
            .as_ref()
            .expect("FUSTFT carries coefficients");
        let lx = spec.signal_len();
        let half = self.config.half();
        let structure = self.structure();
        let condition = self.condition_number(lx, mode.boundary)?;
        let mut warnings = Vec::new();

        let fast = match mode.solver {
            SolverPath::General => false,
            SolverPath::Fast => {
                if structure == Structure::Variable {
                    return Err(FustftError::InvalidConfig(format!(
                        "fast solver needs L_w/2 divisible by {} (ξ = {})",
                        if self.config.kind() == TransformKind::FustftIII {
                            "2ξ"
                        } else {
                            "ξ"
                        },
                        self.config.hop()
                    )));
                }
                true
            }
            SolverPath::Auto => {
                structure != Structure::Variable && condition.is_some_and(|c| c < CONDITION_LIMIT)
            }
        };

        if mode.boundary == Boundary::Periodic && self.config.hop() == half {
            if let Some(c) = condition.filter(|&c| c > CONDITION_LIMIT) {
                let msg = format!("periodic normal matrix is ill-conditioned (condition {c:.3e})");
                warn!("{msg}");
                warnings.push(msg);
            }
        }

        let (y, periodic_len) = match mode.boundary {
            Boundary::Standard => (self.kernel.adjoint(spec), lx),
            Boundary::Periodic => {
                let ext = periodic_extension(lx, &self.config)?;
                let padded = spec.zero_extended(ext.extra_frames);
                (self.kernel.adjoint_periodic(&padded), ext.periodic_len)
            }
        };
        let periodic = mode.boundary == Boundary::Periodic;

        let mut x = vec![Complex64::new(0.0, 0.0); periodic_len];
        for i in 0..half {
            let n = if periodic {
                periodic_len / half
            } else {
                (lx - i).div_ceil(half)
            };
            let rhs: Vec<Complex64> = (0..n).map(|j| y[i + j * half]).collect();
            let solution = if fast {
                solve_structured(coeffs, i, n, rhs, periodic, structure)
            } else {
                let links = if periodic { n } else { n - 1 };
                let sys = BinSystem {
                    diag: coeffs.bin_diagonal(i, n),
                    offdiag: coeffs.bin_offdiagonal(i, links),
                    rhs,
                    periodic,
                };
                if periodic {
                    solve_periodic_tridiagonal(&sys)
                } else {
                    solve_tridiagonal(&sys)
                }
            }
            .map_err(|e| e.with_bin(i))?;
            for (j, v) in solution.into_iter().enumerate() {
                x[i + j * half] = v;
            }
        }

        let tail_residue = periodic.then(|| {
            let total = l2_norm(&x);
            if total > 0.0 {
                l2_norm(&x[lx..]) / total
            } else {
                0.0
            }
        });
        x.truncate(lx);
        Ok(InversionReport {
            signal: Signal::from_complex(x),
            boundary: mode.boundary,
            path: if fast {
                SolverPath::Fast
            } else {
                SolverPath::General
            },
            condition,
            imag_residue: None,
            tail_residue,
            warnings,
        })
    }
}

/// Solves residue `i` through DST-I / FFT, reducing alternating signs first.
fn solve_structured(
    coeffs: &NormalCoefficients,
    residue: usize,
    n: usize,
    rhs: Vec<Complex64>,
    periodic: bool,
    structure: Structure,
) -> Result<Vec<Complex64>> {
    let (a, b) = (coeffs.a(residue), coeffs.b(residue));
    match (structure, periodic) {
        (Structure::Constant, false) => solve_toeplitz_dst(a, b, &rhs),
        (Structure::Constant, true) => Ok(solve_circulant_fft(a, b, &rhs)?.x),
        (Structure::Alternating, _) => {
            let links = if periodic { n } else { n - 1 };
            let sys = BinSystem {
                diag: coeffs.bin_diagonal(residue, n),
                offdiag: coeffs.bin_offdiagonal(residue, links),
                rhs,
                periodic,
            };
            Ok(alternating_sign_reduce(&sys)?.solve_fast()?.0)
        }
        (Structure::Variable, _) => unreachable!("variable coefficients use the general path"),
    }
}

/// Inverts any spectrogram with the given mode.
pub fn invert(spec: &Spectrogram, window: &Window, mode: InversionMode) -> Result<InversionReport> {
    Inverter::new(window, spec.config())?.invert(spec, mode)
}

/// Painless ISTFT for discrete STFT and FOSTFT spectrograms.
pub fn istft_painless(spec: &Spectrogram, window: &Window) -> Result<Signal> {
    if spec.config().kind().is_undersampled() {
        return Err(FustftError::InvalidConfig(format!(
            "painless inversion applies to STFT/FOSTFT, got {}",
            spec.config().kind()
        )));
    }
    Ok(invert(spec, window, InversionMode::standard())?.signal)
}

/// `(S^H∘S)^{-1} S^H(X)` for FUSTFT spectrograms.
pub fn ifustft_standard(spec: &Spectrogram, window: &Window) -> Result<Signal> {
    require_fustft(spec)?;
    Ok(invert(spec, window, InversionMode::standard())?.signal)
}

/// Periodic-condition inversion for FUSTFT spectrograms.
pub fn ifustft_periodic(spec: &Spectrogram, window: &Window) -> Result<Signal> {
    require_fustft(spec)?;
    Ok(invert(spec, window, InversionMode::periodic())?.signal)
}

fn require_fustft(spec: &Spectrogram) -> Result<()> {
    if !spec.config().kind().is_undersampled() {
        return Err(FustftError::InvalidConfig(format!(
            "expected a FUSTFT spectrogram, got {}",
            spec.config().kind()
        )));
    }
    Ok(())
}
