use thiserror::Error;

/// Errors produced by analysis, synthesis and the file formats.
#[derive(Debug, Error)]
pub enum FustftError {
    #[error("invalid transform configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid window: {0}")]
    InvalidWindow(String),

    #[error("signal length {len} must exceed the frame length {frame_len}")]
    SignalTooShort { len: usize, frame_len: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("near-singular system{}: pivot {pivot:e} below threshold {threshold:e}", bin_suffix(*.bin))]
    NearSingular {
        bin: Option<usize>,
        pivot: f64,
        threshold: f64,
    },

    #[error("matrix is not positive definite: a - 2|b| = {margin:e}")]
    NotPositiveDefinite { margin: f64 },

    #[error("off-diagonal does not follow the alternating sign pattern at index {index}")]
    PatternMismatch { index: usize },

    #[error("coverage gap: normal-equation diagonal vanishes at offset {offset}")]
    CoverageGap { offset: usize },

    #[error("dense oracle size guard exceeded: {0}")]
    SizeGuard(String),

    #[error("rank deficient: numerical rank {rank} < {cols}")]
    RankDeficient { rank: usize, cols: usize },

    #[error("unsupported audio: {0}")]
    UnsupportedAudio(String),

    #[error("malformed spectrogram container: {0}")]
    Container(String),

    #[error(transparent)]
    Wav(#[from] hound::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn bin_suffix(bin: Option<usize>) -> String {
    match bin {
        Some(i) => format!(" in bin {i}"),
        None => String::new(),
    }
}

impl FustftError {
    /// Attach the residue (bin) index to a solver failure.
    pub fn with_bin(self, index: usize) -> Self {
        match self {
            FustftError::NearSingular {
                pivot, threshold, ..
            } => FustftError::NearSingular {
                bin: Some(index),
                pivot,
                threshold,
            },
            other => other,
        }
    }

    /// True for failures caused by the numerics rather than the inputs.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            FustftError::NearSingular { .. }
                | FustftError::NotPositiveDefinite { .. }
                | FustftError::RankDeficient { .. }
                | FustftError::CoverageGap { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, FustftError>;
