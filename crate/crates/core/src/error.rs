//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid interval endpoints [{lo}, {hi}]")]
    InvalidEndpoints { lo: f64, hi: f64 },
    #[error("division by an interval enclosing zero")]
    DivisionByZeroInterval,
    #[error("argument {arg} exceeds the trigonometric reduction limit 2^40")]
    ArgumentReductionOverflow { arg: f64 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("linear system not verifiably invertible (contraction norm {norm})")]
    NotVerifiablyInvertible { norm: f64 },
    #[error("matrix is numerically singular")]
    NumericallySingular,
    #[error("Newton-Kantorovich contraction failed (Z = {z} >= 1)")]
    ContractionFailed { z: f64 },
    #[error("Newton-Kantorovich radius {r0} not below trust radius {rstar}")]
    RadiusTooLarge { r0: f64, rstar: f64 },
    #[error("derivative not verifiably nonzero on the trust ball")]
    DerivativeVanishes,
    #[error("no root seed found in the open right half-plane")]
    SeedNotInRightHalfPlane,
    #[error("validated root enclosures overlap; cannot certify distinct roots")]
    EnclosuresOverlap,
    #[error("root census found {found} validated roots, expected {expected}")]
    CensusCountMismatch { found: usize, expected: usize },
    #[error("census found {0} unstable eigenvalues, expected 2")]
    UnstableCountNotTwo(usize),
    #[error("resonance: characteristic enclosure at beta = ({0}, {1}) contains zero")]
    ResonantIndex(u32, u32),
    #[error("invertibility sweep could not certify beta = ({beta1}, {beta2})")]
    SweepSolveFailed { beta1: u32, beta2: u32 },
    #[error("tail threshold violated: {0}")]
    ThresholdViolated(String),
    #[error("radii polynomial admits no certified negative point")]
    NoNegativePoint,
    #[error("the two validations used different approximate solutions")]
    MismatchedGuess,
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("malformed coefficient file: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable process exit code for scripting against the CLI.
    pub fn exit_code(&self) -> i32 {
        use Error::*;
        match self {
            EnclosuresOverlap
            | CensusCountMismatch { .. }
            | UnstableCountNotTwo(_)
            | SeedNotInRightHalfPlane
            | ContractionFailed { .. }
            | RadiusTooLarge { .. }
            | DerivativeVanishes => 10,
            NotVerifiablyInvertible { .. }
            | ThresholdViolated(_)
            | NumericallySingular
            | SweepSolveFailed { .. } => 11,
            ResonantIndex(..) => 12,
            NoNegativePoint | MismatchedGuess => 13,
            Config(_) => 14,
            _ => 1,
        }
    }
}
