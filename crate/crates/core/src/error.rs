use std::fmt;

use num_bigint::BigUint;

/// Errors produced by step-set validation, counting and formula evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The all-zero vector was found in (or implied by) a step set.
    ZeroStep,
    /// Dimensions of step set, length tuple, matrix or permutation disagree.
    DimensionMismatch { expected: usize, found: usize },
    /// Enumeration would produce more matrices than the configured cap.
    EnumerationCapExceeded { count: BigUint, cap: u64 },
    /// Sampling was requested but no alignment exists for the given lengths.
    NoAlignmentExists,
    /// Every base set contains 0, so the number of parts is unbounded.
    UnboundedParts,
    /// The operation requires a finite step set.
    InfiniteStepSet,
    /// The formula identifier is unknown or not applicable here.
    UnknownFormula(String),
    /// An input lies outside the formula's domain.
    DomainError(String),
    /// A step-set expression could not be parsed.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroStep => write!(f, "step set contains the zero vector"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {}, found {}", expected, found)
            }
            Error::EnumerationCapExceeded { count, cap } => write!(
                f,
                "enumeration cap exceeded: {} alignments exist, cap is {}",
                count, cap
            ),
            Error::NoAlignmentExists => write!(f, "no alignment exists for the given lengths"),
            Error::UnboundedParts => {
                write!(f, "every base set contains 0, so the number of parts is unbounded")
            }
            Error::InfiniteStepSet => write!(f, "operation requires a finite step set"),
            Error::UnknownFormula(id) => write!(f, "unknown or inapplicable formula: {}", id),
            Error::DomainError(msg) => write!(f, "domain error: {}", msg),
            Error::Parse(msg) => write!(f, "parse error: {}", msg),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
