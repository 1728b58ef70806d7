use thiserror::Error;

use crate::identities::IdentityId;

/// Errors raised by the degenerate function kernels and the verification engines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum DegenError {
    /// Arguments fall outside the real branch (`1 + λa > 0`, `λ ≠ 0`, finite inputs).
    #[error("domain error: {0}")]
    Domain(String),

    /// A quotient function hit an exactly-zero denominator.
    #[error("pole: {function} has a zero denominator at x = {x}")]
    Pole { function: &'static str, x: f64 },

    /// An identity was run without one of the integer parameters it needs.
    #[error("parameter error: {0}")]
    Param(String),

    /// Pole filtering removed every sample point.
    #[error("no admissible sample points left for {0} after pole filtering")]
    EmptyGrid(IdentityId),

    #[error("series order mismatch: {lhs} vs {rhs}")]
    OrderMismatch { lhs: usize, rhs: usize },

    /// Series division by a series with zero constant term.
    #[error("series is not invertible: constant term is zero")]
    NonInvertible,

    /// The identity involves π-dependent constants or shifts and has no exact series form.
    #[error("{0} cannot be verified in the exact series ring")]
    NotExactCapable(IdentityId),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, DegenError>;
