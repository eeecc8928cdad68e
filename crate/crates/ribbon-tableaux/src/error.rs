//! The error type shared by every module of the crate.

use thiserror::Error;

/// Failures reported by the operations of this crate.
///
/// Negative answers to yes/no questions (for instance "is this pair a
/// horizontal strip?") are returned as `Option` or `bool`, never as errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A sequence of parts is not weakly decreasing.
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    /// An edge sequence was expected to have fills `(1, 0)`.
    #[error("edge sequence has fills ({left}, {right}), expected (1, 0)")]
    FillMismatch { left: u8, right: u8 },
    /// An edge sequence with fills `(1, 0)` is shifted away from the origin.
    #[error("edge sequence has charge {0}, expected 0")]
    ChargeMismatch(i64),
    /// A cumulative sum over an edge sequence with right fill 1.
    #[error("cumulative edge sum diverges because the right fill is 1")]
    Divergent,
    /// The edge bits at `(head - r, head)` do not allow the requested move.
    #[error("no {r}-ribbon can be {action} at head {head}")]
    NotApplicable {
        head: i64,
        r: usize,
        action: &'static str,
    },
    /// A partition that should be an `r`-core is not one.
    #[error("{0} is not an r-core")]
    NotACore(String),
    /// `kappa` does not cover `mu` by a single ribbon.
    #[error("shapes do not differ by a single {0}-ribbon")]
    NotCovering(usize),
    /// Inputs violate the stated precondition of an operation.
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    /// Two shapes that must share an `r`-core do not.
    #[error("shapes have different {0}-cores")]
    CoreMismatch(usize),
    /// Input to the asymmetric datum fails its admissibility checks.
    #[error("inadmissible input: {0}")]
    Inadmissible(String),
    /// The level condition of a basic square configuration failed.
    #[error("level condition violated at index {0}")]
    LevelViolation(i64),
    /// Malformed input such as a matrix that is not a coloured permutation.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// A power series was requested without a truncation bound.
    #[error("an x_bound is required because the series is infinite")]
    MissingBound,
    /// An internal consistency check failed; this indicates a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

/// Shorthand for results carrying [`Error`].
pub type Result<T> = std::result::Result<T, Error>;
