//! Error type shared by the whole crate.

use thiserror::Error;

/// Errors raised by construction and validation.
///
/// Resource-cap violations are kept separate from validation failures so
/// that callers (in particular the CLI) can map them to distinct exit
/// codes.
#[derive(Debug, Error)]
pub enum Error {
    /// An image array that is not a bijection on `{0, …, degree-1}`.
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    /// A generator whose degree does not match the group being built.
    #[error("generator {index} has degree {found}, expected {expected}")]
    DegreeMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },

    /// An unknown named-group identifier.
    #[error("unknown group name: {0}")]
    UnknownGroupName(String),

    /// A named-group parameter outside the supported range.
    #[error("unsupported parameter for {name}: n = {n} ({reason})")]
    UnsupportedParameter {
        name: String,
        n: usize,
        reason: String,
    },

    /// An element or object index outside the valid range.
    #[error("index {index} out of range (size {size})")]
    IndexOutOfRange { index: usize, size: usize },

    /// A construction would exceed a configured resource cap.
    #[error("{what} would need {needed} entries, cap is {cap}")]
    CapExceeded {
        what: String,
        needed: usize,
        cap: usize,
    },

    /// A group action table violating the action axioms.
    #[error("invalid group action: {0}")]
    InvalidAction(String),

    /// Groupoid data violating the groupoid laws.
    #[error("invalid groupoid: {0}")]
    InvalidGroupoid(String),

    /// Functor data that does not preserve structure.
    #[error("invalid functor: {0}")]
    InvalidFunctor(String),

    /// A malformed or semantically invalid JSON spec.
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
}

impl Error {
    /// True for resource-cap violations (as opposed to invalid input).
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
