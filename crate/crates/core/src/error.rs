use thiserror::Error;

use crate::objects::PathKind;

/// Positions in error messages are 1-based: the offending character or step
/// is the `position`-th of the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position}: {reason}")]
    Parse { position: usize, reason: String },

    #[error("letter '{letter}' at position {position} is not a {kind} step")]
    BadLetter {
        position: usize,
        letter: char,
        kind: PathKind,
    },

    #[error("prefix height negative at position {position}")]
    NegativeHeight { position: usize },

    #[error("path ends at height {height}, expected 0")]
    NonZeroEnd { height: i64 },

    #[error("forbidden factor {factor} at position {position}")]
    ForbiddenFactor { factor: &'static str, position: usize },

    #[error("contracted path must not end with R")]
    TrailingRed,

    #[error("expected a {expected} path, got {actual}")]
    WrongKind { expected: PathKind, actual: PathKind },

    #[error("empty tree has no path image")]
    EmptyTree,

    #[error("empty path has no preimage")]
    EmptyPath,

    #[error("permutation contains the pattern {0}")]
    ContainsPattern(&'static str),

    #[error("not a permutation of 1..{n}: {reason}")]
    NotAPermutation { n: usize, reason: String },

    #[error("{0}")]
    OutOfRange(String),

    #[error("enumeration cap exceeded: {what} = {value} > {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("merge failed: {0}")]
    Structural(String),
}

pub type Result<T> = std::result::Result<T, Error>;
