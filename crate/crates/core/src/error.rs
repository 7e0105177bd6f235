//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors surfaced by constructors, operators and graph builders.
///
/// Partial operators (Kashiwara, quasi-Kashiwara, diagonal) signal an
/// undefined application with `None`, never with an error; errors are
/// reserved for violated preconditions and invariants.
#[derive(Debug, Error)]
pub enum Error {
    /// A word letter or tableau entry outside the alphabet `{1, 2, ...}`.
    #[error("invalid letter: letters must be positive integers")]
    InvalidLetter,

    /// A letter exceeds the requested rank bound.
    #[error("rank violation: letter {letter} exceeds rank {rank}")]
    RankViolation { letter: u32, rank: u32 },

    /// A filling does not satisfy the defining inequalities of its tableau family.
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    /// A shape's weight does not match the object it should describe.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// Malformed textual input (words, compositions, graph files).
    #[error("parse error: {0}")]
    Parse(String),

    /// A parameter is outside the supported range; the message names the bound.
    #[error("parameter error: {0}")]
    Parameter(String),

    /// A structural invariant of a built graph failed; signals a builder bug.
    #[error("structure error: {0}")]
    Structure(String),

    /// A mechanically checked statement failed on a concrete instance.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    /// I/O failure, tagged with the offending path.
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}
