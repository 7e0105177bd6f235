//! Combinatorics of crystal and quasi-crystal graphs.
//!
//! The crate models words over the ordered alphabet `{1 < 2 < ...}`, Young and
//! quasi-ribbon tableaux with their insertion algorithms, Kashiwara and
//! quasi-Kashiwara operators, quasi-arrays with diagonal operators, the
//! labelled digraphs these operators generate, Schur / fundamental
//! quasi-symmetric expansions with exact integer arithmetic, and skeleton
//! graphs of crystal components. Everything is exact and deterministic, so
//! graph exports are byte-stable.

pub mod crystal;
pub mod error;
pub mod graph;
pub mod insertion;
pub mod qsym;
pub mod quasi_array;
pub mod skeleton;
pub mod tableau;
pub mod verify;
pub mod word;

pub use error::Error;
pub use graph::{GraphKind, IsoMode, IsoWitness, LabeledDigraph, Payload};
pub use quasi_array::QuasiArray;
pub use tableau::{MinimalParsing, QuasiRibbonTableau, StandardYoungTableau, YoungTableau};
pub use word::{Composition, Evaluation, Partition, Word};

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
