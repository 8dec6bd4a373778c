//! Words in `a`/`b`, integer formal sums, and systems of regional changes.
//!
//! A system with `r` regions assigns a class to every word of length `r`.
//! Its alternating sum weights each class by `(-1)^(number of b)`, and its
//! weighted sum keeps each word alongside its class.

mod formal_sum;
mod group;
mod system;
mod word;

use thiserror::Error;

use crate::diagram::DiagramError;
use crate::invariants::InvariantError;

pub use formal_sum::FormalSum;
pub use group::{FiniteGroup, GroupProductSystem, GroupSpec};
pub use system::{alternating_sum, weighted_sum, KnotSystem, RegionalChange, ResolverSystem};
pub use word::{all_words, Letter, Word, DEFAULT_WORD_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CalculusError {
    #[error("'{0}' is not a letter; words use only 'a' and 'b'")]
    BadLetter(char),
    #[error("{r} regions exceed the word cap of {cap}")]
    CapExceeded { r: usize, cap: usize },
    #[error("word length {found} does not match {expected} regions")]
    LengthMismatch { expected: usize, found: usize },
    #[error("expected a knot, found {0} components")]
    MultiComponent(usize),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}
