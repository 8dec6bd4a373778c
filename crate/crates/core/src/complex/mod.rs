//! Word-weighted chains, the boundary map, and integer linear algebra for
//! difference groups.
//!
//! Ranks here are computed on sampled generating sets; the groups spanned
//! by all knots are not finitely presented for us, so every report is a
//! sampled subquotient.

mod lattice;
mod matrix;
mod rank;
mod snf;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::calculus::{FormalSum, Letter, Word};

pub use lattice::Lattice;
pub use matrix::IntegerMatrix;
pub use rank::{chain_matrix, difference_rank, vassiliev_quotient_rank, DifferenceReport, QuotientReport};
pub use snf::{smith_normal_form, SmithForm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("letter index {index} out of range for a word of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("the boundary of a degree-0 chain is undefined")]
    DegreeZero,
    #[error("expected degree {expected}, found {found}")]
    MixedDegree { expected: usize, found: usize },
    #[error("basis does not contain {0}")]
    BasisIncomplete(String),
}

/// An element of the chain group at degree `r`: a formal sum of
/// `(word, class)` pairs with every word of length `r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(bound(serialize = "L: Ord + Serialize", deserialize = "L: Ord + Clone + Deserialize<'de>"))]
pub struct ChainElement<L: Ord> {
    degree: usize,
    terms: FormalSum<(Word, L)>,
}

impl<L: Ord + Clone> ChainElement<L> {
    pub fn new(degree: usize, terms: FormalSum<(Word, L)>) -> Result<Self, ComplexError> {
        if let Some(((w, _), _)) = terms.iter().find(|((w, _), _)| w.len() != degree) {
            return Err(ComplexError::MixedDegree { expected: degree, found: w.len() });
        }
        Ok(ChainElement { degree, terms })
    }

    pub fn zero(degree: usize) -> Self {
        ChainElement { degree, terms: FormalSum::zero() }
    }

    /// A single term `coeff·(word, label)`.
    pub fn term(coeff: i64, word: Word, label: L) -> Self {
        ChainElement { degree: word.len(), terms: FormalSum::term(coeff, (word, label)) }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &FormalSum<(Word, L)> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn add(&self, other: &Self) -> Result<Self, ComplexError> {
        if self.degree != other.degree {
            return Err(ComplexError::MixedDegree { expected: self.degree, found: other.degree });
        }
        Ok(ChainElement { degree: self.degree, terms: self.terms.clone() + other.terms.clone() })
    }

    pub fn scale(&self, k: i64) -> Self {
        ChainElement { degree: self.degree, terms: self.terms.scale(k) }
    }

    /// Applies `f` to every class label, collecting like terms.
    pub fn map_labels<M: Ord + Clone>(&self, mut f: impl FnMut(&L) -> M) -> ChainElement<M> {
        ChainElement { degree: self.degree, terms: self.terms.map_basis(|(w, l)| (w.clone(), f(l))) }
    }
}

/// `∂_i`: removes the 1-based letter `i`, with sign `+1` for `a` and `-1`
/// for `b`.
pub fn boundary_letter(w: &Word, i: usize) -> Result<(Word, i64), ComplexError> {
    if i == 0 || i > w.len() {
        return Err(ComplexError::IndexOutOfRange { index: i, len: w.len() });
    }
    let (rest, letter) = w.without(i - 1);
    Ok((rest, if letter == Letter::A { 1 } else { -1 }))
}

/// `d = ∂_1 - ∂_2 + ∂_3 - ...`; class labels are constants.
pub fn boundary<L: Ord + Clone>(c: &ChainElement<L>) -> Result<ChainElement<L>, ComplexError> {
    if c.degree == 0 {
        return Err(ComplexError::DegreeZero);
    }
    let terms = c.terms.flat_map(|(w, label)| {
        (1..=w.len())
            .map(|i| {
                let (rest, sign) = boundary_letter(w, i).expect("index in range");
                let alternating = if i % 2 == 1 { 1 } else { -1 };
                FormalSum::term(alternating * sign, (rest, label.clone()))
            })
            .fold(FormalSum::zero(), |acc, t| acc + t)
    });
    Ok(ChainElement { degree: c.degree - 1, terms })
}
