use std::collections::HashMap;
use std::sync::Mutex;

use super::{all_words, CalculusError, FormalSum, Word};
use crate::diagram::{resolve, SingularDiagram};
use crate::invariants::{fingerprint, KnotClass};

/// Anything with `r` ordered two-way changes. `resolve` must be
/// deterministic.
pub trait RegionalChange {
    type Label: Clone + Ord;

    fn regions(&self) -> usize;

    fn resolve(&self, word: &Word) -> Result<Self::Label, CalculusError>;

    fn check_length(&self, word: &Word) -> Result<(), CalculusError> {
        if word.len() == self.regions() {
            Ok(())
        } else {
            Err(CalculusError::LengthMismatch { expected: self.regions(), found: word.len() })
        }
    }
}

/// `Σ_w (-1)^w · resolve(w)` with like terms collected.
pub fn alternating_sum<S: RegionalChange + ?Sized>(s: &S, cap: usize) -> Result<FormalSum<S::Label>, CalculusError> {
    let mut sum = FormalSum::zero();
    for w in all_words(s.regions(), cap)? {
        sum.add_term(w.sign(), s.resolve(&w)?);
    }
    Ok(sum)
}

/// `Σ_w (w, resolve(w))`, one term per word.
pub fn weighted_sum<S: RegionalChange + ?Sized>(
    s: &S,
    cap: usize,
) -> Result<FormalSum<(Word, S::Label)>, CalculusError> {
    let mut sum = FormalSum::zero();
    for w in all_words(s.regions(), cap)? {
        let label = s.resolve(&w)?;
        sum.add_term(1, (w, label));
    }
    Ok(sum)
}

/// Crossing changes at the double points of a singular knot diagram; each
/// resolution is classed by its invariant fingerprint.
#[derive(Debug)]
pub struct KnotSystem {
    diagram: SingularDiagram,
    memo: Mutex<HashMap<Word, KnotClass>>,
}

impl KnotSystem {
    pub fn new(diagram: SingularDiagram) -> Result<Self, CalculusError> {
        match diagram.components() {
            1 => Ok(KnotSystem { diagram, memo: Mutex::new(HashMap::new()) }),
            n => Err(CalculusError::MultiComponent(n)),
        }
    }

    pub fn diagram(&self) -> &SingularDiagram {
        &self.diagram
    }
}

impl RegionalChange for KnotSystem {
    type Label = KnotClass;

    fn regions(&self) -> usize {
        self.diagram.r()
    }

    fn resolve(&self, word: &Word) -> Result<KnotClass, CalculusError> {
        self.check_length(word)?;
        if let Some(k) = self.memo.lock().expect("memo lock").get(word) {
            return Ok(k.clone());
        }
        let k = fingerprint(&resolve(&self.diagram, word)?)?;
        self.memo.lock().expect("memo lock").insert(word.clone(), k.clone());
        Ok(k)
    }
}

/// A system given by an arbitrary resolver function.
pub struct ResolverSystem<L, F> {
    r: usize,
    resolver: F,
    _label: std::marker::PhantomData<fn() -> L>,
}

impl<L, F: Fn(&Word) -> L> ResolverSystem<L, F> {
    pub fn new(r: usize, resolver: F) -> Self {
        ResolverSystem { r, resolver, _label: std::marker::PhantomData }
    }
}

impl<L: Clone + Ord, F: Fn(&Word) -> L> RegionalChange for ResolverSystem<L, F> {
    type Label = L;

    fn regions(&self) -> usize {
        self.r
    }

    fn resolve(&self, word: &Word) -> Result<L, CalculusError> {
        self.check_length(word)?;
        Ok((self.resolver)(word))
    }
}
