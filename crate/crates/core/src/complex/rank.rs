use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{boundary, smith_normal_form, ChainElement, ComplexError, IntegerMatrix, Lattice};
use crate::calculus::{FormalSum, Word};

const SAMPLED: &str = "sampled subquotient";

/// Column `j` holds the coordinates of generator `j` in `basis`.
pub fn chain_matrix<L: Ord + Clone + Debug>(
    generators: &[ChainElement<L>],
    basis: &[(Word, L)],
) -> Result<IntegerMatrix, ComplexError> {
    if let Some(first) = generators.first() {
        if let Some(g) = generators.iter().find(|g| g.degree() != first.degree()) {
            return Err(ComplexError::MixedDegree { expected: first.degree(), found: g.degree() });
        }
    }
    let index: BTreeMap<&(Word, L), usize> = basis.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let mut m = IntegerMatrix::zeros(basis.len(), generators.len());
    for (j, g) in generators.iter().enumerate() {
        for (b, c) in g.terms().iter() {
            let &i = index.get(b).ok_or_else(|| ComplexError::BasisIncomplete(format!("{} {:?}", b.0, b.1)))?;
            m[(i, j)] = BigInt::from(c);
        }
    }
    Ok(m)
}

/// Ranks for `A = span(gens_r)` and `B = span(d gens_r1)` inside their
/// joint coordinate space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DifferenceReport {
    pub kind: &'static str,
    pub degree: usize,
    pub basis_size: usize,
    pub generators: usize,
    pub boundary_generators: usize,
    pub rank_span: usize,
    pub rank_boundaries: usize,
    /// Rank of the image of `A` in `(A + B) / B`.
    pub rank_quotient: usize,
    /// Invariant factors above 1 of `(A + B) / B`.
    pub torsion: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientReport {
    pub kind: &'static str,
    pub classes: usize,
    pub relations: usize,
    pub rank: usize,
    pub torsion: Vec<String>,
}

struct Subquotient {
    rank_a: usize,
    rank_b: usize,
    rank_quotient: usize,
    torsion: Vec<String>,
}

fn subquotient(dim: usize, a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Subquotient {
    let dedup = |vs: &[Vec<BigInt>]| -> Vec<Vec<BigInt>> {
        let mut seen = HashSet::new();
        vs.iter().filter(|v| v.iter().any(|x| !x.is_zero()) && seen.insert((*v).clone())).cloned().collect()
    };
    let (a, b) = (dedup(a), dedup(b));
    let mut span_a = Lattice::new(dim);
    let mut span_b = Lattice::new(dim);
    let mut joint = Lattice::new(dim);
    for v in &a {
        span_a.insert(v.clone());
        joint.insert(v.clone());
    }
    for v in &b {
        span_b.insert(v.clone());
        joint.insert(v.clone());
    }
    // B's basis written in the joint basis; its Smith form gives the quotient.
    let rows: Vec<Vec<BigInt>> =
        span_b.basis().map(|v| joint.coordinates(v).expect("B lies in A + B")).collect();
    let mut m = IntegerMatrix::zeros(rows.len(), joint.rank());
    for (i, r) in rows.iter().enumerate() {
        for (j, x) in r.iter().enumerate() {
            m[(i, j)] = x.clone();
        }
    }
    let snf = smith_normal_form(&m);
    let torsion = snf.invariant_factors.iter().filter(|x| !x.is_one()).map(ToString::to_string).collect();
    Subquotient {
        rank_a: span_a.rank(),
        rank_b: span_b.rank(),
        rank_quotient: joint.rank() - span_b.rank(),
        torsion,
    }
}

fn dense<B: Ord + Clone>(sum: &FormalSum<B>, index: &BTreeMap<&B, usize>, dim: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); dim];
    for (b, c) in sum.iter() {
        v[index[b]] = BigInt::from(c);
    }
    v
}

/// The sampled difference group at `degree`, measured as `(A + B) / B`
/// where `A` is spanned by `gens_r` and `B` by the boundaries of `gens_r1`.
pub fn difference_rank<L: Ord + Clone + Debug>(
    degree: usize,
    gens_r: &[ChainElement<L>],
    gens_r1: &[ChainElement<L>],
) -> Result<DifferenceReport, ComplexError> {
    for g in gens_r {
        if g.degree() != degree {
            return Err(ComplexError::MixedDegree { expected: degree, found: g.degree() });
        }
    }
    let mut boundaries = Vec::with_capacity(gens_r1.len());
    for g in gens_r1 {
        if g.degree() != degree + 1 {
            return Err(ComplexError::MixedDegree { expected: degree + 1, found: g.degree() });
        }
        boundaries.push(boundary(g)?);
    }
    let basis: BTreeSet<&(Word, L)> =
        gens_r.iter().chain(&boundaries).flat_map(|g| g.terms().iter().map(|(b, _)| b)).collect();
    let index: BTreeMap<&(Word, L), usize> = basis.into_iter().enumerate().map(|(i, b)| (b, i)).collect();
    let dim = index.len();
    let a: Vec<_> = gens_r.iter().map(|g| dense(g.terms(), &index, dim)).collect();
    let b: Vec<_> = boundaries.iter().map(|g| dense(g.terms(), &index, dim)).collect();
    let q = subquotient(dim, &a, &b);
    Ok(DifferenceReport {
        kind: SAMPLED,
        degree,
        basis_size: dim,
        generators: gens_r.len(),
        boundary_generators: gens_r1.len(),
        rank_span: q.rank_a,
        rank_boundaries: q.rank_b,
        rank_quotient: q.rank_quotient,
        torsion: q.torsion,
    })
}

/// Rank and torsion of `span(classes) / span(sums)`, measured as
/// `(A + B) / B`.
pub fn vassiliev_quotient_rank<L: Ord + Clone>(classes: &[L], sums: &[FormalSum<L>]) -> QuotientReport {
    let basis: BTreeSet<&L> = classes.iter().chain(sums.iter().flat_map(|s| s.iter().map(|(b, _)| b))).collect();
    let index: BTreeMap<&L, usize> = basis.into_iter().enumerate().map(|(i, b)| (b, i)).collect();
    let dim = index.len();
    let a: Vec<_> = classes
        .iter()
        .map(|c| {
            let mut v = vec![BigInt::zero(); dim];
            v[index[c]] = BigInt::one();
            v
        })
        .collect();
    let b: Vec<_> = sums.iter().map(|s| dense(s, &index, dim)).collect();
    let q = subquotient(dim, &a, &b);
    QuotientReport { kind: SAMPLED, classes: classes.len(), relations: sums.len(), rank: q.rank_quotient, torsion: q.torsion }
}
