use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::{series_coefficient, InvariantError, KnotClass, MAX_SERIES_ORDER};
use crate::calculus::{alternating_sum, CalculusError, RegionalChange};

/// Finite-type invariants that can be read off a [`KnotClass`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FiniteTypeInvariant {
    /// `z^2` coefficient of Conway, order 2.
    V2,
    /// `h^n` coefficient of `V(e^h)`, order `n`.
    JonesSeries(usize),
}

impl FiniteTypeInvariant {
    pub fn order(self) -> usize {
        match self {
            FiniteTypeInvariant::V2 => 2,
            FiniteTypeInvariant::JonesSeries(n) => n,
        }
    }

    pub fn evaluate(self, k: &KnotClass) -> Result<BigRational, InvariantError> {
        match self {
            FiniteTypeInvariant::V2 => Ok(k.conway.coeff(2)),
            FiniteTypeInvariant::JonesSeries(n) => series_coefficient(&k.jones, n),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Pass,
    Fail,
    /// Too few regions for a vanishing claim; the value is only reported.
    Info,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VanishingReport {
    pub regions: usize,
    pub order: usize,
    #[serde(serialize_with = "as_string")]
    pub value: BigRational,
    pub verdict: Verdict,
}

fn as_string<S: serde::Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// `Σ_w sign(w)·inv(k^w)`. A vanishing claim is made only when the system
/// has at least `order + 1` regions.
pub fn vassiliev_vanishing_check<S>(
    inv: FiniteTypeInvariant,
    s: &S,
    cap: usize,
) -> Result<VanishingReport, CalculusError>
where
    S: RegionalChange<Label = KnotClass> + ?Sized,
{
    let order = inv.order();
    if order > MAX_SERIES_ORDER {
        return Err(InvariantError::SeriesOrder { n: order, max: MAX_SERIES_ORDER }.into());
    }
    let mut value = BigRational::zero();
    for (k, c) in alternating_sum(s, cap)?.iter() {
        value += inv.evaluate(k)? * BigRational::from(BigInt::from(c));
    }
    let verdict = match (s.regions() > order, value.is_zero()) {
        (false, _) => Verdict::Info,
        (true, true) => Verdict::Pass,
        (true, false) => Verdict::Fail,
    };
    Ok(VanishingReport { regions: s.regions(), order, value, verdict })
}
