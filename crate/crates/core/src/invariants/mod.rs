//! Exact polynomial invariants and the finite-order checks built on them.
//!
//! Conventions: the bracket is normalized so a single circle is 1, with
//! `A` on the `(i,j)(k,l)` smoothing of `X[i,j,k,l]`. The Jones polynomial is
//! `(-A^3)^(-w)·<D>` rewritten in `q = A^-4`, which gives the left trefoil
//! `-q^-4 + q^-3 + q^-1`.

mod bracket;
mod conway;
mod laurent;
mod vanishing;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::diagram::{catalog, reidemeister_simplify, Diagram, DiagramError};

pub use bracket::{kauffman_bracket, loop_value, MAX_BRACKET_CROSSINGS};
pub use conway::{conway, CONWAY_NODE_BUDGET};
pub use laurent::{LaurentPolynomial, Variable};
pub use vanishing::{vassiliev_vanishing_check, FiniteTypeInvariant, VanishingReport, Verdict};

/// Highest supported order for [`jones_series_coefficient`].
pub const MAX_SERIES_ORDER: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("diagram still has {0} unresolved double points")]
    SingularPresent(usize),
    #[error("{crossings} crossings exceed the state-sum limit of {max}")]
    TooManyCrossings { crossings: usize, max: usize },
    #[error("expected a knot, found {0} components")]
    MultiComponent(usize),
    #[error("skein recursion exceeded {0} nodes")]
    RecursionBudgetExceeded(usize),
    #[error("series order {n} exceeds the supported maximum {max}")]
    SeriesOrder { n: usize, max: usize },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

fn require_knot(d: &Diagram) -> Result<(), InvariantError> {
    match d.components() {
        1 => Ok(()),
        n => Err(InvariantError::MultiComponent(n)),
    }
}

/// Sum of crossing signs.
pub fn writhe(d: &Diagram) -> Result<i64, InvariantError> {
    let o = d.orientation()?;
    Ok((0..d.crossing_count()).map(|c| o.sign(c)).sum())
}

pub fn jones(d: &Diagram) -> Result<LaurentPolynomial, InvariantError> {
    require_knot(d)?;
    let w = writhe(d)?;
    let bracket = kauffman_bracket(d)?;
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let correction = LaurentPolynomial::from_terms(Variable::A, [(-3 * w, sign)]);
    let f = &correction * &bracket;
    Ok(f.rescale_exponents(Variable::Q, -1, 4).expect("knot bracket exponents are multiples of 4"))
}

/// The `z^2` coefficient of the Conway polynomial.
pub fn v2(d: &Diagram) -> Result<i64, InvariantError> {
    require_knot(d)?;
    let c = conway(d)?;
    Ok(c.coeff(2).to_integer().to_i64().expect("small coefficient"))
}

/// Coefficient of `h^n` in `p(e^h)`, i.e. `Σ c_k k^n / n!`.
pub fn series_coefficient(p: &LaurentPolynomial, n: usize) -> Result<BigRational, InvariantError> {
    if n > MAX_SERIES_ORDER {
        return Err(InvariantError::SeriesOrder { n, max: MAX_SERIES_ORDER });
    }
    let factorial: BigInt = (1..=n as u64).product::<u64>().into();
    let total = p.terms().fold(BigRational::zero(), |acc, (k, c)| acc + c * BigRational::from(BigInt::from(k).pow(n as u32)));
    Ok(total / BigRational::from(factorial))
}

pub fn jones_series_coefficient(d: &Diagram, n: usize) -> Result<BigRational, InvariantError> {
    if n > MAX_SERIES_ORDER {
        return Err(InvariantError::SeriesOrder { n, max: MAX_SERIES_ORDER });
    }
    series_coefficient(&jones(d)?, n)
}

/// Invariant fingerprint standing in for the knot type. Equality, ordering
/// and hashing look only at the two polynomials.
#[derive(Debug, Clone)]
pub struct KnotClass {
    pub jones: LaurentPolynomial,
    pub conway: LaurentPolynomial,
    /// Crossings left after simplification; informational only.
    pub min_crossings_seen: usize,
}

impl KnotClass {
    /// Catalog name when the polynomials match a catalog knot or its mirror.
    pub fn name(&self) -> Option<&'static str> {
        names().get(&(self.jones.clone(), self.conway.clone())).copied()
    }
}

impl PartialEq for KnotClass {
    fn eq(&self, other: &Self) -> bool {
        self.jones == other.jones && self.conway == other.conway
    }
}

impl Eq for KnotClass {}

impl Hash for KnotClass {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.jones.hash(state);
        self.conway.hash(state);
    }
}

impl PartialOrd for KnotClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for KnotClass {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.jones, &self.conway).cmp(&(&other.jones, &other.conway))
    }
}

impl Serialize for KnotClass {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            name: Option<&'static str>,
            jones: &'a LaurentPolynomial,
            conway: &'a LaurentPolynomial,
            min_crossings_seen: usize,
        }
        Repr { name: self.name(), jones: &self.jones, conway: &self.conway, min_crossings_seen: self.min_crossings_seen }
            .serialize(serializer)
    }
}

impl fmt::Display for KnotClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.name() {
            Some(name) => f.write_str(name),
            None => write!(f, "V={}", self.jones),
        }
    }
}

type Key = (LaurentPolynomial, LaurentPolynomial);

fn names() -> &'static HashMap<Key, &'static str> {
    static NAMES: OnceLock<HashMap<Key, &'static str>> = OnceLock::new();
    NAMES.get_or_init(|| {
        let mut map = HashMap::new();
        for entry in catalog() {
            let d = entry.diagram();
            if let (Ok(j), Ok(c)) = (jones(&d), conway(&d)) {
                map.entry((j, c)).or_insert(entry.name);
            }
        }
        for entry in catalog() {
            let Ok(m) = entry.diagram().mirror() else { continue };
            if let (Ok(j), Ok(c)) = (jones(&m), conway(&m)) {
                let name: &'static str = Box::leak(format!("{}*", entry.name).into_boxed_str());
                map.entry((j, c)).or_insert(name);
            }
        }
        map
    })
}

/// Simplifies, then records Jones and Conway polynomials.
pub fn fingerprint(d: &Diagram) -> Result<KnotClass, InvariantError> {
    require_knot(d)?;
    let s = reidemeister_simplify(d);
    Ok(KnotClass { jones: jones(&s)?, conway: conway(&s)?, min_crossings_seen: s.crossing_count() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn knot(s: &str) -> Diagram {
        s.parse().unwrap()
    }

    const LEFT_TREFOIL: &str = "X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]";

    #[test]
    fn writhe_values() {
        assert_eq!(writhe(&Diagram::unknot()).unwrap(), 0);
        assert_eq!(writhe(&knot("X[1,1,2,2]")).unwrap(), 1);
        assert_eq!(writhe(&knot(LEFT_TREFOIL)).unwrap(), -3);
    }

    #[test]
    fn left_trefoil_jones() {
        let j = jones(&knot(LEFT_TREFOIL)).unwrap();
        assert_eq!(j.to_string(), "-q^-4 + q^-3 + q^-1");
        let mirror = jones(&knot(LEFT_TREFOIL).mirror().unwrap()).unwrap();
        assert_eq!(mirror.to_string(), "q + q^3 - q^4");
    }

    #[test]
    fn kink_jones_is_one() {
        assert_eq!(jones(&knot("X[1,2,2,1]")).unwrap(), LaurentPolynomial::one(Variable::Q));
    }

    #[test]
    fn series_low_orders() {
        let d = knot(LEFT_TREFOIL);
        assert_eq!(jones_series_coefficient(&d, 0).unwrap(), BigRational::from_integer(1.into()));
        assert!(jones_series_coefficient(&d, 1).unwrap().is_zero());
        assert_eq!(jones_series_coefficient(&d, 2).unwrap(), BigRational::from_integer((-3).into()));
        assert!(matches!(jones_series_coefficient(&d, 5), Err(InvariantError::SeriesOrder { .. })));
    }

    #[test]
    fn fingerprint_names() {
        let k = fingerprint(&knot(LEFT_TREFOIL)).unwrap();
        assert_eq!(k.to_string(), "trefoil");
        assert_eq!(fingerprint(&knot(LEFT_TREFOIL).mirror().unwrap()).unwrap().to_string(), "trefoil*");
        assert_eq!(fingerprint(&knot("X[1,1,2,2]")).unwrap().to_string(), "unknot");
    }

    #[test]
    fn links_rejected() {
        assert!(matches!(jones(&knot("O[],O[]")), Err(InvariantError::MultiComponent(2))));
    }
}
