use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Finite integer combination of basis elements. Zero coefficients are never
/// stored, so structural equality is equality of sums.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FormalSum<B: Ord> {
    terms: BTreeMap<B, i64>,
}

impl<B: Ord> Default for FormalSum<B> {
    fn default() -> Self {
        FormalSum { terms: BTreeMap::new() }
    }
}

impl<B: Ord + Clone> FormalSum<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: B) -> Self {
        Self::term(1, b)
    }

    pub fn term(coeff: i64, b: B) -> Self {
        let mut s = Self::zero();
        s.add_term(coeff, b);
        s
    }

    pub fn add_term(&mut self, coeff: i64, b: B) {
        let c = self.coeff(&b) + coeff;
        if c == 0 {
            self.terms.remove(&b);
        } else {
            self.terms.insert(b, c);
        }
    }

    pub fn coeff(&self, b: &B) -> i64 {
        self.terms.get(b).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in basis order.
    pub fn iter(&self) -> impl Iterator<Item = (&B, i64)> {
        self.terms.iter().map(|(b, &c)| (b, c))
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        FormalSum { terms: self.terms.iter().map(|(b, &c)| (b.clone(), c * k)).collect() }
    }

    /// Extends a map on basis elements linearly; images may collide.
    pub fn map_basis<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> C) -> FormalSum<C> {
        self.iter().map(|(b, c)| (f(b), c)).collect()
    }

    /// Extends a map from basis elements to sums linearly.
    pub fn flat_map<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> FormalSum<C>) -> FormalSum<C> {
        let mut out = FormalSum::zero();
        for (b, c) in self.iter() {
            out += f(b).scale(c);
        }
        out
    }
}

impl<B: Ord + Clone> FromIterator<(B, i64)> for FormalSum<B> {
    fn from_iter<I: IntoIterator<Item = (B, i64)>>(iter: I) -> Self {
        let mut terms: BTreeMap<B, i64> = BTreeMap::new();
        for (b, c) in iter {
            *terms.entry(b).or_insert(0) += c;
        }
        terms.retain(|_, c| *c != 0);
        FormalSum { terms }
    }
}

impl<B: Ord + Clone> AddAssign for FormalSum<B> {
    fn add_assign(&mut self, rhs: Self) {
        for (b, c) in rhs.terms {
            *self.terms.entry(b).or_insert(0) += c;
        }
        self.terms.retain(|_, c| *c != 0);
    }
}

impl<B: Ord + Clone> Add for FormalSum<B> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl<B: Ord + Clone> Neg for FormalSum<B> {
    type Output = Self;

    fn neg(self) -> Self {
        self.scale(-1)
    }
}

impl<B: Ord + Clone> Sub for FormalSum<B> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<B: Ord + Clone> Mul<i64> for FormalSum<B> {
    type Output = Self;

    fn mul(self, k: i64) -> Self {
        self.scale(k)
    }
}

/// `c1*[b1] + c2*[b2] + ...` in basis order; `0` for the empty sum.
impl<B: Ord + fmt::Display> fmt::Display for FormalSum<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (b, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*[{b}]")?;
        }
        Ok(())
    }
}

/// `{"terms":[{"coeff":c,"basis":b}, ...]}`.
impl<B: Ord + Serialize> Serialize for FormalSum<B> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Terms<'a, B: Ord>(&'a BTreeMap<B, i64>);
        impl<B: Ord + Serialize> Serialize for Terms<'_, B> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                #[derive(Serialize)]
                struct Term<'a, B> {
                    coeff: i64,
                    basis: &'a B,
                }
                let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
                for (basis, &coeff) in self.0 {
                    seq.serialize_element(&Term { coeff, basis })?;
                }
                seq.end()
            }
        }
        let mut map = serializer.serialize_map(Some(1))?;
        map.serialize_entry("terms", &Terms(&self.terms))?;
        map.end()
    }
}

impl<'de, B: Ord + Clone + Deserialize<'de>> Deserialize<'de> for FormalSum<B> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Term<B> {
            coeff: i64,
            basis: B,
        }
        #[derive(Deserialize)]
        struct Repr<B> {
            terms: Vec<Term<B>>,
        }
        let repr = Repr::<B>::deserialize(deserializer)?;
        let mut sum = FormalSum::zero();
        for t in repr.terms {
            sum.add_term(t.coeff, t.basis);
        }
        Ok(sum)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cancellation_drops_terms() {
        let mut s = FormalSum::term(2, "x");
        s.add_term(-2, "x");
        assert!(s.is_zero());
        assert_eq!(s.to_string(), "0");
        let t = FormalSum::basis("k") - FormalSum::basis("u");
        assert_eq!(t.to_string(), "1*[k] + -1*[u]");
    }

    #[test]
    fn json_shape() {
        let t = FormalSum::term(3, "k".to_string()) + FormalSum::term(-1, "u".to_string());
        assert_eq!(
            serde_json::to_string(&t).unwrap(),
            r#"{"terms":[{"coeff":3,"basis":"k"},{"coeff":-1,"basis":"u"}]}"#
        );
    }

    fn arb_sum() -> impl Strategy<Value = FormalSum<u8>> {
        prop::collection::vec((0u8..6, -5i64..=5), 0..8).prop_map(|v| v.into_iter().collect())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn abelian_group_laws(x in arb_sum(), y in arb_sum(), z in arb_sum(), k in -4i64..=4) {
            prop_assert_eq!(x.clone() + y.clone(), y.clone() + x.clone());
            prop_assert_eq!((x.clone() + y.clone()) + z.clone(), x.clone() + (y.clone() + z.clone()));
            prop_assert_eq!(x.clone() + FormalSum::zero(), x.clone());
            prop_assert!((x.clone() + (-x.clone())).is_zero());
            prop_assert_eq!((x.clone() + y.clone()) * k, x.clone() * k + y.clone() * k);
            prop_assert!(x.iter().all(|(_, c)| c != 0));
        }
    }
}
