use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{de, ser, Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variable {
    #[serde(rename = "A")]
    A,
    #[serde(rename = "q")]
    Q,
    #[serde(rename = "z")]
    Z,
    #[serde(rename = "h")]
    H,
}

impl Variable {
    fn symbol(self) -> &'static str {
        match self {
            Variable::A => "A",
            Variable::Q => "q",
            Variable::Z => "z",
            Variable::H => "h",
        }
    }
}

/// Finite sum of rational multiples of integer powers of one variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPolynomial {
    var: Variable,
    terms: BTreeMap<i64, BigRational>,
}

fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl LaurentPolynomial {
    pub fn zero(var: Variable) -> Self {
        LaurentPolynomial { var, terms: BTreeMap::new() }
    }

    pub fn one(var: Variable) -> Self {
        Self::monomial(var, 0, rational(1))
    }

    pub fn monomial(var: Variable, exp: i64, coeff: BigRational) -> Self {
        let mut p = Self::zero(var);
        p.add_term(exp, coeff);
        p
    }

    /// Integer coefficients given as `(exponent, coefficient)` pairs.
    pub fn from_terms(var: Variable, terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut p = Self::zero(var);
        for (e, c) in terms {
            p.add_term(e, rational(c));
        }
        p
    }

    pub fn var(&self) -> Variable {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        self.terms.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Nonzero terms by increasing exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let c = self.coeff(exp) + coeff;
        if c.is_zero() {
            self.terms.remove(&exp);
        } else {
            self.terms.insert(exp, c);
        }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        if k.is_zero() {
            return Self::zero(self.var);
        }
        LaurentPolynomial { var: self.var, terms: self.terms.iter().map(|(&e, c)| (e, c * k)).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(self.var), |acc, _| &acc * self)
    }

    /// Substitutes `var = new_var^factor`; `None` if some exponent does not
    /// divide evenly when `factor` is given as `1/divisor`.
    pub fn rescale_exponents(&self, new_var: Variable, numer: i64, denom: i64) -> Option<Self> {
        let mut out = Self::zero(new_var);
        for (&e, c) in &self.terms {
            let scaled = e * numer;
            if scaled % denom != 0 {
                return None;
            }
            out.add_term(scaled / denom, c.clone());
        }
        Some(out)
    }

    fn check_var(&self, other: &Self) -> Variable {
        if self.is_zero() {
            other.var
        } else if other.is_zero() || self.var == other.var {
            self.var
        } else {
            panic!("mixing polynomials in {} and {}", self.var.symbol(), other.var.symbol())
        }
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        out.var = self.check_var(rhs);
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Add for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self + &rhs
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial { var: self.var, terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-rhs)
    }
}

impl Sub for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self - &rhs
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero(self.check_var(rhs));
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self * &rhs
    }
}

/// Increasing exponents, e.g. `-q^-4 + q^-3 + q^-1` or `1 + z^2`.
impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let x = self.var.symbol();
        for (n, (&e, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            match (n, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = magnitude.is_one();
            if e == 0 || !unit {
                write!(f, "{magnitude}")?;
            }
            match e {
                0 => {}
                1 => f.write_str(x)?,
                _ => write!(f, "{x}^{e}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct Repr {
    var: Variable,
    terms: Vec<(i64, i64, i64)>,
}

/// `{"var":"q","terms":[[exp,num,den],...]}` by increasing exponent.
impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms = self
            .terms
            .iter()
            .map(|(&e, c)| match (c.numer().to_i64(), c.denom().to_i64()) {
                (Some(n), Some(d)) => Ok((e, n, d)),
                _ => Err(ser::Error::custom(format!("coefficient {c} does not fit in 64 bits"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Repr { var: self.var, terms }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = Repr::deserialize(deserializer)?;
        let mut p = LaurentPolynomial::zero(repr.var);
        for (e, n, d) in repr.terms {
            if d == 0 {
                return Err(de::Error::custom("zero denominator"));
            }
            p.add_term(e, BigRational::new(BigInt::from(n), BigInt::from(d)));
        }
        Ok(p)
    }
}
