use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::IntegerMatrix;

/// `d = u·m·v` with `u`, `v` unimodular and `d` diagonal, each diagonal
/// entry dividing the next.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmithForm {
    pub d: IntegerMatrix,
    pub u: IntegerMatrix,
    pub v: IntegerMatrix,
    pub rank: usize,
    /// Nonzero diagonal entries, in order.
    #[serde(serialize_with = "as_strings")]
    pub invariant_factors: Vec<BigInt>,
}

fn as_strings<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

/// Elementary row and column operations, pivoting on the entry of least
/// absolute value.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let mut d = m.clone();
    let mut u = IntegerMatrix::identity(m.rows());
    let mut v = IntegerMatrix::identity(m.cols());
    let n = m.rows().min(m.cols());
    let mut t = 0;
    while t < n {
        let Some((pi, pj)) = min_entry(&d, t) else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        let mut clean = true;
        for i in t + 1..d.rows() {
            let q = d[(i, t)].div_floor(&d[(t, t)]);
            d.add_row(i, t, &-&q);
            u.add_row(i, t, &-&q);
            clean &= d[(i, t)].is_zero();
        }
        for j in t + 1..d.cols() {
            let q = d[(t, j)].div_floor(&d[(t, t)]);
            d.add_col(j, t, &-&q);
            v.add_col(j, t, &-&q);
            clean &= d[(t, j)].is_zero();
        }
        if !clean {
            // A smaller remainder now exists; pivot on it.
            continue;
        }
        // The pivot must divide the rest; otherwise fold an offending row in.
        let offending = (t + 1..d.rows()).find(|&i| (t + 1..d.cols()).any(|j| !d[(i, j)].is_multiple_of(&d[(t, t)])));
        if let Some(i) = offending {
            let one = BigInt::from(1);
            d.add_row(t, i, &one);
            u.add_row(t, i, &one);
            continue;
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    let invariant_factors: Vec<BigInt> = (0..n).map(|i| d[(i, i)].clone()).take_while(|x| !x.is_zero()).collect();
    SmithForm { rank: invariant_factors.len(), invariant_factors, d, u, v }
}

fn min_entry(d: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = d[(i, j)].abs();
            if !x.is_zero() && best.as_ref().is_none_or(|(_, b)| &x < b) {
                best = Some(((i, j), x));
            }
        }
    }
    best.map(|(at, _)| at)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntegerMatrix) -> SmithForm {
        let s = smith_normal_form(m);
        assert_eq!(&(&s.u * m) * &s.v, s.d);
        assert!(s.d.is_diagonal());
        assert_eq!(s.u.determinant().abs(), BigInt::from(1));
        assert_eq!(s.v.determinant().abs(), BigInt::from(1));
        for w in s.invariant_factors.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        assert_eq!(s.rank, m.rank());
        s
    }

    #[test]
    fn small_examples() {
        let s = check(&IntegerMatrix::from_rows(&[vec![1, 2], vec![3, 4]]));
        assert_eq!(s.invariant_factors, vec![BigInt::from(1), BigInt::from(2)]);
        let z = check(&IntegerMatrix::zeros(2, 3));
        assert_eq!(z.rank, 0);
        let id = check(&IntegerMatrix::identity(4));
        assert_eq!(id.d, IntegerMatrix::identity(4));
    }

    #[test]
    fn divisibility_needs_mixing() {
        // diag(2, 3) has invariant factors 1, 6.
        let s = check(&IntegerMatrix::from_rows(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(s.invariant_factors, vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn rectangular() {
        let s = check(&IntegerMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]));
        assert_eq!(s.invariant_factors, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        check(&IntegerMatrix::from_rows(&[vec![0, 0, 5], vec![0, 0, 0]]));
    }
}
