use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Integer span of inserted vectors, kept as an echelon basis: one row per
/// pivot column, with a positive pivot and zeros before it.
#[derive(Debug, Clone, Default)]
pub struct Lattice {
    dim: usize,
    rows: BTreeMap<usize, Vec<BigInt>>,
}

impl Lattice {
    pub fn new(dim: usize) -> Self {
        Lattice { dim, rows: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Basis rows by increasing pivot column.
    pub fn basis(&self) -> impl Iterator<Item = &[BigInt]> {
        self.rows.values().map(Vec::as_slice)
    }

    /// Adds `v` to the spanning set.
    pub fn insert(&mut self, mut v: Vec<BigInt>) {
        assert_eq!(v.len(), self.dim, "vector length");
        while let Some(p) = v.iter().position(|x| !x.is_zero()) {
            let Some(row) = self.rows.get_mut(&p) else {
                if v[p].is_negative() {
                    v.iter_mut().for_each(|x| *x = -std::mem::take(x));
                }
                self.rows.insert(p, v);
                return;
            };
            let e = row[p].extended_gcd(&v[p]);
            let (g, s, t) = (e.gcd, e.x, e.y);
            let (rb, rv) = (&row[p] / &g, &v[p] / &g);
            for j in p..self.dim {
                let combined = &s * &row[j] + &t * &v[j];
                let rest = &rb * &v[j] - &rv * &row[j];
                row[j] = combined;
                v[j] = rest;
            }
            if row[p].is_negative() {
                row.iter_mut().for_each(|x| *x = -std::mem::take(x));
            }
            self.reduce_below_pivots(p);
        }
    }

    /// Keeps entries small: reduces the row at pivot `p` modulo later pivots.
    fn reduce_below_pivots(&mut self, p: usize) {
        let later: Vec<usize> = self.rows.range(p + 1..).map(|(&q, _)| q).collect();
        for q in later {
            let pivot_row = self.rows[&q].clone();
            let row = self.rows.get_mut(&p).expect("row exists");
            let k = row[q].div_floor(&pivot_row[q]);
            if !k.is_zero() {
                for j in q..self.dim {
                    row[j] -= &k * &pivot_row[j];
                }
            }
        }
    }

    /// Coordinates of `v` in [`Lattice::basis`], or `None` if `v` is not in
    /// the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let mut v = v.to_vec();
        let mut coords = Vec::with_capacity(self.rows.len());
        for (&p, row) in &self.rows {
            if v[..p].iter().any(|x| !x.is_zero()) {
                return None;
            }
            let (c, r) = v[p].div_rem(&row[p]);
            if !r.is_zero() {
                return None;
            }
            for j in p..self.dim {
                v[j] -= &c * &row[j];
            }
            coords.push(c);
        }
        v.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn gcd_merging() {
        let mut l = Lattice::new(2);
        l.insert(vec(&[4, 0]));
        l.insert(vec(&[6, 0]));
        assert_eq!(l.rank(), 1);
        assert!(l.contains(&vec(&[2, 0])));
        assert!(!l.contains(&vec(&[1, 0])));
        l.insert(vec(&[3, 5]));
        assert_eq!(l.rank(), 2);
        assert!(l.contains(&vec(&[1, 5])));
        assert!(!l.contains(&vec(&[0, 1])));
        assert!(l.contains(&vec(&[0, 10])));
    }

    #[test]
    fn coordinates_recombine() {
        let mut l = Lattice::new(3);
        for v in [[2, 1, 0], [0, 3, 3], [4, -1, 2]] {
            l.insert(vec(&v));
        }
        let target = vec(&[6, 3, 5]);
        let coords = l.coordinates(&target).unwrap();
        let mut sum = vec(&[0, 0, 0]);
        for (c, row) in coords.iter().zip(l.basis()) {
            for j in 0..3 {
                sum[j] += c * &row[j];
            }
        }
        assert_eq!(sum, target);
    }
}
