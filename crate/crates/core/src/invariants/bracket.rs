use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{InvariantError, LaurentPolynomial, Variable};
use crate::diagram::Diagram;

/// Largest diagram the state sum accepts.
pub const MAX_BRACKET_CROSSINGS: usize = 14;

/// `-A^2 - A^-2`, the value of each extra loop.
pub fn loop_value() -> LaurentPolynomial {
    LaurentPolynomial::from_terms(Variable::A, [(2, -1), (-2, -1)])
}

/// Kauffman bracket normalized so a single circle is 1.
///
/// Smoothing `X[i,j,k,l]` along `(i,j)(k,l)` carries `A`, along `(i,l)(j,k)`
/// carries `A^-1`. Loops of each state are counted with union-find.
pub fn kauffman_bracket(d: &Diagram) -> Result<LaurentPolynomial, InvariantError> {
    let n = d.crossing_count();
    if n > MAX_BRACKET_CROSSINGS {
        return Err(InvariantError::TooManyCrossings { crossings: n, max: MAX_BRACKET_CROSSINGS });
    }
    let mut index: HashMap<u32, usize> = HashMap::new();
    let slots: Vec<[usize; 4]> = d
        .crossings()
        .iter()
        .map(|x| {
            x.strands.map(|l| {
                let next = index.len();
                *index.entry(l).or_insert(next)
            })
        })
        .collect();
    let edges = index.len();

    // (A-exponent, loop count) -> number of states
    let mut histogram: BTreeMap<(i64, usize), i64> = BTreeMap::new();
    let mut parent = vec![0usize; edges];
    for state in 0u64..1 << n {
        parent.iter_mut().enumerate().for_each(|(i, p)| *p = i);
        let mut exponent = 0i64;
        for (c, s) in slots.iter().enumerate() {
            let (x, y) = if state >> c & 1 == 0 {
                exponent += 1;
                ((s[0], s[1]), (s[2], s[3]))
            } else {
                exponent -= 1;
                ((s[0], s[3]), (s[1], s[2]))
            };
            union(&mut parent, x.0, x.1);
            union(&mut parent, y.0, y.1);
        }
        let loops = (0..edges).filter(|&i| find(&mut parent, i) == i).count() + d.free_loops();
        *histogram.entry((exponent, loops)).or_default() += 1;
    }

    let delta = loop_value();
    let max_loops = histogram.keys().map(|k| k.1).max().unwrap_or(1);
    let mut powers = vec![LaurentPolynomial::one(Variable::A)];
    for _ in 1..max_loops {
        let next = powers.last().expect("nonempty") * &delta;
        powers.push(next);
    }
    let mut out = LaurentPolynomial::zero(Variable::A);
    for ((exponent, loops), count) in histogram {
        let term = LaurentPolynomial::monomial(Variable::A, exponent, BigRational::from_integer(BigInt::from(count)));
        out = &out + &(&term * &powers[loops - 1]);
    }
    Ok(out)
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    parent[ra] = rb;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bracket(s: &str) -> LaurentPolynomial {
        kauffman_bracket(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn unknot_is_one() {
        assert_eq!(bracket(""), LaurentPolynomial::one(Variable::A));
    }

    #[test]
    fn positive_kink() {
        // A·δ + A^-1 = -A^3
        assert_eq!(bracket("X[1,1,2,2]"), LaurentPolynomial::from_terms(Variable::A, [(3, -1)]));
        assert_eq!(bracket("X[1,2,2,1]"), LaurentPolynomial::from_terms(Variable::A, [(-3, -1)]));
    }

    #[test]
    fn two_circles() {
        assert_eq!(bracket("O[],O[]"), loop_value());
    }
}
