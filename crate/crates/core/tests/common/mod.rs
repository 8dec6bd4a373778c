//! Shared corpus and brute-force oracles for the integration tests.
#![allow(dead_code)]

pub mod groups;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use regcalc::diagram::{catalog, make_singular, Diagram, SingularDiagram};

pub const LEFT_TREFOIL: &str = "X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]";
pub const FIGURE_EIGHT: &str = "X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]";
/// Trefoil with two double points; its alternating v2 sum is 1.
pub const TREFOIL_2S: &str = "D[4,2,5,1],D[6,4,1,3],X[5,2,6,3]";
pub const TREFOIL_2S_V2_SUM: i64 = 1;

pub fn knot(name: &str) -> Diagram {
    catalog().iter().find(|e| e.name == name).unwrap_or_else(|| panic!("no catalog knot {name}")).diagram()
}

/// Knots used for invariance suites.
pub fn corpus_knots() -> Vec<(&'static str, Diagram)> {
    catalog().iter().map(|e| (e.name, e.diagram())).collect()
}

pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Singular diagrams with `r` double points made from the trefoil,
/// figure-eight, 5_1 and 5_2 templates, one per choice of sites.
pub fn singular_corpus(r: usize) -> Vec<(String, SingularDiagram)> {
    let mut out = Vec::new();
    for name in ["trefoil", "figure-eight", "5_1", "5_2"] {
        let d = knot(name);
        for sites in combinations(d.crossing_count(), r) {
            let s = make_singular(&d, &sites).expect("valid sites");
            out.push((format!("{name}{sites:?}"), s));
        }
    }
    out
}

pub fn to_big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut det = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect()).collect();
        let term = &m[0][j] * cofactor_det(&minor);
        if j % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}

/// Rank by one-step fraction-free elimination on a copy.
pub fn fraction_free_rank(m: &[Vec<BigInt>]) -> usize {
    let mut a = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let (piv, f) = (a[r][c].clone(), a[i][c].clone());
            for j in c..cols {
                a[i][j] = &piv * &a[i][j] - &f * &a[r][j];
            }
        }
        r += 1;
    }
    r
}
