//! Direct enumeration of the chain groups of group-product systems, with an
//! i128 Hermite/Smith reduction that shares no code with the library.

use std::collections::HashSet;

#[derive(Debug, Clone, Copy)]
pub enum OracleGroup {
    Cyclic(usize),
    S3,
}

const S3: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

impl OracleGroup {
    pub fn order(self) -> usize {
        match self {
            OracleGroup::Cyclic(n) => n,
            OracleGroup::S3 => 6,
        }
    }

    fn identity(self) -> usize {
        0
    }

    fn mul(self, a: usize, b: usize) -> usize {
        match self {
            OracleGroup::Cyclic(n) => (a + b) % n,
            OracleGroup::S3 => {
                let (p, q) = (S3[a], S3[b]);
                let composed = [p[q[0]], p[q[1]], p[q[2]]];
                S3.iter().position(|x| *x == composed).expect("closed")
            }
        }
    }
}

/// Every factor list of length `r`, each factor an (a, b) pair.
pub fn configurations(g: OracleGroup, r: usize) -> Vec<Vec<(usize, usize)>> {
    let n = g.order();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).collect();
    let mut out = vec![Vec::new()];
    for _ in 0..r {
        out = out.into_iter().flat_map(|c| pairs.iter().map(move |&p| [c.clone(), vec![p]].concat())).collect();
    }
    out
}

/// Weighted sum of one system as a dense vector indexed by
/// `mask * |G| + element`; bit `i` of `mask` set means letter `i` is `b`.
pub fn weighted_vector(g: OracleGroup, factors: &[(usize, usize)]) -> Vec<i128> {
    let r = factors.len();
    let n = g.order();
    let mut v = vec![0i128; (1 << r) * n];
    for mask in 0..1usize << r {
        let x = factors
            .iter()
            .enumerate()
            .fold(g.identity(), |acc, (i, &(a, b))| g.mul(acc, if mask >> i & 1 == 0 { a } else { b }));
        v[mask * n + x] += 1;
    }
    v
}

/// `d` on a dense degree-`r` vector.
pub fn boundary_vector(g: OracleGroup, r: usize, v: &[i128]) -> Vec<i128> {
    let n = g.order();
    let mut out = vec![0i128; (1 << (r - 1)) * n];
    for mask in 0..1usize << r {
        for x in 0..n {
            let c = v[mask * n + x];
            if c == 0 {
                continue;
            }
            for i in 0..r {
                let low = mask & ((1 << i) - 1);
                let high = mask >> (i + 1);
                let rest = low | high << i;
                let letter = if mask >> i & 1 == 0 { 1 } else { -1 };
                let alternating = if i % 2 == 0 { 1 } else { -1 };
                out[rest * n + x] += alternating * letter * c;
            }
        }
    }
    out
}

fn dedup(vs: Vec<Vec<i128>>) -> Vec<Vec<i128>> {
    let mut seen = HashSet::new();
    vs.into_iter().filter(|v| v.iter().any(|&x| x != 0) && seen.insert(v.clone())).collect()
}

/// Row Hermite basis of the span, by sweeping columns over the whole row set.
pub fn hermite_basis(rows: Vec<Vec<i128>>, dim: usize) -> Vec<Vec<i128>> {
    let mut rows = dedup(rows);
    let mut basis = Vec::new();
    for c in 0..dim {
        loop {
            let nonzero: Vec<usize> = (0..rows.len()).filter(|&i| rows[i][c] != 0).collect();
            if nonzero.len() <= 1 {
                break;
            }
            let p = *nonzero.iter().min_by_key(|&&i| rows[i][c].abs()).expect("nonempty");
            let pivot = rows[p].clone();
            for &i in &nonzero {
                if i != p {
                    let q = rows[i][c] / pivot[c];
                    for j in c..dim {
                        rows[i][j] -= q * pivot[j];
                    }
                }
            }
            rows = dedup(rows);
        }
        if let Some(i) = rows.iter().position(|r| r[c] != 0) {
            let mut r = rows.swap_remove(i);
            if r[c] < 0 {
                r.iter_mut().for_each(|x| *x = -*x);
            }
            basis.push(r);
        }
    }
    basis
}

/// Coordinates of `v` in an echelon basis (exact).
fn coordinates(basis: &[Vec<i128>], v: &[i128]) -> Vec<i128> {
    let mut v = v.to_vec();
    let mut out = Vec::new();
    for b in basis {
        let p = b.iter().position(|&x| x != 0).expect("nonzero row");
        assert_eq!(v[p] % b[p], 0, "not in the lattice");
        let c = v[p] / b[p];
        v.iter_mut().zip(b).for_each(|(x, y)| *x -= c * y);
        out.push(c);
    }
    assert!(v.iter().all(|&x| x == 0), "not in the lattice");
    out
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Elementary divisors of a full-row-rank echelon matrix by 2×2 unimodular
/// gcd steps on rows and columns.
fn elementary_divisors(mut m: Vec<Vec<i128>>) -> Vec<i128> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = (t..rows).flat_map(|i| (t..cols).map(move |j| (i, j))).find(|&(i, j)| m[i][j] != 0)
            else {
                return out;
            };
            m.swap(t, pi);
            m.iter_mut().for_each(|r| r.swap(t, pj));
            let mut changed = false;
            for i in t + 1..rows {
                if m[i][t] != 0 {
                    let (a, b) = (m[t][t], m[i][t]);
                    let (g, x, y) = step(a, b);
                    let (ra, rb) = (m[t].clone(), m[i].clone());
                    for j in 0..cols {
                        m[t][j] = x * ra[j] + y * rb[j];
                        m[i][j] = (a / g) * rb[j] - (b / g) * ra[j];
                    }
                    changed = true;
                }
            }
            for j in t + 1..cols {
                if m[t][j] != 0 {
                    let (a, b) = (m[t][t], m[t][j]);
                    let (g, x, y) = step(a, b);
                    for row in m.iter_mut() {
                        let (ca, cb) = (row[t], row[j]);
                        row[t] = x * ca + y * cb;
                        row[j] = (a / g) * cb - (b / g) * ca;
                    }
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        out.push(m[t][t].abs());
    }
    // Normalize to a divisibility chain via gcd/lcm swaps.
    for i in 0..out.len() {
        for j in i + 1..out.len() {
            let g = gcd(out[i], out[j]);
            let l = out[i] / g * out[j];
            out[i] = g;
            out[j] = l;
        }
    }
    out
}

/// Bezout step: `(g, x, y)` with `x·a + y·b = g`; plain elimination
/// (`x = 1`, `y = 0`) whenever `a` already divides `b`.
fn step(a: i128, b: i128) -> (i128, i128, i128) {
    if b % a == 0 {
        (a, 1, 0)
    } else {
        ext_gcd(a, b)
    }
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        return if a < 0 { (-a, -1, 0) } else { (a, 1, 0) };
    }
    let (g, x, y) = ext_gcd(b, a % b);
    (g, y, x - (a / b) * y)
}

/// (rank A, rank B, rank of (A + B)/B, torsion factors above 1).
pub fn brute_force_difference(
    g: OracleGroup,
    r: usize,
) -> (usize, usize, usize, Vec<i128>) {
    let dim = (1 << r) * g.order();
    let a: Vec<Vec<i128>> = configurations(g, r).iter().map(|f| weighted_vector(g, f)).collect();
    let b: Vec<Vec<i128>> =
        configurations(g, r + 1).iter().map(|f| boundary_vector(g, r + 1, &weighted_vector(g, f))).collect();
    let basis_a = hermite_basis(a.clone(), dim);
    let basis_b = hermite_basis(b.clone(), dim);
    let basis_l = hermite_basis([a, b].concat(), dim);
    let coords: Vec<Vec<i128>> = basis_b.iter().map(|v| coordinates(&basis_l, v)).collect();
    let torsion = elementary_divisors(coords).into_iter().filter(|&d| d > 1).collect();
    (basis_a.len(), basis_b.len(), basis_l.len() - basis_b.len(), torsion)
}
