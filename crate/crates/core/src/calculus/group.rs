use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{CalculusError, Letter, RegionalChange, Word};

/// A finite group given by its full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
}

/// JSON form: element names and the table of products by name, where
/// `table[i][j]` is `elements[i] * elements[j]`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupSpec {
    pub elements: Vec<String>,
    pub table: Vec<Vec<String>>,
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses.
    pub fn from_table(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, CalculusError> {
        let n = names.len();
        let bad = |msg: String| Err(CalculusError::InvalidGroup(msg));
        if n == 0 {
            return bad("no elements".into());
        }
        if table.len() != n || table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return bad(format!("table must be {n}x{n} with entries below {n}"));
        }
        let Some(identity) = (0..n).find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x)) else {
            return bad("no identity element".into());
        };
        for x in 0..n {
            if !(0..n).any(|y| table[x][y] == identity && table[y][x] == identity) {
                return bad(format!("{} has no inverse", names[x]));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return bad(format!("({0}{1}){2} != {0}({1}{2})", names[a], names[b], names[c]));
                    }
                }
            }
        }
        Ok(FiniteGroup { names, table, identity })
    }

    pub fn from_spec(spec: &GroupSpec) -> Result<Self, CalculusError> {
        let index = |s: &String| {
            spec.elements
                .iter()
                .position(|e| e == s)
                .ok_or_else(|| CalculusError::InvalidGroup(format!("unknown element {s:?}")))
        };
        let table = spec
            .table
            .iter()
            .map(|row| row.iter().map(index).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_table(spec.elements.clone(), table)
    }

    pub fn to_spec(&self) -> GroupSpec {
        GroupSpec {
            elements: self.names.clone(),
            table: self.table.iter().map(|row| row.iter().map(|&x| self.names[x].clone()).collect()).collect(),
        }
    }

    /// Z/n written additively as 0..n.
    pub fn cyclic(n: usize) -> Self {
        let names = (0..n).map(|k| k.to_string()).collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_table(names, table).expect("cyclic group")
    }

    /// Permutations of `1..=n` in cycle notation, with `(pq)(x) = p(q(x))`.
    pub fn symmetric(n: usize) -> Self {
        let perms = permutations(n);
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed");
        let table = perms
            .iter()
            .map(|p| perms.iter().map(|q| index(&q.iter().map(|&x| p[x]).collect())).collect())
            .collect();
        let names = perms.iter().map(|p| cycle_notation(p)).collect();
        Self::from_table(names, table).expect("symmetric group")
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn element(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push((x + 1).to_string());
            x = p[x];
        }
        out.push_str(&format!("({})", cycle.join(" ")));
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

/// Ordered product of `r` factors, each chosen from a pair by one letter.
#[derive(Debug, Clone)]
pub struct GroupProductSystem {
    group: Arc<FiniteGroup>,
    factors: Vec<(usize, usize)>,
}

impl GroupProductSystem {
    pub fn new(group: Arc<FiniteGroup>, factors: Vec<(usize, usize)>) -> Result<Self, CalculusError> {
        let n = group.order();
        if let Some(&(a, b)) = factors.iter().find(|&&(a, b)| a >= n || b >= n) {
            return Err(CalculusError::InvalidGroup(format!("factor ({a}, {b}) outside a group of order {n}")));
        }
        Ok(GroupProductSystem { group, factors })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn factors(&self) -> &[(usize, usize)] {
        &self.factors
    }

    /// `g_1^{w_1} · g_2^{w_2} · … · g_r^{w_r}`.
    pub fn group_resolve(&self, w: &Word) -> Result<usize, CalculusError> {
        self.check_length(w)?;
        Ok(self.factors.iter().zip(w.letters()).fold(self.group.identity(), |acc, (&(ga, gb), l)| {
            self.group.mul(acc, if *l == Letter::A { ga } else { gb })
        }))
    }
}

impl RegionalChange for GroupProductSystem {
    type Label = usize;

    fn regions(&self) -> usize {
        self.factors.len()
    }

    fn resolve(&self, word: &Word) -> Result<usize, CalculusError> {
        self.group_resolve(word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn symmetric_three() {
        let g = FiniteGroup::symmetric(3);
        assert_eq!(g.order(), 6);
        assert_eq!(g.name(g.identity()), "()");
        for name in ["(1 2)", "(1 3)", "(2 3)", "(1 2 3)", "(1 3 2)"] {
            assert!(g.element(name).is_some(), "{name}");
        }
    }

    #[test]
    fn products() {
        let g = Arc::new(FiniteGroup::symmetric(3));
        let e = |s| g.element(s).unwrap();
        let empty = GroupProductSystem::new(g.clone(), vec![]).unwrap();
        assert_eq!(empty.group_resolve(&Word::empty()).unwrap(), g.identity());

        let one = GroupProductSystem::new(g.clone(), vec![(e("(1 2)"), e("(1 3)"))]).unwrap();
        assert_eq!(one.group_resolve(&w("b")).unwrap(), e("(1 3)"));
        assert_eq!(one.group_resolve(&w("ab")), Err(CalculusError::LengthMismatch { expected: 1, found: 2 }));

        // (1 2)(2 3): apply (2 3) first; 1->1->2, 2->3->3, 3->2->1.
        let two = GroupProductSystem::new(g.clone(), vec![(e("(1 2)"), e("()")), (e("(2 3)"), e("()"))]).unwrap();
        assert_eq!(two.group_resolve(&w("aa")).unwrap(), e("(1 2 3)"));
        assert_eq!(two.group_resolve(&w("bb")).unwrap(), g.identity());
    }

    #[test]
    fn spec_round_trip_and_rejection() {
        let g = FiniteGroup::cyclic(4);
        assert_eq!(FiniteGroup::from_spec(&g.to_spec()).unwrap(), g);
        let broken = GroupSpec {
            elements: vec!["e".into(), "x".into()],
            table: vec![vec!["e".into(), "x".into()], vec!["x".into(), "x".into()]],
        };
        assert!(matches!(FiniteGroup::from_spec(&broken), Err(CalculusError::InvalidGroup(_))));
    }
}
