//! Planar diagram codes for knots with classical crossings and ordered
//! double points.
//!
//! A crossing is written `X[i,j,k,l]`: the four incident edge labels in
//! counterclockwise order, starting from the incoming under-strand. A double
//! point is written `D[i,j,k,l]`; its first strand (slots 0 and 2) is the
//! designated strand that letter `a` puts on top. Double points are numbered
//! `1..=r` in order of appearance. `O[]` denotes an extra crossing-free
//! circle; the empty code is the 0-crossing unknot.

mod catalog;
mod moves;
mod orient;
mod simplify;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::calculus::{Letter, Word};

pub use catalog::{catalog, make_singular, CatalogEntry};
pub use moves::{Move, MoveKind, MoveSet, Perturber};
pub use orient::Orientation;
pub use simplify::reidemeister_simplify;

/// Edge label in a diagram code.
pub type Label = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("malformed entry at byte {offset}: {message}")]
    MalformedEntry { offset: usize, message: String },
    #[error("edge label {label} used {count} times (expected 2)")]
    EdgeCount { label: Label, count: usize },
    #[error("connectivity error: {0}")]
    Connectivity(String),
    #[error("double-point ordering error: {0}")]
    Ordering(String),
    #[error("word length {found} does not match {expected} double points")]
    LengthMismatch { expected: usize, found: usize },
    #[error("diagram still has {0} unresolved double points")]
    SingularPresent(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CrossingKind {
    Classical,
    /// Double point with its 1-based ordinal.
    Singular(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub kind: CrossingKind,
    pub strands: [Label; 4],
}

impl Crossing {
    pub fn classical(strands: [Label; 4]) -> Self {
        Crossing { kind: CrossingKind::Classical, strands }
    }

    pub fn singular(index: usize, strands: [Label; 4]) -> Self {
        Crossing { kind: CrossingKind::Singular(index), strands }
    }

    pub fn is_singular(&self) -> bool {
        matches!(self.kind, CrossingKind::Singular(_))
    }

    pub(crate) fn at(&self, slot: usize) -> Label {
        self.strands[slot % 4]
    }
}

/// A diagram code with `r` ordered double points.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SingularDiagram {
    crossings: Vec<Crossing>,
    free_loops: usize,
}

/// All violations found by [`validate`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub issues: Vec<DiagramError>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.issues.is_empty()
    }
}

impl SingularDiagram {
    /// Builds and validates a diagram. `free_loops` counts crossing-free
    /// circles in addition to the crossings.
    pub fn new(crossings: Vec<Crossing>, free_loops: usize) -> Result<Self, DiagramError> {
        let d = SingularDiagram { crossings, free_loops };
        match validate(&d).issues.into_iter().next() {
            Some(err) => Err(err),
            None => Ok(d),
        }
    }

    pub(crate) fn from_parts(crossings: Vec<Crossing>, free_loops: usize) -> Self {
        SingularDiagram { crossings, free_loops }
    }

    /// The 0-crossing unknot.
    pub fn unknot() -> Self {
        SingularDiagram { crossings: Vec::new(), free_loops: 1 }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Number of double points.
    pub fn r(&self) -> usize {
        self.crossings.iter().filter(|c| c.is_singular()).count()
    }

    pub fn components(&self) -> usize {
        orient::components(&self.crossings).len() + self.free_loops
    }

    pub fn orientation(&self) -> Result<Orientation, DiagramError> {
        Orientation::of(&self.crossings)
    }

    /// Renames every edge label through `f`, which must be injective.
    pub fn relabel(&self, f: impl Fn(Label) -> Label) -> Self {
        let crossings = self
            .crossings
            .iter()
            .map(|c| Crossing { kind: c.kind, strands: c.strands.map(&f) })
            .collect();
        SingularDiagram { crossings, free_loops: self.free_loops }
    }

    /// Relabels edges `1..=2n` in order of first appearance.
    pub fn compact_labels(&self) -> Self {
        let mut map = BTreeMap::new();
        for c in &self.crossings {
            for &l in &c.strands {
                let next = map.len() as Label + 1;
                map.entry(l).or_insert(next);
            }
        }
        self.relabel(|l| map[&l])
    }

    /// Renumbers the double points: the one currently numbered `i` becomes
    /// number `perm[i - 1]`. Entries are reordered so numbering stays equal
    /// to order of appearance.
    pub fn permute_double_points(&self, perm: &[usize]) -> Result<Self, DiagramError> {
        let r = self.r();
        let mut seen = vec![false; r];
        if perm.len() != r || perm.iter().any(|&p| p == 0 || p > r || std::mem::replace(&mut seen[p - 1], true)) {
            return Err(DiagramError::Ordering(format!("{perm:?} is not a permutation of 1..={r}")));
        }
        let slots: Vec<usize> = (0..self.crossings.len()).filter(|&i| self.crossings[i].is_singular()).collect();
        let mut reordered = vec![None; r];
        for &i in &slots {
            if let CrossingKind::Singular(k) = self.crossings[i].kind {
                reordered[perm[k - 1] - 1] = Some(self.crossings[i].strands);
            }
        }
        let mut crossings = self.crossings.clone();
        for (n, &i) in slots.iter().enumerate() {
            crossings[i] = Crossing::singular(n + 1, reordered[n].expect("permutation covers all"));
        }
        Ok(SingularDiagram { crossings, free_loops: self.free_loops })
    }

    /// Exchanges the roles of `a` and `b` at double point `index` by making
    /// the other strand the designated one.
    pub fn swap_labels_at(&self, index: usize) -> Result<Self, DiagramError> {
        let mut crossings = self.crossings.clone();
        let c = crossings
            .iter_mut()
            .find(|c| c.kind == CrossingKind::Singular(index))
            .ok_or_else(|| DiagramError::Ordering(format!("no double point numbered {index}")))?;
        let [i, j, k, l] = c.strands;
        c.strands = [j, k, l, i];
        Ok(SingularDiagram { crossings, free_loops: self.free_loops })
    }
}

impl fmt::Display for SingularDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .crossings
            .iter()
            .map(|c| {
                let tag = if c.is_singular() { 'D' } else { 'X' };
                let [i, j, k, l] = c.strands;
                format!("{tag}[{i},{j},{k},{l}]")
            })
            .collect();
        let extra = if self.crossings.is_empty() { self.free_loops.saturating_sub(1) } else { self.free_loops };
        parts.extend(std::iter::repeat_n("O[]".to_string(), extra));
        f.write_str(&parts.join(","))
    }
}

impl FromStr for SingularDiagram {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_pd(s)
    }
}

/// A diagram without double points.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Diagram(SingularDiagram);

impl Diagram {
    pub fn unknot() -> Self {
        Diagram(SingularDiagram::unknot())
    }

    pub fn as_singular(&self) -> &SingularDiagram {
        &self.0
    }

    pub fn into_singular(self) -> SingularDiagram {
        self.0
    }

    pub fn crossings(&self) -> &[Crossing] {
        self.0.crossings()
    }

    pub fn crossing_count(&self) -> usize {
        self.0.crossing_count()
    }

    pub fn free_loops(&self) -> usize {
        self.0.free_loops
    }

    pub fn components(&self) -> usize {
        self.0.components()
    }

    pub fn orientation(&self) -> Result<Orientation, DiagramError> {
        self.0.orientation()
    }

    pub fn compact_labels(&self) -> Self {
        Diagram(self.0.compact_labels())
    }

    /// Every crossing switched.
    pub fn mirror(&self) -> Result<Self, DiagramError> {
        let o = self.orientation()?;
        let crossings = (0..self.crossings().len()).map(|c| o.switched(&self.0.crossings[c], c)).collect();
        Ok(Diagram(SingularDiagram::from_parts(crossings, self.0.free_loops)))
    }

    pub(crate) fn from_parts_unchecked(crossings: Vec<Crossing>, free_loops: usize) -> Self {
        Diagram(SingularDiagram::from_parts(crossings, free_loops))
    }
}

impl TryFrom<SingularDiagram> for Diagram {
    type Error = DiagramError;

    fn try_from(d: SingularDiagram) -> Result<Self, Self::Error> {
        match d.r() {
            0 => Ok(Diagram(d)),
            r => Err(DiagramError::SingularPresent(r)),
        }
    }
}

impl FromStr for Diagram {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_pd(s)?.try_into()
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

struct Scanner<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Scanner<'_> {
    fn skip_separators(&mut self) {
        while let Some(&b) = self.src.get(self.pos) {
            match b {
                b'#' => {
                    while self.src.get(self.pos).is_some_and(|&b| b != b'\n') {
                        self.pos += 1;
                    }
                }
                b',' => self.pos += 1,
                b if b.is_ascii_whitespace() => self.pos += 1,
                _ => break,
            }
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn error(&self, message: impl Into<String>) -> DiagramError {
        DiagramError::MalformedEntry { offset: self.pos, message: message.into() }
    }

    fn expect(&mut self, byte: u8) -> Result<(), DiagramError> {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", byte as char)))
        }
    }

    fn label(&mut self) -> Result<Label, DiagramError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        match digits.parse::<Label>() {
            Ok(0) => Err(DiagramError::MalformedEntry { offset: start, message: "edge labels must be positive".into() }),
            Ok(v) => Ok(v),
            Err(_) => Err(DiagramError::MalformedEntry { offset: start, message: "expected an edge label".into() }),
        }
    }
}

/// Parses a diagram code. Double points are numbered by appearance.
pub fn parse_pd(text: &str) -> Result<SingularDiagram, DiagramError> {
    let mut sc = Scanner { src: text.as_bytes(), pos: 0 };
    let mut crossings = Vec::new();
    let mut free_loops = 0;
    let mut singular = 0;
    loop {
        sc.skip_separators();
        let Some(&tag) = sc.src.get(sc.pos) else { break };
        sc.pos += 1;
        match tag {
            b'X' | b'D' => {
                sc.expect(b'[')?;
                let mut strands = [0; 4];
                for (n, slot) in strands.iter_mut().enumerate() {
                    if n > 0 {
                        sc.expect(b',')?;
                    }
                    *slot = sc.label()?;
                }
                sc.expect(b']')?;
                crossings.push(if tag == b'D' {
                    singular += 1;
                    Crossing::singular(singular, strands)
                } else {
                    Crossing::classical(strands)
                });
            }
            b'O' => {
                sc.expect(b'[')?;
                sc.expect(b']')?;
                free_loops += 1;
            }
            _ => {
                sc.pos -= 1;
                return Err(sc.error(format!("unexpected character '{}'", tag as char)));
            }
        }
    }
    if crossings.is_empty() && free_loops == 0 {
        free_loops = 1;
    }
    SingularDiagram::new(crossings, free_loops)
}

/// Canonical text form; parses back to an equal diagram.
pub fn serialize_pd(d: &SingularDiagram) -> String {
    d.to_string()
}

/// Checks every structural invariant and reports all violations.
pub fn validate(d: &SingularDiagram) -> ValidationReport {
    let mut issues = Vec::new();
    let mut counts: BTreeMap<Label, usize> = BTreeMap::new();
    for c in &d.crossings {
        for &l in &c.strands {
            *counts.entry(l).or_default() += 1;
        }
    }
    for (&label, &count) in &counts {
        if count != 2 {
            issues.push(DiagramError::EdgeCount { label, count });
        }
    }

    let mut indices: Vec<usize> = d
        .crossings
        .iter()
        .filter_map(|c| match c.kind {
            CrossingKind::Singular(i) => Some(i),
            CrossingKind::Classical => None,
        })
        .collect();
    let in_order = indices.iter().enumerate().all(|(n, &i)| i == n + 1);
    indices.sort_unstable();
    if indices.windows(2).any(|w| w[0] == w[1]) {
        issues.push(DiagramError::Ordering(format!("repeated double-point index in {indices:?}")));
    } else if indices.iter().enumerate().any(|(n, &i)| i != n + 1) {
        issues.push(DiagramError::Ordering(format!("double-point indices {indices:?} are not 1..={}", indices.len())));
    } else if !in_order {
        issues.push(DiagramError::Ordering("double points are not numbered in order of appearance".into()));
    }

    if issues.iter().all(|e| !matches!(e, DiagramError::EdgeCount { .. })) {
        if let Err(e) = orient::check_planar(&d.crossings) {
            issues.push(e);
        }
        if let Err(e) = Orientation::of(&d.crossings) {
            issues.push(e);
        }
    }
    ValidationReport { issues }
}

/// Deletes one crossing and identifies the given label pairs.
pub(crate) fn splice_out(
    crossings: &[Crossing],
    free_loops: usize,
    crossing: usize,
    joins: &[(Label, Label)],
) -> (Vec<Crossing>, usize) {
    moves::splice(crossings, free_loops, &[crossing], joins)
}

/// Replaces double point `i` by the classical crossing selected by `w_i`:
/// `a` puts the designated strand over, `b` puts it under.
pub fn resolve(d: &SingularDiagram, w: &Word) -> Result<Diagram, DiagramError> {
    let r = d.r();
    if w.len() != r {
        return Err(DiagramError::LengthMismatch { expected: r, found: w.len() });
    }
    if r == 0 {
        return Ok(Diagram(d.clone()));
    }
    let o = d.orientation()?;
    let crossings = d
        .crossings
        .iter()
        .enumerate()
        .map(|(c, x)| match x.kind {
            CrossingKind::Classical => x.clone(),
            CrossingKind::Singular(i) => {
                // The under-strand of the result starts at whichever of its
                // two slots is incoming.
                let under = match w.letters()[i - 1] {
                    Letter::A => 1,
                    Letter::B => 0,
                };
                let start = if o.is_incoming(c, under) { under } else { under + 2 };
                Crossing::classical(std::array::from_fn(|n| x.at(start + n)))
            }
        })
        .collect();
    Ok(Diagram(SingularDiagram::from_parts(crossings, d.free_loops)))
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]";

    #[test]
    fn empty_input_is_unknot() {
        let d = parse_pd("").unwrap();
        assert_eq!(d, SingularDiagram::unknot());
        assert_eq!(d.components(), 1);
        assert_eq!(serialize_pd(&d), "");
        assert_eq!(parse_pd("  # nothing here\n").unwrap(), d);
    }

    #[test]
    fn one_crossing_kink() {
        let d = parse_pd("X[1,1,2,2]").unwrap();
        assert_eq!(d.r(), 0);
        assert_eq!(d.components(), 1);
        assert_eq!(d.crossing_count(), 1);
    }

    #[test]
    fn single_double_point() {
        let d = parse_pd("D[1,1,2,2]").unwrap();
        assert_eq!(d.r(), 1);
        assert_eq!(d.crossings()[0].kind, CrossingKind::Singular(1));
    }

    #[test]
    fn labels_used_once_are_rejected() {
        // Four distinct labels on one crossing cannot close up.
        assert!(matches!(parse_pd("X[1,4,2,3]"), Err(DiagramError::EdgeCount { .. })));
    }

    #[test]
    fn trefoil_round_trip() {
        let d = parse_pd(TREFOIL).unwrap();
        assert_eq!(serialize_pd(&d), TREFOIL);
        let spaced = parse_pd("X[1, 4, 2, 5]\n  X[3,6,4,1] # second\n X[5,2,6,3]").unwrap();
        assert_eq!(spaced, d);
    }

    #[test]
    fn validate_reports() {
        assert!(validate(&parse_pd(TREFOIL).unwrap()).is_ok());
        let bad = SingularDiagram::from_parts(vec![Crossing::classical([1, 1, 1, 1])], 0);
        let report = validate(&bad);
        assert_eq!(report.issues, vec![DiagramError::EdgeCount { label: 1, count: 4 }]);
        let dup = SingularDiagram::from_parts(
            vec![Crossing::singular(1, [1, 4, 2, 5]), Crossing::singular(1, [3, 6, 4, 1]), Crossing::classical([5, 2, 6, 3])],
            0,
        );
        assert!(validate(&dup).issues.iter().any(|e| matches!(e, DiagramError::Ordering(_))));
    }

    #[test]
    fn malformed_entries() {
        for bad in ["X[1,2,3]", "Y[1,2,3,4]", "X[1,2,3,4", "X[0,1,1,0]", "X[a,b,c,d]"] {
            assert!(matches!(parse_pd(bad), Err(DiagramError::MalformedEntry { .. })), "{bad}");
        }
    }

    #[test]
    fn non_planar_code_is_rejected() {
        // Label 1 runs straight through its own crossing.
        assert!(matches!(parse_pd("X[1,2,1,2]"), Err(DiagramError::Connectivity(_))));
    }

    #[test]
    fn resolve_checks_length() {
        let d = parse_pd("D[4,2,5,1],X[3,6,4,1],X[5,2,6,3]").unwrap();
        let err = resolve(&d, &"ab".parse().unwrap()).unwrap_err();
        assert_eq!(err, DiagramError::LengthMismatch { expected: 1, found: 2 });
    }

    #[test]
    fn resolve_restores_and_switches() {
        let d = parse_pd("D[4,2,5,1],X[3,6,4,1],X[5,2,6,3]").unwrap();
        let a = resolve(&d, &"a".parse().unwrap()).unwrap();
        assert_eq!(a.to_string(), TREFOIL);
        let b = resolve(&d, &"b".parse().unwrap()).unwrap();
        assert_eq!(b.crossings()[0].strands, [4, 2, 5, 1]);
        let plain = parse_pd(TREFOIL).unwrap();
        assert_eq!(resolve(&plain, &Word::empty()).unwrap().as_singular(), &plain);
    }

    #[test]
    fn resolve_two_sites_is_local() {
        let d = parse_pd("D[4,2,5,1],D[6,4,1,3],X[5,2,6,3]").unwrap();
        for w in crate::calculus::all_words(2, 20).unwrap() {
            let k = resolve(&d, &w).unwrap();
            assert_eq!(k.crossings()[2], d.crossings()[2]);
            for site in 0..2 {
                let mut got = k.crossings()[site].strands;
                got.sort_unstable();
                let mut want = d.crossings()[site].strands;
                want.sort_unstable();
                assert_eq!(got, want);
            }
        }
    }

    #[test]
    fn permute_and_swap() {
        let d = parse_pd("D[4,2,5,1],D[6,4,1,3],X[5,2,6,3]").unwrap();
        let p = d.permute_double_points(&[2, 1]).unwrap();
        assert_eq!(p.to_string(), "D[6,4,1,3],D[4,2,5,1],X[5,2,6,3]");
        assert!(d.permute_double_points(&[1, 1]).is_err());
        let s = d.swap_labels_at(1).unwrap();
        assert_eq!(s.crossings()[0].strands, [2, 5, 1, 4]);
    }
}
