use std::collections::HashMap;

use super::{Crossing, CrossingKind, DiagramError, Label};

/// A slot: (crossing index, position 0..4).
pub(crate) type Slot = (usize, usize);

/// For each label, the two slots where it attaches.
pub(crate) struct Occurrences {
    ends: HashMap<Label, Vec<Slot>>,
}

impl Occurrences {
    pub(crate) fn of(crossings: &[Crossing]) -> Self {
        let mut ends: HashMap<Label, Vec<Slot>> = HashMap::new();
        for (c, x) in crossings.iter().enumerate() {
            for (p, &l) in x.strands.iter().enumerate() {
                ends.entry(l).or_default().push((c, p));
            }
        }
        Occurrences { ends }
    }

    /// The slot at the far end of the edge attached at `slot`.
    pub(crate) fn other(&self, crossings: &[Crossing], slot: Slot) -> Slot {
        let label = crossings[slot.0].strands[slot.1];
        let ends = &self.ends[&label];
        if ends[0] == slot {
            ends[1]
        } else {
            ends[0]
        }
    }

    pub(crate) fn slots(&self, label: Label) -> &[Slot] {
        &self.ends[&label]
    }
}

/// Strand cycles of the diagram, each listed as its entry slots in traversal
/// order. Arriving at slot `p` a strand leaves through `p + 2`.
pub(crate) fn components(crossings: &[Crossing]) -> Vec<Vec<Slot>> {
    let occ = Occurrences::of(crossings);
    let mut seen = vec![[false; 4]; crossings.len()];
    let mut out = Vec::new();
    for c in 0..crossings.len() {
        for p in 0..4 {
            if seen[c][p] {
                continue;
            }
            let mut entries = Vec::new();
            let mut slot = (c, p);
            loop {
                seen[slot.0][slot.1] = true;
                entries.push(slot);
                let exit = (slot.0, (slot.1 + 2) % 4);
                seen[exit.0][exit.1] = true;
                slot = occ.other(crossings, exit);
                if slot == (c, p) {
                    break;
                }
            }
            out.push(entries);
        }
    }
    out
}

/// Direction of travel at every slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    incoming: Vec<[bool; 4]>,
    /// Entry slots of each component in travel order.
    components: Vec<Vec<Slot>>,
}

impl Orientation {
    /// Orients each component so classical under-strands run from slot 0 to
    /// slot 2. Components with no such constraint are oriented so that their
    /// first slot in reading order is an entry.
    pub fn of(crossings: &[Crossing]) -> Result<Self, DiagramError> {
        let mut incoming = vec![[false; 4]; crossings.len()];
        let mut comps = Vec::new();
        for entries in components(crossings) {
            let mut forward = None;
            for &(c, p) in &entries {
                if crossings[c].kind != CrossingKind::Classical || p % 2 == 1 {
                    continue;
                }
                let vote = p == 0;
                if forward.is_some_and(|f| f != vote) {
                    return Err(DiagramError::Connectivity(format!(
                        "under-strands disagree on the orientation of the component through crossing {}",
                        c + 1
                    )));
                }
                forward = Some(vote);
            }
            let chosen: Vec<Slot> = if forward.unwrap_or(true) {
                entries
            } else {
                entries.iter().rev().map(|&(c, p)| (c, (p + 2) % 4)).collect()
            };
            for &(c, p) in &chosen {
                incoming[c][p] = true;
            }
            comps.push(chosen);
        }
        Ok(Orientation { incoming, components: comps })
    }

    pub fn is_incoming(&self, crossing: usize, slot: usize) -> bool {
        self.incoming[crossing][slot % 4]
    }

    pub(crate) fn components(&self) -> &[Vec<Slot>] {
        &self.components
    }

    /// +1 when the over-strand runs from slot 3 to slot 1, else -1.
    pub fn sign(&self, crossing: usize) -> i64 {
        if self.incoming[crossing][3] {
            1
        } else {
            -1
        }
    }

    /// The crossing with over and under exchanged, orientation preserved.
    pub(crate) fn switched(&self, x: &Crossing, crossing: usize) -> Crossing {
        let start = if self.incoming[crossing][1] { 1 } else { 3 };
        Crossing { kind: x.kind, strands: std::array::from_fn(|n| x.at(start + n)) }
    }
}

/// Face boundaries as cycles of departing slots. From a departing slot the
/// walk follows the edge to its far slot `q` and departs again from `q + 1`,
/// so each face lies to the right of its darts.
pub(crate) fn faces(crossings: &[Crossing]) -> Vec<Vec<Slot>> {
    let occ = Occurrences::of(crossings);
    let mut seen = vec![[false; 4]; crossings.len()];
    let mut out = Vec::new();
    for c in 0..crossings.len() {
        for p in 0..4 {
            if seen[c][p] {
                continue;
            }
            let mut face = Vec::new();
            let mut slot = (c, p);
            while !seen[slot.0][slot.1] {
                seen[slot.0][slot.1] = true;
                face.push(slot);
                let (c2, q) = occ.other(crossings, slot);
                slot = (c2, (q + 1) % 4);
            }
            out.push(face);
        }
    }
    out
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Euler-characteristic check: a planar 4-valent code with `n` crossings in
/// `k` connected pieces has exactly `n + 1 + k` faces.
pub(crate) fn check_planar(crossings: &[Crossing]) -> Result<(), DiagramError> {
    let n = crossings.len();
    if n == 0 {
        return Ok(());
    }
    let occ = Occurrences::of(crossings);
    let mut parent: Vec<usize> = (0..n).collect();
    for x in crossings {
        for &l in &x.strands {
            let s = occ.slots(l);
            let (a, b) = (find(&mut parent, s[0].0), find(&mut parent, s[1].0));
            parent[a] = b;
        }
    }
    let pieces = (0..n).filter(|&i| find(&mut parent, i) == i).count();
    let f = faces(crossings).len();
    if f == n + 1 + pieces {
        Ok(())
    } else {
        Err(DiagramError::Connectivity(format!(
            "code is not planar: {f} faces for {n} crossings in {pieces} piece(s), expected {}",
            n + 1 + pieces
        )))
    }
}
