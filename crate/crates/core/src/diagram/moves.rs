//! Reidemeister moves on diagram codes, located through the face structure.
//!
//! Removal moves reconnect strands straight through the deleted crossings.
//! Insertion moves need the orientation so that new entries still start at
//! their incoming under-strand.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::orient::{faces, Occurrences, Orientation, Slot};
use super::{Crossing, CrossingKind, Diagram, Label};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    R1,
    R2,
    R3,
}

/// A single move applicable to a specific diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Move {
    /// Undo the kink at this crossing.
    R1Remove(usize),
    /// Put a kink on the edge with this label (`None`: on a free circle).
    /// `style` picks one of the four kink shapes.
    R1Add { label: Option<Label>, style: u8 },
    /// Pull apart the bigon between two crossings.
    R2Remove(usize, usize),
    /// Push the edge leaving `first` across the edge leaving `second`; both
    /// departing slots lie on one face.
    R2Add { first: Slot, second: Slot, over: bool },
    /// Slide across the triangular face with these departing slots.
    R3([Slot; 3]),
}

impl Move {
    pub fn kind(&self) -> MoveKind {
        match self {
            Move::R1Remove(_) | Move::R1Add { .. } => MoveKind::R1,
            Move::R2Remove(..) | Move::R2Add { .. } => MoveKind::R2,
            Move::R3(_) => MoveKind::R3,
        }
    }

    pub fn reduces(&self) -> bool {
        matches!(self, Move::R1Remove(_) | Move::R2Remove(..))
    }
}

fn classical(x: &Crossing) -> bool {
    x.kind == CrossingKind::Classical
}

/// Crossings whose monogon face can be removed by R1.
pub(crate) fn r1_sites(crossings: &[Crossing]) -> Vec<usize> {
    let mut out: Vec<usize> = faces(crossings)
        .into_iter()
        .filter(|f| f.len() == 1 && classical(&crossings[f[0].0]))
        .map(|f| f[0].0)
        .collect();
    out.dedup();
    out
}

/// Bigon faces where one strand passes over at both corners.
pub(crate) fn r2_sites(crossings: &[Crossing]) -> Vec<(usize, usize)> {
    let occ = Occurrences::of(crossings);
    faces(crossings)
        .into_iter()
        .filter(|f| f.len() == 2)
        .filter_map(|f| {
            let (c1, s1) = f[0];
            let (c2, a2) = occ.other(crossings, f[0]);
            let ok = c1 != c2 && classical(&crossings[c1]) && classical(&crossings[c2]) && s1 % 2 == a2 % 2;
            ok.then_some((c1.min(c2), c1.max(c2)))
        })
        .collect()
}

/// Triangular faces admitting a third move: three distinct classical
/// crossings and one strand over at both of its corners.
pub(crate) fn r3_sites(crossings: &[Crossing]) -> Vec<[Slot; 3]> {
    let occ = Occurrences::of(crossings);
    faces(crossings)
        .into_iter()
        .filter(|f| f.len() == 3)
        .filter_map(|f| {
            let tri = [f[0], f[1], f[2]];
            let cs = tri.map(|s| s.0);
            if cs[0] == cs[1] || cs[1] == cs[2] || cs[0] == cs[2] || cs.iter().any(|&c| !classical(&crossings[c])) {
                return None;
            }
            let top = tri.iter().any(|&d| {
                let (_, arrive) = occ.other(crossings, d);
                d.1 % 2 == 1 && arrive % 2 == 1
            });
            top.then_some(tri)
        })
        .collect()
}

/// Deletes crossings, joining each strand straight through them. Classes of
/// joined labels that no longer touch any crossing become free circles.
pub(crate) fn remove_straight(crossings: &[Crossing], free_loops: usize, remove: &[usize]) -> (Vec<Crossing>, usize) {
    let joins: Vec<(Label, Label)> =
        remove.iter().flat_map(|&c| (0..2).map(move |p| (crossings[c].at(p), crossings[c].at(p + 2)))).collect();
    splice(crossings, free_loops, remove, &joins)
}

/// Deletes crossings and identifies the given pairs of labels. Each class of
/// identified labels must touch the remaining crossings exactly twice or not
/// at all; untouched classes become free circles.
pub(crate) fn splice(
    crossings: &[Crossing],
    free_loops: usize,
    remove: &[usize],
    joins: &[(Label, Label)],
) -> (Vec<Crossing>, usize) {
    let mut parent: BTreeMap<Label, Label> = BTreeMap::new();
    fn root(parent: &mut BTreeMap<Label, Label>, x: Label) -> Label {
        let mut r = *parent.entry(x).or_insert(x);
        while parent[&r] != r {
            r = parent[&r];
        }
        parent.insert(x, r);
        r
    }
    for &(a, b) in joins {
        let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
        parent.insert(rb, ra);
    }
    let kept: Vec<Crossing> =
        crossings.iter().enumerate().filter(|(i, _)| !remove.contains(i)).map(|(_, x)| x.clone()).collect();

    let mut touching: BTreeMap<Label, Vec<Label>> = BTreeMap::new();
    for x in &kept {
        for &l in &x.strands {
            if parent.contains_key(&l) {
                let r = root(&mut parent, l);
                touching.entry(r).or_default().push(l);
            }
        }
    }
    let keys: Vec<Label> = parent.keys().copied().collect();
    let mut classes: Vec<Label> = keys.into_iter().map(|l| root(&mut parent, l)).collect();
    classes.sort_unstable();
    classes.dedup();

    let mut rename: BTreeMap<Label, Label> = BTreeMap::new();
    let mut loops = free_loops;
    for r in classes {
        match touching.get(&r) {
            None => loops += 1,
            Some(ls) => {
                debug_assert_eq!(ls.len(), 2, "splice left a dangling strand");
                let target = *ls.iter().min().expect("nonempty");
                for &l in ls {
                    rename.insert(l, target);
                }
            }
        }
    }
    let out = kept
        .into_iter()
        .map(|x| Crossing { kind: x.kind, strands: x.strands.map(|l| *rename.get(&l).unwrap_or(&l)) })
        .collect();
    (out, loops)
}

fn fresh_label(crossings: &[Crossing]) -> Label {
    crossings.iter().flat_map(|x| x.strands).max().unwrap_or(0) + 1
}

fn rotate(ccw: [Label; 4], start: usize) -> [Label; 4] {
    std::array::from_fn(|n| ccw[(start + n) % 4])
}

/// Third move across a triangular face. Each strand keeps its crossings but
/// meets them in the opposite order: at every corner the slot that held the
/// triangle edge takes the strand's outer edge from the other corner, and the
/// outer slot takes the triangle edge.
pub(crate) fn apply_r3(crossings: &[Crossing], tri: [Slot; 3]) -> Vec<Crossing> {
    let occ = Occurrences::of(crossings);
    let mut out = crossings.to_vec();
    for &depart in &tri {
        let arrive = occ.other(crossings, depart);
        let inner = crossings[depart.0].at(depart.1);
        let outer_here = crossings[depart.0].at(depart.1 + 2);
        let outer_there = crossings[arrive.0].at(arrive.1 + 2);
        out[depart.0].strands[depart.1] = outer_there;
        out[depart.0].strands[(depart.1 + 2) % 4] = inner;
        out[arrive.0].strands[arrive.1] = outer_here;
        out[arrive.0].strands[(arrive.1 + 2) % 4] = inner;
    }
    out
}

impl Diagram {
    /// Every move applicable to this diagram, in a deterministic order.
    /// Insertions are offered only when `insertions` is set.
    pub fn available_moves(&self, insertions: bool) -> Vec<Move> {
        let xs = self.crossings();
        let mut moves: Vec<Move> = r1_sites(xs).into_iter().map(Move::R1Remove).collect();
        moves.extend(r2_sites(xs).into_iter().map(|(a, b)| Move::R2Remove(a, b)));
        moves.extend(r3_sites(xs).into_iter().map(Move::R3));
        if !insertions {
            return moves;
        }
        if self.free_loops() > 0 {
            moves.extend((0..4).map(|style| Move::R1Add { label: None, style }));
        }
        let mut labels: Vec<Label> = xs.iter().flat_map(|x| x.strands).collect();
        labels.sort_unstable();
        labels.dedup();
        for &l in &labels {
            moves.extend((0..4).map(|style| Move::R1Add { label: Some(l), style }));
        }
        for face in faces(xs) {
            for (i, &first) in face.iter().enumerate() {
                for &second in &face[i + 1..] {
                    if xs[first.0].at(first.1) == xs[second.0].at(second.1) {
                        continue;
                    }
                    for over in [true, false] {
                        moves.push(Move::R2Add { first, second, over });
                        moves.push(Move::R2Add { first: second, second: first, over });
                    }
                }
            }
        }
        moves
    }

    /// Applies a move obtained from [`Diagram::available_moves`] on this
    /// same diagram.
    pub fn apply(&self, mv: &Move) -> Diagram {
        let xs = self.crossings();
        match *mv {
            Move::R1Remove(c) => {
                let (out, loops) = remove_straight(xs, self.free_loops(), &[c]);
                Diagram::from_parts_unchecked(out, loops)
            }
            Move::R2Remove(a, b) => {
                let (out, loops) = remove_straight(xs, self.free_loops(), &[a, b]);
                Diagram::from_parts_unchecked(out, loops)
            }
            Move::R3(tri) => Diagram::from_parts_unchecked(apply_r3(xs, tri), self.free_loops()),
            Move::R1Add { label, style } => self.add_kink(label, style),
            Move::R2Add { first, second, over } => self.add_bigon(first, second, over),
        }
    }

    fn add_kink(&self, label: Option<Label>, style: u8) -> Diagram {
        let mut xs = self.crossings().to_vec();
        let fresh = fresh_label(&xs);
        let mut loops = self.free_loops();
        let (e1, e2, lp) = match label {
            None => {
                loops -= 1;
                (fresh, fresh, fresh + 1)
            }
            Some(e) => {
                let o = Orientation::of(&xs).expect("diagram is orientable");
                let occ = Occurrences::of(&xs);
                let head = *occ.slots(e).iter().find(|&&(c, p)| o.is_incoming(c, p)).expect("edge has a head");
                xs[head.0].strands[head.1] = fresh;
                (e, fresh, fresh + 1)
            }
        };
        let strands = match style % 4 {
            0 => [e1, lp, lp, e2],
            1 => [e1, e2, lp, lp],
            2 => [lp, e1, e2, lp],
            _ => [lp, lp, e2, e1],
        };
        xs.push(Crossing::classical(strands));
        Diagram::from_parts_unchecked(xs, loops)
    }

    fn add_bigon(&self, first: Slot, second: Slot, over: bool) -> Diagram {
        let xs0 = self.crossings();
        let o = Orientation::of(xs0).expect("diagram is orientable");
        let occ = Occurrences::of(xs0);
        let e_end = occ.other(xs0, first);
        let f_end = occ.other(xs0, second);
        let e_forward = !o.is_incoming(first.0, first.1);
        let f_forward = !o.is_incoming(second.0, second.1);

        let mut xs = xs0.to_vec();
        let fresh = fresh_label(&xs);
        let e1 = xs[first.0].at(first.1);
        let f1 = xs[second.0].at(second.1);
        let (em, e2, fm, f2) = (fresh, fresh + 1, fresh + 2, fresh + 3);
        xs[e_end.0].strands[e_end.1] = e2;
        xs[f_end.0].strands[f_end.1] = f2;

        // Slots listed east, north, west, south with the face below f and
        // the finger of e rising through it.
        let p_ccw = [f2, em, fm, e1];
        let q_ccw = [fm, em, f1, e2];
        let (p_start, q_start) = if over {
            (if f_forward { 2 } else { 0 }, if f_forward { 2 } else { 0 })
        } else {
            (if e_forward { 3 } else { 1 }, if e_forward { 1 } else { 3 })
        };
        xs.push(Crossing::classical(rotate(p_ccw, p_start)));
        xs.push(Crossing::classical(rotate(q_ccw, q_start)));
        Diagram::from_parts_unchecked(xs, self.free_loops())
    }
}

/// Which move families a [`Perturber`] may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MoveSet {
    pub r1: bool,
    pub r2: bool,
    pub r3: bool,
}

impl MoveSet {
    pub const ALL: MoveSet = MoveSet { r1: true, r2: true, r3: true };
    /// Moves preserving the bracket exactly.
    pub const REGULAR: MoveSet = MoveSet { r1: false, r2: true, r3: true };

    fn allows(&self, kind: MoveKind) -> bool {
        match kind {
            MoveKind::R1 => self.r1,
            MoveKind::R2 => self.r2,
            MoveKind::R3 => self.r3,
        }
    }
}

/// Seeded random walk through Reidemeister moves.
pub struct Perturber {
    rng: ChaCha8Rng,
    moves: MoveSet,
    max_crossings: usize,
}

impl Perturber {
    pub fn new(seed: u64, moves: MoveSet, max_crossings: usize) -> Self {
        Perturber { rng: ChaCha8Rng::seed_from_u64(seed), moves, max_crossings }
    }

    /// One random allowed move, or `None` when nothing applies.
    pub fn step(&mut self, d: &Diagram) -> Option<(Move, Diagram)> {
        let room = d.crossing_count() + 2 <= self.max_crossings;
        let mut by_kind: BTreeMap<(MoveKind, bool), Vec<Move>> = BTreeMap::new();
        for mv in d.available_moves(room) {
            if self.moves.allows(mv.kind()) {
                by_kind.entry((mv.kind(), mv.reduces())).or_default().push(mv);
            }
        }
        let groups: Vec<&Vec<Move>> = by_kind.values().collect();
        let group = groups.choose(&mut self.rng)?;
        let mv = group[self.rng.gen_range(0..group.len())].clone();
        let next = d.apply(&mv);
        Some((mv, next))
    }

    pub fn perturb(&mut self, d: &Diagram, steps: usize) -> Diagram {
        let mut cur = d.clone();
        for _ in 0..steps {
            match self.step(&cur) {
                Some((_, next)) => cur = next,
                None => break,
            }
        }
        cur
    }
}
