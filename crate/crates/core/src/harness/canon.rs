//! Canonical forms of small uniform hypergraphs.
//!
//! The canonical labeling maximizes the characteristic vector of the edge
//! set, indexed by `r`-sets in colex order, over all labelings consistent
//! with an iterated degree refinement of the vertices. The first `C(d, r)`
//! colex positions only involve labels `1..=d`, so partial labelings are
//! compared and pruned as they grow. Transposition-twins are tried once.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::hypergraph::Hypergraph;
use crate::vertex_set::{binom, VertexId, VertexSet};

/// Equal keys (for the same `n` and `r`) mean isomorphic hypergraphs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonKey(Box<[u64]>);

/// Colex rank of a set of labels.
fn colex_rank(labels: &[usize]) -> u32 {
    let mut sorted = labels.to_vec();
    sorted.sort_unstable();
    sorted.iter().enumerate().map(|(i, &l)| binom(l as i64 - 1, i as i64 + 1) as u32).sum()
}

/// Ordered vertex classes from iterated refinement; isolated vertices last.
fn refine(h: &Hypergraph) -> Vec<u32> {
    let n = h.n();
    let support = h.support();
    let mut color: Vec<u32> = (1..=n).map(|v| u32::from(!support.contains(v))).collect();
    let mut classes = color.iter().collect::<std::collections::BTreeSet<_>>().len();
    loop {
        let signatures: Vec<(u32, Vec<Vec<u32>>)> = (1..=n)
            .map(|v| {
                let mut around: Vec<Vec<u32>> = h
                    .edges()
                    .iter()
                    .filter(|e| e.contains(v))
                    .map(|e| {
                        let mut c: Vec<u32> = e.iter().filter(|&w| w != v).map(|w| color[w - 1]).collect();
                        c.sort_unstable();
                        c
                    })
                    .collect();
                around.sort_unstable();
                // Higher degree sorts first.
                around.reverse();
                (color[v - 1], around)
            })
            .collect();
        let mut distinct: Vec<&(u32, Vec<Vec<u32>>)> = signatures.iter().collect();
        distinct.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.len().cmp(&a.1.len())).then_with(|| b.1.cmp(&a.1)));
        distinct.dedup();
        let index: BTreeMap<&(u32, Vec<Vec<u32>>), u32> =
            distinct.iter().enumerate().map(|(i, s)| (*s, i as u32)).collect();
        color = signatures.iter().map(|s| index[s]).collect();
        if distinct.len() == classes {
            return color;
        }
        classes = distinct.len();
    }
}

/// `twin[v - 1]`: the least vertex `u` such that swapping `u` and `v` is an
/// automorphism.
fn twins(h: &Hypergraph, color: &[u32]) -> Vec<VertexId> {
    let n = h.n();
    let mut twin: Vec<VertexId> = (1..=n).collect();
    for v in 1..=n {
        if twin[v - 1] != v {
            continue;
        }
        for w in v + 1..=n {
            if twin[w - 1] != w || color[v - 1] != color[w - 1] {
                continue;
            }
            let mut perm: Vec<VertexId> = (1..=n).collect();
            perm.swap(v - 1, w - 1);
            if h.relabel(&perm) == *h {
                twin[w - 1] = v;
            }
        }
    }
    twin
}

struct Search<'a> {
    h: &'a Hypergraph,
    /// Vertices eligible for each label position, in order.
    slots: Vec<Vec<VertexId>>,
    twin: Vec<VertexId>,
    incident: Vec<Vec<VertexSet>>,
    label: Vec<usize>,
    order: Vec<VertexId>,
    segments: Vec<Vec<u32>>,
    best: Option<(Vec<Vec<u32>>, Vec<usize>)>,
}

/// Lex-max comparison of two ascending rank lists covering the same range.
fn compare_segment(cur: &[u32], best: &[u32]) -> Ordering {
    for (a, b) in cur.iter().zip(best) {
        if a != b {
            // The smaller rank is a 1 where the other side has a 0.
            return b.cmp(a);
        }
    }
    cur.len().cmp(&best.len())
}

impl Search<'_> {
    fn compare(&self, depth: usize) -> Ordering {
        let Some((best, _)) = &self.best else { return Ordering::Greater };
        for (seg, best_seg) in self.segments[..=depth].iter().zip(best) {
            match compare_segment(seg, best_seg) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    fn run(&mut self, depth: usize) {
        let n = self.h.n();
        if depth == n {
            if self.compare(n - 1) == Ordering::Greater {
                self.best = Some((self.segments.clone(), self.label.clone()));
            }
            return;
        }
        let mut tried: Vec<VertexId> = Vec::new();
        for i in 0..self.slots[depth].len() {
            let v = self.slots[depth][i];
            if self.label[v - 1] != 0 || tried.contains(&self.twin[v - 1]) {
                continue;
            }
            tried.push(self.twin[v - 1]);
            let l = depth + 1;
            self.label[v - 1] = l;
            self.order.push(v);
            let mut seg: Vec<u32> = self.incident[v - 1]
                .iter()
                .filter(|e| e.iter().all(|w| self.label[w - 1] != 0))
                .map(|e| colex_rank(&e.iter().map(|w| self.label[w - 1]).collect::<Vec<_>>()))
                .collect();
            seg.sort_unstable();
            self.segments.push(seg);
            if self.compare(depth) != Ordering::Less {
                self.run(depth + 1);
            }
            self.segments.pop();
            self.order.pop();
            self.label[v - 1] = 0;
        }
    }
}

/// The canonical key of `h` and the canonical labeling (`perm[v - 1]` is
/// the new label of `v`).
pub fn canonical_form(h: &Hypergraph) -> (CanonKey, Vec<VertexId>) {
    let n = h.n();
    let color = refine(h);
    let mut positions: Vec<VertexId> = (1..=n).collect();
    positions.sort_by_key(|&v| (color[v - 1], v));
    let slots = positions
        .iter()
        .map(|&p| (1..=n).filter(|&v| color[v - 1] == color[p - 1]).collect())
        .collect();
    let mut incident = vec![Vec::new(); n];
    for &e in h.edges() {
        for v in e.iter() {
            incident[v - 1].push(e);
        }
    }
    let mut search = Search {
        h,
        slots,
        twin: twins(h, &color),
        incident,
        label: vec![0; n],
        order: Vec::with_capacity(n),
        segments: Vec::with_capacity(n),
        best: None,
    };
    if n == 0 {
        return (CanonKey(Box::new([])), Vec::new());
    }
    search.run(0);
    let (segments, label) = search.best.expect("some labeling is always reached");
    let words = (binom(n as i64, h.r() as i64) as usize).div_ceil(64);
    let mut bits = vec![0u64; words];
    for rank in segments.into_iter().flatten() {
        bits[rank as usize / 64] |= 1 << (rank % 64);
    }
    (CanonKey(bits.into_boxed_slice()), label)
}

pub fn canonical_key(h: &Hypergraph) -> CanonKey {
    canonical_form(h).0
}

/// `h` relabeled canonically: isomorphic inputs give identical outputs.
pub fn canonical_hypergraph(h: &Hypergraph) -> Hypergraph {
    let (_, perm) = canonical_form(h);
    h.relabel(&perm)
}

/// Whether two hypergraphs on the same ground set are isomorphic.
pub fn isomorphic(a: &Hypergraph, b: &Hypergraph) -> bool {
    a.n() == b.n() && a.r() == b.r() && a.len() == b.len() && canonical_key(a) == canonical_key(b)
}
