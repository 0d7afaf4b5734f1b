//! Exhaustive search for intersecting 3-graphs with cover number at least 3
//! on a bounded support.
//!
//! Any such family `F*` on `[m]` is reached from a single edge: while the
//! current family `F ⊆ F*` has a cover `C` of size at most 2, some edge of
//! `F*` avoids `C`, so branching over the triples that avoid a minimum
//! cover and meet every edge of `F` reaches a subfamily of `F*` with cover
//! number 3. Every superset of such a terminal is a clique of pairwise
//! intersecting triples meeting all of its edges, so the largest families
//! come from a maximum-clique search per terminal.

use rayon::prelude::*;

use super::canon::{canonical_form, CanonKey};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::{k_subsets, VertexSet};

/// Largest support searched; candidate triples must fit in a `u128`.
pub const FOLK_CEILING: usize = 10;

#[derive(Clone, Debug)]
pub struct FolkResult {
    pub max_support: usize,
    /// Non-isomorphic minimal starting points with cover number 3.
    pub terminals: usize,
    /// Largest size of an intersecting family with cover number >= 3.
    pub max_edges: usize,
    /// All families of that size, one per isomorphism class.
    pub extremal: Vec<Hypergraph>,
}

fn canonical(h: &Hypergraph) -> (CanonKey, Hypergraph) {
    let (key, perm) = canonical_form(h);
    (key, h.relabel(&perm))
}

fn dedup(mut items: Vec<(CanonKey, Hypergraph)>) -> Vec<(CanonKey, Hypergraph)> {
    items.sort_by(|a, b| a.0.cmp(&b.0));
    items.dedup_by(|a, b| a.0 == b.0);
    items
}

/// Cover-number-3 families reached by the branching described above.
fn terminals(m: usize) -> Result<Vec<Hypergraph>> {
    let triples: Vec<VertexSet> = k_subsets(m, 3).collect();
    let mut frontier = vec![Hypergraph::from_lists(m, 3, &[&[1, 2, 3]])?];
    let mut found: Vec<(CanonKey, Hypergraph)> = Vec::new();
    while !frontier.is_empty() {
        let children: Vec<(CanonKey, Hypergraph)> = frontier
            .par_iter()
            .flat_map_iter(|f| {
                let cover = f.minimum_cover();
                triples
                    .iter()
                    .filter(move |e| e.is_disjoint(cover) && f.edges().iter().all(|g| g.intersects(**e)))
                    .map(move |&e| {
                        let mut edges = f.edges().to_vec();
                        edges.push(e);
                        canonical(&Hypergraph::new(m, 3, edges).expect("new triple"))
                    })
            })
            .collect();
        let (done, open): (Vec<_>, Vec<_>) = dedup(children).into_iter().partition(|(_, h)| h.cover_number() >= 3);
        found.extend(done);
        frontier = open.into_iter().map(|(_, h)| h).collect();
    }
    Ok(dedup(found).into_iter().map(|(_, h)| h).collect())
}

/// Maximum cliques in a graph on at most 128 vertices given by neighbor
/// masks.
struct Cliques<'a> {
    adj: &'a [u128],
    best: usize,
    /// When set, every clique of exactly this size is recorded.
    collect: Option<usize>,
    found: Vec<u128>,
}

impl Cliques<'_> {
    fn target(&self) -> usize {
        self.collect.unwrap_or(self.best + 1)
    }

    fn run(&mut self, chosen: u128, size: usize, mut pool: u128) {
        if pool == 0 {
            match self.collect {
                Some(t) if size == t => self.found.push(chosen),
                Some(_) => {}
                None => self.best = self.best.max(size),
            }
            return;
        }
        while pool != 0 {
            if size + (pool.count_ones() as usize) < self.target() {
                return;
            }
            let v = pool.trailing_zeros() as usize;
            pool &= pool - 1;
            self.run(chosen | 1 << v, size + 1, pool & self.adj[v]);
        }
    }
}

/// Triples outside `f` meeting every edge of `f`, with their intersection
/// graph.
fn extensions(f: &Hypergraph) -> (Vec<VertexSet>, Vec<u128>) {
    let cands: Vec<VertexSet> = k_subsets(f.n(), 3)
        .filter(|e| !f.contains_edge(*e) && f.edges().iter().all(|g| g.intersects(*e)))
        .collect();
    let adj = cands
        .iter()
        .enumerate()
        .map(|(i, a)| {
            cands.iter().enumerate().filter(|(j, b)| *j != i && a.intersects(**b)).fold(0u128, |m, (j, _)| m | 1 << j)
        })
        .collect();
    (cands, adj)
}

fn max_extension(f: &Hypergraph) -> usize {
    let (cands, adj) = extensions(f);
    let mut c = Cliques { adj: &adj, best: 0, collect: None, found: Vec::new() };
    c.run(0, 0, if cands.is_empty() { 0 } else { u128::MAX >> (128 - cands.len()) });
    c.best
}

fn extensions_of_size(f: &Hypergraph, size: usize) -> Vec<Hypergraph> {
    let (cands, adj) = extensions(f);
    let mut c = Cliques { adj: &adj, best: 0, collect: Some(size), found: Vec::new() };
    c.run(0, 0, if cands.is_empty() { 0 } else { u128::MAX >> (128 - cands.len()) });
    c.found
        .into_iter()
        .map(|mask| {
            let mut edges = f.edges().to_vec();
            edges.extend((0..cands.len()).filter(|i| mask >> i & 1 == 1).map(|i| cands[i]));
            Hypergraph::new(f.n(), 3, edges).expect("distinct triples")
        })
        .collect()
}

/// Searches all intersecting 3-graphs with cover number >= 3 whose support
/// lies in `[max_support]`.
pub fn folk_search(max_support: usize) -> Result<FolkResult> {
    if max_support > FOLK_CEILING {
        return Err(Error::CeilingExceeded { n: max_support, ceiling: FOLK_CEILING });
    }
    if max_support < 3 {
        return Err(Error::InvalidParams("support must be at least 3".into()));
    }
    let starts = terminals(max_support)?;
    let sizes: Vec<usize> = starts.par_iter().map(|f| f.len() + max_extension(f)).collect();
    let max_edges = sizes.iter().copied().max().unwrap_or(0);
    let extremal: Vec<(CanonKey, Hypergraph)> = starts
        .par_iter()
        .zip(&sizes)
        .filter(|(_, &s)| s == max_edges)
        .flat_map_iter(|(f, _)| extensions_of_size(f, max_edges - f.len()).into_iter().map(|h| canonical(&h)))
        .collect();
    Ok(FolkResult {
        max_support,
        terminals: starts.len(),
        max_edges,
        extremal: dedup(extremal).into_iter().map(|(_, h)| h).collect(),
    })
}
