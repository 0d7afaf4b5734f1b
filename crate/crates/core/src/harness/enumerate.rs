//! Isomorph-free enumeration of small uniform families.
//!
//! Families are grown one edge at a time, breadth-first by edge count; each
//! level keeps one canonical representative per isomorphism class. Every
//! class is reached because deleting any edge from a family satisfying the
//! hereditary constraints (intersecting, `tau_le`, `max_edges`) leaves one
//! that satisfies them too.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::canon::{canonical_form, CanonKey};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::{k_subsets, VertexSet};

/// Largest `n` enumerated unless the caller raises it.
pub const DEFAULT_CEILING: usize = 9;

/// A family kept at this level (if it passes the output filters) and its
/// canonical children.
type Expansion = (Option<Hypergraph>, Vec<(CanonKey, Hypergraph)>);

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationFilter {
    pub intersecting: bool,
    pub tau_le: Option<usize>,
    pub tau_ge: Option<usize>,
    pub min_edges: Option<usize>,
    pub max_edges: Option<usize>,
    /// Only families to which no edge can be added without breaking the
    /// hereditary constraints (`max_edges` excepted).
    pub maximal_only: bool,
}

impl EnumerationFilter {
    pub fn intersecting() -> Self {
        EnumerationFilter { intersecting: true, ..Default::default() }
    }

    fn validate(&self) -> Result<()> {
        if let (Some(lo), Some(hi)) = (self.min_edges, self.max_edges) {
            if lo > hi {
                return Err(Error::InvalidParams(format!("min_edges {lo} > max_edges {hi}")));
            }
        }
        if let (Some(lo), Some(hi)) = (self.tau_ge, self.tau_le) {
            if lo > hi {
                return Err(Error::InvalidParams(format!("tau_ge {lo} > tau_le {hi}")));
            }
        }
        Ok(())
    }

    /// Whether adding `e` to `h` keeps the hereditary constraints, ignoring
    /// the edge budget.
    fn admits(&self, h: &Hypergraph, e: VertexSet) -> bool {
        if h.contains_edge(e) || (self.intersecting && h.edges().iter().any(|f| f.is_disjoint(e))) {
            return false;
        }
        match self.tau_le {
            Some(k) => {
                let mut edges = h.edges().to_vec();
                edges.push(e);
                edges.sort_unstable();
                Hypergraph::from_sorted_unchecked(h.n(), h.r(), edges).cover_number() <= k
            }
            None => true,
        }
    }

    fn accepts(&self, h: &Hypergraph, maximal: impl FnOnce() -> bool) -> bool {
        self.min_edges.is_none_or(|m| h.len() >= m)
            && self.tau_ge.is_none_or(|t| h.cover_number() >= t)
            && (!self.maximal_only || maximal())
    }
}

fn with_edge(h: &Hypergraph, e: VertexSet) -> Hypergraph {
    let mut edges = h.edges().to_vec();
    edges.push(e);
    edges.sort_unstable();
    Hypergraph::from_sorted_unchecked(h.n(), h.r(), edges)
}

/// One representative per isomorphism class of `r`-graphs on `n` vertices
/// that satisfy `filter`, ordered by edge count and then canonical key.
/// Representatives are in canonical labeling.
pub fn enumerate_intersecting(n: usize, r: usize, filter: &EnumerationFilter) -> Result<Vec<Hypergraph>> {
    enumerate_with_ceiling(n, r, filter, DEFAULT_CEILING)
}

pub fn enumerate_with_ceiling(n: usize, r: usize, filter: &EnumerationFilter, ceiling: usize) -> Result<Vec<Hypergraph>> {
    let mut out = Vec::new();
    for_each_level(n, r, filter, ceiling, |level| {
        out.extend(level.iter().cloned());
    })?;
    Ok(out)
}

/// Number of classes satisfying `filter`, without keeping them.
pub fn count_intersecting(n: usize, r: usize, filter: &EnumerationFilter, ceiling: usize) -> Result<usize> {
    let mut count = 0;
    for_each_level(n, r, filter, ceiling, |level| count += level.len())?;
    Ok(count)
}

/// Runs the level-by-level search, handing each level's accepted
/// representatives to `sink`.
pub fn for_each_level(
    n: usize,
    r: usize,
    filter: &EnumerationFilter,
    ceiling: usize,
    mut sink: impl FnMut(&[Hypergraph]),
) -> Result<()> {
    filter.validate()?;
    if n > ceiling {
        return Err(Error::CeilingExceeded { n, ceiling });
    }
    let candidates: Vec<VertexSet> = k_subsets(n, r).collect();
    let mut level = vec![Hypergraph::empty(n, r)?];
    let cap = filter.max_edges.unwrap_or(usize::MAX);
    let mut size = 0;
    while !level.is_empty() {
        let grow = size < cap;
        let expanded: Vec<Expansion> = level
            .par_iter()
            .map(|h| {
                let addable: Vec<VertexSet> = candidates.iter().copied().filter(|&e| filter.admits(h, e)).collect();
                let keep = filter.accepts(h, || addable.is_empty()).then(|| h.clone());
                let children = if grow {
                    addable
                        .iter()
                        .map(|&e| {
                            let child = with_edge(h, e);
                            let (key, perm) = canonical_form(&child);
                            (key, child.relabel(&perm))
                        })
                        .collect()
                } else {
                    Vec::new()
                };
                (keep, children)
            })
            .collect();
        let accepted: Vec<Hypergraph> = expanded.iter().filter_map(|(k, _)| k.clone()).collect();
        sink(&accepted);
        let mut next: Vec<(CanonKey, Hypergraph)> = expanded.into_iter().flat_map(|(_, c)| c).collect();
        next.par_sort_unstable_by(|a, b| a.0.cmp(&b.0));
        next.dedup_by(|a, b| a.0 == b.0);
        level = next.into_iter().map(|(_, h)| h).collect();
        size += 1;
    }
    Ok(())
}
