//! The Δ-system kernel `B(H) = B'(H) ∪ B''(H)`.
//!
//! `B*(H)` holds every nonempty `T` with `|T| < r` that is the core of a
//! sunflower in `H` with at least `scheme(|T|)` petals. `B'` is its
//! inclusion-minimal part, `B''` the edges containing no member of `B*`,
//! and `B_i` the size-`i` layer of their union.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, SetFamily};
use crate::packing::{greedy_packing, has_packing};
use crate::vertex_set::{binom, VertexSet};

/// Required sunflower multiplicity as a function of the core size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ThresholdScheme {
    /// `|T| ↦ (r+1)^|T|`.
    RPlusOne,
    /// `|T| ↦ (rs)^(|T|+1)`, for families with matching number at most `s`.
    Rs(usize),
}

impl ThresholdScheme {
    /// Petals a core of size `core_size` needs (saturating).
    pub fn multiplicity(self, r: usize, core_size: usize) -> usize {
        match self {
            ThresholdScheme::RPlusOne => (r + 1).saturating_pow(core_size as u32),
            ThresholdScheme::Rs(s) => (r * s).saturating_pow(core_size as u32 + 1),
        }
        .max(2)
    }

    /// Sunflower size that no layer `B_i` may contain.
    pub fn claim_threshold(self, r: usize, i: usize) -> usize {
        match self {
            ThresholdScheme::RPlusOne => (r + 1).saturating_pow(i.saturating_sub(1) as u32),
            ThresholdScheme::Rs(s) => (r * s).saturating_pow(i as u32),
        }
    }
}

impl fmt::Display for ThresholdScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ThresholdScheme::RPlusOne => f.write_str("r+1"),
            ThresholdScheme::Rs(s) => write!(f, "rs:{s}"),
        }
    }
}

impl std::str::FromStr for ThresholdScheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "r+1" {
            return Ok(ThresholdScheme::RPlusOne);
        }
        s.strip_prefix("rs:")
            .and_then(|v| v.parse::<usize>().ok())
            .filter(|&v| v >= 1)
            .map(ThresholdScheme::Rs)
            .ok_or_else(|| Error::InvalidParams(format!("unknown scheme `{s}` (expected r+1 or rs:S)")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelDecomposition {
    pub scheme: ThresholdScheme,
    pub b_star: SetFamily,
    pub b_prime: SetFamily,
    pub b_dprime: SetFamily,
    /// `B_i` for every nonempty layer.
    pub by_size: BTreeMap<usize, SetFamily>,
}

impl KernelDecomposition {
    /// `B(H)` itself.
    pub fn kernel(&self) -> SetFamily {
        self.b_prime.union(&self.b_dprime)
    }

    /// `B_i`, empty when the layer is.
    pub fn layer(&self, i: usize) -> SetFamily {
        self.by_size.get(&i).cloned().unwrap_or_else(|| SetFamily::empty(self.b_star.n()))
    }
}

/// Whether `core` heads a sunflower in `h` with `k` petals, given the
/// edges containing it.
fn is_core(edges: &[VertexSet], core: VertexSet, k: usize, r: usize) -> bool {
    if edges.len() < k {
        return false;
    }
    let reduced: Vec<VertexSet> = edges.iter().map(|e| e.difference(core)).collect();
    let petal = r - core.len();
    let union = reduced.iter().fold(VertexSet::EMPTY, |acc, s| acc.union(*s));
    if union.len() / petal < k {
        return false;
    }
    greedy_packing(&reduced).len() >= k || has_packing(&reduced, k)
}

/// `B*(H)` under `scheme`, sorted.
pub fn b_star(h: &Hypergraph, scheme: ThresholdScheme) -> SetFamily {
    let r = h.r();
    let mut containing: HashMap<VertexSet, Vec<VertexSet>> = HashMap::new();
    for &e in h.edges() {
        for size in 1..r {
            for t in e.subsets_of_size(size) {
                containing.entry(t).or_default().push(e);
            }
        }
    }
    let candidates: Vec<(VertexSet, Vec<VertexSet>)> = containing
        .into_iter()
        .filter(|(t, edges)| edges.len() >= scheme.multiplicity(r, t.len()))
        .collect();
    let mut found: Vec<VertexSet> = candidates
        .par_iter()
        .filter(|(t, edges)| is_core(edges, *t, scheme.multiplicity(r, t.len()), r))
        .map(|(t, _)| *t)
        .collect();
    found.sort_unstable();
    SetFamily::from_sorted_unchecked(h.n(), found)
}

fn has_member_subset(set: VertexSet, members: &HashSet<VertexSet>, proper_only: bool) -> bool {
    let top = if proper_only { set.len() } else { set.len() + 1 };
    (1..top).any(|size| set.subsets_of_size(size).any(|t| members.contains(&t)))
}

/// The full decomposition of `B(H)`.
pub fn b_kernel(h: &Hypergraph, scheme: ThresholdScheme) -> KernelDecomposition {
    let b_star = b_star(h, scheme);
    let lookup: HashSet<VertexSet> = b_star.members().iter().copied().collect();
    let minimal: Vec<VertexSet> =
        b_star.members().iter().copied().filter(|&t| !has_member_subset(t, &lookup, true)).collect();
    let b_prime = SetFamily::from_sorted_unchecked(h.n(), minimal);
    let plain: Vec<VertexSet> =
        h.edges().iter().copied().filter(|&e| !has_member_subset(e, &lookup, true)).collect();
    let b_dprime = SetFamily::from_sorted_unchecked(h.n(), plain);

    let mut layers: BTreeMap<usize, Vec<VertexSet>> = BTreeMap::new();
    for &s in b_prime.members().iter().chain(b_dprime.members()) {
        layers.entry(s.len()).or_default().push(s);
    }
    let by_size = layers
        .into_iter()
        .map(|(i, mut v)| {
            v.sort_unstable();
            (i, SetFamily::from_sorted_unchecked(h.n(), v))
        })
        .collect();
    KernelDecomposition { scheme, b_star, b_prime, b_dprime, by_size }
}

/// `Σ_i |B_i| · C(n−i, r−i)`, an upper bound on `|H|`.
pub fn kernel_bound(h: &Hypergraph, d: &KernelDecomposition) -> u128 {
    let (n, r) = (h.n() as i64, h.r() as i64);
    d.by_size.iter().map(|(&i, layer)| layer.len() as u128 * binom(n - i as i64, r - i as i64)).sum()
}

/// The edges of `H` containing a member of `B_2 ∪ B_3`, and the auxiliary
/// 3-graph made of `B_3` together with every triple that contains a `B_2`
/// member and lies inside one of those edges.
pub fn reduce_to_3graph(h: &Hypergraph, d: &KernelDecomposition) -> Result<(Hypergraph, Hypergraph)> {
    if h.r() < 3 {
        return Err(Error::Precondition("the 3-graph reduction needs r >= 3".into()));
    }
    let tau = h.cover_number();
    if tau > 2 {
        return Err(Error::Precondition(format!("the 3-graph reduction needs cover number <= 2, found {tau}")));
    }
    let b2: Vec<VertexSet> = d.layer(2).members().to_vec();
    let b3: HashSet<VertexSet> = d.layer(3).members().iter().copied().collect();
    let mut triples: HashSet<VertexSet> = b3.clone();
    let mut kept = Vec::new();
    for &e in h.edges() {
        let pairs: Vec<VertexSet> = b2.iter().copied().filter(|p| p.is_subset(e)).collect();
        let has_b3 = !b3.is_empty() && e.subsets_of_size(3).any(|t| b3.contains(&t));
        if pairs.is_empty() && !has_b3 {
            continue;
        }
        kept.push(e);
        for p in pairs {
            for w in e.difference(p).iter() {
                let mut t = p;
                t.insert(w);
                triples.insert(t);
            }
        }
    }
    let mut triples: Vec<VertexSet> = triples.into_iter().collect();
    triples.sort_unstable();
    Ok((Hypergraph::from_sorted_unchecked(h.n(), h.r(), kept), Hypergraph::from_sorted_unchecked(h.n(), 3, triples)))
}
