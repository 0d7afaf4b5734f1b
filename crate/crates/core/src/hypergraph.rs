//! Uniform hypergraphs, non-uniform set families, and exact matching and
//! cover numbers.

use crate::error::{Error, Result};
use crate::packing;
use crate::vertex_set::{VertexId, VertexSet, MAX_VERTICES};

/// An `r`-uniform family of distinct edges over `{1..n}`.
///
/// Edges are kept sorted (lexicographically by vertex list) and unique, so
/// two hypergraphs with the same edge set compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug, serde::Serialize)]
pub struct Hypergraph {
    n: usize,
    r: usize,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    /// Validates and canonicalizes. Duplicate edges are an error.
    pub fn new(n: usize, r: usize, edges: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        check_ground(n)?;
        if r < 2 {
            return Err(Error::InvalidUniformity(r));
        }
        let ground = VertexSet::full(n);
        let mut edges: Vec<VertexSet> = edges.into_iter().collect();
        for &e in &edges {
            if !e.is_subset(ground) {
                let vertex = e.difference(ground).min().unwrap();
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            if e.len() != r {
                return Err(Error::WrongEdgeLength { edge: e.to_string(), expected: r, found: e.len() });
            }
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].to_string()));
        }
        Ok(Hypergraph { n, r, edges })
    }

    /// Like [`Hypergraph::new`] but silently merges repeated edges.
    pub fn from_edges_dedup(n: usize, r: usize, edges: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        let mut edges: Vec<VertexSet> = edges.into_iter().collect();
        edges.sort_unstable();
        edges.dedup();
        Self::new(n, r, edges)
    }

    /// Builds from explicit vertex lists; handy in tests and examples.
    pub fn from_lists(n: usize, r: usize, lists: &[&[VertexId]]) -> Result<Self> {
        for list in lists {
            if let Some(&v) = list.iter().find(|&&v| v == 0 || v > n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        Self::new(n, r, lists.iter().map(|l| l.iter().collect::<VertexSet>()))
    }

    pub fn empty(n: usize, r: usize) -> Result<Self> {
        Self::new(n, r, [])
    }

    /// All `r`-subsets of `{1..n}`.
    pub fn complete(n: usize, r: usize) -> Result<Self> {
        check_ground(n)?;
        Self::new(n, r, crate::vertex_set::k_subsets(n, r))
    }

    /// Sorted, already-unique edges of the right size; skips validation.
    pub(crate) fn from_sorted_unchecked(n: usize, r: usize, edges: Vec<VertexSet>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|e| e.len() == r && e.is_subset(VertexSet::full(n))));
        Hypergraph { n, r, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains_edge(&self, e: VertexSet) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn is_subfamily_of(&self, other: &Hypergraph) -> bool {
        self.edges.iter().all(|&e| other.contains_edge(e))
    }

    /// Union of all edges.
    pub fn support(&self) -> VertexSet {
        self.edges.iter().fold(VertexSet::EMPTY, |acc, &e| acc.union(e))
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    /// `degrees()[v - 1]` is the degree of `v`.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            for v in e.iter() {
                d[v - 1] += 1;
            }
        }
        d
    }

    /// Keeps the edges satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(VertexSet) -> bool) -> Hypergraph {
        let edges = self.edges.iter().copied().filter(|&e| keep(e)).collect();
        Hypergraph { n: self.n, r: self.r, edges }
    }

    /// Applies a vertex permutation: `perm[v - 1]` is the new label of `v`.
    pub fn relabel(&self, perm: &[VertexId]) -> Hypergraph {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let mut edges: Vec<VertexSet> = self.edges.iter().map(|e| e.map(|v| perm[v - 1])).collect();
        edges.sort_unstable();
        Hypergraph { n: self.n, r: self.r, edges }
    }

    /// Every two edges share a vertex. Vacuously true for fewer than two edges.
    pub fn is_intersecting(&self) -> bool {
        self.edges
            .iter()
            .enumerate()
            .all(|(i, &a)| self.edges[i + 1..].iter().all(|&b| a.intersects(b)))
    }

    /// A maximum set of pairwise disjoint edges.
    pub fn maximum_matching(&self) -> Vec<VertexSet> {
        packing::max_packing(&self.edges, usize::MAX).into_iter().map(|i| self.edges[i]).collect()
    }

    /// The matching number; 0 for the empty hypergraph.
    pub fn matching_number(&self) -> usize {
        self.maximum_matching().len()
    }

    /// A minimum vertex cover, found by iterative deepening on its size.
    /// Among covers of minimum size the search returns the first in
    /// branching order (vertices of the first unhit edge, ascending).
    pub fn minimum_cover(&self) -> VertexSet {
        if self.edges.is_empty() {
            return VertexSet::EMPTY;
        }
        let lower = packing::greedy_packing(&self.edges).len();
        for k in lower.. {
            if let Some(cover) = cover_search(&self.edges, k, VertexSet::EMPTY) {
                return cover;
            }
        }
        unreachable!("the union of all edges is a cover")
    }

    /// The cover number; 0 for the empty hypergraph, 1 exactly for stars.
    pub fn cover_number(&self) -> usize {
        self.minimum_cover().len()
    }

    /// Whether some vertex lies in every edge (the empty family counts).
    pub fn is_star(&self) -> bool {
        self.edges.is_empty() || !self.edges.iter().fold(VertexSet::full(self.n), |a, &e| a.intersection(e)).is_empty()
    }

    /// `H - Z`: drops every edge meeting `z` and relabels the surviving
    /// vertices to `1..n-|Z|` keeping their relative order.
    pub fn delete_vertices(&self, z: VertexSet) -> Hypergraph {
        let z = z.intersection(VertexSet::full(self.n));
        let relabel = order_preserving_relabel(self.n, z);
        let edges: Vec<VertexSet> = self
            .edges
            .iter()
            .filter(|e| e.is_disjoint(z))
            .map(|e| e.map(|v| relabel[v - 1]))
            .collect();
        // Order-preserving relabeling keeps the lexicographic edge order.
        Hypergraph { n: self.n - z.len(), r: self.r, edges }
    }

    /// The link of `v`: all `e - v` with `v ∈ e ∈ H`, on the same ground set.
    pub fn link_graph(&self, v: VertexId) -> SetFamily {
        let members = self.edges.iter().filter(|e| e.contains(v)).map(|e| {
            let mut e = *e;
            e.remove(v);
            e
        });
        SetFamily::from_sorted_unchecked(self.n, members.collect())
    }

    pub fn to_family(&self) -> SetFamily {
        SetFamily::from_sorted_unchecked(self.n, self.edges.clone())
    }
}

/// `map[v - 1]` is the image of `v` after deleting `z`, or 0 for `v ∈ z`.
pub fn order_preserving_relabel(n: usize, z: VertexSet) -> Vec<VertexId> {
    let mut next = 0;
    (1..=n)
        .map(|v| {
            if z.contains(v) {
                0
            } else {
                next += 1;
                next
            }
        })
        .collect()
}

fn check_ground(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    Ok(())
}

fn cover_search(edges: &[VertexSet], budget: usize, cover: VertexSet) -> Option<VertexSet> {
    let Some(&open) = edges.iter().find(|e| e.is_disjoint(cover)) else {
        return Some(cover);
    };
    if budget == 0 {
        return None;
    }
    // Disjoint unhit edges each need their own cover vertex.
    let mut used = VertexSet::EMPTY;
    let mut needed = 0;
    for &e in edges {
        if e.is_disjoint(cover) && e.is_disjoint(used) {
            used = used.union(e);
            needed += 1;
            if needed > budget {
                return None;
            }
        }
    }
    open.iter().find_map(|v| {
        let mut next = cover;
        next.insert(v);
        cover_search(edges, budget - 1, next)
    })
}

/// A family of distinct vertex sets of any sizes over `{1..n}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, serde::Serialize)]
pub struct SetFamily {
    n: usize,
    members: Vec<VertexSet>,
}

impl SetFamily {
    /// Sorts and merges repeated members.
    pub fn new(n: usize, members: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        check_ground(n)?;
        let ground = VertexSet::full(n);
        let mut members: Vec<VertexSet> = members.into_iter().collect();
        if let Some(m) = members.iter().find(|m| !m.is_subset(ground)) {
            return Err(Error::VertexOutOfRange { vertex: m.difference(ground).min().unwrap(), n });
        }
        members.sort_unstable();
        members.dedup();
        Ok(SetFamily { n, members })
    }

    pub(crate) fn from_sorted_unchecked(n: usize, members: Vec<VertexSet>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        SetFamily { n, members }
    }

    pub fn empty(n: usize) -> Self {
        SetFamily { n, members: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    pub fn is_intersecting(&self) -> bool {
        self.members
            .iter()
            .enumerate()
            .all(|(i, &a)| self.members[i + 1..].iter().all(|&b| a.intersects(b)))
    }

    /// No member is a proper subset of another.
    pub fn is_antichain(&self) -> bool {
        self.members.iter().all(|&a| self.members.iter().all(|&b| a == b || !a.is_subset(b)))
    }

    /// Members of exactly `size` elements.
    pub fn of_size(&self, size: usize) -> SetFamily {
        SetFamily { n: self.n, members: self.members.iter().copied().filter(|m| m.len() == size).collect() }
    }

    /// Merges two families over the same ground set.
    pub fn union(&self, other: &SetFamily) -> SetFamily {
        let mut members = self.members.clone();
        members.extend_from_slice(&other.members);
        members.sort_unstable();
        members.dedup();
        SetFamily { n: self.n.max(other.n), members }
    }

    /// Views a uniform family as a hypergraph.
    pub fn to_hypergraph(&self, r: usize) -> Result<Hypergraph> {
        Hypergraph::new(self.n, r, self.members.iter().copied())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vertex_set::k_subsets;
    use proptest::prelude::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    /// Maximum number of pairwise disjoint edges, over all edge subsets.
    fn brute_nu(h: &Hypergraph) -> usize {
        let e = h.edges();
        (0u32..1 << e.len())
            .filter(|m| {
                let pick: Vec<_> = (0..e.len()).filter(|i| m >> i & 1 == 1).collect();
                pick.iter().enumerate().all(|(a, &i)| pick[a + 1..].iter().all(|&j| e[i].is_disjoint(e[j])))
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Smallest vertex set meeting every edge, over all vertex subsets.
    fn brute_tau(h: &Hypergraph) -> usize {
        (0u32..1 << h.n())
            .map(|b| VertexSet::from_bits(b as u128))
            .filter(|c| h.edges().iter().all(|e| e.intersects(*c)))
            .map(|c| c.len())
            .min()
            .unwrap()
    }

    fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
        (2usize..=4, 5usize..=10).prop_flat_map(|(r, n)| {
            let all: Vec<VertexSet> = k_subsets(n, r).collect();
            prop::sample::subsequence(all.clone(), 0..=12.min(all.len()))
                .prop_map(move |edges| Hypergraph::new(n, r, edges).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn nu_and_tau_match_brute_force(h in arb_hypergraph()) {
            let nu = h.matching_number();
            let tau = h.cover_number();
            prop_assert_eq!(nu, brute_nu(&h));
            prop_assert_eq!(tau, brute_tau(&h));
            prop_assert!(nu <= tau && tau <= h.r() * nu);
            prop_assert_eq!(tau == 1, !h.is_empty() && h.is_star());
            if !h.is_empty() {
                prop_assert_eq!(h.is_intersecting(), nu <= 1);
            }
            let cover = h.minimum_cover();
            prop_assert!(h.edges().iter().all(|e| e.intersects(cover)));
        }

        #[test]
        fn deletion_removes_exactly_the_meeting_edges(h in arb_hypergraph(), zbits in any::<u16>()) {
            let z = VertexSet::from_bits(zbits as u128).intersection(VertexSet::full(h.n()));
            let d = h.delete_vertices(z);
            prop_assert_eq!(d.n(), h.n() - z.len());
            prop_assert_eq!(d.len(), h.edges().iter().filter(|e| e.is_disjoint(z)).count());
            prop_assert!(d.edges().iter().all(|e| e.is_subset(VertexSet::full(d.n()))));
            prop_assert!(d.edges().windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn intersecting_examples() {
        assert!(Hypergraph::complete(5, 3).unwrap().is_intersecting());
        assert!(!Hypergraph::from_lists(6, 3, &[&[1, 2, 3], &[4, 5, 6]]).unwrap().is_intersecting());
        assert!(Hypergraph::empty(4, 2).unwrap().is_intersecting());
        assert!(Hypergraph::from_lists(4, 2, &[&[1, 2]]).unwrap().is_intersecting());
    }

    #[test]
    fn matching_and_cover_examples() {
        let m = Hypergraph::from_lists(9, 3, &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]).unwrap();
        assert_eq!(m.matching_number(), 3);
        let star = Hypergraph::new(7, 3, k_subsets(7, 3).filter(|e| e.contains(1))).unwrap();
        assert_eq!(star.matching_number(), 1);
        assert_eq!(star.cover_number(), 1);
        let empty = Hypergraph::empty(5, 3).unwrap();
        assert_eq!((empty.matching_number(), empty.cover_number()), (0, 0));
        assert_eq!(Hypergraph::complete(5, 3).unwrap().cover_number(), 3);
    }

    #[test]
    fn em_12_3_2_has_matching_number_two() {
        // Every edge meets {1, 2}; a perfect search over pairs and triples of
        // disjoint edges finds pairs but no triples.
        let h = Hypergraph::new(12, 3, k_subsets(12, 3).filter(|e| e.intersects(set(&[1, 2])))).unwrap();
        let e = h.edges();
        let has_pair = e.iter().any(|a| e.iter().any(|b| a.is_disjoint(*b)));
        let has_triple = e.iter().any(|a| {
            e.iter().any(|b| a.is_disjoint(*b) && e.iter().any(|c| c.is_disjoint(*a) && c.is_disjoint(*b)))
        });
        assert!(has_pair && !has_triple);
        assert_eq!(h.matching_number(), 2);
    }

    #[test]
    fn deletion_relabels_in_order() {
        let h = Hypergraph::from_lists(6, 3, &[&[1, 2, 3], &[2, 4, 6], &[3, 5, 6]]).unwrap();
        assert_eq!(h.delete_vertices(VertexSet::EMPTY), h);
        let d = h.delete_vertices(set(&[1]));
        assert_eq!(d, Hypergraph::from_lists(5, 3, &[&[1, 3, 5], &[2, 4, 5]]).unwrap());
        let gone = h.delete_vertices(h.support());
        assert!(gone.is_empty());
        assert_eq!(gone.n(), 0);
    }

    #[test]
    fn em_minus_special_vertex_is_full_star() {
        let em = Hypergraph::new(10, 3, k_subsets(10, 3).filter(|e| e.intersects(set(&[1, 2])))).unwrap();
        let star9 = Hypergraph::new(9, 3, k_subsets(9, 3).filter(|e| e.contains(1))).unwrap();
        assert_eq!(em.delete_vertices(set(&[1])), star9);
    }

    #[test]
    fn link_examples() {
        let star = Hypergraph::new(6, 3, k_subsets(6, 3).filter(|e| e.contains(1))).unwrap();
        let link = star.link_graph(1);
        assert_eq!(link.members(), k_subsets(6, 2).filter(|e| !e.contains(1)).collect::<Vec<_>>().as_slice());
        let small = Hypergraph::from_lists(6, 3, &[&[1, 2, 3]]).unwrap();
        assert!(small.link_graph(6).is_empty());
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(Hypergraph::from_lists(5, 3, &[&[1, 2, 6]]), Err(Error::VertexOutOfRange { vertex: 6, n: 5 })));
        assert!(matches!(Hypergraph::from_lists(5, 3, &[&[1, 2]]), Err(Error::WrongEdgeLength { .. })));
        assert!(matches!(Hypergraph::from_lists(5, 2, &[&[1, 2], &[2, 1]]), Err(Error::DuplicateEdge(_))));
        assert!(matches!(Hypergraph::empty(129, 3), Err(Error::TooManyVertices(129))));
        assert!(matches!(Hypergraph::empty(5, 1), Err(Error::InvalidUniformity(1))));
    }

    #[test]
    fn family_helpers() {
        let f = SetFamily::new(5, [set(&[1, 2]), set(&[1]), set(&[3, 4, 5]), set(&[1])]).unwrap();
        assert_eq!(f.len(), 3);
        assert!(!f.is_antichain());
        assert!(!f.is_intersecting());
        assert_eq!(f.of_size(2).members(), &[set(&[1, 2])]);
    }
}
