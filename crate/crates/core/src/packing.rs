//! Exact maximum set packing by branch and bound.
//!
//! Used for the matching number and for fixed-core sunflower tests, where a
//! sunflower with core `T` is a packing of the reduced sets `S - T`.

use crate::vertex_set::VertexSet;

/// Indices of a greedy packing. Sets are taken in order of increasing total
/// vertex degree, which favours sets that block few others.
pub(crate) fn greedy_packing(sets: &[VertexSet]) -> Vec<usize> {
    let mut degree = [0u32; 128];
    for s in sets {
        for v in s.iter() {
            degree[v - 1] += 1;
        }
    }
    let mut order: Vec<usize> = (0..sets.len()).collect();
    order.sort_by_key(|&i| (sets[i].iter().map(|v| degree[v - 1]).sum::<u32>(), i));
    let mut used = VertexSet::EMPTY;
    let mut picked = Vec::new();
    for i in order {
        if sets[i].is_disjoint(used) {
            used = used.union(sets[i]);
            picked.push(i);
        }
    }
    picked.sort_unstable();
    picked
}

/// Size of a greedy vertex cover of the nonempty members: an upper bound on
/// any packing of them.
pub(crate) fn greedy_cover_size(sets: &[VertexSet]) -> usize {
    let mut live: Vec<VertexSet> = sets.iter().copied().filter(|s| !s.is_empty()).collect();
    let mut size = 0;
    while !live.is_empty() {
        let mut degree = [0u32; 128];
        for s in &live {
            for v in s.iter() {
                degree[v - 1] += 1;
            }
        }
        let best = (0..128).max_by_key(|&i| (degree[i], std::cmp::Reverse(i))).unwrap();
        let hit = VertexSet::singleton(best + 1);
        live.retain(|s| s.is_disjoint(hit));
        size += 1;
    }
    size
}

/// A maximum packing (as indices into `sets`), or any packing of size at
/// least `goal` as soon as one is found. Empty sets are always included.
pub(crate) fn max_packing(sets: &[VertexSet], goal: usize) -> Vec<usize> {
    let empties: Vec<usize> = (0..sets.len()).filter(|&i| sets[i].is_empty()).collect();
    let live: Vec<(usize, VertexSet)> =
        sets.iter().copied().enumerate().filter(|(_, s)| !s.is_empty()).collect();
    let goal = goal.saturating_sub(empties.len());

    let plain: Vec<VertexSet> = live.iter().map(|&(_, s)| s).collect();
    let mut best: Vec<usize> = greedy_packing(&plain).into_iter().map(|i| live[i].0).collect();
    let upper = greedy_cover_size(&plain);
    if best.len() < goal.min(upper) {
        let mut search = Search { best: &mut best, goal: goal.min(upper), chosen: Vec::new() };
        search.run(&live);
    }
    let mut out = best;
    out.extend(empties);
    out.sort_unstable();
    out
}

/// Whether `sets` contains `k` pairwise disjoint members.
pub(crate) fn has_packing(sets: &[VertexSet], k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if sets.len() < k {
        return false;
    }
    max_packing(sets, k).len() >= k
}

struct Search<'a> {
    best: &'a mut Vec<usize>,
    goal: usize,
    chosen: Vec<usize>,
}

impl Search<'_> {
    /// Returns true once the goal has been reached.
    fn run(&mut self, sets: &[(usize, VertexSet)]) -> bool {
        if self.best.len() >= self.goal {
            return true;
        }
        if sets.is_empty() {
            if self.chosen.len() > self.best.len() {
                *self.best = self.chosen.clone();
            }
            return self.best.len() >= self.goal;
        }
        let mut union = VertexSet::EMPTY;
        let mut min_size = usize::MAX;
        let mut degree = [0u32; 128];
        for &(_, s) in sets {
            union = union.union(s);
            min_size = min_size.min(s.len());
            for v in s.iter() {
                degree[v - 1] += 1;
            }
        }
        let bound = sets.len().min(union.len() / min_size);
        if self.chosen.len() + bound <= self.best.len() {
            return false;
        }
        // Branch on the least-covered vertex: either one of its few sets is
        // used, or the vertex stays unused.
        let pivot = union.iter().min_by_key(|&v| (degree[v - 1], v)).unwrap();
        let pivot_set = VertexSet::singleton(pivot);
        for &(i, s) in sets.iter().filter(|(_, s)| s.contains(pivot)) {
            let rest: Vec<(usize, VertexSet)> =
                sets.iter().copied().filter(|&(_, t)| t.is_disjoint(s)).collect();
            self.chosen.push(i);
            let done = self.run(&rest);
            self.chosen.pop();
            if done {
                return true;
            }
        }
        let rest: Vec<(usize, VertexSet)> =
            sets.iter().copied().filter(|&(_, t)| t.is_disjoint(pivot_set)).collect();
        self.run(&rest)
    }
}
