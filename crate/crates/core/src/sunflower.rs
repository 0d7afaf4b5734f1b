//! Sunflowers (Δ-systems): exact detection and the Erdős–Rado threshold.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::SetFamily;
use crate::packing::has_packing;
use crate::vertex_set::VertexSet;

/// `k >= 2` distinct sets whose pairwise intersections all equal `core`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sunflower {
    pub core: VertexSet,
    /// Sorted ascending.
    pub members: Vec<VertexSet>,
}

impl Sunflower {
    /// Checks the definition directly, independent of how the witness was
    /// found.
    pub fn is_valid(&self) -> bool {
        let m = &self.members;
        if m.len() < 2 || m.windows(2).any(|w| w[0] >= w[1]) {
            return false;
        }
        (0..m.len()).all(|i| (i + 1..m.len()).all(|j| m[i].intersection(m[j]) == self.core))
    }

    pub fn k(&self) -> usize {
        self.members.len()
    }
}

impl fmt::Display for Sunflower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "core {}:", self.core)?;
        for m in &self.members {
            write!(f, " {m}")?;
        }
        Ok(())
    }
}

/// Lexicographically least completion of `chosen` to `k` members with
/// core `core`, drawing only from `members[start..]`.
fn complete(
    members: &[VertexSet],
    core: VertexSet,
    k: usize,
    mut chosen: Vec<VertexSet>,
    start: usize,
) -> Option<Vec<VertexSet>> {
    let mut used = chosen.iter().fold(VertexSet::EMPTY, |acc, s| acc.union(s.difference(core)));
    let mut pool: Vec<usize> = (start..members.len())
        .filter(|&i| core.is_subset(members[i]) && members[i].difference(core).is_disjoint(used))
        .collect();
    // Greedy in index order, taking each candidate that still admits a
    // completion: with an exact feasibility test this yields the lex-least.
    while chosen.len() < k {
        let need = k - chosen.len();
        let reduced = |pool: &[usize]| pool.iter().map(|&i| members[i].difference(core)).collect::<Vec<_>>();
        if !has_packing(&reduced(&pool), need) {
            return None;
        }
        let mut advanced = false;
        for (pos, &i) in pool.iter().enumerate() {
            let petal = members[i].difference(core);
            let rest: Vec<usize> =
                pool[pos + 1..].iter().copied().filter(|&j| members[j].difference(core).is_disjoint(petal)).collect();
            if need == 1 || has_packing(&reduced(&rest), need - 1) {
                chosen.push(members[i]);
                used = used.union(petal);
                pool = rest;
                advanced = true;
                break;
            }
        }
        if !advanced {
            return None;
        }
    }
    debug_assert!(used.is_disjoint(core));
    Some(chosen)
}

/// A `k`-sunflower among the members of `family`, if any. The search is
/// complete; the witness returned is the lexicographically least by sorted
/// member list.
pub fn find_sunflower(family: &SetFamily, k: usize) -> Option<Sunflower> {
    assert!(k >= 2, "a sunflower needs at least two members");
    let m = family.members();
    if m.len() < k {
        return None;
    }
    // Whether any k-sunflower has this core at all.
    let mut feasible: HashMap<VertexSet, bool> = HashMap::new();
    for a in 0..m.len() {
        for b in a + 1..m.len() {
            let core = m[a].intersection(m[b]);
            if k == 2 {
                return Some(Sunflower { core, members: vec![m[a], m[b]] });
            }
            let ok = *feasible.entry(core).or_insert_with(|| {
                let reduced: Vec<VertexSet> =
                    m.iter().filter(|s| core.is_subset(**s)).map(|s| s.difference(core)).collect();
                has_packing(&reduced, k)
            });
            if !ok {
                continue;
            }
            if let Some(members) = complete(m, core, k, vec![m[a], m[b]], b + 1) {
                return Some(Sunflower { core, members });
            }
        }
    }
    None
}

/// A `k`-sunflower whose core is exactly `core`, if any (lex-least).
pub fn find_sunflower_with_core(family: &SetFamily, core: VertexSet, k: usize) -> Option<Sunflower> {
    assert!(k >= 2, "a sunflower needs at least two members");
    complete(family.members(), core, k, Vec::new(), 0).map(|members| Sunflower { core, members })
}

/// `k^i * i!`: every `i`-uniform family with at least this many members
/// contains a `k`-sunflower.
pub fn er_bound(k: u64, i: u64) -> Result<u128> {
    if k == 0 || i == 0 {
        return Err(Error::InvalidParams("er_bound needs k, i >= 1".into()));
    }
    let overflow = || Error::Overflow(format!("er_bound({k}, {i})"));
    let exp = u32::try_from(i).map_err(|_| overflow())?;
    let power = u128::from(k).checked_pow(exp).ok_or_else(overflow)?;
    let factorial = (1..=u128::from(i)).try_fold(1u128, |acc, j| acc.checked_mul(j)).ok_or_else(overflow)?;
    power.checked_mul(factorial).ok_or_else(overflow)
}
