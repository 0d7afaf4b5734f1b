//! Fixed inputs shared by the benchmarks.

use ifs_core::constructions::build_construction;
use ifs_core::{Construction, Hypergraph};

/// A named construction, panicking on invalid parameters.
pub fn family(c: Construction, n: usize, r: usize) -> Hypergraph {
    build_construction(c, n, r).expect("benchmark parameters are valid")
}

/// `h` with its vertices reversed, so searches cannot lean on the layout.
pub fn scrambled(h: &Hypergraph) -> Hypergraph {
    let n = h.n();
    let perm: Vec<usize> = (1..=n).rev().collect();
    h.relabel(&perm)
}
