//! Random intersecting families for property checks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::constructions::{build_construction, Construction, H3Index};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// Intersecting constructions defined on `n` vertices with uniformity `r`.
fn intersecting_templates(n: usize, r: usize) -> Vec<Construction> {
    let mut out = vec![Construction::Em { s: 1 }, Construction::Hm0, Construction::Fp, Construction::HmDp];
    out.extend((1..r).map(|t| Construction::HmT { t }));
    out.push(Construction::HmT { t: n.saturating_sub(r) });
    if r == 3 {
        out.extend(H3Index::ALL.iter().map(|&i| Construction::H3 { i }));
    } else {
        out.extend(H3Index::ALL.iter().map(|&i| Construction::H3Lift { i }));
    }
    out.retain(|c| c.template(n, r).is_ok());
    out
}

fn random_set(rng: &mut impl Rng, n: usize, r: usize) -> VertexSet {
    let mut ground: Vec<usize> = (1..=n).collect();
    ground.partial_shuffle(rng, r);
    ground[..r].iter().collect()
}

/// Keeps adding random `r`-sets that meet every edge so far.
fn grow(rng: &mut impl Rng, mut edges: Vec<VertexSet>, n: usize, r: usize, target: usize) -> Vec<VertexSet> {
    let mut attempts = 0;
    while edges.len() < target && attempts < 40 * target {
        attempts += 1;
        let e = random_set(rng, n, r);
        if !edges.contains(&e) && edges.iter().all(|f| f.intersects(e)) {
            edges.push(e);
        }
    }
    edges
}

/// A random intersecting `r`-graph on at most `max_n` vertices with at most
/// `max_edges` (>= 1) edges: a random piece of a named construction, a
/// greedy random family, or a construction piece extended greedily, under
/// a random relabeling.
pub fn random_intersecting(rng: &mut impl Rng, r: usize, max_n: usize, max_edges: usize) -> Hypergraph {
    let lo = (2 * r).max(r + 4).max(6).min(max_n);
    let n = rng.gen_range(lo..=max_n);
    let target = rng.gen_range(1..=max_edges);
    let kind = rng.gen_range(0..3);
    let templates = intersecting_templates(n, r);
    let mut edges = if kind == 1 || templates.is_empty() {
        grow(rng, Vec::new(), n, r, target)
    } else {
        let c = *templates.choose(rng).expect("nonempty");
        let full = build_construction(c, n, r).expect("valid template");
        let take = if kind == 0 { target } else { rng.gen_range(1..=target) };
        let mut picked: Vec<VertexSet> = full.edges().choose_multiple(rng, take.min(full.len())).copied().collect();
        if kind == 2 {
            picked = grow(rng, picked, n, r, target);
        }
        picked
    };
    edges.sort_unstable();
    let mut perm: Vec<usize> = (1..=n).collect();
    perm.shuffle(rng);
    Hypergraph::new(n, r, edges).expect("distinct edges").relabel(&perm)
}
