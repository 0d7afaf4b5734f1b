//! The named extremal families and their size formulas.
//!
//! Every family here is symmetric in its non-special ("generic") vertices:
//! whether an `r`-set is an edge depends only on which special vertices it
//! contains. A [`Template`] records this as a list of generators, each a set
//! of special vertices plus a minimum number of generic vertices; an `r`-set
//! is an edge iff it contains the specials of some generator and at least
//! that many generic vertices. The same description drives generation,
//! degree bounds, and containment search in [`crate::classifier`].
//!
//! Canonical layout: special vertices take the lowest ids in the order
//! listed by [`layout_table`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::{binom, VertexId, VertexSet};

/// Members of the 3-graph list `H(n), H_0(n), ..., H_5(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum H3Index {
    /// The full star `H(n) = EM(n, 3, 1)`.
    Star,
    H0,
    H1,
    H2,
    H3,
    H4,
    H5,
}

impl H3Index {
    /// In the fixed classification order.
    pub const ALL: [H3Index; 7] =
        [H3Index::Star, H3Index::H0, H3Index::H1, H3Index::H2, H3Index::H3, H3Index::H4, H3Index::H5];

    pub fn from_number(i: usize) -> Option<H3Index> {
        H3Index::ALL.get(i + 1).copied()
    }

    pub fn number(self) -> Option<usize> {
        H3Index::ALL.iter().position(|&x| x == self).and_then(|p| p.checked_sub(1))
    }
}

impl fmt::Display for H3Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.number() {
            Some(i) => write!(f, "H{i}"),
            None => f.write_str("H"),
        }
    }
}

impl std::str::FromStr for H3Index {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        if matches!(s.as_str(), "star" | "h" | "s") {
            return Ok(H3Index::Star);
        }
        let digits = s.trim_start_matches('h');
        digits
            .parse::<usize>()
            .ok()
            .and_then(H3Index::from_number)
            .ok_or_else(|| Error::InvalidParams(format!("`{s}` is not one of star, 0..5")))
    }
}

/// A named construction together with its own parameter (`s`, `t` or `i`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Construction {
    /// All `r`-sets meeting `{x_1..x_s}`.
    Em { s: usize },
    /// The generalized Hilton–Milner family; `t = 1` is `HM(n, r)` and
    /// `t = 0` aliases [`Construction::Hm0`].
    HmT { t: usize },
    /// All `r`-sets containing two of `{x, x_1, x_2}`.
    Hm0,
    /// The sharpness family `HM''(n, r)`.
    HmDp,
    /// Frankl's family with cover number 3.
    Fp,
    /// One of the seven 3-graphs of the classification.
    H3 { i: H3Index },
    /// All `r`-sets containing an edge of `H_i(n)`.
    H3Lift { i: H3Index },
}

impl Construction {
    /// Assembles a construction from CLI-style pieces.
    pub fn from_parts(id: &str, s: Option<usize>, t: Option<usize>, i: Option<H3Index>) -> Result<Self> {
        let need = |v: Option<usize>, name: &str| {
            v.ok_or_else(|| Error::InvalidParams(format!("`{id}` needs --{name}")))
        };
        let need_i = || i.ok_or_else(|| Error::InvalidParams(format!("`{id}` needs --i")));
        Ok(match id.to_ascii_lowercase().replace('-', "_").as_str() {
            "em" => Construction::Em { s: need(s, "s")? },
            "hm" => Construction::HmT { t: t.unwrap_or(1) },
            "hm_t" | "hmt" => Construction::HmT { t: need(t, "t")? },
            "hm0" => Construction::Hm0,
            "hm_dp" | "hmdp" | "hm''" => Construction::HmDp,
            "fp" => Construction::Fp,
            "h3fam" | "h3" => Construction::H3 { i: need_i()? },
            "h3lift" | "lift" => Construction::H3Lift { i: need_i()? },
            other => return Err(Error::InvalidParams(format!("unknown construction `{other}`"))),
        })
    }

    /// The template instantiated on `n` vertices with uniformity `r`.
    pub fn template(self, n: usize, r: usize) -> Result<Template> {
        Template::new(self, n, r)
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Construction::Em { s } => write!(f, "EM(s={s})"),
            Construction::HmT { t } => write!(f, "HM_T(t={t})"),
            Construction::Hm0 => f.write_str("HM0"),
            Construction::HmDp => f.write_str("HM_DP"),
            Construction::Fp => f.write_str("FP"),
            Construction::H3 { i } => write!(f, "{i}"),
            Construction::H3Lift { i } => write!(f, "{i}-lift"),
        }
    }
}

/// Specials that must lie in an edge, plus how many generic vertices it
/// needs besides them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Generator {
    /// Special `j` (0-based) is element `j + 1`.
    pub specials: VertexSet,
    pub generic: usize,
}

/// A construction on a fixed ground set, described by its special
/// vertices and generators.
#[derive(Clone, Debug)]
pub struct Template {
    construction: Construction,
    n: usize,
    r: usize,
    labels: Vec<String>,
    generators: Vec<Generator>,
    /// Half-open index ranges of specials that may be permuted freely.
    symmetric_runs: Vec<(usize, usize)>,
}

fn labels(prefix: &str, range: std::ops::RangeInclusive<usize>) -> Vec<String> {
    range.map(|i| format!("{prefix}{i}")).collect()
}

/// Specials by 0-based index.
fn sp(indices: &[usize]) -> VertexSet {
    indices.iter().map(|&j| j + 1).collect()
}

fn g(indices: &[usize], generic: usize) -> Generator {
    Generator { specials: sp(indices), generic }
}

fn invalid(c: Construction, n: usize, r: usize, why: &str) -> Error {
    Error::InvalidParams(format!("{c} on n={n}, r={r}: {why}"))
}

impl Template {
    fn new(c: Construction, n: usize, r: usize) -> Result<Template> {
        if r < 2 || n < r {
            return Err(invalid(c, n, r, "need n >= r >= 2"));
        }
        if n > crate::MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let check = |ok: bool, why: &str| if ok { Ok(()) } else { Err(invalid(c, n, r, why)) };
        let mut t = match c {
            Construction::Em { s } => {
                check(s >= 1 && n >= r + s, "EM needs s >= 1 and n >= r + s")?;
                Template {
                    labels: labels("x", 1..=s),
                    generators: (0..s).map(|j| g(&[j], 0)).collect(),
                    symmetric_runs: vec![(0, s)],
                    ..Template::blank(c, n, r)
                }
            }
            Construction::HmT { t: 0 } | Construction::Hm0 => {
                check(n > r, "HM0 needs n >= r + 1")?;
                Template {
                    labels: vec!["x".into(), "x1".into(), "x2".into()],
                    generators: vec![g(&[0, 1], 0), g(&[0, 2], 0), g(&[1, 2], 0)],
                    symmetric_runs: vec![(0, 3)],
                    ..Template::blank(c, n, r)
                }
            }
            Construction::HmT { t } => {
                check(r >= 3 && n >= 2 * r, "HM_T needs r >= 3 and n >= 2r")?;
                check(t < r || t == n - r, "t must lie in {0, 1..r-1, n-r}")?;
                // x is special 0, x_1..x_{r-1} are 1..r-1.
                let xs: Vec<usize> = (1..r).collect();
                let mut generators: Vec<Generator> = xs.iter().map(|&i| g(&[0, i], 0)).collect();
                let mut labels = vec!["x".to_string()];
                labels.extend(self::labels("x", 1..=r - 1));
                if t == n - r {
                    // The y's are all remaining vertices, so they stay generic.
                    generators.push(g(&xs, 1));
                    Template { labels, generators, symmetric_runs: vec![(1, r)], ..Template::blank(c, n, r) }
                } else {
                    labels.extend(self::labels("y", 1..=t));
                    for j in 0..t {
                        let mut gen = xs.clone();
                        gen.push(r + j);
                        generators.push(g(&gen, 0));
                    }
                    let mut core = vec![0];
                    core.extend(r..r + t);
                    generators.push(g(&core, 0));
                    Template { labels, generators, symmetric_runs: vec![(1, r), (r, r + t)], ..Template::blank(c, n, r) }
                }
            }
            Construction::HmDp => {
                check(r >= 4 && n >= r + 4, "HM_DP needs r >= 4 and n >= r + 4")?;
                // x = 0, x_1..x_{r-2} = 1..r-2, y1, y1', y2, y2' = r-1..r+2.
                let xs: Vec<usize> = (1..r - 1).collect();
                let (y1, y1p, y2, y2p) = (r - 1, r, r + 1, r + 2);
                let mut generators: Vec<Generator> = xs.iter().map(|&i| g(&[0, i], 0)).collect();
                for a in [y1, y1p] {
                    for b in [y2, y2p] {
                        generators.push(g(&[0, a, b], 0));
                    }
                }
                for pair in [[y1, y1p], [y2, y2p]] {
                    let mut gen = xs.clone();
                    gen.extend(pair);
                    generators.push(g(&gen, 0));
                }
                let mut labels = vec!["x".to_string()];
                labels.extend(self::labels("x", 1..=r - 2));
                labels.extend(["y1", "y1'", "y2", "y2'"].map(String::from));
                Template {
                    labels,
                    generators,
                    symmetric_runs: vec![(1, r - 1), (r - 1, r + 1), (r + 1, r + 3)],
                    ..Template::blank(c, n, r)
                }
            }
            Construction::Fp => {
                check(r >= 3 && n >= 2 * r, "FP needs r >= 3 and n >= 2r")?;
                Template {
                    labels: fp_labels(r),
                    generators: fp_generator_sets(r)
                        .into_iter()
                        .map(|s| Generator { specials: s, generic: 0 })
                        .collect(),
                    symmetric_runs: vec![(1, 3), (3, r + 1), (r + 1, 2 * r)],
                    ..Template::blank(c, n, r)
                }
            }
            Construction::H3 { i } => {
                check(r == 3 && n >= 6, "the 3-graph families need r = 3 and n >= 6")?;
                small_template(c, i, n)?
            }
            Construction::H3Lift { i } => {
                check(r >= 4 && n >= 6 && n > r, "lifts need r >= 4 and n >= max(6, r + 1)")?;
                Template { construction: c, r, ..small_template(c, i, n)? }
            }
        };
        t.construction = c;
        Ok(t)
    }

    fn blank(c: Construction, n: usize, r: usize) -> Template {
        Template { construction: c, n, r, labels: Vec::new(), generators: Vec::new(), symmetric_runs: Vec::new() }
    }

    pub fn construction(&self) -> Construction {
        self.construction
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Names of the special vertices in layout order.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn special_count(&self) -> usize {
        self.labels.len()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn symmetric_runs(&self) -> &[(usize, usize)] {
        &self.symmetric_runs
    }

    fn generic_count(&self) -> usize {
        self.n - self.special_count()
    }

    /// Whether an `r`-set meeting the specials exactly in `pattern` (special
    /// `j` as element `j + 1`) is an edge.
    pub fn admits(&self, pattern: VertexSet) -> bool {
        let k = pattern.len();
        if k > self.r || self.r - k > self.generic_count() {
            return false;
        }
        let generic = self.r - k;
        self.generators.iter().any(|g| g.specials.is_subset(pattern) && generic >= g.generic)
    }

    /// Every admissible pattern, by increasing size.
    pub fn admissible_patterns(&self) -> Vec<VertexSet> {
        let specials = VertexSet::full(self.special_count());
        (0..=self.r.min(self.special_count()))
            .flat_map(|k| specials.subsets_of_size(k))
            .filter(|&p| self.admits(p))
            .collect()
    }

    /// The edge set in canonical layout.
    pub fn build(&self) -> Hypergraph {
        let map: Vec<VertexId> = (1..=self.special_count()).collect();
        self.build_with_map(&map)
    }

    /// The edge set with special `j` placed at `map[j]` and the generic
    /// vertices filling the remaining ids in increasing order.
    pub fn build_with_map(&self, map: &[VertexId]) -> Hypergraph {
        assert_eq!(map.len(), self.special_count());
        let placed: VertexSet = map.iter().collect();
        assert_eq!(placed.len(), map.len(), "special images must be distinct");
        let generic = VertexSet::full(self.n).difference(placed);
        let mut edges = Vec::new();
        for p in self.admissible_patterns() {
            let image = p.map(|j| map[j - 1]);
            for rest in generic.subsets_of_size(self.r - p.len()) {
                edges.push(image.union(rest));
            }
        }
        edges.sort_unstable();
        Hypergraph::from_sorted_unchecked(self.n, self.r, edges)
    }

    /// Degree of each special vertex in the full template.
    pub fn special_degrees(&self) -> Vec<u128> {
        let g = self.generic_count() as i64;
        let patterns = self.admissible_patterns();
        (1..=self.special_count())
            .map(|j| {
                patterns
                    .iter()
                    .filter(|p| p.contains(j))
                    .map(|p| binom(g, (self.r - p.len()) as i64))
                    .sum()
            })
            .collect()
    }

    /// Degree of any generic vertex in the full template.
    pub fn generic_degree(&self) -> u128 {
        let g = self.generic_count() as i64;
        self.admissible_patterns().iter().map(|p| binom(g - 1, self.r as i64 - p.len() as i64 - 1)).sum()
    }
}

fn small_template(c: Construction, i: H3Index, n: usize) -> Result<Template> {
    // The base 3-graph templates; lifts reuse their generators.
    let base = match i {
        H3Index::Star => Template::new(Construction::Em { s: 1 }, n, 3)?,
        H3Index::H0 => Template::new(Construction::Hm0, n, 3)?,
        H3Index::H1 => Template::new(Construction::HmT { t: 1 }, n, 3)?,
        H3Index::H2 => Template::new(Construction::HmT { t: 2 }, n, 3)?,
        H3Index::H3 => {
            let mut generators = vec![g(&[0, 1], 0)];
            for v in [0, 1] {
                for (a, b) in [(2, 3), (2, 4), (3, 4)] {
                    generators.push(g(&[v, a, b], 0));
                }
            }
            Template {
                labels: ["v1", "v2", "y1", "y2", "y3"].map(String::from).to_vec(),
                generators,
                symmetric_runs: vec![(0, 2), (2, 5)],
                ..Template::blank(c, n, 3)
            }
        }
        H3Index::H4 | H3Index::H5 => {
            // v1, v2, z11, z11', z21, z21' = 0..5
            let (v1, v2, z11, z11p, z21, z21p) = (0, 1, 2, 3, 4, 5);
            let triples: [[usize; 3]; 6] = if i == H3Index::H4 {
                [[v1, z11, z11p], [v1, z21, z21p], [v2, z11, z21], [v2, z11, z21p], [v2, z11p, z21], [v2, z11p, z21p]]
            } else {
                [[v1, z11, z11p], [v1, z21, z21p], [v1, z11, z21p], [v2, z11, z21p], [v2, z11, z21], [v2, z11p, z21p]]
            };
            let mut generators = vec![g(&[v1, v2], 0)];
            generators.extend(triples.iter().map(|t| g(t, 0)));
            Template {
                labels: ["v1", "v2", "z11", "z11'", "z21", "z21'"].map(String::from).to_vec(),
                generators,
                symmetric_runs: if i == H3Index::H4 { vec![(2, 4), (4, 6)] } else { Vec::new() },
                ..Template::blank(c, n, 3)
            }
        }
    };
    Ok(Template { construction: c, n, ..base })
}

fn fp_labels(r: usize) -> Vec<String> {
    let mut l = vec!["x".to_string()];
    l.extend(labels("y", 1..=r));
    l.extend(labels("z", 1..=r - 1));
    l
}

/// The generator family of Frankl's construction as special-index sets:
/// x = 1, Y = 2..=r+1 (y1 = 2, y2 = 3), Z = r+2..=2r.
fn fp_generator_sets(r: usize) -> Vec<VertexSet> {
    let x = 1;
    let ys: Vec<usize> = (2..=r + 1).collect();
    let zs: Vec<usize> = (r + 2..=2 * r).collect();
    let mut out = Vec::new();
    for &y in &ys {
        for &z in &zs {
            out.push([x, y, z].iter().collect());
        }
    }
    out.push(ys.iter().collect());
    out.push([x, ys[0], ys[1]].iter().collect());
    for &y in &ys[..2] {
        let mut s: VertexSet = zs.iter().collect();
        s.insert(y);
        out.push(s);
    }
    out
}

/// All `r`-subsets of `{1..n}` containing at least one generator.
pub fn generator_closure(n: usize, r: usize, generators: &[VertexSet]) -> Hypergraph {
    let ground = VertexSet::full(n);
    let mut edges = Vec::new();
    for &gen in generators {
        if gen.len() > r {
            continue;
        }
        for rest in ground.difference(gen).subsets_of_size(r - gen.len()) {
            edges.push(gen.union(rest));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Hypergraph::from_sorted_unchecked(n, r, edges)
}

/// The exact edge set of a construction in canonical layout.
pub fn build_construction(c: Construction, n: usize, r: usize) -> Result<Hypergraph> {
    let template = c.template(n, r)?;
    Ok(match c {
        // Frankl's family is defined as the closure of its generator family.
        Construction::Fp => generator_closure(n, r, &fp_generator_sets(r)),
        _ => template.build(),
    })
}

fn hm_t_size(n: i64, r: i64, t: i64) -> u128 {
    let base = binom(n - 1, r - 1) - binom(n - r, r - 1);
    let tail = if t < r { binom(n - r - t, r - 1 - t) } else { 0 };
    base + t as u128 + tail
}

fn hm0_size(n: i64, r: i64) -> u128 {
    3 * binom(n - 3, r - 2) + binom(n - 3, r - 3)
}

fn hm_dp_closed_form(n: i64, r: i64) -> u128 {
    let m = n - r - 3;
    binom(n - 1, r - 1) - binom(n - r + 1, r - 1)
        + 4 * binom(m, r - 3)
        + 4 * binom(m, r - 4)
        + binom(m, r - 5)
        + 2
}

/// `|build_construction(c, n, r)|`, from the closed form where one is
/// known and by counting the built family otherwise (FP, `HM''` at r = 4,
/// and lifts other than the star and `H_0`).
pub fn size_formula(c: Construction, n: usize, r: usize) -> Result<u128> {
    c.template(n, r)?;
    let (ni, ri) = (n as i64, r as i64);
    let counted = || build_construction(c, n, r).map(|h| h.len() as u128);
    Ok(match c {
        Construction::Em { s } => binom(ni, ri) - binom(ni - s as i64, ri),
        Construction::HmT { t: 0 } | Construction::Hm0 => hm0_size(ni, ri),
        Construction::HmT { t } => hm_t_size(ni, ri, t as i64),
        Construction::HmDp if r >= 5 => hm_dp_closed_form(ni, ri),
        Construction::HmDp | Construction::Fp => counted()?,
        Construction::H3 { i } => match i {
            H3Index::Star => binom(ni - 1, 2),
            H3Index::H0 => hm0_size(ni, 3),
            H3Index::H1 => hm_t_size(ni, 3, 1),
            H3Index::H2 => hm_t_size(ni, 3, 2),
            H3Index::H3 | H3Index::H4 | H3Index::H5 => n as u128 + 4,
        },
        Construction::H3Lift { i: H3Index::Star } => binom(ni - 1, ri - 1),
        Construction::H3Lift { i: H3Index::H0 } => hm0_size(ni, ri),
        Construction::H3Lift { .. } => counted()?,
    })
}

/// The documented special-vertex layout of every construction.
pub fn layout_table() -> String {
    [
        "construction        special vertices (ids in order)",
        "EM(n,r,s)           x1..xs = 1..s",
        "HM_T, 1<=t<=r-1     x = 1, x1..x(r-1) = 2..r, y1..yt = r+1..r+t",
        "HM_T, t = n-r       x = 1, x1..x(r-1) = 2..r; y1..y(n-r) are all remaining vertices",
        "HM_T, t = 0 / HM0   x = 1, x1 = 2, x2 = 3",
        "HM_DP               x = 1, x1..x(r-2) = 2..r-1, y1 = r, y1' = r+1, y2 = r+2, y2' = r+3",
        "FP                  x = 1, Y = 2..r+1 with y1 = 2, y2 = 3, Z = r+2..2r",
        "H3FAM star (H)      x = 1",
        "H3FAM 0..2          as HM0 and HM_T with r = 3",
        "H3FAM 3             v1 = 1, v2 = 2, y1 = 3, y2 = 4, y3 = 5",
        "H3FAM 4, 5          v1 = 1, v2 = 2, z11 = 3, z11' = 4, z21 = 5, z21' = 6",
        "H3LIFT i            the layout of H3FAM i",
    ]
    .join("\n")
}
