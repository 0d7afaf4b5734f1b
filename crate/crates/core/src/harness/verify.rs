//! Scripted checks of the finitely checkable statements.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::canon::isomorphic;
use super::enumerate::{for_each_level, EnumerationFilter, DEFAULT_CEILING};
use super::folk::folk_search;
use super::random::random_intersecting;
use crate::classifier::{classify_3graph, embed, VerdictKind};
use crate::constructions::{build_construction, size_formula, Construction, H3Index};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::io::to_text;
use crate::kernel::{b_kernel, kernel_bound, ThresholdScheme};
use crate::sunflower::find_sunflower;
use crate::vertex_set::VertexSet;

/// Counterexamples kept in a report; the total is noted separately.
const MAX_RECORDED: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Statement {
    /// Intersecting 3-graphs with cover number >= 3 have at most 10 edges.
    Folk,
    /// Intersecting 3-graphs with cover number <= 2 lie in one of the seven
    /// 3-graph templates.
    Th4Main,
    /// Intersecting 3-graphs with at least 11 edges do.
    Th4A,
    /// With more than `n + 4` edges they lie in `H, H_0, H_1` or `H_2`.
    Th4B,
    /// If deleting one vertex leaves at most two edges, the family lies in
    /// `H, H_0, H_1, H_2` or `H_4`.
    Lemma2Edges,
    /// Closed forms agree with the built families.
    Counts,
    /// Kernel invariants on random intersecting families.
    KernelProps,
}

impl Statement {
    pub const ALL: [Statement; 7] = [
        Statement::Folk,
        Statement::Th4Main,
        Statement::Th4A,
        Statement::Th4B,
        Statement::Lemma2Edges,
        Statement::Counts,
        Statement::KernelProps,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Statement::Folk => "FOLK",
            Statement::Th4Main => "TH4_MAIN",
            Statement::Th4A => "TH4_A",
            Statement::Th4B => "TH4_B",
            Statement::Lemma2Edges => "LEMMA_2EDGES",
            Statement::Counts => "COUNTS",
            Statement::KernelProps => "KERNEL_PROPS",
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Statement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim().to_ascii_uppercase().replace('-', "_");
        Statement::ALL.into_iter().find(|st| st.id() == wanted).ok_or_else(|| Error::UnknownStatement(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyParams {
    /// Ground set size for the enumeration-backed statements.
    pub n: usize,
    /// Support bound for FOLK.
    pub max_support: usize,
    /// Uniformities for COUNTS.
    pub r_values: Vec<usize>,
    /// Largest `n` for COUNTS (the smallest is `2r`).
    pub n_max: usize,
    /// Random families for KERNEL_PROPS.
    pub samples: usize,
    pub seed: u64,
    pub ceiling: usize,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams {
            n: 6,
            max_support: 9,
            r_values: vec![3, 4, 5],
            n_max: 20,
            samples: 1000,
            seed: 1,
            ceiling: DEFAULT_CEILING,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub statement: Statement,
    /// What was actually covered, in words.
    pub scope: String,
    pub params: VerifyParams,
    pub passed: bool,
    /// Instances examined.
    pub checked: u64,
    /// Extremal families found, in the text format.
    pub witnesses: Vec<String>,
    /// Violations in the text format, each headed by a comment saying why.
    pub counterexamples: Vec<String>,
    pub notes: Vec<String>,
    pub wall_time_secs: f64,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Default)]
struct Tally {
    checked: u64,
    failures: u64,
    counterexamples: Vec<String>,
}

impl Tally {
    fn fail(&mut self, why: &str, h: &Hypergraph) {
        self.failures += 1;
        if self.counterexamples.len() < MAX_RECORDED {
            self.counterexamples.push(format!("# {why}\n{}", to_text(h)));
        }
    }
}

fn require_n(p: &VerifyParams) -> Result<()> {
    if p.n < 6 {
        return Err(Error::InvalidParams("the 3-graph statements need n >= 6".into()));
    }
    Ok(())
}

/// Runs `check` over every intersecting 3-graph class on `p.n` vertices
/// matching `filter`.
fn over_enumeration(
    p: &VerifyParams,
    filter: EnumerationFilter,
    tally: &mut Tally,
    mut check: impl FnMut(&Hypergraph, &mut Tally),
) -> Result<()> {
    require_n(p)?;
    for_each_level(p.n, 3, &filter, p.ceiling, |level| {
        for h in level {
            tally.checked += 1;
            check(h, tally);
        }
    })
}

fn histogram(counts: &BTreeMap<String, u64>) -> String {
    let parts: Vec<String> = counts.iter().map(|(k, v)| format!("{k}: {v}")).collect();
    format!("verdicts: {}", parts.join(", "))
}

fn classify_into(h: &Hypergraph, tally: &mut Tally, verdicts: &mut BTreeMap<String, u64>) -> Option<VerdictKind> {
    match classify_3graph(h) {
        Ok(v) => {
            *verdicts.entry(v.kind.to_string()).or_default() += 1;
            if let Some(w) = &v.witness {
                if !h.is_subfamily_of(&w.instantiate()) {
                    tally.fail("witness does not contain the family", h);
                }
            }
            Some(v.kind)
        }
        Err(e) => {
            tally.fail(&format!("classification failed: {e}"), h);
            None
        }
    }
}

/// Runs one statement.
pub fn verify(statement: Statement, p: &VerifyParams) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut tally = Tally::default();
    let mut witnesses = Vec::new();
    let mut notes = Vec::new();
    let scope;
    match statement {
        Statement::Folk => {
            scope = format!(
                "all intersecting 3-graphs with cover number >= 3 and support inside [{}]; scope-limited, not a proof",
                p.max_support
            );
            let res = folk_search(p.max_support)?;
            tally.checked = res.terminals as u64;
            notes.push(format!("{} starting families with cover number 3", res.terminals));
            notes.push(format!("maximum size {}", res.max_edges));
            let m = p.max_support;
            if m >= 5 {
                let k5 = Hypergraph::new(m, 3, crate::vertex_set::k_subsets(5, 3))?;
                let has = res.extremal.iter().any(|h| isomorphic(h, &k5));
                notes.push(format!("K5 among extremal families: {has}"));
            }
            if m >= 6 {
                let fp = build_construction(Construction::Fp, m, 3)?;
                let has = res.extremal.iter().any(|h| isomorphic(h, &fp));
                notes.push(format!("FP among extremal families: {has}"));
            }
            for h in &res.extremal {
                if res.max_edges > 10 {
                    tally.fail("cover number >= 3 with more than 10 edges", h);
                } else {
                    witnesses.push(to_text(h));
                }
            }
        }
        Statement::Th4Main => {
            scope = format!("every intersecting 3-graph class on {} vertices with cover number <= 2", p.n);
            let mut verdicts = BTreeMap::new();
            let filter = EnumerationFilter { tau_le: Some(2), ..EnumerationFilter::intersecting() };
            over_enumeration(p, filter, &mut tally, |h, t| {
                if classify_into(h, t, &mut verdicts) == Some(VerdictKind::None) {
                    t.fail("in none of the seven templates", h);
                }
            })?;
            notes.push(histogram(&verdicts));
        }
        Statement::Th4A => {
            scope = format!("every intersecting 3-graph class on {} vertices with at least 11 edges", p.n);
            let mut verdicts = BTreeMap::new();
            let filter = EnumerationFilter { min_edges: Some(11), ..EnumerationFilter::intersecting() };
            over_enumeration(p, filter, &mut tally, |h, t| {
                if let Some(kind) = classify_into(h, t, &mut verdicts) {
                    if matches!(kind, VerdictKind::None | VerdictKind::TauGe3) {
                        t.fail("at least 11 edges but in none of the seven templates", h);
                    }
                }
            })?;
            notes.push(histogram(&verdicts));
        }
        Statement::Th4B => {
            scope = format!("every intersecting 3-graph class on {} vertices with more than {} edges", p.n, p.n + 4);
            let mut verdicts = BTreeMap::new();
            let filter = EnumerationFilter { min_edges: Some(p.n + 5), ..EnumerationFilter::intersecting() };
            over_enumeration(p, filter, &mut tally, |h, t| {
                let allowed = [
                    VerdictKind::Star,
                    VerdictKind::H3(H3Index::H0),
                    VerdictKind::H3(H3Index::H1),
                    VerdictKind::H3(H3Index::H2),
                ];
                if let Some(kind) = classify_into(h, t, &mut verdicts) {
                    if !allowed.contains(&kind) {
                        t.fail("more than n + 4 edges but not in H, H0, H1 or H2", h);
                    }
                }
            })?;
            for i in [H3Index::H3, H3Index::H4, H3Index::H5] {
                let size = build_construction(Construction::H3 { i }, p.n, 3)?.len();
                notes.push(format!("|{i}({})| = {size}", p.n));
                if size != p.n + 4 {
                    tally.failures += 1;
                    notes.push(format!("{i} does not have n + 4 edges"));
                }
            }
            notes.push(histogram(&verdicts));
        }
        Statement::Lemma2Edges => {
            scope = format!("every intersecting 3-graph class on {} vertices with a vertex missing at most two edges", p.n);
            let targets = [H3Index::Star, H3Index::H0, H3Index::H1, H3Index::H2, H3Index::H4];
            let mut applicable = 0u64;
            over_enumeration(p, EnumerationFilter::intersecting(), &mut tally, |h, t| {
                let degrees = h.degrees();
                if !degrees.iter().any(|&d| d + 2 >= h.len()) {
                    return;
                }
                applicable += 1;
                let inside = targets.iter().any(|&i| matches!(embed(h, Construction::H3 { i }), Ok(Some(_))));
                if !inside {
                    t.fail("not in H, H0, H1, H2 or H4", h);
                }
            })?;
            notes.push(format!("{applicable} classes satisfy the hypothesis"));
        }
        Statement::Counts => {
            scope = format!("r in {:?}, n from 2r to {}", p.r_values, p.n_max);
            for &r in &p.r_values {
                for n in 2 * r..=p.n_max {
                    for c in count_grid(n, r) {
                        let built = build_construction(c, n, r)?;
                        let formula = size_formula(c, n, r)?;
                        let by_pattern = c.template(n, r)?.build();
                        tally.checked += 1;
                        if built.len() as u128 != formula || by_pattern != built {
                            tally.failures += 1;
                            notes.push(format!("{c} n={n} r={r}: built {} formula {formula}", built.len()));
                        }
                    }
                }
            }
        }
        Statement::KernelProps => {
            scope = format!("{} random intersecting families, r in {{3, 4}}, n <= 30, at most 200 edges", p.samples);
            let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
            for i in 0..p.samples {
                let r = 3 + i % 2;
                let h = random_intersecting(&mut rng, r, 30, 200);
                tally.checked += 1;
                if let Some(why) = kernel_violation(&h) {
                    tally.fail(why, &h);
                }
            }
        }
    }
    if tally.failures as usize > tally.counterexamples.len() && !tally.counterexamples.is_empty() {
        notes.push(format!("{} violations, first {} recorded", tally.failures, tally.counterexamples.len()));
    }
    Ok(VerificationReport {
        statement,
        scope,
        params: p.clone(),
        passed: tally.failures == 0,
        checked: tally.checked,
        witnesses,
        counterexamples: tally.counterexamples,
        notes,
        wall_time_secs: start.elapsed().as_secs_f64(),
    })
}

/// Every construction in the count grid that is defined at `(n, r)`.
pub fn count_grid(n: usize, r: usize) -> Vec<Construction> {
    let mut out: Vec<Construction> = (1..=3).map(|s| Construction::Em { s }).collect();
    out.extend((1..r).map(|t| Construction::HmT { t }));
    out.push(Construction::HmT { t: n - r });
    out.extend([Construction::Hm0, Construction::HmDp, Construction::Fp]);
    out.retain(|c| c.template(n, r).is_ok());
    out
}

/// The first kernel invariant that `h` (intersecting) violates, if any.
pub fn kernel_violation(h: &Hypergraph) -> Option<&'static str> {
    let scheme = ThresholdScheme::RPlusOne;
    let d = b_kernel(h, scheme);
    let b = d.kernel();
    if !h.edges().iter().all(|e| b.members().iter().any(|t| t.is_subset(*e))) {
        return Some("an edge contains no kernel member");
    }
    if !b.is_antichain() {
        return Some("the kernel is not an antichain");
    }
    if !b.is_intersecting() {
        return Some("the kernel is not intersecting");
    }
    let tau = h.cover_number();
    if tau >= 2 && !d.layer(1).is_empty() {
        return Some("B_1 is nonempty although the cover number is at least 2");
    }
    for (&i, layer) in &d.by_size {
        let k = scheme.claim_threshold(h.r(), i);
        // k = 1 would be met by any single member; the i = 1 layer is
        // covered by the previous check.
        if k >= 2 && find_sunflower(layer, k).is_some() {
            return Some("a kernel layer contains a forbidden sunflower");
        }
    }
    if kernel_bound(h, &d) < h.len() as u128 {
        return Some("the counting bound is below |H|");
    }
    if tau == 2 {
        let cover = h.minimum_cover();
        let touches = |t: &VertexSet| t.intersects(cover);
        if !d.layer(2).members().iter().chain(d.layer(3).members()).all(touches) {
            return Some("a B_2 or B_3 member avoids the covering pair");
        }
    }
    None
}
