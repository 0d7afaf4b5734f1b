//! Text and JSON forms of hypergraphs and set families.
//!
//! Text: the first non-comment line is `n r`, each later line lists one
//! edge as `r` strictly increasing 1-based ids. Lines starting with `#` and
//! blank lines are ignored. A set family uses the header `n` alone and
//! allows members of any size (an empty line cannot encode the empty set,
//! so `-` stands for it).
//!
//! JSON: `{"n": 5, "r": 3, "edges": [[1,2,3], [1,4,5]]}`.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseErrorKind, Result};
use crate::hypergraph::{Hypergraph, SetFamily};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Serialize, Deserialize)]
struct HypergraphJson {
    n: usize,
    r: usize,
    edges: Vec<Vec<usize>>,
}

/// Either form read from a file whose kind is not known in advance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Parsed {
    Uniform(Hypergraph),
    Family(SetFamily),
}

fn parse_err(line: usize, kind: ParseErrorKind) -> Error {
    Error::Parse { line, kind }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_ids(line_no: usize, line: &str, n: usize) -> Result<VertexSet> {
    let mut set = VertexSet::EMPTY;
    let mut prev = 0;
    if line == "-" {
        return Ok(set);
    }
    for tok in line.split_whitespace() {
        let v: usize = tok.parse().map_err(|_| parse_err(line_no, ParseErrorKind::NotAnInteger(tok.into())))?;
        if v == 0 || v > n {
            return Err(parse_err(line_no, ParseErrorKind::VertexOutOfRange { vertex: v, n }));
        }
        if set.contains(v) {
            return Err(parse_err(line_no, ParseErrorKind::DuplicateVertex(v)));
        }
        if v < prev {
            return Err(parse_err(line_no, ParseErrorKind::NotIncreasing));
        }
        prev = v;
        set.insert(v);
    }
    Ok(set)
}

/// Parses either text form, deciding by the header.
pub fn parse_any(text: &str) -> Result<Parsed> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(parse_err(1, ParseErrorKind::MissingHeader))?;
    let nums: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| parse_err(hline, ParseErrorKind::MalformedHeader))?;
    let (n, r) = match nums.as_slice() {
        [n] => (*n, None),
        [n, r] => (*n, Some(*r)),
        _ => return Err(parse_err(hline, ParseErrorKind::MalformedHeader)),
    };
    if n > MAX_VERTICES {
        return Err(parse_err(hline, ParseErrorKind::Invalid(format!("n = {n} exceeds {MAX_VERTICES}"))));
    }
    if let Some(r) = r {
        if r < 2 {
            return Err(parse_err(hline, ParseErrorKind::Invalid(format!("uniformity {r} is below 2"))));
        }
    }
    let mut seen = Vec::new();
    for (no, line) in lines {
        let set = parse_ids(no, line, n)?;
        if let Some(r) = r {
            if set.len() != r {
                return Err(parse_err(no, ParseErrorKind::WrongEdgeLength { expected: r, found: set.len() }));
            }
        }
        if seen.iter().any(|&(_, s)| s == set) {
            return Err(parse_err(no, ParseErrorKind::DuplicateEdge));
        }
        seen.push((no, set));
    }
    let sets = seen.into_iter().map(|(_, s)| s);
    Ok(match r {
        Some(r) => Parsed::Uniform(Hypergraph::new(n, r, sets)?),
        None => Parsed::Family(SetFamily::new(n, sets)?),
    })
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    match parse_any(text)? {
        Parsed::Uniform(h) => Ok(h),
        Parsed::Family(_) => Err(parse_err(
            content_lines(text).next().map_or(1, |(l, _)| l),
            ParseErrorKind::MalformedHeader,
        )),
    }
}

/// Reads a set family; a uniform file is read as the family of its edges.
pub fn parse_family(text: &str) -> Result<SetFamily> {
    Ok(match parse_any(text)? {
        Parsed::Uniform(h) => h.to_family(),
        Parsed::Family(f) => f,
    })
}

pub fn to_text(h: &Hypergraph) -> String {
    let mut out = format!("{} {}\n", h.n(), h.r());
    for e in h.edges() {
        write_ids(&mut out, *e);
    }
    out
}

pub fn family_to_text(f: &SetFamily) -> String {
    let mut out = format!("{}\n", f.n());
    for m in f.members() {
        if m.is_empty() {
            out.push_str("-\n");
        } else {
            write_ids(&mut out, *m);
        }
    }
    out
}

fn write_ids(out: &mut String, s: VertexSet) {
    for (i, v) in s.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        write!(out, "{v}").unwrap();
    }
    out.push('\n');
}

pub fn parse_json(text: &str) -> Result<Hypergraph> {
    let raw: HypergraphJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    if raw.n > MAX_VERTICES {
        return Err(Error::TooManyVertices(raw.n));
    }
    let mut edges = Vec::with_capacity(raw.edges.len());
    for list in &raw.edges {
        let mut set = VertexSet::EMPTY;
        for &v in list {
            if v == 0 || v > raw.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: raw.n });
            }
            if set.contains(v) {
                return Err(Error::Json(format!("vertex {v} repeated in edge {list:?}")));
            }
            set.insert(v);
        }
        edges.push(set);
    }
    Hypergraph::new(raw.n, raw.r, edges)
}

pub fn to_json(h: &Hypergraph) -> String {
    let raw = HypergraphJson { n: h.n(), r: h.r(), edges: h.edges().iter().map(|e| e.to_vec()).collect() };
    serde_json::to_string(&raw).expect("plain data serializes")
}

/// JSON value form, for embedding in reports.
pub fn to_json_value(h: &Hypergraph) -> serde_json::Value {
    serde_json::json!({ "n": h.n(), "r": h.r(), "edges": h.edges().iter().map(|e| e.to_vec()).collect::<Vec<_>>() })
}

/// Accepts either form, sniffing for a leading `{`.
pub fn parse_hypergraph_auto(text: &str) -> Result<Hypergraph> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_hypergraph(text)
    }
}

impl FromStr for Hypergraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_hypergraph_auto(s)
    }
}

impl std::fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&to_text(self))
    }
}
