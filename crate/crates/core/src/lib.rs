//! Intersecting uniform set families.
//!
//! This crate builds the named extremal intersecting families (Erdős
//! matching families, Hilton–Milner and its generalizations, Frankl's
//! cover-number-3 family and the small 3-graph families with their lifts),
//! computes exact matching and cover numbers, detects sunflowers, forms the
//! Delta-system kernel `B(H)`, decides containment in structure templates
//! up to relabeling, and exhaustively enumerates small intersecting families
//! to check the finitely-checkable structure statements about them.

pub mod classifier;
pub mod constructions;
pub mod error;
pub mod harness;
pub mod hypergraph;
pub mod io;
pub mod kernel;
mod packing;
pub mod sunflower;
pub mod vertex_set;

pub use classifier::{Decomposition, Embedding, Th4PrimeDecomposition, Verdict, VerdictKind};
pub use constructions::{Construction, H3Index, Template};
pub use error::{Error, ParseErrorKind, Result};
pub use hypergraph::{Hypergraph, SetFamily};
pub use kernel::{KernelDecomposition, ThresholdScheme};
pub use sunflower::Sunflower;
pub use vertex_set::{binom, VertexId, VertexSet, MAX_VERTICES};
