//! Vertex decompositions of finite graphs built from the inflation operator
//! `Inf U = U ∪ {v : ∅ ≠ D⁻(v) ⊆ U}`.
//!
//! - [`graph`]: digraphs, undirected graphs, vertex sets, paths.
//! - [`inflation`]: `Inf`, its iterates, the fixpoint `Inf^∞` and the hull.
//! - [`decomposition`]: regions, the unique interval decomposition, the
//!   connected-seed process and jets.
//! - [`matching`]: undirected decompositions and maximal matchings.
//! - [`turan`]: the bowtie-free extremal bound `ex(p, bowtie) = ⌊p²/4⌋ + 1`
//!   (`p > 4`) and the lemmas behind it.
//! - [`io`] and [`cli`]: graph file formats, JSON reports and the command
//!   line front-end.

pub mod cli;
pub mod decomposition;
pub mod error;
pub mod generate;
pub mod graph;
pub mod inflation;
pub mod io;
pub mod matching;
pub mod turan;

pub use error::{Error, ParseError, Result};
pub use graph::{Digraph, Graph, UndirectedGraph, VertexId, VertexSet, Volume};
