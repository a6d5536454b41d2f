//! Graph file formats and JSON reports.
//!
//! Both parsers intern labels in first-appearance order, collapse duplicate
//! arcs and reject loops in undirected graphs.

mod dot;
mod edge_list;
pub mod report;

use std::collections::HashMap;

use crate::error::{ParseError, Result};
use crate::graph::{Digraph, UndirectedGraph};

pub use dot::parse_dot;
pub use edge_list::{parse_edge_list, write_edge_list};

/// A parsed graph of either kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyGraph {
    Directed(Digraph),
    Undirected(UndirectedGraph),
}

impl AnyGraph {
    pub fn is_directed(&self) -> bool {
        matches!(self, AnyGraph::Directed(_))
    }

    pub fn into_directed(self) -> Option<Digraph> {
        match self {
            AnyGraph::Directed(g) => Some(g),
            AnyGraph::Undirected(_) => None,
        }
    }

    pub fn into_undirected(self) -> Option<UndirectedGraph> {
        match self {
            AnyGraph::Undirected(g) => Some(g),
            AnyGraph::Directed(_) => None,
        }
    }
}

/// Accumulates labels and pairs while a file is read.
#[derive(Default)]
struct Builder {
    index: HashMap<String, usize>,
    labels: Vec<String>,
    pairs: Vec<(usize, usize)>,
}

impl Builder {
    fn vertex(&mut self, label: &str) -> usize {
        if let Some(&i) = self.index.get(label) {
            return i;
        }
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), self.labels.len() - 1);
        self.labels.len() - 1
    }

    /// Records `u v`; `at` is the position reported for an undirected loop.
    fn pair(&mut self, u: &str, v: &str, directed: bool, at: (usize, usize)) -> Result<()> {
        let (a, b) = (self.vertex(u), self.vertex(v));
        if !directed && a == b {
            return Err(ParseError::new(
                at.0,
                at.1,
                format!("loop `{u} {v}` is not allowed in an undirected graph"),
            )
            .into());
        }
        self.pairs.push((a, b));
        Ok(())
    }

    fn finish(self, directed: bool) -> Result<AnyGraph> {
        let p = self.labels.len();
        Ok(if directed {
            AnyGraph::Directed(Digraph::new(p, self.pairs)?.with_labels(self.labels)?)
        } else {
            AnyGraph::Undirected(UndirectedGraph::new(p, self.pairs)?.with_labels(self.labels)?)
        })
    }
}
