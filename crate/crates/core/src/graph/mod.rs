//! Finite graph representations shared by every analysis in the crate.
//!
//! Vertices are dense indices `0..p` with an optional label table. Directed
//! graphs keep both input and output neighborhoods as bitsets so that the
//! inflation test `∅ ≠ D⁻(v) ⊆ U` is a handful of word operations.
//!
//! "Connected" for a vertex subset of a digraph means *strongly* connected:
//! every ordered pair is joined by a directed path inside the induced
//! subgraph. The empty set and singletons count as connected.

mod digraph;
mod paths;
mod undirected;
mod vertex_set;

use std::borrow::Cow;
use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub use digraph::Digraph;
pub use paths::{
    for_each_maximal_path, longest_paths, max_path_len, premaximal_paths, LongestPaths, Path,
    DEFAULT_PATH_BUDGET,
};
pub use undirected::UndirectedGraph;
pub use vertex_set::{Iter as VertexSetIter, VertexSet};

/// Dense vertex index in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexId(pub usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<usize> for VertexId {
    fn from(v: usize) -> Self {
        VertexId(v)
    }
}

/// Vertex and arc/edge count of a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Volume {
    pub p: usize,
    pub q: usize,
}

/// Read access shared by directed and undirected graphs.
///
/// For an undirected graph both `inputs` and `outputs` are the neighborhood
/// `D(v)`, which is what lets the inflation operators run on either kind.
pub trait Graph {
    fn order(&self) -> usize;

    /// `D⁻(v)`; contains `v` itself iff there is a loop at `v`.
    fn inputs(&self, v: VertexId) -> &VertexSet;

    /// `D⁺(v)`.
    fn outputs(&self, v: VertexId) -> &VertexSet;

    fn labels(&self) -> Option<&[String]>;

    fn label(&self, v: VertexId) -> Cow<'_, str> {
        match self.labels() {
            Some(labels) => Cow::Borrowed(labels[v.0].as_str()),
            None => Cow::Owned(v.0.to_string()),
        }
    }

    fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.0 < self.order() {
            Ok(())
        } else {
            Err(Error::UnknownVertex {
                vertex: v.0,
                order: self.order(),
            })
        }
    }

    fn check_set(&self, u: &VertexSet) -> Result<()> {
        if u.universe() == self.order() {
            Ok(())
        } else {
            Err(Error::UniverseMismatch {
                set: u.universe(),
                order: self.order(),
            })
        }
    }

    /// Resolves a label, falling back to a numeric index for unlabeled graphs.
    fn vertex_by_label(&self, label: &str) -> Result<VertexId> {
        let found = match self.labels() {
            Some(labels) => labels.iter().position(|l| l == label),
            None => label.parse::<usize>().ok().filter(|&v| v < self.order()),
        };
        found
            .map(VertexId)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    fn set_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<VertexSet> {
        let mut set = VertexSet::empty(self.order());
        for l in labels {
            set.insert(self.vertex_by_label(l.as_ref())?);
        }
        Ok(set)
    }

    /// Labels of the members of `u`, sorted lexicographically.
    fn sorted_labels(&self, u: &VertexSet) -> Vec<String> {
        let mut out: Vec<String> = u.iter().map(|v| self.label(v).into_owned()).collect();
        out.sort();
        out
    }
}

/// An induced subgraph together with the map back to the parent's vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced<G> {
    pub graph: G,
    /// `original[i]` is the parent vertex that became vertex `i`.
    pub original: Vec<VertexId>,
}

impl<G: Graph> Induced<G> {
    pub fn to_original(&self, v: VertexId) -> VertexId {
        self.original[v.0]
    }

    /// Maps a set of subgraph vertices to the parent's vertex set.
    pub fn lift(&self, u: &VertexSet, parent_order: usize) -> VertexSet {
        VertexSet::from_ids(parent_order, u.iter().map(|v| self.original[v.0]))
    }
}

fn validate_labels(order: usize, labels: &[String]) -> Result<()> {
    if labels.len() != order {
        return Err(Error::InvalidArgument(format!(
            "{} labels for {} vertices",
            labels.len(),
            order
        )));
    }
    let mut seen = HashSet::with_capacity(order);
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::InvalidArgument(format!("duplicate label `{l}`")));
        }
    }
    Ok(())
}

fn check_permutation(order: usize, perm: &[usize]) -> Result<()> {
    let mut seen = vec![false; order];
    if perm.len() != order {
        return Err(Error::InvalidArgument(format!(
            "permutation of length {} for {} vertices",
            perm.len(),
            order
        )));
    }
    for &t in perm {
        if t >= order || std::mem::replace(&mut seen[t], true) {
            return Err(Error::InvalidArgument(format!(
                "not a permutation of 0..{order}"
            )));
        }
    }
    Ok(())
}

fn subset_labels(labels: Option<&[String]>, original: &[VertexId]) -> Option<Vec<String>> {
    labels.map(|l| original.iter().map(|v| l[v.0].clone()).collect())
}
