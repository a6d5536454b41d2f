use std::collections::VecDeque;

use super::{
    check_permutation, subset_labels, validate_labels, Graph, Induced, VertexId, VertexSet, Volume,
};
use crate::error::{Error, Result};

/// A finite directed graph; loops are allowed, parallel arcs collapse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    inputs: Vec<VertexSet>,
    outputs: Vec<VertexSet>,
    arc_count: usize,
    labels: Option<Vec<String>>,
}

impl Digraph {
    pub fn new<I>(order: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Digraph {
            inputs: vec![VertexSet::empty(order); order],
            outputs: vec![VertexSet::empty(order); order],
            arc_count: 0,
            labels: None,
        };
        for (u, v) in arcs {
            for x in [u, v] {
                if x >= order {
                    return Err(Error::UnknownVertex { vertex: x, order });
                }
            }
            if g.outputs[u].insert(VertexId(v)) {
                g.inputs[v].insert(VertexId(u));
                g.arc_count += 1;
            }
        }
        Ok(g)
    }

    pub fn empty(order: usize) -> Self {
        Self::new(order, []).expect("no arcs")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        validate_labels(self.order(), &labels)?;
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn volume(&self) -> Volume {
        Volume {
            p: self.order(),
            q: self.arc_count,
        }
    }

    pub fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        self.outputs[u.0].contains(v)
    }

    /// Arcs in lexicographic order of `(tail, head)`.
    pub fn arcs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.outputs
            .iter()
            .enumerate()
            .flat_map(|(u, out)| out.iter().map(move |v| (VertexId(u), v)))
    }

    /// `D⁻(v)`.
    pub fn in_set(&self, v: VertexId) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.inputs[v.0].clone())
    }

    /// `D⁺(v)`.
    pub fn out_set(&self, v: VertexId) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.outputs[v.0].clone())
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.inputs[v.0].len()
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.outputs[v.0].len()
    }

    pub fn induced_subgraph(&self, u: &VertexSet) -> Result<Induced<Digraph>> {
        self.check_set(u)?;
        let original = u.to_vec();
        let mut index = vec![usize::MAX; self.order()];
        for (i, v) in original.iter().enumerate() {
            index[v.0] = i;
        }
        let arcs = self
            .arcs()
            .filter(|(a, b)| u.contains(*a) && u.contains(*b))
            .map(|(a, b)| (index[a.0], index[b.0]));
        let mut graph = Digraph::new(original.len(), arcs)?;
        graph.labels = subset_labels(self.labels(), &original);
        Ok(Induced { graph, original })
    }

    /// Whether `G[u]` is strongly connected. `∅` and singletons are connected.
    pub fn is_connected_subset(&self, u: &VertexSet) -> Result<bool> {
        self.check_set(u)?;
        let Some(start) = u.first() else {
            return Ok(true);
        };
        let forward = self.reach_within(start, u, &self.outputs);
        if &forward != u {
            return Ok(false);
        }
        Ok(&self.reach_within(start, u, &self.inputs) == u)
    }

    fn reach_within(&self, start: VertexId, within: &VertexSet, adj: &[VertexSet]) -> VertexSet {
        let mut seen = VertexSet::singleton(self.order(), start);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in adj[v.0].intersection(within).iter() {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// The isomorphic copy in which vertex `v` becomes `perm[v]`; labels follow
    /// their vertices.
    pub fn relabel(&self, perm: &[usize]) -> Result<Digraph> {
        check_permutation(self.order(), perm)?;
        let mut g = Digraph::new(
            self.order(),
            self.arcs().map(|(u, v)| (perm[u.0], perm[v.0])),
        )?;
        if let Some(labels) = &self.labels {
            let mut moved = vec![String::new(); labels.len()];
            for (v, l) in labels.iter().enumerate() {
                moved[perm[v]] = l.clone();
            }
            g.labels = Some(moved);
        }
        Ok(g)
    }

    /// Adds a fresh vertex (index `order`) with the given arcs.
    pub(crate) fn extended(
        &self,
        label: Option<String>,
        arcs: &[(usize, usize)],
    ) -> Result<Digraph> {
        let order = self.order() + 1;
        let all = self
            .arcs()
            .map(|(u, v)| (u.0, v.0))
            .chain(arcs.iter().copied());
        let mut g = Digraph::new(order, all)?;
        if let Some(labels) = &self.labels {
            let mut l = labels.clone();
            l.push(label.unwrap_or_else(|| self.fresh_label()));
            g = g.with_labels(l)?;
        }
        Ok(g)
    }

    fn fresh_label(&self) -> String {
        let mut candidate = "x".to_string();
        while self.vertex_by_label(&candidate).is_ok() {
            candidate.push('\'');
        }
        candidate
    }
}

impl Graph for Digraph {
    fn order(&self) -> usize {
        self.inputs.len()
    }

    fn inputs(&self, v: VertexId) -> &VertexSet {
        &self.inputs[v.0]
    }

    fn outputs(&self, v: VertexId) -> &VertexSet {
        &self.outputs[v.0]
    }

    fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }
}
