use std::collections::VecDeque;

use super::{
    check_permutation, subset_labels, validate_labels, Graph, Induced, VertexId, VertexSet, Volume,
};
use crate::error::{Error, Result};

/// A finite simple undirected graph. Loops are rejected at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedGraph {
    adj: Vec<VertexSet>,
    edge_count: usize,
    labels: Option<Vec<String>>,
}

impl UndirectedGraph {
    pub fn new<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = UndirectedGraph {
            adj: vec![VertexSet::empty(order); order],
            edge_count: 0,
            labels: None,
        };
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn empty(order: usize) -> Self {
        Self::new(order, []).expect("no edges")
    }

    pub fn complete(order: usize) -> Self {
        Self::new(
            order,
            (0..order).flat_map(|u| (u + 1..order).map(move |v| (u, v))),
        )
        .expect("valid edges")
    }

    /// Builds a graph on at most 64 vertices from per-vertex neighbor masks.
    pub fn from_adjacency_masks(masks: &[u64]) -> Result<Self> {
        let order = masks.len();
        let edges = (0..order).flat_map(|u| {
            (u + 1..order)
                .filter(move |&v| masks[u] >> v & 1 == 1)
                .map(move |v| (u, v))
        });
        Self::new(order, edges)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let order = self.adj.len();
        for x in [u, v] {
            if x >= order {
                return Err(Error::UnknownVertex { vertex: x, order });
            }
        }
        if u == v {
            return Err(Error::LoopInUndirected(u));
        }
        if self.adj[u].insert(VertexId(v)) {
            self.adj[v].insert(VertexId(u));
            self.edge_count += 1;
        }
        Ok(())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        validate_labels(self.order(), &labels)?;
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn volume(&self) -> Volume {
        Volume {
            p: self.order(),
            q: self.edge_count,
        }
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u.0].contains(v)
    }

    /// `D(v)`.
    pub fn neighbors(&self, v: VertexId) -> &VertexSet {
        &self.adj[v.0]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v.0].len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nb)| {
            nb.iter()
                .filter(move |v| v.0 > u)
                .map(move |v| (VertexId(u), v))
        })
    }

    /// Neighbor bitmasks; only valid for graphs with at most 64 vertices.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(
            self.order() <= 64,
            "adjacency masks need at most 64 vertices"
        );
        self.adj.iter().map(VertexSet::mask).collect()
    }

    pub fn induced_subgraph(&self, u: &VertexSet) -> Result<Induced<UndirectedGraph>> {
        self.check_set(u)?;
        let original = u.to_vec();
        let mut index = vec![usize::MAX; self.order()];
        for (i, v) in original.iter().enumerate() {
            index[v.0] = i;
        }
        let edges = self
            .edges()
            .filter(|(a, b)| u.contains(*a) && u.contains(*b))
            .map(|(a, b)| (index[a.0], index[b.0]));
        let mut graph = UndirectedGraph::new(original.len(), edges)?;
        graph.labels = subset_labels(self.labels(), &original);
        Ok(Induced { graph, original })
    }

    /// Connected components in order of their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.order());
        let mut out = Vec::new();
        for s in 0..self.order() {
            let s = VertexId(s);
            if seen.contains(s) {
                continue;
            }
            let comp = self.reach(s, &self.vertices());
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    /// Whether the graph has at most one component. The empty graph is connected.
    pub fn is_connected(&self) -> bool {
        match self.order() {
            0 => true,
            n => self.reach(VertexId(0), &self.vertices()).len() == n,
        }
    }

    /// Component of `start` inside `G[within]`.
    pub fn reach(&self, start: VertexId, within: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(self.order(), start);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in self.adj[v.0].intersection(within).iter() {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Whether `G[u]` is connected; `∅` and singletons are.
    pub fn is_connected_subset(&self, u: &VertexSet) -> Result<bool> {
        self.check_set(u)?;
        Ok(match u.first() {
            None => true,
            Some(s) => &self.reach(s, u) == u,
        })
    }

    /// Whether `G[u]` has no edges.
    pub fn is_completely_disconnected(&self, u: &VertexSet) -> Result<bool> {
        self.check_set(u)?;
        Ok(u.iter().all(|v| self.adj[v.0].is_disjoint(u)))
    }

    /// `d(a, b)`: number of edges with one end in `a` and the other in `b`.
    pub fn degree_between(&self, a: &VertexSet, b: &VertexSet) -> Result<usize> {
        self.check_set(a)?;
        self.check_set(b)?;
        if let Some(v) = a.intersection(b).first() {
            return Err(Error::Overlapping(v.0));
        }
        Ok(a.iter().map(|v| self.adj[v.0].intersection(b).len()).sum())
    }

    /// `d(x, b)` for a single vertex outside `b`.
    pub fn degree_into(&self, x: VertexId, b: &VertexSet) -> usize {
        self.adj[x.0].intersection(b).len()
    }

    pub fn relabel(&self, perm: &[usize]) -> Result<UndirectedGraph> {
        check_permutation(self.order(), perm)?;
        let mut g = UndirectedGraph::new(
            self.order(),
            self.edges().map(|(u, v)| (perm[u.0], perm[v.0])),
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

    /// Disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &UndirectedGraph) -> UndirectedGraph {
        let shift = self.order();
        UndirectedGraph::new(
            shift + other.order(),
            self.edges()
                .map(|(u, v)| (u.0, v.0))
                .chain(other.edges().map(|(u, v)| (u.0 + shift, v.0 + shift))),
        )
        .expect("valid edges")
    }

    pub fn without_edge(&self, u: VertexId, v: VertexId) -> UndirectedGraph {
        let mut g = UndirectedGraph::new(
            self.order(),
            self.edges()
                .filter(|&e| e != (u.min(v), u.max(v)))
                .map(|(a, b)| (a.0, b.0)),
        )
        .expect("valid edges");
        g.labels = self.labels.clone();
        g
    }
}

impl Graph for UndirectedGraph {
    fn order(&self) -> usize {
        self.adj.len()
    }

    fn inputs(&self, v: VertexId) -> &VertexSet {
        &self.adj[v.0]
    }

    fn outputs(&self, v: VertexId) -> &VertexSet {
        &self.adj[v.0]
    }

    fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }
}
