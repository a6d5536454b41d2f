use std::collections::HashSet;
use std::ops::ControlFlow;

use super::{Graph, UndirectedGraph, VertexId, VertexSet};
use crate::error::{Error, Result};

/// Default vertex budget for the exhaustive path search.
pub const DEFAULT_PATH_BUDGET: usize = 15;

/// A sequence of distinct vertices, consecutive ones adjacent.
///
/// The length `l` of a path is its number of vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    vertices: Vec<VertexId>,
}

impl Path {
    pub fn new(g: &UndirectedGraph, vertices: Vec<VertexId>) -> Result<Path> {
        let mut seen = VertexSet::empty(g.order());
        for &v in &vertices {
            g.check_vertex(v)?;
            if !seen.insert(v) {
                return Err(Error::NotAPath(format!("vertex {v} repeats")));
            }
        }
        if let Some(w) = vertices.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
            return Err(Error::NotAPath(format!(
                "{} and {} are not adjacent",
                w[0], w[1]
            )));
        }
        Ok(Path { vertices })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn to_set(&self, universe: usize) -> VertexSet {
        VertexSet::from_ids(universe, self.vertices.iter().copied())
    }
}

/// Result of the exhaustive longest-path search.
#[derive(Clone, Debug)]
pub struct LongestPaths {
    /// Vertex count of a longest path (0 for the empty graph).
    pub length: usize,
    /// Every longest path as a vertex sequence; each undirected path appears
    /// once per direction.
    pub paths: Vec<Path>,
}

fn check_budget(g: &UndirectedGraph, budget: usize) -> Result<()> {
    if g.order() > budget {
        return Err(Error::Budget {
            what: "exhaustive path search",
            limit: budget,
            actual: g.order(),
        });
    }
    Ok(())
}

struct Dfs<'g> {
    g: &'g UndirectedGraph,
    stack: Vec<VertexId>,
    on_path: VertexSet,
}

impl<'g> Dfs<'g> {
    fn new(g: &'g UndirectedGraph) -> Self {
        Dfs {
            g,
            stack: Vec::with_capacity(g.order()),
            on_path: VertexSet::empty(g.order()),
        }
    }

    fn longest_from(&mut self, v: VertexId, best: &mut usize) {
        self.stack.push(v);
        self.on_path.insert(v);
        *best = (*best).max(self.stack.len());
        if *best < self.g.order() {
            let next = self.g.neighbors(v).difference(&self.on_path);
            for w in next.iter() {
                self.longest_from(w, best);
            }
        }
        self.on_path.remove(v);
        self.stack.pop();
    }

    fn paths_of_length<F>(&mut self, v: VertexId, target: usize, f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[VertexId]) -> ControlFlow<()>,
    {
        self.stack.push(v);
        self.on_path.insert(v);
        let result = if self.stack.len() == target {
            f(&self.stack)
        } else if self.stack.len() + (self.g.order() - self.on_path.len()) < target {
            ControlFlow::Continue(())
        } else {
            let next = self.g.neighbors(v).difference(&self.on_path);
            next.iter()
                .try_for_each(|w| self.paths_of_length(w, target, f))
        };
        self.on_path.remove(v);
        self.stack.pop();
        result
    }
}

/// Vertex count of a longest path, by exhaustive DFS.
pub fn max_path_len(g: &UndirectedGraph, budget: usize) -> Result<usize> {
    check_budget(g, budget)?;
    let mut best = 0;
    let mut dfs = Dfs::new(g);
    for v in 0..g.order() {
        if best == g.order() {
            break;
        }
        dfs.longest_from(VertexId(v), &mut best);
    }
    Ok(best)
}

/// Calls `f` on every longest path (both directions) and returns its length.
pub fn for_each_maximal_path<F>(g: &UndirectedGraph, budget: usize, mut f: F) -> Result<usize>
where
    F: FnMut(&[VertexId]) -> ControlFlow<()>,
{
    let length = max_path_len(g, budget)?;
    if length == 0 {
        return Ok(0);
    }
    let mut dfs = Dfs::new(g);
    for v in 0..g.order() {
        if dfs.paths_of_length(VertexId(v), length, &mut f).is_break() {
            break;
        }
    }
    Ok(length)
}

pub fn longest_paths(g: &UndirectedGraph, budget: usize) -> Result<LongestPaths> {
    let mut paths = Vec::new();
    let length = for_each_maximal_path(g, budget, |p| {
        paths.push(Path {
            vertices: p.to_vec(),
        });
        ControlFlow::Continue(())
    })?;
    Ok(LongestPaths { length, paths })
}

/// Longest paths with their last vertex removed, deduplicated. Empty when the
/// longest path has a single vertex.
pub fn premaximal_paths(g: &UndirectedGraph, budget: usize) -> Result<Vec<Path>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for_each_maximal_path(g, budget, |p| {
        let prefix = &p[..p.len() - 1];
        if !prefix.is_empty() && seen.insert(prefix.to_vec()) {
            out.push(Path {
                vertices: prefix.to_vec(),
            });
        }
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Permutation oracle: the longest vertex ordering with consecutive adjacency.
    fn brute_force_longest(g: &UndirectedGraph) -> usize {
        fn extend(g: &UndirectedGraph, path: &mut Vec<usize>, best: &mut usize) {
            *best = (*best).max(path.len());
            for w in 0..g.order() {
                let ok = !path.contains(&w)
                    && path
                        .last()
                        .is_none_or(|&l| g.has_edge(VertexId(l), VertexId(w)));
                if ok {
                    path.push(w);
                    extend(g, path, best);
                    path.pop();
                }
            }
        }
        let mut best = 0;
        extend(g, &mut Vec::new(), &mut best);
        best
    }

    #[test]
    fn path_graph_spine() {
        let p4 = UndirectedGraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let lp = longest_paths(&p4, DEFAULT_PATH_BUDGET).unwrap();
        assert_eq!(lp.length, 4);
        let spines: Vec<Vec<usize>> = lp
            .paths
            .iter()
            .map(|p| p.vertices().iter().map(|v| v.0).collect())
            .collect();
        assert_eq!(spines, vec![vec![0, 1, 2, 3], vec![3, 2, 1, 0]]);
    }

    #[test]
    fn triangle_and_star() {
        assert_eq!(max_path_len(&UndirectedGraph::complete(3), 15).unwrap(), 3);
        let star = UndirectedGraph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(max_path_len(&star, 15).unwrap(), brute_force_longest(&star));
        assert_eq!(max_path_len(&star, 15).unwrap(), 3);
        // 3 * 2 ordered leaf pairs.
        assert_eq!(longest_paths(&star, 15).unwrap().paths.len(), 6);
    }

    #[test]
    fn budget_is_enforced() {
        let g = UndirectedGraph::empty(16);
        assert_eq!(
            max_path_len(&g, DEFAULT_PATH_BUDGET),
            Err(Error::Budget {
                what: "exhaustive path search",
                limit: 15,
                actual: 16
            })
        );
    }

    #[test]
    fn premaximal_paths_of_p4() {
        let p4 = UndirectedGraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let pre = premaximal_paths(&p4, 15).unwrap();
        let got: Vec<Vec<usize>> = pre
            .iter()
            .map(|p| p.vertices().iter().map(|v| v.0).collect())
            .collect();
        assert_eq!(got, vec![vec![0, 1, 2], vec![3, 2, 1]]);
    }

    #[test]
    fn path_validation() {
        let p4 = UndirectedGraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(Path::new(&p4, vec![VertexId(0), VertexId(1)]).is_ok());
        assert!(Path::new(&p4, vec![VertexId(0), VertexId(2)]).is_err());
        assert!(Path::new(&p4, vec![VertexId(1), VertexId(0), VertexId(1)]).is_err());
    }

    #[test]
    fn exhaustive_agreement_with_permutation_oracle() {
        // Every graph on 5 vertices plus a sample of 8-vertex graphs.
        for mask in 0u32..1 << 10 {
            let g = graph_from_bits(5, mask as u64);
            assert_eq!(max_path_len(&g, 15).unwrap(), brute_force_longest(&g));
        }
        let mut state = 0x2545_f491_4f6c_dd1du64;
        for _ in 0..200 {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            let g = graph_from_bits(8, state & ((1 << 28) - 1));
            let len = max_path_len(&g, 15).unwrap();
            assert_eq!(len, brute_force_longest(&g));
            for_each_maximal_path(&g, 15, |p| {
                assert_eq!(p.len(), len);
                assert!(Path::new(&g, p.to_vec()).is_ok());
                ControlFlow::Continue(())
            })
            .unwrap();
        }
    }

    fn graph_from_bits(n: usize, bits: u64) -> UndirectedGraph {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        UndirectedGraph::new(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &e)| e),
        )
        .unwrap()
    }
}
