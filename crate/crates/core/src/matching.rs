//! Decompositions of undirected graphs of the form
//! `V = (⊔ Inf V_i) ⊔ U`, and their correspondence with maximal matchings.
//!
//! On an undirected graph `Inf^∞ = Inf`, so components are single
//! inflations. Seeds are non-singleton connected sets (or single edges for
//! the arc-seed variant) chosen from the uncovered vertices until the
//! remainder `U` has no edges. Because a seed is connected and non-singleton,
//! a later seed can never absorb an earlier one, so no replacement step is
//! needed here. Disconnected graphs are handled component by component; the
//! greedy choice only ever looks inside one component at a time, so running
//! on the whole graph gives the same result.
//!
//! An edge seed is kept as the vertex set `{u, v}`; the edge identity lives
//! in [`Matching`].

use std::collections::BTreeSet;

use crate::decomposition::{Decomposition, DecompositionKind};
use crate::error::{Error, Result};
use crate::graph::{Graph, UndirectedGraph, VertexId, VertexSet};
use crate::inflation::inflate;

/// Default vertex budget for [`greatest_matching`].
pub const DEFAULT_MATCHING_BUDGET: usize = 16;

/// A set of pairwise vertex-disjoint edges, stored as `(u, v)` with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    edges: BTreeSet<(VertexId, VertexId)>,
}

impl Matching {
    pub fn new<I>(g: &UndirectedGraph, edges: I) -> Result<Matching>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut used = VertexSet::empty(g.order());
        let mut out = BTreeSet::new();
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if !g.has_edge(u, v) {
                return Err(Error::InvalidArgument(format!("({u}, {v}) is not an edge")));
            }
            for x in [u, v] {
                if !used.insert(x) {
                    return Err(Error::InvalidArgument(format!(
                        "vertex {x} is covered by two matching edges"
                    )));
                }
            }
            out.insert((u.min(v), u.max(v)));
        }
        Ok(Matching { edges: out })
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.edges.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn covered(&self, universe: usize) -> VertexSet {
        VertexSet::from_ids(universe, self.edges.iter().flat_map(|&(u, v)| [u, v]))
    }
}

/// `Ok(())` if no edge of `g` can be added to `m`; otherwise the smallest
/// extendable edge.
pub fn is_maximal(g: &UndirectedGraph, m: &Matching) -> Result<(), (VertexId, VertexId)> {
    let covered = m.covered(g.order());
    match g
        .edges()
        .find(|&(u, v)| !covered.contains(u) && !covered.contains(v))
    {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

/// Chooses the next seed among the uncovered vertices, or `None` when the
/// uncovered vertices span no edge.
pub trait ConnectedSeedStrategy {
    fn next_seed(&mut self, g: &UndirectedGraph, uncovered: &VertexSet) -> Option<VertexSet>;
}

impl<F> ConnectedSeedStrategy for F
where
    F: FnMut(&UndirectedGraph, &VertexSet) -> Option<VertexSet>,
{
    fn next_seed(&mut self, g: &UndirectedGraph, uncovered: &VertexSet) -> Option<VertexSet> {
        self(g, uncovered)
    }
}

/// The lexicographically smallest uncovered edge. Among all connected
/// non-singleton subsets this is also the lexicographically smallest one.
#[derive(Clone, Copy, Debug, Default)]
pub struct LowestEdge;

impl ConnectedSeedStrategy for LowestEdge {
    fn next_seed(&mut self, g: &UndirectedGraph, uncovered: &VertexSet) -> Option<VertexSet> {
        uncovered.iter().find_map(|u| {
            g.neighbors(u)
                .intersection(uncovered)
                .iter()
                .find(|&v| v > u)
                .map(|v| VertexSet::from_ids(g.order(), [u, v]))
        })
    }
}

/// The whole connected component of `G[uncovered]` around the smallest
/// uncovered vertex that still has an uncovered neighbor.
#[derive(Clone, Copy, Debug, Default)]
pub struct WholeComponent;

impl ConnectedSeedStrategy for WholeComponent {
    fn next_seed(&mut self, g: &UndirectedGraph, uncovered: &VertexSet) -> Option<VertexSet> {
        uncovered
            .iter()
            .find(|&u| g.neighbors(u).intersects(uncovered))
            .map(|u| g.reach(u, uncovered))
    }
}

fn run_connected_seeds<S: ConnectedSeedStrategy>(
    g: &UndirectedGraph,
    mut strategy: S,
    kind: DecompositionKind,
) -> Result<Decomposition> {
    let mut components = Vec::new();
    let mut seeds = Vec::new();
    let mut covered = VertexSet::empty(g.order());
    loop {
        let uncovered = covered.complement();
        let Some(w) = strategy.next_seed(g, &uncovered) else {
            if !g.is_completely_disconnected(&uncovered)? {
                return Err(Error::Contract(format!(
                    "seed strategy stopped while {uncovered:?} still spans an edge"
                )));
            }
            return Ok(Decomposition::new(kind, components, seeds, uncovered));
        };
        g.check_set(&w)?;
        if w.len() < 2 || !w.is_subset(&uncovered) || !g.is_connected_subset(&w)? {
            return Err(Error::Contract(format!(
                "seed {w:?} is not a non-singleton connected subset of {uncovered:?}"
            )));
        }
        if kind == DecompositionKind::ArcSeed && w.len() != 2 {
            return Err(Error::Contract(format!(
                "arc seed {w:?} is not a single edge"
            )));
        }
        let component = inflate(g, &w)?;
        if component.intersects(&covered) {
            return Err(Error::Contract(format!(
                "Inf {w:?} = {component:?} overlaps earlier components"
            )));
        }
        covered.union_with(&component);
        components.push(component);
        seeds.push(w);
    }
}

/// Greedy decomposition with non-singleton connected seeds, smallest edge first.
pub fn connected_seed_decomposition(g: &UndirectedGraph) -> Result<Decomposition> {
    connected_seed_decomposition_with(g, LowestEdge)
}

/// Connected-seed decomposition with a caller-supplied seed chooser.
pub fn connected_seed_decomposition_with<S: ConnectedSeedStrategy>(
    g: &UndirectedGraph,
    strategy: S,
) -> Result<Decomposition> {
    run_connected_seeds(g, strategy, DecompositionKind::ConnectedSeed)
}

/// Greedy decomposition whose seeds are single edges; the seeds form a
/// maximal matching.
pub fn arc_seed_decomposition(g: &UndirectedGraph) -> Result<Decomposition> {
    run_connected_seeds(g, LowestEdge, DecompositionKind::ArcSeed)
}

/// Arc-seed decomposition with a caller-supplied edge chooser.
pub fn arc_seed_decomposition_with<S: ConnectedSeedStrategy>(
    g: &UndirectedGraph,
    strategy: S,
) -> Result<Decomposition> {
    run_connected_seeds(g, strategy, DecompositionKind::ArcSeed)
}

/// The decomposition generated by the edges of a maximal matching.
pub fn decomposition_from_matching(g: &UndirectedGraph, m: &Matching) -> Result<Decomposition> {
    if let Err((u, v)) = is_maximal(g, m) {
        return Err(Error::NotMaximal(u.0, v.0));
    }
    let mut covered = VertexSet::empty(g.order());
    let mut components = Vec::with_capacity(m.len());
    let mut seeds = Vec::with_capacity(m.len());
    for (u, v) in m.edges() {
        let seed = VertexSet::from_ids(g.order(), [u, v]);
        let component = inflate(g, &seed)?;
        if component.intersects(&covered) {
            return Err(Error::Contract(format!(
                "Inf of matching edge ({u}, {v}) overlaps another component"
            )));
        }
        covered.union_with(&component);
        components.push(component);
        seeds.push(seed);
    }
    Ok(Decomposition::new(
        DecompositionKind::ArcSeed,
        components,
        seeds,
        covered.complement(),
    ))
}

/// The edge seeds of an arc-seed decomposition, checked to be a maximal
/// matching of `g`.
pub fn matching_from_decomposition(g: &UndirectedGraph, d: &Decomposition) -> Result<Matching> {
    if d.kind() != DecompositionKind::ArcSeed {
        return Err(Error::InvalidArgument(format!(
            "expected an arc-seed decomposition, got {}",
            d.kind()
        )));
    }
    let mut edges = Vec::with_capacity(d.len());
    for seed in d.seeds() {
        let pair = seed.to_vec();
        if pair.len() != 2 {
            return Err(Error::InvalidArgument(format!(
                "seed {seed:?} is not an edge"
            )));
        }
        edges.push((pair[0], pair[1]));
    }
    let m = Matching::new(g, edges)?;
    if let Err((u, v)) = is_maximal(g, &m) {
        return Err(Error::NotMaximal(u.0, v.0));
    }
    Ok(m)
}

/// Checks the two "completely disconnected" claims of an undirected
/// decomposition: the leftover spans no edge, and neither does
/// `(⊔ (Inf V_i \ V_i)) ∪ leftover`.
pub fn check_disconnected_claims(g: &UndirectedGraph, d: &Decomposition) -> Result<()> {
    if !g.is_completely_disconnected(d.leftover())? {
        return Err(Error::Contract(format!(
            "leftover {:?} spans an edge",
            d.leftover()
        )));
    }
    let mut rim = d.leftover().clone();
    for (c, s) in d.components().iter().zip(d.seeds()) {
        rim.union_with(&c.difference(s));
    }
    if !g.is_completely_disconnected(&rim)? {
        return Err(Error::Contract(format!(
            "inflated rims plus leftover {rim:?} span an edge"
        )));
    }
    Ok(())
}

/// A maximum-cardinality matching by exhaustive branching. Exponential; only
/// meant as a reference on small graphs.
pub fn greatest_matching(g: &UndirectedGraph, budget: usize) -> Result<Matching> {
    if g.order() > budget {
        return Err(Error::Budget {
            what: "greatest matching search",
            limit: budget,
            actual: g.order(),
        });
    }

    fn search(
        g: &UndirectedGraph,
        free: &mut VertexSet,
        current: &mut Vec<(VertexId, VertexId)>,
        best: &mut Vec<(VertexId, VertexId)>,
    ) {
        // Upper bound: every remaining free vertex pair could still match.
        if current.len() + free.len() / 2 <= best.len() {
            return;
        }
        let Some(u) = free.iter().find(|&u| g.neighbors(u).intersects(free)) else {
            if current.len() > best.len() {
                *best = current.clone();
            }
            return;
        };
        free.remove(u);
        for v in g.neighbors(u).intersection(free).iter() {
            free.remove(v);
            current.push((u, v));
            search(g, free, current, best);
            current.pop();
            free.insert(v);
        }
        search(g, free, current, best);
        free.insert(u);
    }

    let mut best = Vec::new();
    search(g, &mut g.vertices(), &mut Vec::new(), &mut best);
    Matching::new(g, best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> UndirectedGraph {
        UndirectedGraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    fn ids(s: &VertexSet) -> Vec<usize> {
        s.iter().map(|v| v.0).collect()
    }

    fn m(g: &UndirectedGraph, edges: &[(usize, usize)]) -> Matching {
        Matching::new(g, edges.iter().map(|&(u, v)| (VertexId(u), VertexId(v)))).unwrap()
    }

    #[test]
    fn matching_validation() {
        let g = p4();
        assert!(Matching::new(&g, [(VertexId(0), VertexId(2))]).is_err());
        assert!(
            Matching::new(&g, [(VertexId(0), VertexId(1)), (VertexId(1), VertexId(2))]).is_err()
        );
    }

    #[test]
    fn maximality() {
        let g = p4();
        assert_eq!(is_maximal(&g, &m(&g, &[(0, 1), (2, 3)])), Ok(()));
        assert_eq!(is_maximal(&g, &m(&g, &[])), Err((VertexId(0), VertexId(1))));
        assert_eq!(is_maximal(&g, &m(&g, &[(1, 2)])), Ok(()));
        assert_eq!(
            is_maximal(&g, &m(&g, &[(0, 1)])),
            Err((VertexId(2), VertexId(3)))
        );
    }

    #[test]
    fn connected_seed_examples() {
        let k2 = UndirectedGraph::complete(2);
        let d = connected_seed_decomposition(&k2).unwrap();
        assert_eq!(
            d.seeds().iter().map(ids).collect::<Vec<_>>(),
            vec![vec![0, 1]]
        );
        assert!(d.leftover().is_empty());

        let star = UndirectedGraph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let d = connected_seed_decomposition(&star).unwrap();
        assert_eq!(
            d.seeds().iter().map(ids).collect::<Vec<_>>(),
            vec![vec![0, 1]]
        );
        assert_eq!(d.components()[0], star.vertices());
        assert!(d.leftover().is_empty());

        let single = UndirectedGraph::empty(1);
        let d = connected_seed_decomposition(&single).unwrap();
        assert!(d.is_empty());
        assert_eq!(ids(d.leftover()), vec![0]);
    }

    #[test]
    fn whole_component_seeds() {
        let g = UndirectedGraph::new(6, [(0, 1), (1, 2), (3, 4)]).unwrap();
        let d = connected_seed_decomposition_with(&g, WholeComponent).unwrap();
        assert_eq!(
            d.seeds().iter().map(ids).collect::<Vec<_>>(),
            vec![vec![0, 1, 2], vec![3, 4]]
        );
        assert_eq!(ids(d.leftover()), vec![5]);
        d.validate(&g).unwrap();
        check_disconnected_claims(&g, &d).unwrap();
    }

    #[test]
    fn arc_seed_examples() {
        let g = p4();
        let d = arc_seed_decomposition(&g).unwrap();
        assert_eq!(
            d.seeds().iter().map(ids).collect::<Vec<_>>(),
            vec![vec![0, 1], vec![2, 3]]
        );
        assert!(d.leftover().is_empty());

        let from_bc = decomposition_from_matching(&g, &m(&g, &[(1, 2)])).unwrap();
        assert_eq!(
            from_bc.components().iter().map(ids).collect::<Vec<_>>(),
            vec![vec![0, 1, 2, 3]]
        );

        let k3 = UndirectedGraph::complete(3);
        let d = arc_seed_decomposition(&k3).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d.components()[0], k3.vertices());
    }

    #[test]
    fn matching_decomposition_roundtrip() {
        let g = p4();
        let two = m(&g, &[(0, 1), (2, 3)]);
        let d = decomposition_from_matching(&g, &two).unwrap();
        assert_eq!(d.len(), 2);
        d.validate(&g).unwrap();
        check_disconnected_claims(&g, &d).unwrap();
        assert_eq!(matching_from_decomposition(&g, &d).unwrap(), two);

        assert_eq!(
            decomposition_from_matching(&g, &m(&g, &[(0, 1)])),
            Err(Error::NotMaximal(2, 3))
        );

        let k2 = UndirectedGraph::complete(2);
        let d = arc_seed_decomposition(&k2).unwrap();
        assert_eq!(
            matching_from_decomposition(&k2, &d).unwrap(),
            m(&k2, &[(0, 1)])
        );
    }

    #[test]
    fn matching_from_wrong_kind() {
        let g = p4();
        let d = connected_seed_decomposition_with(&g, WholeComponent).unwrap();
        assert!(matching_from_decomposition(&g, &d).is_err());
    }

    #[test]
    fn greatest_matching_sizes() {
        assert_eq!(greatest_matching(&p4(), 16).unwrap().len(), 2);
        assert_eq!(
            greatest_matching(&UndirectedGraph::complete(3), 16)
                .unwrap()
                .len(),
            1
        );
        assert_eq!(
            greatest_matching(&UndirectedGraph::complete(4), 16)
                .unwrap()
                .len(),
            2
        );
        assert!(greatest_matching(&UndirectedGraph::empty(17), 16).is_err());
    }

    #[test]
    fn maximal_is_not_greatest_on_p4() {
        let g = p4();
        let middle = m(&g, &[(1, 2)]);
        assert!(is_maximal(&g, &middle).is_ok());
        assert!(middle.len() < greatest_matching(&g, 16).unwrap().len());
        // Both still give valid decompositions.
        decomposition_from_matching(&g, &middle)
            .unwrap()
            .validate(&g)
            .unwrap();
    }

    #[test]
    fn strategy_must_return_edges_for_arc_seeds() {
        let g = UndirectedGraph::complete(3);
        let r = arc_seed_decomposition_with(&g, WholeComponent);
        assert!(matches!(r, Err(Error::Contract(_))));
        let lazy = connected_seed_decomposition_with(&g, |_: &UndirectedGraph, _: &VertexSet| None);
        assert!(matches!(lazy, Err(Error::Contract(_))));
    }
}
