//! Seeded random graphs and jets for property tests and the acceptance
//! harness.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::decomposition::Jet;
use crate::graph::{Digraph, Graph, UndirectedGraph, VertexId, VertexSet};
use crate::turan::is_bowtie_free;

/// Each ordered pair becomes an arc with probability `density`; loops only
/// when `loops` is set.
pub fn random_digraph<R: Rng>(rng: &mut R, p: usize, density: f64, loops: bool) -> Digraph {
    let arcs: Vec<(usize, usize)> = (0..p)
        .flat_map(|u| (0..p).map(move |v| (u, v)))
        .filter(|&(u, v)| (loops || u != v) && rng.gen_bool(density))
        .collect();
    Digraph::new(p, arcs).expect("arcs are in range")
}

/// Erdős–Rényi `G(p, density)`.
pub fn random_graph<R: Rng>(rng: &mut R, p: usize, density: f64) -> UndirectedGraph {
    let edges: Vec<(usize, usize)> = (0..p)
        .flat_map(|u| (u + 1..p).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(density))
        .collect();
    UndirectedGraph::new(p, edges).expect("edges are loop-free and in range")
}

/// A uniformly random labelled tree on `p` vertices by random attachment,
/// returned as an edge list.
fn random_tree_edges<R: Rng>(rng: &mut R, p: usize) -> Vec<(usize, usize)> {
    let mut order: Vec<usize> = (0..p).collect();
    order.shuffle(rng);
    (1..p)
        .map(|i| (order[rng.gen_range(0..i)], order[i]))
        .collect()
}

/// A random connected graph: a random spanning tree plus each remaining pair
/// with probability `density`.
pub fn random_connected_graph<R: Rng>(rng: &mut R, p: usize, density: f64) -> UndirectedGraph {
    let mut edges = random_tree_edges(rng, p);
    let tree = UndirectedGraph::new(p, edges.iter().copied()).expect("tree edges");
    for u in 0..p {
        for v in u + 1..p {
            if !tree.has_edge(VertexId(u), VertexId(v)) && rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    UndirectedGraph::new(p, edges).expect("edges are loop-free and in range")
}

/// A random connected bowtie-free graph: a random spanning tree, grown as in
/// [`grow_bowtie_free`].
pub fn random_connected_bowtie_free<R: Rng>(
    rng: &mut R,
    p: usize,
    density: f64,
) -> UndirectedGraph {
    let tree = UndirectedGraph::new(p, random_tree_edges(rng, p)).expect("tree edges");
    grow_bowtie_free(rng, tree, density)
}

/// A random bowtie-free graph grown from the empty graph.
pub fn random_bowtie_free<R: Rng>(rng: &mut R, p: usize, density: f64) -> UndirectedGraph {
    grow_bowtie_free(rng, UndirectedGraph::empty(p), density)
}

/// Tries the missing pairs of the bowtie-free `g` in random order, each
/// with probability `density`, keeping an edge only if no bowtie appears.
/// With `density = 1` the result is a maximal bowtie-free supergraph.
pub fn grow_bowtie_free<R: Rng>(
    rng: &mut R,
    mut g: UndirectedGraph,
    density: f64,
) -> UndirectedGraph {
    let p = g.order();
    let mut pairs: Vec<(usize, usize)> = (0..p)
        .flat_map(|u| (u + 1..p).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(VertexId(u), VertexId(v)))
        .collect();
    pairs.shuffle(rng);
    for (u, v) in pairs {
        if !rng.gen_bool(density) {
            continue;
        }
        let mut edges: Vec<(usize, usize)> = g.edges().map(|(a, b)| (a.0, b.0)).collect();
        edges.push((u, v));
        let candidate = UndirectedGraph::new(p, edges).expect("edges are loop-free");
        if is_bowtie_free(&candidate) {
            g = candidate;
        }
    }
    g
}

/// A uniformly random permutation of `0..p`.
pub fn random_permutation<R: Rng>(rng: &mut R, p: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..p).collect();
    perm.shuffle(rng);
    perm
}

/// A uniformly random subset of `0..universe`.
pub fn random_subset<R: Rng>(rng: &mut R, universe: usize) -> VertexSet {
    VertexSet::from_indices(universe, (0..universe).filter(|_| rng.gen_bool(0.5)))
}

/// A random jet on a layered DAG: `layers` layers of 1..=`max_width`
/// vertices, numbered layer by layer. Every vertex of `W_j` (`j ≥ 2`) gets an
/// arc from a random vertex of `W_{j−1}`, which makes the path condition hold
/// by induction; other forward arcs `W_i → W_j` (`i < j`) are added with
/// probability `density`.
pub fn random_jet<R: Rng>(
    rng: &mut R,
    layers: usize,
    max_width: usize,
    density: f64,
) -> (Digraph, Jet) {
    let mut bounds = vec![0];
    for _ in 0..layers {
        let width = rng.gen_range(1..=max_width.max(1));
        bounds.push(bounds.last().unwrap() + width);
    }
    let p = *bounds.last().unwrap();
    let layer = |i: usize| bounds[i]..bounds[i + 1];

    let mut arcs = Vec::new();
    for j in 1..layers {
        for x in layer(j) {
            let prev = layer(j - 1);
            arcs.push((rng.gen_range(prev), x));
            for i in 0..j {
                for y in layer(i) {
                    if rng.gen_bool(density) {
                        arcs.push((y, x));
                    }
                }
            }
        }
    }
    let g = Digraph::new(p, arcs).expect("arcs are in range");
    let jet = Jet::new(
        (0..layers)
            .map(|i| VertexSet::from_indices(p, layer(i)))
            .collect(),
    );
    (g, jet)
}

/// Adds one arc `W_j → W_i` with `i ≤ j`, which breaks the first jet
/// condition. Returns `None` for a jet without any such position.
pub fn with_backward_arc<R: Rng>(rng: &mut R, g: &Digraph, jet: &Jet) -> Option<Digraph> {
    let candidates: Vec<(usize, usize)> = jet
        .layers
        .iter()
        .enumerate()
        .flat_map(|(j, from)| {
            jet.layers[..=j].iter().flat_map(move |to| {
                from.iter()
                    .flat_map(move |u| to.iter().map(move |v| (u.0, v.0)))
            })
        })
        .filter(|&(u, v)| !g.has_arc(VertexId(u), VertexId(v)))
        .collect();
    let &extra = candidates.choose(rng)?;
    let mut arcs: Vec<(usize, usize)> = g.arcs().map(|(u, v)| (u.0, v.0)).collect();
    arcs.push(extra);
    Some(Digraph::new(g.order(), arcs).expect("arcs are in range"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::verify_jet;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn generated_jets_verify() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let (g, jet) = random_jet(&mut rng, 4, 3, 0.3);
            assert!(verify_jet(&g, &jet).unwrap().is_valid());
            let broken = with_backward_arc(&mut rng, &g, &jet).unwrap();
            assert!(!verify_jet(&broken, &jet).unwrap().is_valid());
        }
    }

    #[test]
    fn connected_generators() {
        let mut rng = StdRng::seed_from_u64(1);
        for p in 1..10 {
            assert!(random_connected_graph(&mut rng, p, 0.3).is_connected());
            let g = random_connected_bowtie_free(&mut rng, p, 0.7);
            assert!(g.is_connected() && is_bowtie_free(&g));
        }
    }

    #[test]
    fn deterministic_under_seed() {
        let a = random_digraph(&mut StdRng::seed_from_u64(3), 6, 0.4, true);
        let b = random_digraph(&mut StdRng::seed_from_u64(3), 6, 0.4, true);
        assert_eq!(a, b);
    }
}
