//! Enumerators and naive oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use graphdecomp::graph::{Digraph, Graph, UndirectedGraph, VertexId, VertexSet};

/// Every digraph on `p` vertices (with loops when `loops`), in bitmask order
/// over the ordered pairs `(u, v)`.
pub fn all_digraphs(p: usize, loops: bool) -> impl Iterator<Item = Digraph> {
    let pairs: Vec<(usize, usize)> = (0..p)
        .flat_map(|u| (0..p).map(move |v| (u, v)))
        .filter(|&(u, v)| loops || u != v)
        .collect();
    (0u64..1 << pairs.len()).map(move |bits| digraph_from_bits(p, &pairs, bits))
}

pub fn digraph_from_bits(p: usize, pairs: &[(usize, usize)], bits: u64) -> Digraph {
    Digraph::new(
        p,
        pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, &e)| e),
    )
    .unwrap()
}

pub fn all_graphs(p: usize) -> impl Iterator<Item = UndirectedGraph> {
    let pairs: Vec<(usize, usize)> = (0..p)
        .flat_map(|u| (u + 1..p).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |bits| {
        UndirectedGraph::new(
            p,
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &e)| e),
        )
        .unwrap()
    })
}

/// All subsets of `0..p`.
pub fn all_subsets(p: usize) -> Vec<VertexSet> {
    (0u64..1 << p).map(|m| VertexSet::from_mask(p, m)).collect()
}

/// `Inf U` straight from the definition, on index vectors.
pub fn naive_inflate<G: Graph>(g: &G, u: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut out = u.clone();
    for v in 0..g.order() {
        let ins: Vec<usize> = g.inputs(VertexId(v)).iter().map(|w| w.0).collect();
        if !ins.is_empty() && ins.iter().all(|w| u.contains(w)) {
            out.insert(v);
        }
    }
    out
}

/// `Inf^∞ U` by iterating the naive step `p + 1` times.
pub fn naive_hull<G: Graph>(g: &G, u: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut cur = u.clone();
    for _ in 0..=g.order() {
        cur = naive_inflate(g, &cur);
    }
    cur
}

pub fn to_btree(s: &VertexSet) -> BTreeSet<usize> {
    s.iter().map(|v| v.0).collect()
}

/// A partition as a set of index sets, for order-independent comparison.
pub fn partition(sets: &[VertexSet]) -> BTreeSet<BTreeSet<usize>> {
    sets.iter().map(to_btree).collect()
}

/// Maximal regions from the naive hull: the expected interval partition.
pub fn naive_intervals(g: &Digraph) -> BTreeSet<BTreeSet<usize>> {
    let regions: Vec<BTreeSet<usize>> = (0..g.order())
        .map(|x| naive_hull(g, &BTreeSet::from([x])))
        .collect();
    regions
        .iter()
        .filter(|r| !regions.iter().any(|o| r.is_subset(o) && r != &o))
        .cloned()
        .collect()
}

/// Every matching of `g`, by subset search over the edge list with pruning
/// on shared endpoints.
pub fn all_matchings(g: &UndirectedGraph) -> Vec<Vec<(usize, usize)>> {
    let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (u.0, v.0)).collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(
        edges: &[(usize, usize)],
        i: usize,
        used: u64,
        current: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if i == edges.len() {
            out.push(current.clone());
            return;
        }
        go(edges, i + 1, used, current, out);
        let (u, v) = edges[i];
        if used >> u & 1 == 0 && used >> v & 1 == 0 {
            current.push((u, v));
            go(edges, i + 1, used | 1 << u | 1 << v, current, out);
            current.pop();
        }
    }
    go(&edges, 0, 0, &mut current, &mut out);
    out
}

/// Maximal matchings: no edge of `g` has both endpoints uncovered.
pub fn all_maximal_matchings(g: &UndirectedGraph) -> Vec<Vec<(usize, usize)>> {
    all_matchings(g)
        .into_iter()
        .filter(|m| {
            let covered: BTreeSet<usize> = m.iter().flat_map(|&(u, v)| [u, v]).collect();
            g.edges()
                .all(|(u, v)| covered.contains(&u.0) || covered.contains(&v.0))
        })
        .collect()
}

/// Strong connectivity of `u` by transitive closure of `G[u]`.
pub fn closure_connected(g: &Digraph, u: &VertexSet) -> bool {
    let vs: Vec<usize> = u.iter().map(|v| v.0).collect();
    let n = vs.len();
    let mut reach = vec![vec![false; n]; n];
    for i in 0..n {
        reach[i][i] = true;
        for j in 0..n {
            if g.has_arc(VertexId(vs[i]), VertexId(vs[j])) {
                reach[i][j] = true;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if reach[i][k] && reach[k][j] {
                    reach[i][j] = true;
                }
            }
        }
    }
    reach.iter().all(|row| row.iter().all(|&r| r))
}

/// The longest path (vertex count) by trying every vertex sequence.
pub fn brute_longest_path(g: &UndirectedGraph) -> usize {
    fn extend(g: &UndirectedGraph, path: &mut Vec<usize>, best: &mut usize) {
        *best = (*best).max(path.len());
        let last = *path.last().unwrap();
        for next in 0..g.order() {
            if !path.contains(&next) && g.has_edge(VertexId(last), VertexId(next)) {
                path.push(next);
                extend(g, path, best);
                path.pop();
            }
        }
    }
    let mut best = 0;
    for s in 0..g.order() {
        extend(g, &mut vec![s], &mut best);
    }
    best
}

/// A random digraph with loops, `p` in `min_p..=max_p` and a random density.
pub fn sample_digraph<R: rand::Rng>(rng: &mut R, min_p: usize, max_p: usize) -> Digraph {
    let p = rng.gen_range(min_p..=max_p);
    let density = rng.gen_range(0.05..0.5);
    graphdecomp::generate::random_digraph(rng, p, density, true)
}
