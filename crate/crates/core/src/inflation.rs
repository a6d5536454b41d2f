//! The inflation operator and its fixpoint.
//!
//! `Inf U = U ∪ {v : ∅ ≠ D⁻(v) ⊆ U}`. On a finite graph the iterates
//! `U ⊆ Inf U ⊆ Inf² U ⊆ …` stabilise after at most `p` steps; the limit
//! `Inf^∞ U` is stable and equals the hull of `U`, the smallest stable
//! superset. Consequently a set is a hyperinflation (`Inf^∞` of something)
//! exactly when it is stable. That equivalence is a consequence of
//! finiteness rather than a definition.
//!
//! All operators work on any [`Graph`]; for undirected graphs `D⁻ = D`.

use crate::error::Result;
use crate::graph::{Graph, VertexId, VertexSet};

/// The iterates `U = Inf⁰U, Inf¹U, …, Inf^k U` up to the fixpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InflationTrace {
    layers: Vec<VertexSet>,
}

impl InflationTrace {
    pub fn layers(&self) -> &[VertexSet] {
        &self.layers
    }

    /// Number of strictly growing steps before the fixpoint.
    pub fn steps(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn input(&self) -> &VertexSet {
        &self.layers[0]
    }

    /// `Inf^∞` of the input.
    pub fn fixpoint(&self) -> &VertexSet {
        self.layers.last().expect("trace is never empty")
    }

    pub fn into_fixpoint(mut self) -> VertexSet {
        self.layers.pop().expect("trace is never empty")
    }

    /// `Inf^i U \ Inf^{i-1} U` for `i = 1..=k`.
    pub fn increments(&self) -> Vec<VertexSet> {
        self.layers
            .windows(2)
            .map(|w| w[1].difference(&w[0]))
            .collect()
    }
}

/// Whether `v` joins the inflation of `u`: `∅ ≠ D⁻(v) ⊆ u`.
#[inline]
fn enters<G: Graph + ?Sized>(g: &G, v: VertexId, u: &VertexSet) -> bool {
    let inputs = g.inputs(v);
    !inputs.is_empty() && inputs.is_subset(u)
}

fn inflate_unchecked<G: Graph + ?Sized>(g: &G, u: &VertexSet) -> VertexSet {
    let mut out = u.clone();
    for v in u.complement().iter() {
        if enters(g, v, u) {
            out.insert(v);
        }
    }
    out
}

/// `Inf U`.
pub fn inflate<G: Graph + ?Sized>(g: &G, u: &VertexSet) -> Result<VertexSet> {
    g.check_set(u)?;
    Ok(inflate_unchecked(g, u))
}

/// `Inf^n U`, with `Inf⁰ U = U`. Stops early once the fixpoint is reached.
pub fn inflate_n<G: Graph + ?Sized>(g: &G, u: &VertexSet, n: usize) -> Result<VertexSet> {
    g.check_set(u)?;
    let mut current = u.clone();
    for _ in 0..n {
        let next = inflate_unchecked(g, &current);
        if next == current {
            break;
        }
        current = next;
    }
    Ok(current)
}

/// Iterates `Inf` until two consecutive layers coincide.
pub fn hyperinflate<G: Graph + ?Sized>(g: &G, u: &VertexSet) -> Result<InflationTrace> {
    g.check_set(u)?;
    let mut layers = vec![u.clone()];
    loop {
        let last = layers.last().expect("nonempty");
        let next = inflate_unchecked(g, last);
        if &next == last {
            break;
        }
        layers.push(next);
    }
    debug_assert!(layers.len() <= g.order() + 1);
    Ok(InflationTrace { layers })
}

/// `Inf^∞ U` without keeping the intermediate layers.
pub fn hyperinflation<G: Graph + ?Sized>(g: &G, u: &VertexSet) -> Result<VertexSet> {
    g.check_set(u)?;
    let mut current = u.clone();
    loop {
        let next = inflate_unchecked(g, &current);
        if next == current {
            return Ok(current);
        }
        current = next;
    }
}

/// The smallest stable superset of `u`; equal to `Inf^∞ u` on finite graphs.
pub fn hull<G: Graph + ?Sized>(g: &G, u: &VertexSet) -> Result<VertexSet> {
    hyperinflation(g, u)
}

/// `Inf U = U`.
pub fn is_stable<G: Graph + ?Sized>(g: &G, u: &VertexSet) -> Result<bool> {
    g.check_set(u)?;
    Ok(u.complement().iter().all(|v| !enters(g, v, u)))
}

/// If `u` is a hyperinflation, returns a minimal (not necessarily minimum)
/// `U′ ⊆ u` with `Inf^∞ U′ = u`.
///
/// Vertices are dropped greedily in descending index order whenever the
/// fixpoint is preserved. Returns `None` for non-stable sets, which are
/// never hyperinflations of a finite graph.
pub fn is_hyperinflation<G: Graph + ?Sized>(g: &G, u: &VertexSet) -> Result<Option<VertexSet>> {
    if !is_stable(g, u)? {
        return Ok(None);
    }
    let mut witness = u.clone();
    let members: Vec<VertexId> = u.iter().collect();
    for &v in members.iter().rev() {
        witness.remove(v);
        if &hyperinflation(g, &witness)? != u {
            witness.insert(v);
        }
    }
    Ok(Some(witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Digraph, UndirectedGraph};

    /// Direct evaluation of the definition, vertex by vertex, over plain
    /// index vectors.
    fn naive_inflate(g: &Digraph, u: &[usize]) -> Vec<usize> {
        let p = g.order();
        (0..p)
            .filter(|&v| {
                if u.contains(&v) {
                    return true;
                }
                let inputs: Vec<usize> = (0..p)
                    .filter(|&w| g.has_arc(VertexId(w), VertexId(v)))
                    .collect();
                !inputs.is_empty() && inputs.iter().all(|w| u.contains(w))
            })
            .collect()
    }

    fn ids(s: &VertexSet) -> Vec<usize> {
        s.iter().map(|v| v.0).collect()
    }

    fn chain() -> Digraph {
        Digraph::new(3, [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn inflate_edge_cases() {
        let g = chain();
        assert!(inflate(&g, &VertexSet::empty(3)).unwrap().is_empty());
        assert_eq!(inflate(&g, &g.vertices()).unwrap(), g.vertices());
        let a = VertexSet::from_indices(3, [0]);
        assert_eq!(ids(&inflate(&g, &a).unwrap()), naive_inflate(&g, &[0]));
        assert_eq!(ids(&inflate(&g, &a).unwrap()), vec![0, 1]);
        assert!(inflate(&g, &VertexSet::empty(2)).is_err());
    }

    #[test]
    fn iterates() {
        let g = chain();
        let a = VertexSet::from_indices(3, [0]);
        assert_eq!(inflate_n(&g, &a, 0).unwrap(), a);
        let twice = naive_inflate(&g, &naive_inflate(&g, &[0]));
        assert_eq!(ids(&inflate_n(&g, &a, 2).unwrap()), twice);
        assert_eq!(twice, vec![0, 1, 2]);
        assert_eq!(inflate_n(&g, &a, 10).unwrap(), g.vertices());
    }

    #[test]
    fn trace_of_chain() {
        let g = chain();
        let trace = hyperinflate(&g, &VertexSet::from_indices(3, [0])).unwrap();
        let layers: Vec<Vec<usize>> = trace.layers().iter().map(ids).collect();
        assert_eq!(layers, vec![vec![0], vec![0, 1], vec![0, 1, 2]]);
        assert_eq!(trace.steps(), 2);

        let stable = hyperinflate(&g, &g.vertices()).unwrap();
        assert_eq!(stable.layers().len(), 1);
    }

    #[test]
    fn undirected_p3_collapses_in_one_step() {
        let p3 = UndirectedGraph::new(3, [(0, 1), (1, 2)]).unwrap();
        let b = VertexSet::from_indices(3, [1]);
        let trace = hyperinflate(&p3, &b).unwrap();
        assert_eq!(trace.steps(), 1);
        assert_eq!(trace.fixpoint(), &p3.vertices());
        assert_eq!(inflate(&p3, &b).unwrap(), p3.vertices());
    }

    #[test]
    fn stability() {
        let g = chain();
        assert!(is_stable(&g, &g.vertices()).unwrap());
        assert!(is_stable(&g, &VertexSet::empty(3)).unwrap());
        let ab = Digraph::new(2, [(0, 1)]).unwrap();
        assert!(!is_stable(&ab, &VertexSet::from_indices(2, [0])).unwrap());
    }

    #[test]
    fn hull_edge_cases() {
        let g = chain();
        assert!(hull(&g, &VertexSet::empty(3)).unwrap().is_empty());
        assert_eq!(hull(&g, &g.vertices()).unwrap(), g.vertices());
    }

    #[test]
    fn looped_vertex_never_enters() {
        // 0 -> 1 and a loop at 1: D⁻(1) = {0, 1} ⊄ {0}.
        let g = Digraph::new(2, [(0, 1), (1, 1)]).unwrap();
        let a = VertexSet::from_indices(2, [0]);
        assert_eq!(hull(&g, &a).unwrap(), a);
        // A loop-only vertex stays out of everything that excludes it.
        let lone = Digraph::new(2, [(1, 1)]).unwrap();
        assert_eq!(hull(&lone, &a).unwrap(), a);
    }

    #[test]
    fn hyperinflation_witness() {
        let ab = Digraph::new(2, [(0, 1)]).unwrap();
        let w = is_hyperinflation(&ab, &ab.vertices()).unwrap().unwrap();
        assert_eq!(ids(&w), vec![0]);
        assert_eq!(
            is_hyperinflation(&ab, &VertexSet::from_indices(2, [0])).unwrap(),
            None
        );

        // Exhaustive witness search on the same instance: {0} is the only
        // proper subset whose fixpoint is {0, 1}.
        let witnesses: Vec<u64> = (0..4u64)
            .filter(|&m| hull(&ab, &VertexSet::from_mask(2, m)).unwrap() == ab.vertices())
            .collect();
        assert_eq!(witnesses, vec![0b01, 0b11]);
    }

    #[test]
    fn witness_is_reverified_on_stable_sets() {
        let g = Digraph::new(5, [(0, 1), (1, 2), (3, 2), (2, 4), (4, 0)]).unwrap();
        for mask in 0..32u64 {
            let u = VertexSet::from_mask(5, mask);
            match is_hyperinflation(&g, &u).unwrap() {
                Some(w) => {
                    assert!(w.is_subset(&u));
                    assert_eq!(hull(&g, &w).unwrap(), u);
                }
                None => assert!(!is_stable(&g, &u).unwrap()),
            }
        }
    }
}
