use super::{Decomposition, DecompositionKind};
use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph, VertexSet};
use crate::inflation::hull;

/// Picks the next seed: a nonempty connected subset of the uncovered vertices.
pub trait SeedStrategy {
    fn next_seed(&mut self, g: &Digraph, uncovered: &VertexSet) -> Option<VertexSet>;
}

impl<F> SeedStrategy for F
where
    F: FnMut(&Digraph, &VertexSet) -> Option<VertexSet>,
{
    fn next_seed(&mut self, g: &Digraph, uncovered: &VertexSet) -> Option<VertexSet> {
        self(g, uncovered)
    }
}

/// The smallest uncovered vertex as a singleton seed.
#[derive(Clone, Copy, Debug, Default)]
pub struct LowestVertex;

impl SeedStrategy for LowestVertex {
    fn next_seed(&mut self, g: &Digraph, uncovered: &VertexSet) -> Option<VertexSet> {
        uncovered
            .first()
            .map(|v| VertexSet::singleton(g.order(), v))
    }
}

/// Builds a decomposition from connected seeds.
///
/// Each round takes a connected `W` from the uncovered vertices. Every
/// existing component that meets `Inf^∞ W` is contained in it and is
/// replaced by `W`; otherwise `W` is appended. The covered set grows
/// strictly each round, so there are at most `p` rounds.
pub fn seeded_decomposition<S: SeedStrategy>(
    g: &Digraph,
    mut strategy: S,
) -> Result<Decomposition> {
    let mut components: Vec<VertexSet> = Vec::new();
    let mut seeds: Vec<VertexSet> = Vec::new();
    let mut covered = VertexSet::empty(g.order());
    let mut rounds = 0;
    while covered.len() < g.order() {
        let uncovered = covered.complement();
        let w = strategy.next_seed(g, &uncovered).ok_or_else(|| {
            Error::Contract(format!(
                "seed strategy stopped with {uncovered:?} uncovered"
            ))
        })?;
        g.check_set(&w)?;
        if w.is_empty() || !w.is_subset(&uncovered) {
            return Err(Error::Contract(format!(
                "seed {w:?} is not a nonempty subset of the uncovered vertices {uncovered:?}"
            )));
        }
        if !g.is_connected_subset(&w)? {
            return Err(Error::Contract(format!("seed {w:?} is not connected")));
        }
        let grown = hull(g, &w)?;
        let before = covered.len();

        let mut kept_components = Vec::with_capacity(components.len());
        let mut kept_seeds = Vec::with_capacity(seeds.len());
        for (c, s) in components.into_iter().zip(seeds) {
            if c.intersects(&grown) {
                if !c.is_subset(&grown) {
                    return Err(Error::Contract(format!(
                        "component {c:?} meets Inf^∞ of {w:?} without being contained in it"
                    )));
                }
            } else {
                kept_components.push(c);
                kept_seeds.push(s);
            }
        }
        components = kept_components;
        seeds = kept_seeds;
        covered.union_with(&grown);
        components.push(grown);
        seeds.push(w);

        rounds += 1;
        debug_assert!(covered.len() > before && rounds <= g.order());
    }
    Ok(Decomposition::new(
        DecompositionKind::ConnectedSeed,
        components,
        seeds,
        VertexSet::empty(g.order()),
    ))
}
