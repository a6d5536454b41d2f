//! Vertex decompositions of digraphs: regions and intervals, the generic
//! connected-seed process, and the layered jet structure of an interval.
//!
//! A decomposition partitions the vertices into hyperinflations; each
//! component keeps the arcs of `G` restricted to it.

mod jet;
mod region;
mod seeded;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::inflation;

pub use jet::{jet_layers, jet_to_interval, verify_jet, HeadingArcs, Jet, JetInterval, JetVerdict};
pub use region::{interval_decomposition, region_of, regions, unique_heading_witness, Region};
pub use seeded::{seeded_decomposition, LowestVertex, SeedStrategy};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecompositionKind {
    /// Components are the intervals (maximal regions).
    Interval,
    /// Components are `Inf^∞` of connected seeds.
    ConnectedSeed,
    /// Undirected: components are `Inf` of single edges.
    ArcSeed,
}

impl DecompositionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            DecompositionKind::Interval => "interval",
            DecompositionKind::ConnectedSeed => "connected-seed",
            DecompositionKind::ArcSeed => "arc-seed",
        }
    }
}

impl fmt::Display for DecompositionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Components with the seeds that generate them.
///
/// `V = (⊔ components) ⊔ leftover`; the leftover is only ever nonempty for
/// undirected decompositions, where it collects the singleton components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    kind: DecompositionKind,
    components: Vec<VertexSet>,
    seeds: Vec<VertexSet>,
    leftover: VertexSet,
}

impl Decomposition {
    pub(crate) fn new(
        kind: DecompositionKind,
        components: Vec<VertexSet>,
        seeds: Vec<VertexSet>,
        leftover: VertexSet,
    ) -> Self {
        debug_assert_eq!(components.len(), seeds.len());
        Decomposition {
            kind,
            components,
            seeds,
            leftover,
        }
    }

    pub fn kind(&self) -> DecompositionKind {
        self.kind
    }

    pub fn components(&self) -> &[VertexSet] {
        &self.components
    }

    pub fn seeds(&self) -> &[VertexSet] {
        &self.seeds
    }

    pub fn leftover(&self) -> &VertexSet {
        &self.leftover
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// The same decomposition with components ordered by smallest vertex.
    pub(crate) fn sorted(mut self) -> Self {
        let mut pairs: Vec<_> = self.components.into_iter().zip(self.seeds).collect();
        pairs.sort_by_key(|(c, _)| c.first());
        (self.components, self.seeds) = pairs.into_iter().unzip();
        self
    }

    /// Checks the structural invariants against `g`: pairwise disjoint
    /// components that together with the leftover cover `V`, each component
    /// stable and equal to the fixpoint of its seed.
    pub fn validate<G: Graph>(&self, g: &G) -> Result<()> {
        let mut covered = self.leftover.clone();
        g.check_set(&covered)?;
        for (component, seed) in self.components.iter().zip(&self.seeds) {
            g.check_set(component)?;
            if component.intersects(&covered) {
                return Err(Error::Contract(format!(
                    "component {component:?} overlaps another component or the leftover"
                )));
            }
            covered.union_with(component);
            if !inflation::is_stable(g, component)? {
                return Err(Error::Contract(format!(
                    "component {component:?} is not stable"
                )));
            }
            if &inflation::hull(g, seed)? != component {
                return Err(Error::Contract(format!(
                    "seed {seed:?} does not generate component {component:?}"
                )));
            }
        }
        if covered != g.vertices() {
            return Err(Error::Contract(format!(
                "components miss vertices {:?}",
                covered.complement()
            )));
        }
        Ok(())
    }
}
