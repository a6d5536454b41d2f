use super::{Decomposition, DecompositionKind};
use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph, VertexId, VertexSet};
use crate::inflation::hull;

/// `Inf^∞{x}` together with every vertex that generates it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    pub vertices: VertexSet,
    pub headings: VertexSet,
}

/// `Inf^∞{x}` for every vertex `x`, indexed by `x`.
pub fn regions(g: &Digraph) -> Vec<VertexSet> {
    (0..g.order())
        .map(|x| hull(g, &VertexSet::singleton(g.order(), VertexId(x))).expect("same universe"))
        .collect()
}

fn headings_of(all: &[VertexSet], vertices: &VertexSet) -> VertexSet {
    VertexSet::from_ids(
        vertices.universe(),
        vertices.iter().filter(|y| &all[y.0] == vertices),
    )
}

pub fn region_of(g: &Digraph, x: VertexId) -> Result<Region> {
    g.check_vertex(x)?;
    let vertices = hull(g, &VertexSet::singleton(g.order(), x))?;
    let headings = VertexSet::from_ids(
        g.order(),
        vertices.iter().filter(|&y| {
            y == x || hull(g, &VertexSet::singleton(g.order(), y)).as_ref() == Ok(&vertices)
        }),
    );
    Ok(Region { vertices, headings })
}

/// The unique decomposition into intervals (regions not strictly contained in
/// another region). Components are ordered by smallest vertex; each seed is
/// the component's smallest heading.
pub fn interval_decomposition(g: &Digraph) -> Decomposition {
    let all = regions(g);
    let mut components: Vec<VertexSet> = Vec::new();
    for r in &all {
        let maximal = all.iter().all(|other| !(r.is_subset(other) && r != other));
        if maximal && !components.contains(r) {
            components.push(r.clone());
        }
    }
    let seeds = components
        .iter()
        .map(|c| {
            let h = headings_of(&all, c)
                .first()
                .expect("a region has a heading");
            VertexSet::singleton(g.order(), h)
        })
        .collect();
    Decomposition::new(
        DecompositionKind::Interval,
        components,
        seeds,
        VertexSet::empty(g.order()),
    )
    .sorted()
}

/// For a region entered from outside, returns the entering vertex `y` and the
/// single heading `x` with `D⁺(y) ∩ U = {x}`.
///
/// Returns `None` when no arc enters the region from outside.
pub fn unique_heading_witness(g: &Digraph, r: &Region) -> Result<Option<(VertexId, VertexId)>> {
    g.check_set(&r.vertices)?;
    g.check_set(&r.headings)?;
    let Some(h) = r.headings.first() else {
        return Err(Error::InvalidArgument("region without a heading".into()));
    };
    if region_of(g, h)? != *r {
        return Err(Error::InvalidArgument(format!(
            "{:?} with headings {:?} is not a region of the graph",
            r.vertices, r.headings
        )));
    }
    let outside = r.vertices.complement();
    let Some(y) = outside
        .iter()
        .find(|&y| g.outputs(y).intersects(&r.vertices))
    else {
        return Ok(None);
    };
    let entry = g.outputs(y).intersection(&r.vertices);
    if entry.len() != 1 || entry != r.headings {
        return Err(Error::Contract(format!(
            "vertex {y} enters region {:?} at {entry:?} but its headings are {:?}",
            r.vertices, r.headings
        )));
    }
    Ok(Some((y, entry.first().expect("one element"))))
}
