use super::Region;
use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph, VertexId, VertexSet};
use crate::inflation::hyperinflate;

/// A partition `W₁ ⊔ … ⊔ W_n` of (part of) a digraph's vertices.
///
/// The partition is a jet when no arc points from `W_j` to `W_i` with
/// `i ≤ j`, and every vertex of `W_j` (`j ≥ 2`) ends a directed path
/// `y₁ → … → y_{j−1} → x` with `y_i ∈ W_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Jet {
    pub layers: Vec<VertexSet>,
}

impl Jet {
    pub fn new(layers: Vec<VertexSet>) -> Self {
        Jet { layers }
    }

    pub fn vertices(&self, universe: usize) -> VertexSet {
        let mut all = VertexSet::empty(universe);
        for l in &self.layers {
            all.union_with(l);
        }
        all
    }

    /// Layer index (0-based) of every covered vertex.
    fn layer_index(&self, universe: usize) -> Vec<Option<usize>> {
        let mut index = vec![None; universe];
        for (i, layer) in self.layers.iter().enumerate() {
            for v in layer {
                index[v.0] = Some(i);
            }
        }
        index
    }
}

/// Outcome of [`verify_jet`]; layers are reported 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JetVerdict {
    Valid,
    /// An arc from layer `from_layer` to a layer `to_layer ≤ from_layer`.
    BackwardArc {
        from: VertexId,
        to: VertexId,
        from_layer: usize,
        to_layer: usize,
    },
    /// A vertex of `layer` not reached by a path through all earlier layers.
    Unreachable {
        vertex: VertexId,
        layer: usize,
    },
}

impl JetVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, JetVerdict::Valid)
    }
}

/// Checks both jet conditions on the arcs of `g` among the layer vertices.
///
/// Fails with an error if the layers are empty, overlap, or leave the graph.
pub fn verify_jet(g: &Digraph, jet: &Jet) -> Result<JetVerdict> {
    let mut seen = VertexSet::empty(g.order());
    for (i, layer) in jet.layers.iter().enumerate() {
        g.check_set(layer)?;
        if layer.is_empty() {
            return Err(Error::InvalidArgument(format!(
                "jet layer {} is empty",
                i + 1
            )));
        }
        if let Some(v) = layer.intersection(&seen).first() {
            return Err(Error::Overlapping(v.0));
        }
        seen.union_with(layer);
    }
    let index = jet.layer_index(g.order());

    for (j, layer) in jet.layers.iter().enumerate() {
        for u in layer {
            for v in g.outputs(u) {
                if let Some(i) = index[v.0] {
                    if i <= j {
                        return Ok(JetVerdict::BackwardArc {
                            from: u,
                            to: v,
                            from_layer: j + 1,
                            to_layer: i + 1,
                        });
                    }
                }
            }
        }
    }

    // reached[j]: vertices of W_j at the end of a path through W_1, …, W_{j-1}.
    let mut reached = jet.layers[0].clone();
    for (j, layer) in jet.layers.iter().enumerate().skip(1) {
        let mut next = VertexSet::empty(g.order());
        for x in layer {
            if g.inputs(x).intersects(&reached) {
                next.insert(x);
            } else {
                return Ok(JetVerdict::Unreachable {
                    vertex: x,
                    layer: j + 1,
                });
            }
        }
        reached = next;
    }
    Ok(JetVerdict::Valid)
}

/// Layers `W_i = Inf^i{x} \ Inf^{i−1}{x}` of the region headed by `x`.
pub fn jet_layers(g: &Digraph, r: &Region, x: VertexId) -> Result<Jet> {
    g.check_vertex(x)?;
    if !r.headings.contains(x) {
        return Err(Error::InvalidArgument(format!(
            "vertex {x} is not a heading of the region"
        )));
    }
    let trace = hyperinflate(g, &VertexSet::singleton(g.order(), x))?;
    if trace.fixpoint() != &r.vertices {
        return Err(Error::InvalidArgument(format!(
            "Inf^∞{{{x}}} = {:?} differs from the region {:?}",
            trace.fixpoint(),
            r.vertices
        )));
    }
    let jet = Jet::new(trace.increments());
    if !jet.layers.is_empty() {
        let verdict = verify_jet(g, &jet)?;
        if !verdict.is_valid() {
            return Err(Error::Contract(format!(
                "region layers are not a jet: {verdict:?}"
            )));
        }
    }
    Ok(jet)
}

/// Optional arcs back into the new heading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeadingArcs {
    /// Vertices of layers `W₂, W₃, …` that get an arc to the heading.
    pub back: VertexSet,
    /// Whether the heading gets a loop.
    pub heading_loop: bool,
}

impl HeadingArcs {
    pub fn none(universe: usize) -> Self {
        HeadingArcs {
            back: VertexSet::empty(universe),
            heading_loop: false,
        }
    }
}

/// A digraph that is one interval, with its heading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetInterval {
    pub graph: Digraph,
    pub heading: VertexId,
}

/// Adds a fresh heading `x` to the jet graph `h` with arcs `{x} × W₁` plus the
/// chosen arcs `C`, and checks that the whole vertex set is then
/// `Inf^∞{x}`.
pub fn jet_to_interval(h: &Digraph, jet: &Jet, closing: &HeadingArcs) -> Result<JetInterval> {
    let verdict = verify_jet(h, jet)?;
    if !verdict.is_valid() {
        return Err(Error::InvalidArgument(format!("not a jet: {verdict:?}")));
    }
    if jet.vertices(h.order()) != h.vertices() {
        return Err(Error::InvalidArgument(
            "jet layers must partition the vertices of the jet graph".into(),
        ));
    }
    h.check_set(&closing.back)?;
    if let Some(first) = jet.layers.first() {
        if let Some(v) = closing.back.intersection(first).first() {
            return Err(Error::InvalidArgument(format!(
                "vertex {v} lies in the first layer and cannot close back to the heading"
            )));
        }
    }

    let x = h.order();
    let mut extra: Vec<(usize, usize)> = Vec::new();
    if let Some(first) = jet.layers.first() {
        extra.extend(first.iter().map(|w| (x, w.0)));
    }
    extra.extend(closing.back.iter().map(|w| (w.0, x)));
    if closing.heading_loop {
        extra.push((x, x));
    }
    let graph = h.extended(None, &extra)?;
    let heading = VertexId(x);

    let region = crate::inflation::hull(&graph, &VertexSet::singleton(graph.order(), heading))?;
    if region != graph.vertices() {
        return Err(Error::Contract(format!(
            "Inf^∞ of the new heading is {region:?}, not the whole graph"
        )));
    }
    Ok(JetInterval { graph, heading })
}
