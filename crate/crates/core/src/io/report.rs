//! Deterministic JSON reports. Vertices appear as labels; vertex arrays are
//! sorted lexicographically and object keys are sorted by `serde_json`.

use serde_json::{json, Value};

use crate::decomposition::Decomposition;
use crate::graph::{Graph, UndirectedGraph, VertexId, VertexSet};
use crate::inflation::{hull, hyperinflate};
use crate::matching::Matching;
use crate::turan::{ExtremalReport, K3Check, VolumeReport, VolumeStatus};

fn singleton_hull<G: Graph>(g: &G, x: VertexId) -> VertexSet {
    hull(g, &VertexSet::singleton(g.order(), x)).expect("same universe")
}

/// Vertices `x` of `c` with `Inf^∞{x} = c`.
pub fn headings<G: Graph>(g: &G, c: &VertexSet) -> VertexSet {
    VertexSet::from_ids(g.order(), c.iter().filter(|&x| &singleton_hull(g, x) == c))
}

/// Sorted labels of `u`.
pub fn labels<G: Graph>(g: &G, u: &VertexSet) -> Vec<String> {
    g.sorted_labels(u)
}

/// The layers `Inf^i{x} \ Inf^{i−1}{x}`, each sorted, for the heading whose
/// label sorts first; empty when `c` has no heading.
fn layers_json<G: Graph>(g: &G, heads: &VertexSet) -> Vec<Vec<String>> {
    let Some(x) = heads.iter().min_by_key(|&v| g.label(v).into_owned()) else {
        return Vec::new();
    };
    let trace = hyperinflate(g, &VertexSet::singleton(g.order(), x)).expect("same universe");
    trace.increments().iter().map(|l| labels(g, l)).collect()
}

/// `{"kind", "components": [{"vertices", "headings", "jet_layers", "seed"}], "leftover"}`
/// with components sorted by their vertex arrays.
pub fn decomposition_json<G: Graph>(g: &G, d: &Decomposition) -> Value {
    let mut components: Vec<(Vec<String>, Value)> = d
        .components()
        .iter()
        .zip(d.seeds())
        .map(|(c, seed)| {
            let heads = headings(g, c);
            let vertices = labels(g, c);
            let value = json!({
                "vertices": vertices,
                "headings": labels(g, &heads),
                "jet_layers": layers_json(g, &heads),
                "seed": labels(g, seed),
            });
            (vertices, value)
        })
        .collect();
    components.sort_by(|a, b| a.0.cmp(&b.0));
    json!({
        "kind": d.kind().as_str(),
        "components": components.into_iter().map(|(_, v)| v).collect::<Vec<_>>(),
        "leftover": labels(g, d.leftover()),
    })
}

fn edge_labels<G: Graph>(g: &G, u: VertexId, v: VertexId) -> [String; 2] {
    let (a, b) = (g.label(u).into_owned(), g.label(v).into_owned());
    if a <= b {
        [a, b]
    } else {
        [b, a]
    }
}

/// `{"matching": [["a","b"], ...], "maximal": bool}`.
pub fn matching_json(g: &UndirectedGraph, m: &Matching, maximal: bool) -> Value {
    let mut edges: Vec<[String; 2]> = m.edges().map(|(u, v)| edge_labels(g, u, v)).collect();
    edges.sort();
    json!({ "matching": edges, "maximal": maximal })
}

/// Edges of an unlabeled oracle graph as ascending index pairs.
fn index_edges(g: &UndirectedGraph) -> Vec<[usize; 2]> {
    g.edges().map(|(u, v)| [u.0, v.0]).collect()
}

/// `{"p", "formula_bound", "oracle_bound", "method", "witness_edges", ...}`.
pub fn extremal_json(r: &ExtremalReport) -> Value {
    json!({
        "p": r.p,
        "formula_bound": r.formula_bound,
        "oracle_bound": r.oracle_bound,
        "method": r.method,
        "witness_edges": index_edges(&r.witness_graph),
        "graphs_checked": r.graphs_checked,
        "formula_matches": r.formula_matches(),
        "k4_exception": r.p == 4 && r.oracle_bound == 6,
    })
}

pub fn k3_json(r: &K3Check) -> Value {
    json!({
        "p": r.p,
        "bound": r.bound,
        "graphs_checked": r.graphs_checked,
        "bipartite_triangle_free": r.bipartite_triangle_free,
        "counterexample_edges": r.counterexample.as_ref().map(index_edges),
        "holds": r.holds(),
    })
}

/// Volume check on an input graph, witnesses in label space.
pub fn volume_json(g: &UndirectedGraph, r: &VolumeReport) -> Value {
    let (status, witness) = match &r.status {
        VolumeStatus::Holds => ("holds", Value::Null),
        VolumeStatus::Violated => ("violated", Value::Null),
        VolumeStatus::ExemptK4 => ("exempt-k4", Value::Null),
        VolumeStatus::HasBowtie { witness } => (
            "has-bowtie",
            json!({
                "center": g.label(witness.center),
                "triangles": [
                    edge_labels(g, witness.triangle1.0, witness.triangle1.1),
                    edge_labels(g, witness.triangle2.0, witness.triangle2.1),
                ],
            }),
        ),
    };
    json!({
        "p": r.p,
        "q": r.q,
        "bound": r.bound,
        "status": status,
        "bowtie": witness,
    })
}

/// Pretty JSON followed by a newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::interval_decomposition;
    use crate::io::parse_edge_list;

    #[test]
    fn chain_interval_json() {
        let g = parse_edge_list("a b\nb c\n", true)
            .unwrap()
            .into_directed()
            .unwrap();
        let v = decomposition_json(&g, &interval_decomposition(&g));
        assert_eq!(
            v,
            json!({
                "kind": "interval",
                "components": [{
                    "vertices": ["a", "b", "c"],
                    "headings": ["a"],
                    "jet_layers": [["b"], ["c"]],
                    "seed": ["a"],
                }],
                "leftover": [],
            })
        );
    }
}
