use serde::Serialize;

use crate::graph::{Graph, UndirectedGraph, VertexId, VertexSet};

/// Two triangles sharing only `center`. All six edges are present in the
/// host graph; the subgraph need not be induced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BowtieWitness {
    pub center: VertexId,
    pub triangle1: (VertexId, VertexId),
    pub triangle2: (VertexId, VertexId),
}

impl BowtieWitness {
    pub fn vertices(&self) -> [VertexId; 5] {
        [
            self.center,
            self.triangle1.0,
            self.triangle1.1,
            self.triangle2.0,
            self.triangle2.1,
        ]
    }

    /// Whether all six edges are present and the five vertices are distinct.
    pub fn is_valid_in(&self, g: &UndirectedGraph) -> bool {
        let vs = self.vertices();
        let distinct = (0..5).all(|i| (i + 1..5).all(|j| vs[i] != vs[j]));
        let (a, b) = self.triangle1;
        let (d, e) = self.triangle2;
        distinct
            && [
                (self.center, a),
                (self.center, b),
                (a, b),
                (self.center, d),
                (self.center, e),
                (d, e),
            ]
            .iter()
            .all(|&(u, v)| g.has_edge(u, v))
    }
}

/// Finds an edge `(a, b)` of `G[nbhd]` and a second edge inside
/// `nbhd \ {a, b}`; that is, a matching of size two in the neighborhood.
fn two_disjoint_edges(
    g: &UndirectedGraph,
    nbhd: &VertexSet,
) -> Option<((VertexId, VertexId), (VertexId, VertexId))> {
    for a in nbhd {
        for b in g.neighbors(a).intersection(nbhd).iter().filter(|&b| b > a) {
            let mut rest = nbhd.clone();
            rest.remove(a);
            rest.remove(b);
            for d in &rest {
                if let Some(e) = g.neighbors(d).intersection(&rest).iter().find(|&e| e > d) {
                    return Some(((a, b), (d, e)));
                }
            }
        }
    }
    None
}

/// A bowtie subgraph of `g`, if any: per center, two vertex-disjoint
/// triangles through it, i.e. two disjoint edges inside its neighborhood.
pub fn find_bowtie(g: &UndirectedGraph) -> Option<BowtieWitness> {
    (0..g.order()).map(VertexId).find_map(|c| {
        let nbhd = g.neighbors(c);
        if nbhd.len() < 4 {
            return None;
        }
        two_disjoint_edges(g, nbhd).map(|(t1, t2)| BowtieWitness {
            center: c,
            triangle1: t1,
            triangle2: t2,
        })
    })
}

pub fn is_bowtie_free(g: &UndirectedGraph) -> bool {
    find_bowtie(g).is_none()
}

/// Bits strictly above `v`.
#[inline]
fn above(v: usize) -> u64 {
    u64::MAX.checked_shl(v as u32 + 1).unwrap_or(0)
}

/// Bowtie test on adjacency bitmasks (at most 64 vertices), used by the
/// enumeration oracles.
pub(crate) fn masks_have_bowtie(adj: &[u64]) -> bool {
    adj.iter().any(|&nbhd| {
        if nbhd.count_ones() < 4 {
            return false;
        }
        let mut outer = nbhd;
        while outer != 0 {
            let a = outer.trailing_zeros() as usize;
            outer &= outer - 1;
            let mut partners = adj[a] & nbhd & above(a);
            while partners != 0 {
                let b = partners.trailing_zeros() as usize;
                partners &= partners - 1;
                let rest = nbhd & !(1 << a) & !(1 << b);
                let mut inner = rest;
                while inner != 0 {
                    let d = inner.trailing_zeros() as usize;
                    inner &= inner - 1;
                    if adj[d] & rest != 0 {
                        return true;
                    }
                }
            }
        }
        false
    })
}

/// Triangle test on adjacency bitmasks.
pub(crate) fn masks_have_triangle(adj: &[u64]) -> bool {
    adj.iter().enumerate().any(|(u, &nu)| {
        let mut later = nu & above(u);
        while later != 0 {
            let v = later.trailing_zeros() as usize;
            later &= later - 1;
            if adj[v] & nu & above(v) != 0 {
                return true;
            }
        }
        false
    })
}

/// A triangle of `g`, if any, as an ascending vertex triple.
pub fn find_triangle(g: &UndirectedGraph) -> Option<[VertexId; 3]> {
    g.edges().find_map(|(u, v)| {
        g.neighbors(u)
            .intersection(g.neighbors(v))
            .iter()
            .find(|&w| w > v)
            .map(|w| [u, v, w])
    })
}
