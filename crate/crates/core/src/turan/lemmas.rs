//! Executable checks of the path lemmas behind the bowtie bound.
//!
//! Paths are vertex sequences and `l` is their vertex count. A maximal path
//! is a longest path of the whole graph; a premaximal path is a maximal
//! path with its last vertex removed.

use std::collections::HashSet;
use std::ops::ControlFlow;

use serde::Serialize;

use super::bowtie::{find_bowtie, BowtieWitness};
use super::extremal::formula_bound;
use crate::error::{Error, Result};
use crate::graph::{for_each_maximal_path, Graph, Path, UndirectedGraph, VertexId, VertexSet};
use crate::inflation::inflate;

fn half_up(l: usize) -> usize {
    l.div_ceil(2)
}

fn require_bowtie_free(g: &UndirectedGraph) -> Result<()> {
    match find_bowtie(g) {
        Some(w) => Err(Error::NotBowtieFree {
            center: w.center.0,
            t1: (w.triangle1.0 .0, w.triangle1.1 .0),
            t2: (w.triangle2.0 .0, w.triangle2.1 .0),
        }),
        None => Ok(()),
    }
}

/// `d(x, U)` against the bound `⌈l/2⌉ + 1` for one path and outside vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathDegreeReport {
    pub l: usize,
    pub degree: usize,
    pub bound: usize,
    /// Index `j` (0-based) with `x` adjacent to both `v_j` and `v_{j+1}`.
    pub consecutive_pair: Option<usize>,
    pub first_adjacent: bool,
    pub last_adjacent: bool,
}

impl PathDegreeReport {
    pub fn equality(&self) -> bool {
        self.degree == self.bound
    }

    /// Endpoint conclusion of the equality case: one endpoint adjacent for
    /// even `l`, both for odd `l`.
    pub fn endpoints_ok(&self) -> bool {
        if self.l.is_multiple_of(2) {
            self.first_adjacent || self.last_adjacent
        } else {
            self.first_adjacent && self.last_adjacent
        }
    }

    pub fn holds(&self) -> bool {
        self.degree <= self.bound
            && (!self.equality() || (self.consecutive_pair.is_some() && self.endpoints_ok()))
    }
}

fn path_degree(g: &UndirectedGraph, path: &[VertexId], x: VertexId) -> PathDegreeReport {
    let nbhd = g.neighbors(x);
    let degree = path.iter().filter(|&&v| nbhd.contains(v)).count();
    PathDegreeReport {
        l: path.len(),
        degree,
        bound: half_up(path.len()) + 1,
        consecutive_pair: path
            .windows(2)
            .position(|w| nbhd.contains(w[0]) && nbhd.contains(w[1])),
        first_adjacent: path.first().is_some_and(|&v| nbhd.contains(v)),
        last_adjacent: path.last().is_some_and(|&v| nbhd.contains(v)),
    }
}

/// Checks `d(x, U) ≤ ⌈l/2⌉ + 1` for a path `U` of a bowtie-free graph and
/// `x ∉ U`, plus the structural conclusions when equality holds.
pub fn check_path_degree_lemma(
    g: &UndirectedGraph,
    u: &Path,
    x: VertexId,
) -> Result<PathDegreeReport> {
    g.check_vertex(x)?;
    if u.vertices().contains(&x) {
        return Err(Error::InvalidArgument(format!(
            "vertex {x} lies on the path"
        )));
    }
    require_bowtie_free(g)?;
    Ok(path_degree(g, u.vertices(), x))
}

/// A failed lemma instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "lemma", rename_all = "kebab-case")]
pub enum LemmaViolation {
    /// `d(x, U) > ⌈l/2⌉ + 1`, or equality without its conclusions.
    PathDegree {
        path: Vec<VertexId>,
        x: VertexId,
        report: PathDegreeReport,
    },
    /// A premaximal path with `Inf U = U`.
    NotInflating { path: Vec<VertexId> },
    /// Some `x` reaches `⌈l/2⌉ + 1` but another `y` exceeds `⌈l/2⌉ − 1`.
    SecondVertex {
        path: Vec<VertexId>,
        x: VertexId,
        y: VertexId,
        degree: usize,
    },
    /// `d(Inf U \ U, U) > (|Inf U| − l)⌈l/2⌉` with `|Inf U| − l ≥ 2`.
    Aggregate {
        path: Vec<VertexId>,
        degree: usize,
        bound: usize,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PremaximalReport {
    pub max_path_len: usize,
    pub maximal_paths: usize,
    pub premaximal_paths: usize,
    /// `(path, outside vertex)` pairs run through the degree lemma.
    pub degree_checks: usize,
    pub violations: Vec<LemmaViolation>,
}

impl PremaximalReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

fn check_degrees_on(g: &UndirectedGraph, path: &[VertexId], report: &mut PremaximalReport) {
    let on_path = VertexSet::from_ids(g.order(), path.iter().copied());
    for x in on_path.complement().iter() {
        let r = path_degree(g, path, x);
        report.degree_checks += 1;
        if !r.holds() {
            report.violations.push(LemmaViolation::PathDegree {
                path: path.to_vec(),
                x,
                report: r,
            });
        }
    }
}

fn check_premaximal(g: &UndirectedGraph, path: &[VertexId], report: &mut PremaximalReport) {
    let l = path.len();
    let u = VertexSet::from_ids(g.order(), path.iter().copied());
    let inflated = inflate(g, &u).expect("same universe");
    if inflated == u {
        report.violations.push(LemmaViolation::NotInflating {
            path: path.to_vec(),
        });
    }

    let outside = u.complement();
    let degrees: Vec<(VertexId, usize)> =
        outside.iter().map(|v| (v, g.degree_into(v, &u))).collect();
    if let Some(&(x, _)) = degrees.iter().find(|&&(_, d)| d == half_up(l) + 1) {
        for &(y, d) in &degrees {
            if y != x && d + 1 > half_up(l) {
                report.violations.push(LemmaViolation::SecondVertex {
                    path: path.to_vec(),
                    x,
                    y,
                    degree: d,
                });
            }
        }
    }

    let rim = inflated.difference(&u);
    if rim.len() >= 2 {
        let degree = g.degree_between(&rim, &u).expect("disjoint");
        let bound = rim.len() * half_up(l);
        if degree > bound {
            report.violations.push(LemmaViolation::Aggregate {
                path: path.to_vec(),
                degree,
                bound,
            });
        }
    }
}

/// Runs the path lemmas over every maximal and premaximal path of a
/// connected bowtie-free graph with at least one edge: the degree bound for
/// every outside vertex, `Inf U ≠ U` for premaximal `U`, the second-vertex
/// bound, and the aggregate bound on `d(Inf U \ U, U)`.
pub fn check_premaximal_lemmas(g: &UndirectedGraph, budget: usize) -> Result<PremaximalReport> {
    if !g.is_connected() {
        return Err(Error::InvalidArgument("graph is not connected".into()));
    }
    if g.edge_count() == 0 {
        return Err(Error::InvalidArgument(
            "graph is completely disconnected".into(),
        ));
    }
    require_bowtie_free(g)?;

    let mut report = PremaximalReport::default();
    let mut premaximal_seen: HashSet<Vec<VertexId>> = HashSet::new();
    report.max_path_len = for_each_maximal_path(g, budget, |path| {
        report.maximal_paths += 1;
        // Each undirected path shows up once per direction; the degree lemma
        // is symmetric, so check one orientation.
        if path.first() <= path.last() {
            check_degrees_on(g, path, &mut report);
        }
        let prefix = &path[..path.len() - 1];
        if !prefix.is_empty() && premaximal_seen.insert(prefix.to_vec()) {
            report.premaximal_paths += 1;
            check_degrees_on(g, prefix, &mut report);
            check_premaximal(g, prefix, &mut report);
        }
        ControlFlow::Continue(())
    })?;
    Ok(report)
}

/// Whether `g` contains `K₄` as a subgraph.
pub fn has_k4(g: &UndirectedGraph) -> bool {
    g.edges().any(|(u, v)| {
        let common = g.neighbors(u).intersection(g.neighbors(v));
        common.iter().any(|w| g.neighbors(w).intersects(&common))
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExchangeReport {
    /// All hypotheses hold: `l ≥ 3`, `K₄`-free, `d(x, U) = ⌈l/2⌉ + 1` and
    /// `G[U]` has at most `l²/4 + 1` edges.
    pub applicable: bool,
    /// The first `v_j` with `d(v_j, U \ {v_j} ∪ {x}) ≤ ⌈l/2⌉`.
    pub exchange: Option<VertexId>,
}

impl ExchangeReport {
    pub fn holds(&self) -> bool {
        !self.applicable || self.exchange.is_some()
    }
}

/// The vertex-exchange lemma: under its hypotheses some path vertex `v_j`
/// has at most `⌈l/2⌉` neighbors in `U \ {v_j} ∪ {x}`.
pub fn check_exchange_lemma(g: &UndirectedGraph, u: &Path, x: VertexId) -> Result<ExchangeReport> {
    let degree = check_path_degree_lemma(g, u, x)?;
    let l = u.len();
    let on_path = u.to_set(g.order());
    let inner_edges = on_path
        .iter()
        .map(|v| g.degree_into(v, &on_path))
        .sum::<usize>()
        / 2;
    let applicable = l >= 3 && degree.equality() && 4 * inner_edges <= l * l + 4 && !has_k4(g);
    let mut others = on_path.clone();
    others.insert(x);
    let exchange = u.vertices().iter().copied().find(|&v| {
        let mut rest = others.clone();
        rest.remove(v);
        g.degree_into(v, &rest) <= half_up(l)
    });
    Ok(ExchangeReport {
        applicable,
        exchange,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ShortPathShape {
    Complete,
    Star,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShortPathReport {
    pub p: usize,
    pub q: usize,
    /// Whether every path has at most 3 vertices (at most 2 edges).
    pub applicable: bool,
    pub bound_holds: bool,
    pub shape: Option<ShortPathShape>,
}

impl ShortPathReport {
    pub fn holds(&self) -> bool {
        !self.applicable || (self.bound_holds && self.shape.is_some())
    }
}

fn has_four_vertex_path(g: &UndirectedGraph) -> bool {
    g.edges().any(|(b, c)| {
        g.neighbors(b)
            .iter()
            .filter(|&a| a != c)
            .any(|a| g.neighbors(c).iter().any(|d| d != b && d != a))
    })
}

/// For connected graphs whose longest path has at most two edges: checks
/// `q ≤ p²/4 + 1` and that the graph is `K_p` (`p ≤ 3`) or a star.
pub fn check_short_path_prop(g: &UndirectedGraph) -> Result<ShortPathReport> {
    if !g.is_connected() {
        return Err(Error::InvalidArgument("graph is not connected".into()));
    }
    let (p, q) = (g.order(), g.edge_count());
    let applicable = !has_four_vertex_path(g);
    let complete = p <= 3 && q == p * p.saturating_sub(1) / 2;
    let star = p >= 1 && q == p - 1 && (0..p).any(|v| g.degree(VertexId(v)) == p - 1);
    let shape = if complete {
        Some(ShortPathShape::Complete)
    } else if star {
        Some(ShortPathShape::Star)
    } else {
        None
    };
    Ok(ShortPathReport {
        p,
        q,
        applicable,
        bound_holds: 4 * q <= p * p + 4,
        shape: applicable.then_some(shape).flatten(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum VolumeStatus {
    Holds,
    Violated,
    /// `K₄`: bowtie-free with 6 > 5 edges.
    ExemptK4,
    /// Not bowtie-free; the bound does not apply.
    HasBowtie {
        witness: BowtieWitness,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VolumeReport {
    pub p: usize,
    pub q: usize,
    /// `⌊p²/4⌋ + 1`, the largest integer `q` with `q ≤ p²/4 + 1`.
    pub bound: usize,
    #[serde(flatten)]
    pub status: VolumeStatus,
}

pub fn is_k4(g: &UndirectedGraph) -> bool {
    g.order() == 4 && g.edge_count() == 6
}

/// `q ≤ p²/4 + 1` for bowtie-free graphs other than `K₄`.
pub fn volume_bound_check(g: &UndirectedGraph) -> VolumeReport {
    let (p, q) = (g.order(), g.edge_count());
    let status = if let Some(witness) = find_bowtie(g) {
        VolumeStatus::HasBowtie { witness }
    } else if is_k4(g) {
        VolumeStatus::ExemptK4
    } else if 4 * q <= p * p + 4 {
        VolumeStatus::Holds
    } else {
        VolumeStatus::Violated
    };
    VolumeReport {
        p,
        q,
        bound: formula_bound(p),
        status,
    }
}
