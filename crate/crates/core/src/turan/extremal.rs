use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use super::bowtie::{find_bowtie, find_triangle, masks_have_bowtie, masks_have_triangle};
use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;

/// Default vertex budget for [`ex_oracle`].
pub const DEFAULT_ORACLE_BUDGET: usize = 7;

/// `⌊p²/4⌋ + 1`.
pub fn formula_bound(p: usize) -> usize {
    p * p / 4 + 1
}

/// `ex(p, K₃) = ⌊p²/4⌋`.
pub fn turan_k3_bound(p: usize) -> usize {
    p * p / 4
}

/// `K_{⌊p/2⌋,⌈p/2⌉}` with vertices `0..⌊p/2⌋` on the small side.
pub fn complete_bipartite_half(p: usize) -> UndirectedGraph {
    let half = p / 2;
    UndirectedGraph::new(p, (0..half).flat_map(|a| (half..p).map(move |b| (a, b))))
        .expect("valid edges")
}

/// `K_{⌊p/2⌋,⌈p/2⌉}` plus one edge inside the larger side: a bowtie-free
/// graph with `⌊p²/4⌋ + 1` edges for `p ≥ 3`.
///
/// For `p = 2` the larger side has a single vertex, so the result is `K₂`
/// with one edge, one short of the formula.
pub fn extremal_construction(p: usize) -> Result<UndirectedGraph> {
    if p < 2 {
        return Err(Error::InvalidArgument(format!(
            "extremal construction needs p >= 2, got {p}"
        )));
    }
    let half = p / 2;
    let bipartite = (0..half).flat_map(|a| (half..p).map(move |b| (a, b)));
    let extra = (p - half >= 2).then_some((half, half + 1));
    let g = UndirectedGraph::new(p, bipartite.chain(extra))?;
    debug_assert!(find_bowtie(&g).is_none());
    Ok(g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleMethod {
    Construction,
    Exhaustive,
}

/// Lower and upper bounds on `ex(p, bowtie)` with an extremal witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalReport {
    pub p: usize,
    pub formula_bound: usize,
    pub oracle_bound: usize,
    pub witness_graph: UndirectedGraph,
    pub method: OracleMethod,
    /// Labeled graphs with `oracle_bound + 1` edges refuted by the search.
    pub graphs_checked: u64,
}

impl ExtremalReport {
    pub fn formula_matches(&self) -> bool {
        self.formula_bound == self.oracle_bound
    }
}

#[derive(Clone, Debug)]
pub struct OracleOptions {
    pub budget: usize,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
    pub time_limit: Option<Duration>,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            budget: DEFAULT_ORACLE_BUDGET,
            threads: None,
            time_limit: None,
        }
    }
}

/// `C(n, k)` as `u128`, saturating.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

fn pair_list(p: usize) -> Vec<(usize, usize)> {
    (0..p)
        .flat_map(|u| (u + 1..p).map(move |v| (u, v)))
        .collect()
}

/// Next integer with the same popcount (Gosper's hack); `None` past the end.
fn next_combination(x: u64) -> Option<u64> {
    let c = x & x.wrapping_neg();
    let r = x.checked_add(c)?;
    Some((((r ^ x) >> 2) / c) | r)
}

struct Search<'a> {
    pairs: &'a [(usize, usize)],
    p: usize,
    deadline: Option<Instant>,
    timed_out: &'a AtomicBool,
}

impl Search<'_> {
    fn adjacency(&self, edges: u64) -> [u64; 64] {
        let mut adj = [0u64; 64];
        let mut rest = edges;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let (u, v) = self.pairs[i];
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        adj
    }

    /// First edge set (in chunk order) of size `m` accepted by `keep`,
    /// together with the number of sets examined.
    fn first_with<F>(&self, m: usize, keep: F) -> Result<(Option<u64>, u64)>
    where
        F: Fn(&[u64]) -> bool + Sync,
    {
        let total = self.pairs.len();
        if m == 0 || m > total {
            return Ok((None, 0));
        }
        let checked = std::sync::atomic::AtomicU64::new(0);
        // Chunk i: sets whose lowest edge index is i.
        let found = (0..=total - m).into_par_iter().find_map_first(|low| {
            let width = total - low - 1;
            let rest_size = m - 1;
            let mut tail: u64 = if rest_size == 0 {
                0
            } else {
                (1u64 << rest_size) - 1
            };
            let mut local = 0u64;
            loop {
                if rest_size > 0 && tail >> width != 0 {
                    break;
                }
                local += 1;
                if local.is_multiple_of(4096) {
                    if self.timed_out.load(Ordering::Relaxed) {
                        break;
                    }
                    if self.deadline.is_some_and(|d| Instant::now() > d) {
                        self.timed_out.store(true, Ordering::Relaxed);
                        break;
                    }
                }
                let edges = (1u64 << low) | tail.checked_shl(low as u32 + 1).unwrap_or(0);
                if keep(&self.adjacency(edges)[..self.p]) {
                    checked.fetch_add(local, Ordering::Relaxed);
                    return Some(edges);
                }
                if rest_size == 0 {
                    break;
                }
                match next_combination(tail) {
                    Some(t) => tail = t,
                    None => break,
                }
            }
            checked.fetch_add(local, Ordering::Relaxed);
            None
        });
        Ok((found, checked.into_inner()))
    }

    fn graph(&self, edges: u64) -> UndirectedGraph {
        UndirectedGraph::new(
            self.p,
            (0..self.pairs.len())
                .filter(|i| edges >> i & 1 == 1)
                .map(|i| self.pairs[i]),
        )
        .expect("valid edges")
    }
}

fn with_pool<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

/// Computes `ex(p, bowtie)` exactly.
///
/// The construction gives a bowtie-free graph with `L` edges. Then, for
/// `m = L + 1, L + 2, …`, every labeled graph with exactly `m` edges is
/// searched for a bowtie-free one. The first `m` without one is an upper
/// bound: deleting edges never creates a bowtie, so any bowtie-free graph
/// with at least `m` edges would have a bowtie-free `m`-edge subgraph.
pub fn ex_oracle(p: usize, options: &OracleOptions) -> Result<ExtremalReport> {
    if p < 2 {
        return Err(Error::InvalidArgument(format!(
            "ex oracle needs p >= 2, got {p}"
        )));
    }
    let pairs = pair_list(p);
    if p > options.budget || pairs.len() > 64 {
        return Err(Error::OracleBudget {
            p,
            limit: options.budget,
            graphs: binomial(pairs.len(), formula_bound(p) + 1),
        });
    }
    let construction = extremal_construction(p)?;
    if let Some(w) = find_bowtie(&construction) {
        return Err(Error::Contract(format!(
            "extremal construction contains a bowtie: {w:?}"
        )));
    }

    let timed_out = AtomicBool::new(false);
    let search = Search {
        pairs: &pairs,
        p,
        deadline: options.time_limit.map(|t| Instant::now() + t),
        timed_out: &timed_out,
    };

    let mut witness = construction;
    let mut m = witness.edge_count() + 1;
    let graphs_checked = loop {
        let (found, checked) = with_pool(options.threads, || {
            search.first_with(m, |adj| !masks_have_bowtie(adj))
        })??;
        if timed_out.load(Ordering::Relaxed) {
            return Err(Error::Timeout {
                what: "ex(p, bowtie) oracle",
                seconds: options.time_limit.map_or(0, |t| t.as_secs()),
                work: format!("{} graphs with {m} edges", binomial(pairs.len(), m)),
            });
        }
        match found {
            Some(edges) => {
                let g = search.graph(edges);
                if let Some(w) = find_bowtie(&g) {
                    return Err(Error::Contract(format!(
                        "mask search and find_bowtie disagree on a {m}-edge graph: {w:?}"
                    )));
                }
                witness = g;
                m += 1;
            }
            None => break checked,
        }
    };
    Ok(ExtremalReport {
        p,
        formula_bound: formula_bound(p),
        oracle_bound: m - 1,
        witness_graph: witness,
        method: OracleMethod::Exhaustive,
        graphs_checked,
    })
}

/// Outcome of the exhaustive `ex(p, K₃)` check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K3Check {
    pub p: usize,
    pub bound: usize,
    pub graphs_checked: u64,
    /// A triangle-free graph with `bound + 1` edges, if one exists.
    pub counterexample: Option<UndirectedGraph>,
    pub bipartite_triangle_free: bool,
}

impl K3Check {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none() && self.bipartite_triangle_free
    }
}

/// Confirms `ex(p, K₃) = ⌊p²/4⌋`: `K_{⌊p/2⌋,⌈p/2⌉}` is triangle-free and
/// every graph with `⌊p²/4⌋ + 1` edges has a triangle.
pub fn verify_k3_bound(p: usize, budget: usize) -> Result<K3Check> {
    if p < 2 {
        return Err(Error::InvalidArgument(format!(
            "K3 check needs p >= 2, got {p}"
        )));
    }
    let pairs = pair_list(p);
    if p > budget || pairs.len() > 64 {
        return Err(Error::Budget {
            what: "exhaustive ex(p, K3) check",
            limit: budget,
            actual: p,
        });
    }
    let bound = turan_k3_bound(p);
    let bipartite = complete_bipartite_half(p);
    let timed_out = AtomicBool::new(false);
    let search = Search {
        pairs: &pairs,
        p,
        deadline: None,
        timed_out: &timed_out,
    };
    let (found, graphs_checked) = search.first_with(bound + 1, |adj| !masks_have_triangle(adj))?;
    Ok(K3Check {
        p,
        bound,
        graphs_checked,
        counterexample: found.map(|e| search.graph(e)),
        bipartite_triangle_free: bipartite.edge_count() == bound
            && find_triangle(&bipartite).is_none(),
    })
}
