//! The forbidden-bowtie problem: bowtie search, the extremal construction,
//! an exhaustive oracle for `ex(p, bowtie)`, and the path lemmas.
//!
//! "Contains H" always means contains H as a (not necessarily induced)
//! subgraph.

mod bowtie;
mod extremal;
mod lemmas;

pub use bowtie::{find_bowtie, find_triangle, is_bowtie_free, BowtieWitness};
pub use extremal::{
    binomial, complete_bipartite_half, ex_oracle, extremal_construction, formula_bound,
    turan_k3_bound, verify_k3_bound, ExtremalReport, K3Check, OracleMethod, OracleOptions,
    DEFAULT_ORACLE_BUDGET,
};
pub use lemmas::{
    check_exchange_lemma, check_path_degree_lemma, check_premaximal_lemmas, check_short_path_prop,
    has_k4, is_k4, volume_bound_check, ExchangeReport, LemmaViolation, PathDegreeReport,
    PremaximalReport, ShortPathReport, ShortPathShape, VolumeReport, VolumeStatus,
};
