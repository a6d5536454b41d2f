//! Command-line front-end. [`run`] does all the work and returns the exit
//! status and output instead of printing, so tests can call it directly.
//!
//! Exit status: 0 success, 1 a check found a negative result, 2 usage,
//! parse or analysis errors.

use std::io::Read;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::decomposition::{
    interval_decomposition, jet_to_interval, seeded_decomposition, verify_jet, HeadingArcs, Jet,
    JetVerdict, LowestVertex,
};
use crate::error::Error;
use crate::graph::{Digraph, Graph, UndirectedGraph, VertexSet, DEFAULT_PATH_BUDGET};
use crate::inflation::{hyperinflate, inflate, inflate_n, is_hyperinflation};
use crate::io::report::{self, labels};
use crate::io::{parse_dot, parse_edge_list, AnyGraph};
use crate::matching::{
    arc_seed_decomposition, connected_seed_decomposition_with, is_maximal,
    matching_from_decomposition, ConnectedSeedStrategy, LowestEdge, Matching,
};
use crate::turan::{
    check_premaximal_lemmas, check_short_path_prop, ex_oracle, extremal_construction,
    formula_bound, is_bowtie_free, verify_k3_bound, volume_bound_check, OracleOptions,
    VolumeStatus, DEFAULT_ORACLE_BUDGET,
};

pub const THREADS_ENV: &str = "GRAPHDECOMP_THREADS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug, Clone)]
#[command(
    name = "graphdecomp",
    version,
    about = "Inflation-based vertex decompositions of graphs"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Inf, Inf^n and Inf^∞ of a vertex set.
    Inflate {
        #[command(flatten)]
        input: InputArgs,
        /// Comma-separated vertex labels.
        #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
        set: Vec<String>,
        /// Also report Inf^n of the set.
        #[arg(long)]
        steps: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Decompose the vertices into hyperinflations.
    Decompose {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        mode: DecomposeMode,
        /// A seed as comma-separated labels; repeat for several seeds. Seeds
        /// are used in order, then the default strategy takes over.
        #[arg(long = "seed")]
        seeds: Vec<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// A maximal matching from the arc-seed decomposition, or a maximality
    /// check of the given edges.
    Matching {
        #[command(flatten)]
        input: InputArgs,
        /// An edge `U V` of the matching to check; repeat for more edges.
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        edge: Vec<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check q <= p²/4 + 1 for a bowtie-free undirected graph.
    TuranCheck {
        #[command(flatten)]
        input: InputArgs,
        /// Also run the path lemmas (connected bowtie-free graphs only).
        #[arg(long)]
        lemmas: bool,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compute ex(p, bowtie) by exhaustive search.
    TuranOracle {
        /// Number of vertices
        #[arg(long)]
        p: usize,
        /// Also confirm ex(p, K3) = ⌊p²/4⌋.
        #[arg(long)]
        k3: bool,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// The extremal bowtie-free construction on p vertices.
    TuranExtremal {
        /// Number of vertices
        #[arg(long)]
        p: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check the jet conditions for a layered vertex partition.
    JetVerify {
        #[command(flatten)]
        input: InputArgs,
        /// Layers in order, each as comma-separated labels.
        #[arg(long, required = true, num_args = 1..)]
        layers: Vec<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args, Debug, Clone)]
pub struct InputArgs {
    /// Graph file, or `-` for standard input.
    #[arg(default_value = "-")]
    pub input: String,
    /// Read arcs as directed (DOT input takes this from its header).
    #[arg(long)]
    pub directed: bool,
    #[arg(long, value_enum, default_value_t = Format::EdgeList)]
    pub format: Format,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Output::Json)]
    pub output: Output,
}

#[derive(Args, Debug, Clone, Default)]
pub struct BudgetArgs {
    /// Largest vertex count for exhaustive searches.
    #[arg(long)]
    pub budget_vertices: Option<usize>,
    /// Wall-clock limit for exhaustive searches.
    #[arg(long)]
    pub budget_seconds: Option<u64>,
}

#[derive(Args, Debug, Clone)]
#[group(required = false, multiple = false)]
pub struct DecomposeMode {
    /// Intervals of a digraph (default for --directed).
    #[arg(long)]
    pub intervals: bool,
    /// Connected-seed process on a digraph.
    #[arg(long)]
    pub seeded: bool,
    /// Connected-seed process on an undirected graph (default without --directed).
    #[arg(long)]
    pub connected: bool,
    /// Single-edge seeds on an undirected graph.
    #[arg(long)]
    pub arcs: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Dot,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Output {
    Json,
    Text,
}

/// Exit status and the text for standard output and standard error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

/// Failure before a report exists; always exit status 2.
#[derive(Debug)]
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

type Step<T> = std::result::Result<T, Failure>;

fn usage<T>(message: impl Into<String>) -> Step<T> {
    Err(Failure(message.into()))
}

/// Parses `args` (program name first) and runs the command.
pub fn run_args<I, T>(args: I, stdin: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run_with_stdin(&config, stdin),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            }
        }
    }
}

/// Runs a parsed configuration, reading `-` from the process's standard input.
pub fn run(config: &RunConfig) -> Outcome {
    run_with_stdin(config, None)
}

/// Runs a parsed configuration; `stdin` replaces standard input when given.
pub fn run_with_stdin(config: &RunConfig, stdin: Option<&str>) -> Outcome {
    match dispatch(&config.command, stdin) {
        Ok((code, value, output)) => Outcome {
            code,
            stdout: match output {
                Output::Json => report::render(&value),
                Output::Text => render_text(&value),
            },
            stderr: String::new(),
        },
        Err(Failure(message)) => Outcome::usage(message),
    }
}

fn read_input(path: &str, stdin: Option<&str>) -> Step<String> {
    if path == "-" {
        if let Some(text) = stdin {
            return Ok(text.to_string());
        }
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure(format!("cannot read standard input: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure(format!("cannot read `{path}`: {e}")))
    }
}

fn load(input: &InputArgs, stdin: Option<&str>) -> Step<AnyGraph> {
    let text = read_input(&input.input, stdin)?;
    let graph = match input.format {
        Format::EdgeList => parse_edge_list(&text, input.directed)?,
        Format::Dot => {
            let g = parse_dot(&text)?;
            if input.directed && !g.is_directed() {
                return usage(
                    "--directed conflicts with the undirected `graph` header of the DOT input",
                );
            }
            g
        }
    };
    Ok(graph)
}

fn load_directed(input: &InputArgs, stdin: Option<&str>, command: &str) -> Step<Digraph> {
    match load(input, stdin)? {
        AnyGraph::Directed(g) => Ok(g),
        AnyGraph::Undirected(_) => {
            usage(format!("{command} needs a directed graph (use --directed)"))
        }
    }
}

fn load_undirected(input: &InputArgs, stdin: Option<&str>, command: &str) -> Step<UndirectedGraph> {
    match load(input, stdin)? {
        AnyGraph::Undirected(g) => Ok(g),
        AnyGraph::Directed(_) => usage(format!("{command} needs an undirected graph")),
    }
}

fn label_set<G: Graph>(g: &G, spec: &str) -> Step<VertexSet> {
    let names: Vec<&str> = spec
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    Ok(g.set_from_labels(&names)?)
}

fn threads() -> Step<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => usage(format!(
                "{THREADS_ENV} must be a positive integer, got `{v}`"
            )),
        },
    }
}

fn dispatch(command: &Command, stdin: Option<&str>) -> Step<(i32, Value, Output)> {
    match command {
        Command::Inflate {
            input,
            set,
            steps,
            output,
        } => {
            let value = match load(input, stdin)? {
                AnyGraph::Directed(g) => inflate_report(&g, set, *steps)?,
                AnyGraph::Undirected(g) => inflate_report(&g, set, *steps)?,
            };
            Ok((EXIT_OK, value, output.output))
        }
        Command::Decompose {
            input,
            mode,
            seeds,
            output,
        } => Ok((
            EXIT_OK,
            decompose(input, mode, seeds, stdin)?,
            output.output,
        )),
        Command::Matching {
            input,
            edge,
            output,
        } => {
            let g = load_undirected(input, stdin, "matching")?;
            let (code, value) = matching_report(&g, edge)?;
            Ok((code, value, output.output))
        }
        Command::TuranCheck {
            input,
            lemmas,
            budget,
            output,
        } => {
            let g = load_undirected(input, stdin, "turan-check")?;
            let (code, value) = turan_check(&g, *lemmas, budget)?;
            Ok((code, value, output.output))
        }
        Command::TuranOracle {
            p,
            k3,
            budget,
            output,
        } => {
            let (code, value) = turan_oracle(*p, *k3, budget)?;
            Ok((code, value, output.output))
        }
        Command::TuranExtremal { p, output } => {
            let g = extremal_construction(*p)?;
            let value = json!({
                "p": p,
                "formula_bound": formula_bound(*p),
                "q": g.edge_count(),
                "method": "construction",
                "bowtie_free": is_bowtie_free(&g),
                "witness_edges": g.edges().map(|(u, v)| [u.0, v.0]).collect::<Vec<_>>(),
            });
            Ok((EXIT_OK, value, output.output))
        }
        Command::JetVerify {
            input,
            layers,
            output,
        } => {
            let g = load_directed(input, stdin, "jet-verify")?;
            let (code, value) = jet_verify(&g, layers)?;
            Ok((code, value, output.output))
        }
    }
}

fn inflate_report<G: Graph>(g: &G, set: &[String], steps: Option<usize>) -> Step<Value> {
    let u = g.set_from_labels(set)?;
    let trace = hyperinflate(g, &u)?;
    let mut value = json!({
        "set": labels(g, &u),
        "inflation": labels(g, &inflate(g, &u)?),
        "hyperinflation": labels(g, trace.fixpoint()),
        "increments": trace.increments().iter().map(|l| labels(g, l)).collect::<Vec<_>>(),
        "steps": trace.steps(),
        "stable": trace.steps() == 0,
        "generator": is_hyperinflation(g, &u)?.map(|w| labels(g, &w)),
    });
    if let Some(n) = steps {
        value["inflation_n"] = json!({ "n": n, "vertices": labels(g, &inflate_n(g, &u, n)?) });
    }
    Ok(value)
}

/// Hands out the user's seeds in order, then defers to `fallback`.
struct Listed<S> {
    seeds: std::vec::IntoIter<VertexSet>,
    fallback: S,
}

impl crate::decomposition::SeedStrategy for Listed<LowestVertex> {
    fn next_seed(&mut self, g: &Digraph, uncovered: &VertexSet) -> Option<VertexSet> {
        self.seeds
            .next()
            .or_else(|| self.fallback.next_seed(g, uncovered))
    }
}

impl ConnectedSeedStrategy for Listed<LowestEdge> {
    fn next_seed(&mut self, g: &UndirectedGraph, uncovered: &VertexSet) -> Option<VertexSet> {
        self.seeds
            .next()
            .or_else(|| self.fallback.next_seed(g, uncovered))
    }
}

fn decompose(
    input: &InputArgs,
    mode: &DecomposeMode,
    seeds: &[String],
    stdin: Option<&str>,
) -> Step<Value> {
    let graph = load(input, stdin)?;
    let seed_sets =
        |g: &dyn Fn(&str) -> Step<VertexSet>| seeds.iter().map(|s| g(s)).collect::<Step<Vec<_>>>();
    match graph {
        AnyGraph::Directed(g) => {
            if mode.connected || mode.arcs {
                return usage("--connected and --arcs need an undirected graph");
            }
            if mode.seeded {
                let listed = Listed {
                    seeds: seed_sets(&|s| label_set(&g, s))?.into_iter(),
                    fallback: LowestVertex,
                };
                let d = seeded_decomposition(&g, listed)?;
                Ok(report::decomposition_json(&g, &d))
            } else {
                if !seeds.is_empty() {
                    return usage("--seed needs --seeded");
                }
                Ok(report::decomposition_json(&g, &interval_decomposition(&g)))
            }
        }
        AnyGraph::Undirected(g) => {
            if mode.intervals || mode.seeded {
                return usage("--intervals and --seeded need a directed graph (use --directed)");
            }
            if mode.arcs {
                if !seeds.is_empty() {
                    return usage("--seed is not available with --arcs");
                }
                let d = arc_seed_decomposition(&g)?;
                Ok(report::decomposition_json(&g, &d))
            } else {
                let listed = Listed {
                    seeds: seed_sets(&|s| label_set(&g, s))?.into_iter(),
                    fallback: LowestEdge,
                };
                let d = connected_seed_decomposition_with(&g, listed)?;
                Ok(report::decomposition_json(&g, &d))
            }
        }
    }
}

fn matching_report(g: &UndirectedGraph, edge: &[String]) -> Step<(i32, Value)> {
    if edge.is_empty() {
        let d = arc_seed_decomposition(g)?;
        let m = matching_from_decomposition(g, &d)?;
        return Ok((EXIT_OK, report::matching_json(g, &m, true)));
    }
    let pairs = edge
        .chunks(2)
        .map(|c| Ok((g.vertex_by_label(&c[0])?, g.vertex_by_label(&c[1])?)))
        .collect::<Step<Vec<_>>>()?;
    let m = Matching::new(g, pairs)?;
    let mut value = report::matching_json(g, &m, false);
    match is_maximal(g, &m) {
        Ok(()) => {
            value["maximal"] = json!(true);
            Ok((EXIT_OK, value))
        }
        Err((u, v)) => {
            value["extendable_by"] = json!([g.label(u), g.label(v)]);
            Ok((EXIT_NEGATIVE, value))
        }
    }
}

fn turan_check(g: &UndirectedGraph, lemmas: bool, budget: &BudgetArgs) -> Step<(i32, Value)> {
    let r = volume_bound_check(g);
    let mut value = report::volume_json(g, &r);
    let exceeds = r.q > r.bound && r.status != VolumeStatus::ExemptK4;
    let mut code = if exceeds { EXIT_NEGATIVE } else { EXIT_OK };
    if lemmas {
        if matches!(r.status, VolumeStatus::HasBowtie { .. }) {
            return usage("--lemmas needs a bowtie-free graph");
        }
        let path_budget = budget.budget_vertices.unwrap_or(DEFAULT_PATH_BUDGET);
        let pre = check_premaximal_lemmas(g, path_budget)?;
        let short = check_short_path_prop(g)?;
        if !pre.holds() || !short.holds() {
            code = EXIT_NEGATIVE;
        }
        value["lemmas"] = json!({
            "max_path_len": pre.max_path_len,
            "maximal_paths": pre.maximal_paths,
            "premaximal_paths": pre.premaximal_paths,
            "degree_checks": pre.degree_checks,
            "violations": pre.violations.len(),
            "short_path_applicable": short.applicable,
            "holds": pre.holds() && short.holds(),
        });
    }
    Ok((code, value))
}

fn turan_oracle(p: usize, k3: bool, budget: &BudgetArgs) -> Step<(i32, Value)> {
    let options = OracleOptions {
        budget: budget.budget_vertices.unwrap_or(DEFAULT_ORACLE_BUDGET),
        threads: threads()?,
        time_limit: budget.budget_seconds.map(Duration::from_secs),
    };
    if p < 2 {
        return usage(format!("--p must be at least 2, got {p}"));
    }
    let r = ex_oracle(p, &options)?;
    let mut value = report::extremal_json(&r);
    let mut code = EXIT_OK;
    if k3 {
        let check = verify_k3_bound(p, options.budget)?;
        if !check.holds() {
            code = EXIT_NEGATIVE;
        }
        value["k3"] = report::k3_json(&check);
    }
    Ok((code, value))
}

fn jet_verify(g: &Digraph, layers: &[String]) -> Step<(i32, Value)> {
    let sets = layers
        .iter()
        .map(|l| label_set(g, l))
        .collect::<Step<Vec<_>>>()?;
    let jet = Jet::new(sets);
    let verdict = verify_jet(g, &jet)?;
    let mut value = json!({
        "layers": jet.layers.iter().map(|l| labels(g, l)).collect::<Vec<_>>(),
        "valid": verdict.is_valid(),
    });
    match &verdict {
        JetVerdict::Valid => {
            if jet.vertices(g.order()) == g.vertices() {
                let interval = jet_to_interval(g, &jet, &HeadingArcs::none(g.order()))?;
                value["interval_heading"] = json!(interval.graph.label(interval.heading));
            }
        }
        JetVerdict::BackwardArc {
            from,
            to,
            from_layer,
            to_layer,
        } => {
            value["violation"] = json!({
                "kind": "backward-arc",
                "arc": [g.label(*from), g.label(*to)],
                "from_layer": from_layer,
                "to_layer": to_layer,
            });
        }
        JetVerdict::Unreachable { vertex, layer } => {
            value["violation"] = json!({
                "kind": "unreachable",
                "vertex": g.label(*vertex),
                "layer": layer,
            });
        }
    }
    let code = if verdict.is_valid() {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    };
    Ok((code, value))
}

fn text_scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!(
            "{{{}}}",
            items.iter().map(text_scalar).collect::<Vec<_>>().join(", ")
        ),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn render_into(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, item) in map {
                match item {
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_into(out, item, indent + 1);
                    }
                    Value::Array(items) if items.iter().any(Value::is_object) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for (i, entry) in items.iter().enumerate() {
                            out.push_str(&format!("{pad}  [{}]\n", i + 1));
                            render_into(out, entry, indent + 2);
                        }
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", text_scalar(item))),
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", text_scalar(other))),
    }
}

/// Indented `key: value` lines; vertex arrays print as `{a, b}`.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    render_into(&mut out, v, 0);
    out
}
