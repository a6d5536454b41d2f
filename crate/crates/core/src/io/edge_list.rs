use std::fmt::Write;

use super::{AnyGraph, Builder};
use crate::error::{Error, ParseError, Result};
use crate::graph::Graph;

/// Parses the edge-list format: one `u v` pair or one bare label per line,
/// `#` to end of line is a comment, blank lines are ignored.
pub fn parse_edge_list(text: &str, directed: bool) -> Result<AnyGraph> {
    let mut b = Builder::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let data = raw.split('#').next().unwrap_or("");
        let tokens: Vec<(usize, &str)> = tokens_with_columns(data);
        match tokens.as_slice() {
            [] => {}
            [(_, label)] => {
                b.vertex(label);
            }
            [(col, u), (_, v)] => b.pair(u, v, directed, (line, *col))?,
            [_, _, (col, extra), ..] => {
                return Err(ParseError::new(
                    line,
                    *col,
                    format!("expected `u v` or a single label, found extra token `{extra}`"),
                )
                .into())
            }
        }
    }
    b.finish(directed)
}

/// Whitespace-separated tokens with their 1-based character columns.
fn tokens_with_columns(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    for (col, (byte, c)) in s.char_indices().enumerate() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some((col + 1, byte)),
            (true, Some((scol, sbyte))) => {
                out.push((scol, &s[sbyte..byte]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some((scol, sbyte)) = start {
        out.push((scol, &s[sbyte..]));
    }
    out
}

/// Writes every label on its own line, then one line per arc (or edge, as
/// `u v` with `u < v` by index). Parsing the output with the same
/// directedness gives back an identical graph.
pub fn write_edge_list(g: &AnyGraph) -> Result<String> {
    match g {
        AnyGraph::Directed(d) => write(d, d.arcs()),
        AnyGraph::Undirected(u) => write(u, u.edges()),
    }
}

fn write<G: Graph>(
    g: &G,
    pairs: impl Iterator<Item = (crate::graph::VertexId, crate::graph::VertexId)>,
) -> Result<String> {
    let mut out = String::new();
    for v in g.vertices().iter() {
        let label = g.label(v);
        if label.is_empty() || label.contains(|c: char| c.is_whitespace() || c == '#') {
            return Err(Error::InvalidArgument(format!(
                "label `{label}` cannot be written in edge-list format"
            )));
        }
        writeln!(out, "{label}").expect("write to string");
    }
    for (u, v) in pairs {
        writeln!(out, "{} {}", g.label(u), g.label(v)).expect("write to string");
    }
    Ok(out)
}
