//! Whitespace-delimited edge lists.
//!
//! Each non-comment line is `u v [w]`; `#` starts a comment line. Labels are
//! arbitrary tokens; node indices follow natural label order. Self-loops are dropped and
//! counted, repeated pairs are merged or rejected per [`DirectedPolicy`].

use std::fmt::Write as _;

use ovmetrics_core::{DirectedPolicy, Error, Graph, GraphBuilder};

use crate::ParseError;

/// A parsed graph plus what was silently dropped on the way.
#[derive(Debug, Clone)]
pub struct LoadedGraph {
    pub graph: Graph,
    pub self_loops_dropped: usize,
}

/// Parses an edge list.
pub fn parse(text: &str, policy: DirectedPolicy) -> Result<LoadedGraph, ParseError> {
    let mut builder = GraphBuilder::new(policy);
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let weight = match tokens.len() {
            2 => 1.0,
            3 => tokens[2]
                .parse::<f64>()
                .map_err(|_| ParseError::new(line_no, format!("invalid weight `{}`", tokens[2])))?,
            _ => return Err(ParseError::new(line_no, "expected `u v [w]`")),
        };
        builder
            .add_edge_at(tokens[0], tokens[1], weight, line_no)
            .map_err(|e| ParseError::new(line_no, e.to_string()))?;
    }
    let self_loops_dropped = builder.self_loops_dropped();
    let graph = builder.build().map_err(|e| match e {
        Error::DuplicateEdge { ref u, ref v, origin } => {
            ParseError::new(origin, format!("duplicate edge {{{u}, {v}}} rejected by the reject policy"))
        }
        other => ParseError::new(0, other.to_string()),
    })?;
    Ok(LoadedGraph { graph, self_loops_dropped })
}

/// Canonical edge list: `label_u label_v weight` per edge sorted by internal
/// `(u, v)` index, weight column omitted when every weight is 1.
pub fn write(graph: &Graph) -> String {
    let unweighted = graph.is_unweighted();
    let mut out = String::new();
    for e in graph.edges() {
        let (u, v) = (graph.label(e.u), graph.label(e.v));
        if unweighted {
            let _ = writeln!(out, "{u} {v}");
        } else {
            let _ = writeln!(out, "{u} {v} {}", e.weight);
        }
    }
    out
}
