//! Cover files.
//!
//! One community per line. Crisp lines list member labels; fuzzy lines list
//! `label:coef` tokens. Blank lines and lines starting with `#` are skipped.
//! Parsing happens in two steps: [`parse`] reads the text into a label-level
//! [`RawCover`], then [`RawCover::resolve`] maps labels onto a graph (or
//! [`RawCover::intern`] assigns fresh ids when no graph is at hand).

use std::collections::HashMap;
use std::fmt::Write as _;

use ovmetrics_core::{Cover, CoverKind, Error, Graph, NodeId};

use crate::numfmt::sig;
use crate::ParseError;

/// How to read a cover file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CoverFormat {
    /// Fuzzy if any token contains `:`, crisp otherwise.
    #[default]
    Auto,
    Crisp,
    Fuzzy,
}

/// A community as written: its source line and `(label, coefficient)` tokens.
#[derive(Debug, Clone, PartialEq)]
pub struct RawCommunity {
    pub line: usize,
    pub members: Vec<(String, f64)>,
}

/// A cover before labels are mapped to node ids.
#[derive(Debug, Clone, PartialEq)]
pub struct RawCover {
    pub kind: CoverKind,
    pub communities: Vec<RawCommunity>,
}

/// Reads cover text in the given format.
pub fn parse(text: &str, format: CoverFormat) -> Result<RawCover, ParseError> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let fuzzy = match format {
        CoverFormat::Crisp => false,
        CoverFormat::Fuzzy => true,
        CoverFormat::Auto => lines.iter().any(|(_, l)| l.contains(':')),
    };
    let mut communities = Vec::with_capacity(lines.len());
    for (line, text) in lines {
        let members = if fuzzy {
            let members = text.split_whitespace().map(|tok| fuzzy_token(tok, line)).collect::<Result<Vec<_>, _>>()?;
            if members.iter().all(|&(_, a)| a == 0.0) {
                return Err(ParseError::new(line, "community has no positive coefficient"));
            }
            members
        } else {
            text.split_whitespace().map(|tok| (tok.to_string(), 1.0)).collect()
        };
        communities.push(RawCommunity { line, members });
    }
    let kind = if fuzzy { CoverKind::Fuzzy } else { CoverKind::Crisp };
    Ok(RawCover { kind, communities })
}

fn fuzzy_token(tok: &str, line: usize) -> Result<(String, f64), ParseError> {
    let (label, coef) =
        tok.rsplit_once(':').ok_or_else(|| ParseError::new(line, format!("expected `label:coef`, got `{tok}`")))?;
    if label.is_empty() {
        return Err(ParseError::new(line, format!("empty label in `{tok}`")));
    }
    let a: f64 = coef.parse().map_err(|_| ParseError::new(line, format!("invalid coefficient `{coef}`")))?;
    if !(0.0..=1.0).contains(&a) {
        return Err(ParseError::new(line, format!("coefficient {coef} of `{label}` is outside [0, 1]")));
    }
    Ok((label.to_string(), a))
}

impl RawCover {
    /// Maps labels onto `graph`'s node ids.
    pub fn resolve(&self, graph: &Graph) -> Result<Cover, ParseError> {
        let mut ids = Vec::with_capacity(self.communities.len());
        for c in &self.communities {
            let members = c
                .members
                .iter()
                .map(|(label, a)| match graph.node_id(label) {
                    Some(id) => Ok((id, *a)),
                    None => Err(ParseError::new(c.line, format!("unknown node `{label}`"))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            ids.push(members);
        }
        self.build(graph.node_count(), ids)
    }

    /// Assigns node ids to labels in first-seen order; returns the labels by id.
    pub fn intern(&self) -> Result<(Vec<String>, Cover), ParseError> {
        let mut labels: Vec<String> = Vec::new();
        let mut lookup: HashMap<&str, usize> = HashMap::new();
        let mut ids = Vec::with_capacity(self.communities.len());
        for c in &self.communities {
            let members = c
                .members
                .iter()
                .map(|(label, a)| {
                    let id = *lookup.entry(label.as_str()).or_insert_with(|| {
                        labels.push(label.clone());
                        labels.len() - 1
                    });
                    (NodeId(id), *a)
                })
                .collect();
            ids.push(members);
        }
        let cover = self.build(labels.len(), ids)?;
        Ok((labels, cover))
    }

    fn build(&self, node_count: usize, ids: Vec<Vec<(NodeId, f64)>>) -> Result<Cover, ParseError> {
        let result = match self.kind {
            CoverKind::Crisp => {
                Cover::crisp(node_count, ids.into_iter().map(|c| c.into_iter().map(|(n, _)| n).collect()).collect())
            }
            CoverKind::Fuzzy => Cover::fuzzy(node_count, ids),
        };
        result.map_err(|e| {
            let line = match e {
                Error::DuplicateMember { community, .. } | Error::CoefficientOutOfRange { community, .. } => {
                    self.communities[community].line
                }
                _ => 0,
            };
            ParseError::new(line, e.to_string())
        })
    }
}

/// Writes `cover` with node ids rendered through `labels`, members ascending
/// by id. Crisp covers list labels; fuzzy covers print `label:coef` with 17
/// significant digits. Empty communities are omitted.
pub fn write(cover: &Cover, labels: &[String]) -> String {
    let mut out = String::new();
    for c in cover.communities().iter().filter(|c| !c.is_empty()) {
        let mut first = true;
        for &(node, a) in c.members() {
            if !first {
                out.push(' ');
            }
            first = false;
            out.push_str(&labels[node.index()]);
            if cover.kind() == CoverKind::Fuzzy {
                let _ = write!(out, ":{}", sig(a, 17));
            }
        }
        out.push('\n');
    }
    out
}
