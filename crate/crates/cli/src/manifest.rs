//! Sweep manifests: `param<TAB>cover_path` per line.
//!
//! Lines without a tab fall back to whitespace splitting (two tokens). A param
//! listed on several lines has several runs; params keep first-seen order and
//! are kept verbatim as labels. Relative paths resolve against `base`.

use std::path::{Path, PathBuf};

use crate::ParseError;

/// One parameter value and the cover files of its runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestEntry {
    pub param: String,
    pub covers: Vec<PathBuf>,
}

/// Parses a manifest. An empty manifest parses to an empty list.
pub fn parse(text: &str, base: &Path) -> Result<Vec<ManifestEntry>, ParseError> {
    let mut entries: Vec<ManifestEntry> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (param, path) = match line.split_once('\t') {
            Some((p, path)) => (p.trim(), path.trim()),
            None => {
                let tokens: Vec<&str> = line.split_whitespace().collect();
                if tokens.len() != 2 {
                    return Err(ParseError::new(line_no, "expected `param<TAB>cover_path`"));
                }
                (tokens[0], tokens[1])
            }
        };
        if param.is_empty() || path.is_empty() {
            return Err(ParseError::new(line_no, "expected `param<TAB>cover_path`"));
        }
        let path = base.join(path);
        match entries.iter_mut().find(|e| e.param == param) {
            Some(e) => e.covers.push(path),
            None => entries.push(ManifestEntry { param: param.to_string(), covers: vec![path] }),
        }
    }
    Ok(entries)
}
