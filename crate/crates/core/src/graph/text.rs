//! Line-oriented graph files:
//!
//! ```text
//! # comment
//! v <label>
//! e <label> <label>
//! ```

use std::fmt::Write;

use super::{Graph, GraphError};

/// Splits a line into tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(byte, t)| (line[..byte].chars().count() + 1, t))
        .collect()
}

pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut g = Graph::new();
    for (lineno, line) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let err = |column: usize, msg: String| GraphError::Parse {
            line: line_no,
            column,
            msg,
        };
        let toks = tokens(line);
        let Some(&(col, kind)) = toks.first() else {
            continue;
        };
        if kind.starts_with('#') {
            continue;
        }
        match (kind, toks.as_slice()) {
            ("v", [_, (c, label)]) => {
                g.add_vertex(label).map_err(|e| err(*c, e.to_string()))?;
            }
            ("e", [_, (ca, a), (_, b)]) => {
                g.add_edge(a, b).map_err(|e| err(*ca, e.to_string()))?;
            }
            ("v", _) => return Err(err(col, "expected 'v <label>'".into())),
            ("e", _) => return Err(err(col, "expected 'e <label> <label>'".into())),
            _ => return Err(err(col, format!("unknown directive '{kind}'"))),
        }
    }
    Ok(g)
}

/// Serializes `g`: all `v` lines in insertion order, then each edge once with the
/// earlier-inserted endpoint first.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    for l in g.labels() {
        writeln!(out, "v {l}").unwrap();
    }
    for (a, b) in g.edges() {
        writeln!(out, "e {} {}", g.label(a), g.label(b)).unwrap();
    }
    out
}
