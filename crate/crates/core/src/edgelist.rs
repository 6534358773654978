//! Plain-text edge lists.
//!
//! ```text
//! # optional comment lines
//! n m
//! u v
//! ...
//! ```
//!
//! Vertices are 0-based. Lines whose first non-blank character is `#` and
//! blank lines are skipped. [`write`] emits the canonical form (sorted
//! edges, `u < v`, single spaces), which [`parse`] reads back unchanged.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (a, b) = parse_pair(line, line_no)?;
        match header {
            None => header = Some((a, b)),
            Some((_, m)) if pairs.len() == m => {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("more than the declared {m} edges"),
                });
            }
            Some(_) => pairs.push((a, b)),
        }
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: 0,
        msg: "missing `n m` header".into(),
    })?;
    if pairs.len() != m {
        return Err(Error::Parse {
            line: 0,
            msg: format!("declared {m} edges, found {}", pairs.len()),
        });
    }
    Graph::from_edge_list(n, &pairs)
}

fn parse_pair(line: &str, line_no: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it.next().ok_or_else(|| Error::Parse {
            line: line_no,
            msg: "expected two integers".into(),
        })?;
        tok.parse().map_err(|_| Error::Parse {
            line: line_no,
            msg: format!("`{tok}` is not a nonnegative integer"),
        })
    };
    let a = next()?;
    let b = next()?;
    if let Some(extra) = it.next() {
        return Err(Error::Parse {
            line: line_no,
            msg: format!("unexpected token `{extra}`"),
        });
    }
    Ok((a, b))
}

pub fn write(g: &Graph) -> String {
    write_with_comments(g, &[])
}

/// Canonical form preceded by `# `-prefixed comment lines.
pub fn write_with_comments(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "{} {}", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u, e.v);
    }
    out
}
