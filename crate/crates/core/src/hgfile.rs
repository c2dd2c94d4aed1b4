//! The `.hg` text format.
//!
//! ```text
//! # comment lines start with '#'
//! r n m
//! v1 v2 .. vr      (m lines, strictly ascending vertex ids)
//! ```
//!
//! Blank lines are ignored. Duplicate edges are rejected.

use std::path::Path;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexSet, MAX_VERTICES};

pub fn parse(text: &str) -> Result<Hypergraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        message: "missing 'r n m' header".into(),
    })?;
    let fields = parse_numbers(header_line, header)?;
    let [r, n, m] = fields[..] else {
        return Err(Error::Parse {
            line: header_line,
            message: format!("header needs exactly 3 fields, found {}", fields.len()),
        });
    };
    if r < 2 {
        return Err(Error::Parse {
            line: header_line,
            message: format!("uniformity {r} < 2"),
        });
    }
    if n > MAX_VERTICES {
        return Err(Error::Capacity(format!(
            "n = {n} exceeds the {MAX_VERTICES}-vertex limit"
        )));
    }

    let mut edges: Vec<VertexSet> = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    for (line, body) in lines {
        let vs = parse_numbers(line, body)?;
        if vs.len() != r {
            return Err(Error::Parse {
                line,
                message: format!("edge has {} vertices, expected {r}", vs.len()),
            });
        }
        if vs.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parse {
                line,
                message: "edge vertices must be strictly ascending".into(),
            });
        }
        if let Some(&v) = vs.iter().find(|&&v| v >= n) {
            return Err(Error::Parse {
                line,
                message: format!("vertex {v} >= n = {n}"),
            });
        }
        let edge: VertexSet = vs.into_iter().collect();
        if !seen.insert(edge) {
            return Err(Error::Parse {
                line,
                message: format!("duplicate edge {edge}"),
            });
        }
        edges.push(edge);
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: header_line,
            message: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Hypergraph::new(r, n, edges)
}

fn parse_numbers(line: usize, body: &str) -> Result<Vec<usize>> {
    body.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line,
                message: format!("'{tok}' is not a non-negative integer"),
            })
        })
        .collect()
}

/// Serializes with edges in colex order; byte-identical for equal hypergraphs.
pub fn write(h: &Hypergraph) -> String {
    let mut out = format!("{} {} {}\n", h.r(), h.n(), h.edge_count());
    for e in h.edges() {
        let vs: Vec<String> = e.iter().map(|v| v.to_string()).collect();
        out.push_str(&vs.join(" "));
        out.push('\n');
    }
    out
}

pub fn read_file(path: impl AsRef<Path>) -> Result<Hypergraph> {
    parse(&std::fs::read_to_string(path)?)
}

pub fn write_file(path: impl AsRef<Path>, h: &Hypergraph) -> Result<()> {
    std::fs::write(path, write(h))?;
    Ok(())
}
