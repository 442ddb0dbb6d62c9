//! Reading and writing hypergraphs.
//!
//! Text format (`.hg`), 1-based labels:
//!
//! ```text
//! # comment
//! vertices 6
//! edge 1 5 6
//! edge 2 5 6
//! ```
//!
//! JSON format: `{"vertices": 6, "edges": [[1,5,6],[2,5,6]]}`. Both writers
//! emit canonical edge order, so parse-then-write is byte-stable.

use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonHypergraph {
    vertices: usize,
    edges: Vec<Vec<usize>>,
}

pub fn parse_text(input: &str) -> Result<Hypergraph> {
    let mut n = None;
    let mut edges = Vec::new();
    for (i, raw) in input.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::Parse { line: line_no, message };
        let mut words = line.split_whitespace();
        let keyword = words.next().expect("nonempty line");
        let numbers = words
            .map(|w| w.parse::<usize>().map_err(|_| err(format!("expected a positive integer, found {w:?}"))))
            .collect::<Result<Vec<_>>>()?;
        match keyword {
            "vertices" => {
                if n.is_some() {
                    return Err(err("duplicate `vertices` line".into()));
                }
                match numbers.as_slice() {
                    [count] => n = Some(*count),
                    _ => return Err(err("`vertices` takes exactly one count".into())),
                }
            }
            "edge" => {
                if numbers.is_empty() {
                    return Err(err("`edge` needs at least one vertex".into()));
                }
                edges.push((line_no, numbers));
            }
            other => return Err(err(format!("unknown keyword {other:?}"))),
        }
    }
    let n = n.ok_or(Error::Parse { line: 0, message: "missing `vertices N` line".into() })?;
    for (line, e) in &edges {
        if let Some(&bad) = e.iter().find(|&&v| v == 0 || v > n) {
            return Err(Error::Parse { line: *line, message: format!("vertex {bad} is out of range 1..={n}") });
        }
    }
    Hypergraph::from_labels(n, edges.into_iter().map(|(_, e)| e))
}

pub fn parse_json(input: &str) -> Result<Hypergraph> {
    let raw: JsonHypergraph = serde_json::from_str(input)?;
    Hypergraph::from_labels(raw.vertices, raw.edges)
}

/// JSON when the first non-blank character is `{`, text otherwise.
pub fn detect_format(input: &str) -> Format {
    if input.trim_start().starts_with('{') {
        Format::Json
    } else {
        Format::Text
    }
}

pub fn parse(input: &str) -> Result<Hypergraph> {
    match detect_format(input) {
        Format::Json => parse_json(input),
        Format::Text => parse_text(input),
    }
}

pub fn to_text(h: &Hypergraph) -> String {
    let mut out = format!("vertices {}\n", h.num_vertices());
    for e in h.edge_labels() {
        out.push_str("edge");
        for v in e {
            out.push(' ');
            out.push_str(&v.to_string());
        }
        out.push('\n');
    }
    out
}

pub fn to_json(h: &Hypergraph) -> String {
    let raw = JsonHypergraph { vertices: h.num_vertices(), edges: h.edge_labels() };
    serde_json::to_string(&raw).expect("plain data serializes")
}

pub fn write(h: &Hypergraph, format: Format) -> String {
    match format {
        Format::Text => to_text(h),
        Format::Json => to_json(h),
    }
}

/// Reads a file, or standard input for `-`.
pub fn read_source(source: &str) -> Result<String> {
    if source == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        Ok(std::fs::read_to_string(Path::new(source)).map_err(|e| Error::Io(format!("{source}: {e}")))?)
    }
}

pub fn load(source: &str) -> Result<Hypergraph> {
    parse(&read_source(source)?)
}
