//! Graph file formats: DIMACS edge format and plain edge lists.
//!
//! DIMACS: `c` comment lines, one `p edge <n> <m>` header, then `e <u> <v>`
//! lines with 1-based endpoints. Edge lists: one `<u> <v>` pair per line,
//! 0-based, `#`-prefixed comments, with an optional `# n=<count>` header so
//! graphs with isolated vertices survive the round trip. Serializers emit
//! edges sorted with `u < v` for byte-stable output.

use std::fmt::Write as _;
use std::io::BufRead;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Dimacs,
    EdgeList,
}

impl std::str::FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dimacs" => Ok(Self::Dimacs),
            "edgelist" => Ok(Self::EdgeList),
            other => Err(Error::Validation(format!("unknown graph format {other:?}"))),
        }
    }
}

/// Parses a graph from a byte stream in the declared format.
pub fn load_graph<R: BufRead>(reader: R, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::Dimacs => parse_dimacs(reader),
        GraphFormat::EdgeList => parse_edgelist(reader),
    }
}

/// Convenience wrapper over [`load_graph`] for in-memory text.
pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    load_graph(text.as_bytes(), format)
}

/// Loads a graph file, inferring the format from the extension when
/// `format` is `None` (`.col`/`.clq`/`.dimacs` mean DIMACS, anything else
/// is an edge list).
pub fn load_graph_path(path: &Path, format: Option<GraphFormat>) -> Result<Graph> {
    let format = format.unwrap_or_else(|| match path.extension().and_then(|e| e.to_str()) {
        Some("col") | Some("clq") | Some("dimacs") => GraphFormat::Dimacs,
        _ => GraphFormat::EdgeList,
    });
    let file = std::fs::File::open(path)?;
    load_graph(std::io::BufReader::new(file), format)
}

fn parse_dimacs<R: BufRead>(reader: R) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("p") => {
                if n.is_some() {
                    return Err(Error::Parse { line: lineno, msg: "duplicate problem line".into() });
                }
                if parts.next() != Some("edge") {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "problem line must read `p edge <n> <m>`".into(),
                    });
                }
                let nv = parse_field(parts.next(), lineno, "vertex count")?;
                let _m: usize = parse_field(parts.next(), lineno, "edge count")?;
                if nv == 0 {
                    return Err(Error::Parse { line: lineno, msg: "vertex count must be >= 1".into() });
                }
                n = Some(nv);
            }
            Some("e") => {
                let n = n.ok_or(Error::Parse {
                    line: lineno,
                    msg: "edge line before problem line".into(),
                })?;
                let u: usize = parse_field(parts.next(), lineno, "edge endpoint")?;
                let v: usize = parse_field(parts.next(), lineno, "edge endpoint")?;
                if u < 1 || u > n {
                    return Err(Error::VertexRange { v: u, n });
                }
                if v < 1 || v > n {
                    return Err(Error::VertexRange { v, n });
                }
                if u == v {
                    return Err(Error::Validation(format!(
                        "self-loop at vertex {u} (line {lineno})"
                    )));
                }
                // Shift to dense 0-based indices.
                edges.push((u as u32 - 1, v as u32 - 1));
            }
            Some(other) => {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("unrecognized line type {other:?}"),
                })
            }
            None => unreachable!("blank lines were skipped"),
        }
    }
    let n = n.ok_or(Error::Parse { line: 0, msg: "missing `p edge` problem line".into() })?;
    Graph::from_edges(n, edges)
}

fn parse_edgelist<R: BufRead>(reader: R) -> Result<Graph> {
    let mut declared_n: Option<usize> = None;
    let mut max_seen: Option<usize> = None;
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let comment = comment.trim();
            if let Some(count) = comment.strip_prefix("n=") {
                let nv: usize = count.trim().parse().map_err(|_| Error::Parse {
                    line: lineno,
                    msg: format!("invalid vertex count in header {comment:?}"),
                })?;
                declared_n = Some(nv);
            }
            continue;
        }
        let mut parts = line.split_whitespace();
        let u: usize = parse_field(parts.next(), lineno, "edge endpoint")?;
        let v: usize = parse_field(parts.next(), lineno, "edge endpoint")?;
        if parts.next().is_some() {
            return Err(Error::Parse {
                line: lineno,
                msg: "expected exactly two endpoints per line".into(),
            });
        }
        if u == v {
            return Err(Error::Validation(format!("self-loop at vertex {u} (line {lineno})")));
        }
        if let Some(n) = declared_n {
            if u >= n {
                return Err(Error::VertexRange { v: u, n });
            }
            if v >= n {
                return Err(Error::VertexRange { v, n });
            }
        }
        max_seen = Some(max_seen.unwrap_or(0).max(u).max(v));
        edges.push((u as u32, v as u32));
    }
    let n = match (declared_n, max_seen) {
        (Some(n), _) => n,
        (None, Some(max)) => max + 1,
        (None, None) => {
            return Err(Error::Parse { line: 0, msg: "empty edge list without `# n=` header".into() })
        }
    };
    Graph::from_edges(n, edges)
}

fn parse_field<T: std::str::FromStr>(field: Option<&str>, line: usize, what: &str) -> Result<T> {
    field
        .ok_or_else(|| Error::Parse { line, msg: format!("missing {what}") })?
        .parse()
        .map_err(|_| Error::Parse { line, msg: format!("invalid {what}") })
}

/// Serializes to DIMACS with 1-based endpoints and edges sorted `u < v`.
pub fn write_dimacs(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = String::new();
    let _ = writeln!(out, "p edge {} {}", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// Serializes to the edge-list format, prefixing the given comments and the
/// `# n=` header.
pub fn write_edgelist(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "# n={}", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
