//! Plain-text edge-list format.
//!
//! Line 1: `p <n> <m>`. Then exactly `m` lines `e <u> <v>` with
//! `0 <= u < v < n`. Blank lines and lines starting with `#` are ignored.
//! UTF-8, LF line endings.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_err(line: usize, reason: impl Into<String>) -> Error {
    Error::EdgeListParse {
        line,
        reason: reason.into(),
    }
}

/// Parses the edge-list format into a graph.
pub fn read_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(lineno, "duplicate header line"));
                }
                let n = parts
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| parse_err(lineno, "header must be `p <n> <m>`"))?;
                let m = parts
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| parse_err(lineno, "header must be `p <n> <m>`"))?;
                if parts.next().is_some() {
                    return Err(parse_err(lineno, "trailing tokens after header"));
                }
                header = Some((n, m));
            }
            Some("e") => {
                if header.is_none() {
                    return Err(parse_err(lineno, "edge before `p` header"));
                }
                let u = parts
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| parse_err(lineno, "edge must be `e <u> <v>`"))?;
                let v = parts
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| parse_err(lineno, "edge must be `e <u> <v>`"))?;
                if parts.next().is_some() {
                    return Err(parse_err(lineno, "trailing tokens after edge"));
                }
                if u == v {
                    return Err(Error::SelfLoop(u));
                }
                if u > v {
                    return Err(parse_err(
                        lineno,
                        format!("edges must satisfy u < v, got {u} {v}"),
                    ));
                }
                edges.push((u, v));
            }
            Some(other) => {
                return Err(parse_err(lineno, format!("unknown record {other:?}")));
            }
            None => unreachable!("blank lines were skipped"),
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(1, "missing `p <n> <m>` header"))?;
    if edges.len() != m {
        return Err(parse_err(
            1,
            format!("header promises {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, edges)
}

/// Canonical serialization: header plus edges sorted ascending, LF endings.
#[must_use]
pub fn write_edge_list(g: &Graph) -> String {
    write_edge_list_with_comments(g, &[])
}

/// Canonical serialization preceded by `# ...` comment lines (used to record
/// product factors and numbering in saved files).
#[must_use]
pub fn write_edge_list_with_comments(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "p {} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle;

    #[test]
    fn reads_triangle() {
        let g = read_edge_list("p 3 3\ne 0 1\ne 1 2\ne 0 2\n").unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
        assert!(g.has_edge(0, 2));
    }

    #[test]
    fn round_trip_is_canonical() {
        let messy = "# a comment\n\np 4 3\ne 2 3\n\ne 0 1\n# another\ne 1 2\n";
        let canonical = "p 4 3\ne 0 1\ne 1 2\ne 2 3\n";
        let once = write_edge_list(&read_edge_list(messy).unwrap());
        assert_eq!(once, canonical);
        let twice = write_edge_list(&read_edge_list(&once).unwrap());
        assert_eq!(twice, canonical);
    }

    #[test]
    fn writes_generated_graphs() {
        let g = cycle(4).unwrap();
        assert_eq!(write_edge_list(&g), "p 4 4\ne 0 1\ne 0 3\ne 1 2\ne 2 3\n");
    }

    #[test]
    fn comment_block() {
        let g = cycle(3).unwrap();
        let text = write_edge_list_with_comments(&g, &["factors: a, b".into()]);
        assert!(text.starts_with("# factors: a, b\np 3 3\n"));
        assert_eq!(
            write_edge_list(&read_edge_list(&text).unwrap()),
            write_edge_list(&g)
        );
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(
            read_edge_list("e 0 1\n"),
            Err(Error::EdgeListParse { .. })
        ));
        assert!(matches!(
            read_edge_list("p 3\n"),
            Err(Error::EdgeListParse { .. })
        ));
        assert!(matches!(
            read_edge_list("p 3 1\ne 0 0\n"),
            Err(Error::SelfLoop(0))
        ));
        assert!(matches!(
            read_edge_list("p 3 1\ne 1 0\n"),
            Err(Error::EdgeListParse { .. })
        ));
        assert!(matches!(
            read_edge_list("p 3 1\ne 0 3\n"),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            read_edge_list("p 3 2\ne 0 1\ne 0 1\n"),
            Err(Error::DuplicateEdge(0, 1))
        ));
        assert!(matches!(
            read_edge_list("p 3 2\ne 0 1\n"),
            Err(Error::EdgeListParse { .. })
        ));
        assert!(matches!(
            read_edge_list("p 2 0\nq 1\n"),
            Err(Error::EdgeListParse { .. })
        ));
    }
}
