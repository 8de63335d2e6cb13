//! Edge-list text format.
//!
//! ```text
//! # block R: 0..2
//! n m
//! a b c
//! ...
//! ```
//!
//! The header line holds the vertex and edge counts, followed by `m` lines of
//! three 0-indexed vertices in any order. Lines starting with `#` are
//! comments; `# block NAME: a..b` comments (inclusive range, or `empty`)
//! carry a partition annotation. The writer always emits canonical sorted
//! edges.

use std::fmt::Write as _;

use crate::constructions::{Block, PartitionSpec};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph3;

#[derive(Debug, Clone)]
pub struct EdgeList {
    pub graph: Hypergraph3,
    pub blocks: Vec<Block>,
    pub comments: Vec<String>,
}

fn parse_block(body: &str, line: usize) -> Result<Block> {
    let err = |message: String| Error::Parse { line, message };
    let (name, range) = body
        .split_once(':')
        .ok_or_else(|| err(format!("malformed block annotation {body:?}")))?;
    let name = name.trim().to_string();
    let range = range.trim();
    if range == "empty" {
        return Ok(Block {
            name,
            start: 0,
            len: 0,
        });
    }
    let (a, b) = range
        .split_once("..")
        .ok_or_else(|| err(format!("malformed block range {range:?}")))?;
    let a: usize = a.trim().parse().map_err(|e| err(format!("{e}")))?;
    let b: usize = b.trim().parse().map_err(|e| err(format!("{e}")))?;
    if b < a {
        return Err(err(format!("empty or reversed range {range:?}")));
    }
    Ok(Block {
        name,
        start: a,
        len: b - a + 1,
    })
}

pub fn parse_edge_list(text: &str) -> Result<EdgeList> {
    let mut header: Option<(usize, usize)> = None;
    let mut triples = Vec::new();
    let mut blocks = Vec::new();
    let mut comments = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(c) = line.strip_prefix('#') {
            let c = c.trim();
            if let Some(body) = c.strip_prefix("block ") {
                blocks.push(parse_block(body, line_no)?);
            } else {
                comments.push(c.to_string());
            }
            continue;
        }
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(|t| {
                t.parse().map_err(|e| Error::Parse {
                    line: line_no,
                    message: format!("{t:?}: {e}"),
                })
            })
            .collect::<Result<_>>()?;
        match (header, nums.as_slice()) {
            (None, &[n, m]) => header = Some((n, m)),
            (None, _) => {
                return Err(Error::Parse {
                    line: line_no,
                    message: "expected header `n m`".into(),
                })
            }
            (Some(_), &[a, b, c]) => triples.push([a, b, c]),
            (Some(_), _) => {
                return Err(Error::Parse {
                    line: line_no,
                    message: "expected three vertices".into(),
                })
            }
        }
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: 0,
        message: "missing header".into(),
    })?;
    if triples.len() != m {
        return Err(Error::Parse {
            line: 0,
            message: format!("header announces {m} edges, found {}", triples.len()),
        });
    }
    let graph = Hypergraph3::new(n, triples)?;
    Ok(EdgeList {
        graph,
        blocks,
        comments,
    })
}

pub fn write_edge_list(h: &Hypergraph3) -> String {
    let mut out = String::with_capacity(12 * h.edge_count() + 16);
    writeln!(out, "{} {}", h.n(), h.edge_count()).unwrap();
    for e in h.edges() {
        writeln!(out, "{} {} {}", e[0], e[1], e[2]).unwrap();
    }
    out
}

/// Edge list preceded by `# block` annotations for each block of `p`.
pub fn write_annotated(h: &Hypergraph3, p: &PartitionSpec, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        writeln!(out, "# {c}").unwrap();
    }
    for b in &p.blocks {
        if b.len == 0 {
            writeln!(out, "# block {}: empty", b.name).unwrap();
        } else {
            writeln!(
                out,
                "# block {}: {}..{}",
                b.name,
                b.start,
                b.start + b.len - 1
            )
            .unwrap();
        }
    }
    out.push_str(&write_edge_list(h));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::h12;

    #[test]
    fn parse_any_order_and_write_canonical() {
        let el = parse_edge_list("# hello\n4 2\n2 1 0\n\n3 0 1\n").unwrap();
        assert_eq!(el.graph.edges(), &[[0, 1, 2], [0, 1, 3]]);
        assert_eq!(el.comments, vec!["hello".to_string()]);
        assert_eq!(write_edge_list(&el.graph), "4 2\n0 1 2\n0 1 3\n");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_edge_list(""), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_edge_list("3 2\n0 1 2\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 1\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 1 x\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 1 3\n"),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            parse_edge_list("# block R: 3..1\n3 0\n"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn block_annotations_round_trip() {
        let inst = h12(15, 3, 1).unwrap();
        let text = write_annotated(&inst.graph, &inst.partition, &[]);
        assert!(text.starts_with("# block R: 0..2\n# block S: 3..7\n# block T: 8..14\n15 273\n"));
        let back = parse_edge_list(&text).unwrap();
        assert_eq!(back.blocks, inst.partition.blocks);
        assert_eq!(back.graph, inst.graph);
    }
}
