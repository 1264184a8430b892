//! Edge-list text format and DOT export.
//!
//! The edge-list format is one header line `n <count>` followed by one
//! `u v` pair per line, 0-indexed and whitespace-separated. Lines starting
//! with `#` are comments.

use fiedler_core::graph::Graph;

use crate::HarnessError;

pub fn parse_edge_list(text: &str) -> Result<Graph, HarnessError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        if n.is_none() {
            if tokens.next() != Some("n") {
                return Err(HarnessError::Parse {
                    line: idx + 1,
                    message: "expected header 'n <count>'".into(),
                });
            }
            let count = tokens
                .next()
                .and_then(|t| t.parse::<usize>().ok())
                .ok_or_else(|| HarnessError::Parse {
                    line: idx + 1,
                    message: "expected vertex count after 'n'".into(),
                })?;
            n = Some(count);
        } else {
            let mut next = || {
                tokens
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| HarnessError::Parse {
                        line: idx + 1,
                        message: "expected 'u v' edge pair".into(),
                    })
            };
            let u = next()?;
            let v = next()?;
            edges.push((u, v));
        }
        if tokens.next().is_some() {
            return Err(HarnessError::Parse {
                line: idx + 1,
                message: "trailing tokens".into(),
            });
        }
    }
    let n = n.ok_or(HarnessError::Parse { line: 0, message: "missing header".into() })?;
    Ok(Graph::new(n, edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Plain undirected DOT for visualization.
pub fn write_dot(g: &Graph) -> String {
    let mut out = String::from("graph {\n");
    let mut in_edge = vec![false; g.n()];
    for &(u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
        in_edge[u] = true;
        in_edge[v] = true;
    }
    for (v, covered) in in_edge.iter().enumerate() {
        if !covered {
            out.push_str(&format!("  {v};\n"));
        }
    }
    out.push_str("}\n");
    out
}
