//! Plain-text edge-list interchange format.
//!
//! ```text
//! p <n_vertices> <n_edges>
//! e <u> <v>            one per edge, 0-based, ascending canonical order
//! l <v> <label>        optional, one per vertex
//! ```
//!
//! Blank lines and lines starting with `c` are ignored on input.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = String::with_capacity(16 * (g.n_edges() + g.n_vertices() + 1));
    let _ = writeln!(s, "p {} {}", g.n_vertices(), g.n_edges());
    for e in g.edges() {
        let _ = writeln!(s, "e {} {}", e.u, e.v);
    }
    if let Some(labels) = g.labels() {
        for (v, l) in labels.iter().enumerate() {
            let _ = writeln!(s, "l {v} {l}");
        }
    }
    s
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut pairs = Vec::new();
    let mut labels: Vec<Option<String>> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut tok = line.split_whitespace();
        let kind = tok.next().unwrap_or_default();
        let mut num = |what: &str| -> Result<usize> {
            tok.next()
                .ok_or_else(|| parse_err(line_no, format!("missing {what}")))?
                .parse()
                .map_err(|_| parse_err(line_no, format!("bad {what}")))
        };
        match kind {
            "p" => {
                if header.is_some() {
                    return Err(parse_err(line_no, "second `p` line"));
                }
                let n = num("vertex count")?;
                let m = num("edge count")?;
                labels = vec![None; n];
                header = Some((n, m));
            }
            "e" => {
                if header.is_none() {
                    return Err(parse_err(line_no, "`e` before `p`"));
                }
                pairs.push((num("endpoint")?, num("endpoint")?));
            }
            "l" => {
                let Some((n, _)) = header else {
                    return Err(parse_err(line_no, "`l` before `p`"));
                };
                let v = num("vertex")?;
                if v >= n {
                    return Err(parse_err(line_no, format!("label for vertex {v} out of range")));
                }
                let label = tok
                    .next()
                    .ok_or_else(|| parse_err(line_no, "missing label"))?;
                labels[v] = Some(label.to_string());
            }
            other => return Err(parse_err(line_no, format!("unknown line type `{other}`"))),
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing `p` line"))?;
    if pairs.len() != m {
        return Err(parse_err(0, format!("header says {m} edges, found {}", pairs.len())));
    }
    let g = Graph::new(n, pairs)?;
    let given = labels.iter().filter(|l| l.is_some()).count();
    if given == 0 {
        Ok(g)
    } else if given == n {
        g.with_labels(labels.into_iter().map(Option::unwrap).collect())
    } else {
        Err(parse_err(0, format!("{given} of {n} vertices labelled")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::{gen_family, FamilyKind};

    #[test]
    fn k2_text() {
        let g = gen_family(FamilyKind::Hypercube, 1).unwrap().into_graph();
        assert_eq!(write_edge_list(&g), "p 2 1\ne 0 1\nl 0 0\nl 1 1\n");
    }

    #[test]
    fn round_trip_crossed() {
        let g = gen_family(FamilyKind::Crossed, 4).unwrap().into_graph();
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn malformed() {
        assert!(parse_edge_list("e 0 1\n").is_err());
        assert!(parse_edge_list("p 2 2\ne 0 1\n").is_err());
        assert!(parse_edge_list("p 2 1\ne 0 0\n").is_err());
        assert!(parse_edge_list("p 2 1\ne 0 x\n").is_err());
        assert!(parse_edge_list("p 2 1\ne 0 1\nl 0 0\n").is_err());
        assert!(parse_edge_list("p 2 1\nq\n").is_err());
        let g = parse_edge_list("c comment\np 3 2\n\ne 1 2\ne 0 1\n").unwrap();
        assert_eq!(g.n_edges(), 2);
    }
}
