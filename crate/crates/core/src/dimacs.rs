//! DIMACS undirected graph format.
//!
//! Written form: one `p edge <n> <m>` line followed by `e <u> <v>` for every edge, 1-indexed
//! with `u < v`, sorted lexicographically, each line terminated by `\n`. The reader also accepts
//! `c` comment lines, blank lines, and edges listed in either order or more than once; the `m`
//! in the header must equal the number of `e` lines.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn write_dimacs(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("p edge {} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        writeln!(out, "e {} {}", u + 1, v + 1).expect("writing to a String");
    }
    out
}

pub fn read_dimacs(text: &str) -> Result<Graph> {
    let mut header: Option<(Graph, usize)> = None;
    let mut edge_lines = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |msg: String| Error::Parse { line, msg };
        let mut tok = raw.split_whitespace();
        match tok.next() {
            None | Some("c") => {}
            Some("p") => {
                if header.is_some() {
                    return Err(err("second problem line".into()));
                }
                if tok.next() != Some("edge") {
                    return Err(err("expected `p edge <n> <m>`".into()));
                }
                let n = parse_num(tok.next(), line, "vertex count")?;
                let m = parse_num(tok.next(), line, "edge count")?;
                if tok.next().is_some() {
                    return Err(err("trailing tokens on problem line".into()));
                }
                let g = Graph::empty(n).map_err(|e| err(e.to_string()))?;
                header = Some((g, m));
            }
            Some("e") => {
                let Some((g, _)) = header.as_mut() else {
                    return Err(err("edge before the problem line".into()));
                };
                let u = parse_num(tok.next(), line, "edge endpoint")?;
                let v = parse_num(tok.next(), line, "edge endpoint")?;
                if tok.next().is_some() {
                    return Err(err("trailing tokens on edge line".into()));
                }
                if u == 0 || v == 0 || u > g.n() || v > g.n() {
                    return Err(err(format!("endpoint out of range 1..={}", g.n())));
                }
                if u == v {
                    return Err(err(format!("self-loop at vertex {u}")));
                }
                g.add_edge(u - 1, v - 1).map_err(|e| err(e.to_string()))?;
                edge_lines += 1;
            }
            Some(other) => return Err(err(format!("unknown line type {other:?}"))),
        }
    }
    let (g, m) = header.ok_or(Error::Parse {
        line: 0,
        msg: "missing problem line".into(),
    })?;
    if m != edge_lines {
        return Err(Error::Parse {
            line: text.lines().count(),
            msg: format!("header declares {m} edges but {edge_lines} were listed"),
        });
    }
    Ok(g)
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let t = tok.ok_or_else(|| Error::Parse {
        line,
        msg: format!("missing {what}"),
    })?;
    t.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("bad {what} {t:?}"),
    })
}
