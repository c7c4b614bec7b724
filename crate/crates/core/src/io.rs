//! DIMACS `.col` and plain edge-list reading and writing.
//!
//! DIMACS files are 1-indexed (`p edge n m`, `e u v`, `c` comments). Edge
//! lists are 0-indexed `u v` pairs; blank lines and `#` comments are
//! ignored. A line holding a single integer declares the vertex count, which
//! is how isolated high-numbered vertices survive a round trip.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Dimacs,
    EdgeList,
}

impl Format {
    /// `.col`, `.dimacs` and `.clq` are DIMACS; everything else is an edge list.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some("col" | "dimacs" | "clq") => Format::Dimacs,
            _ => Format::EdgeList,
        }
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dimacs" | "col" => Ok(Format::Dimacs),
            "edge-list" | "edgelist" | "edges" => Ok(Format::EdgeList),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    let tok = tok.ok_or_else(|| err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| err(line, format!("invalid {what} `{tok}`")))
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::Dimacs => parse_dimacs(text),
        Format::EdgeList => parse_edge_list(text),
    }
}

fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut toks = line.split_whitespace();
        match toks.next() {
            Some("p") => {
                if n.is_some() {
                    return Err(err(line_no, "duplicate problem line"));
                }
                match toks.next() {
                    Some("edge" | "col") => {}
                    other => return Err(err(line_no, format!("malformed header: expected `p edge n m`, got {other:?}"))),
                }
                let vn = parse_num(toks.next(), line_no, "vertex count")?;
                parse_num(toks.next(), line_no, "edge count")?;
                n = Some(vn);
            }
            Some("e") => {
                let nv = n.ok_or_else(|| err(line_no, "edge line before `p edge` header"))?;
                let u = parse_num(toks.next(), line_no, "endpoint")?;
                let v = parse_num(toks.next(), line_no, "endpoint")?;
                for x in [u, v] {
                    if x == 0 || x > nv {
                        return Err(err(line_no, format!("vertex {x} out of range 1..={nv}")));
                    }
                }
                if u == v {
                    return Err(err(line_no, format!("self-loop on vertex {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(tok) => return Err(err(line_no, format!("unexpected line type `{tok}`"))),
            None => {}
        }
    }
    let n = n.ok_or_else(|| err(text.lines().count().max(1), "missing `p edge n m` header"))?;
    Ok(Graph::from_edges(n, &edges).expect("edges validated while parsing"))
}

fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut max_id: Option<usize> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.len() {
            1 => {
                if declared.is_some() || !edges.is_empty() {
                    return Err(err(line_no, "vertex count must appear once, before any edge"));
                }
                declared = Some(parse_num(Some(toks[0]), line_no, "vertex count")?);
            }
            2 => {
                let u = parse_num(Some(toks[0]), line_no, "endpoint")?;
                let v = parse_num(Some(toks[1]), line_no, "endpoint")?;
                if u == v {
                    return Err(err(line_no, format!("self-loop on vertex {u}")));
                }
                if let Some(nv) = declared {
                    if u.max(v) >= nv {
                        return Err(err(line_no, format!("vertex {} out of range 0..{nv}", u.max(v))));
                    }
                }
                max_id = Some(max_id.map_or(u.max(v), |m: usize| m.max(u).max(v)));
                edges.push((u, v));
            }
            _ => return Err(err(line_no, format!("expected `u v`, got `{line}`"))),
        }
    }
    let n = declared.unwrap_or_else(|| max_id.map_or(0, |m| m + 1));
    Ok(Graph::from_edges(n, &edges).expect("edges validated while parsing"))
}

pub fn write_graph(g: &Graph, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Dimacs => {
            writeln!(out, "p edge {} {}", g.n(), g.m()).unwrap();
            for (u, v) in g.edges() {
                writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
            }
        }
        Format::EdgeList => {
            writeln!(out, "{}", g.n()).unwrap();
            for (u, v) in g.edges() {
                writeln!(out, "{u} {v}").unwrap();
            }
        }
    }
    out
}
