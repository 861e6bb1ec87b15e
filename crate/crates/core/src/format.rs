//! Text formats for complexes and graphs.
//!
//! A complex file starts with `n <N>` and lists one facet per line as
//! whitespace-separated vertices in `1..=N`. A graph file starts with
//! `graph <N>` and lists one edge `u v` per line. `#` starts a comment that
//! runs to the end of the line; lines holding only a comment are skipped.
//! A line with no vertices and no comment is an empty facet and is
//! rejected. A complex file with no facet lines is the irrelevant complex
//! `{∅}`.

use std::collections::HashSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::complex::{ComplexError, Graph, Simplex, SimplicialComplex, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based line number; 0 when the error concerns the whole input.
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}

/// A parsed input file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Complex(SimplicialComplex),
    Graph(Graph),
}

enum Header {
    Complex(usize),
    Graph(usize),
}

pub fn parse_input(text: &str) -> Result<Input, ParseError> {
    let mut header: Option<Header> = None;
    let mut facets: Vec<Simplex> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let (body, had_comment) = match raw.find('#') {
            Some(pos) => (&raw[..pos], true),
            None => (raw, false),
        };
        let tokens: Vec<&str> = body.split_whitespace().collect();
        if tokens.is_empty() {
            if had_comment {
                continue;
            }
            if header.is_none() {
                return Err(ParseError::at(line, "expected `n <N>` or `graph <N>` header, found an empty line"));
            }
            return Err(ParseError::at(line, "empty facet line"));
        }
        let Some(h) = &header else {
            header = Some(parse_header(line, &tokens)?);
            continue;
        };
        let n = match h {
            Header::Complex(n) | Header::Graph(n) => *n,
        };
        let mut vertices = Vec::with_capacity(tokens.len());
        let mut seen = HashSet::new();
        for t in &tokens {
            let v: usize = t
                .parse()
                .map_err(|_| ParseError::at(line, format!("`{t}` is not a vertex index")))?;
            if v == 0 || v > n {
                return Err(ParseError::at(line, format!("vertex {v} is outside 1..={n}")));
            }
            if !seen.insert(v) {
                return Err(ParseError::at(line, format!("vertex {v} repeated")));
            }
            vertices.push(v);
        }
        match h {
            Header::Complex(_) => {
                facets.push(Simplex::from_vertices(&vertices).map_err(|e| ParseError::at(line, e.to_string()))?)
            }
            Header::Graph(_) => {
                if vertices.len() != 2 {
                    return Err(ParseError::at(line, format!("an edge needs 2 vertices, found {}", vertices.len())));
                }
                edges.push((vertices[0], vertices[1]));
            }
        }
    }

    match header {
        None => Err(ParseError::at(0, "missing `n <N>` or `graph <N>` header")),
        Some(Header::Complex(n)) => {
            SimplicialComplex::new(n, &facets).map(Input::Complex).map_err(|e| ParseError::at(0, e.to_string()))
        }
        Some(Header::Graph(n)) => Graph::new(n, &edges).map(Input::Graph).map_err(|e| ParseError::at(0, e.to_string())),
    }
}

fn parse_header(line: usize, tokens: &[&str]) -> Result<Header, ParseError> {
    let bad = || ParseError::at(line, "expected `n <N>` or `graph <N>` header");
    if tokens.len() != 2 {
        return Err(bad());
    }
    let n: usize = tokens[1].parse().map_err(|_| bad())?;
    if n > MAX_VERTICES {
        return Err(ParseError::at(line, ComplexError::TooManyVertices(n).to_string()));
    }
    match tokens[0] {
        "n" => Ok(Header::Complex(n)),
        "graph" => Ok(Header::Graph(n)),
        _ => Err(bad()),
    }
}

/// Parses a complex file; graph files are rejected.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex, ParseError> {
    match parse_input(text)? {
        Input::Complex(k) => Ok(k),
        Input::Graph(_) => Err(ParseError::at(1, "expected a complex (`n <N>`), found a graph")),
    }
}

/// Parses a graph file; complex files are rejected.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    match parse_input(text)? {
        Input::Graph(g) => Ok(g),
        Input::Complex(_) => Err(ParseError::at(1, "expected a graph (`graph <N>`), found a complex")),
    }
}

/// Serializes the facets of `k`; the output parses back to `k`.
pub fn write_complex(k: &SimplicialComplex) -> Result<String, ComplexError> {
    if k.is_void() {
        return Err(ComplexError::VoidComplex);
    }
    let mut out = format!("n {}\n", k.n());
    for facet in k.facets() {
        if facet.is_empty() {
            continue;
        }
        let parts: Vec<String> = facet.vertices().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}", parts.join(" "));
    }
    Ok(out)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("graph {}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
