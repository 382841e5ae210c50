//! Plain-text edge lists and embedding documents.
//!
//! Edge list: header `p <n> <m>`, then `m` lines `<u> <v>`; `#` starts a comment line.
//! Embedding: `order: ...`, then `page <u> <v> <top|bottom>` per edge; subhamiltonian
//! output adds `cycle: ...` and `aug: <u> <v>` lines.

use std::fmt::Write as _;

use thiserror::Error;

use crate::book::{BookEmbedding, Page};
use crate::graph::{EdgeId, Graph, GraphError, VertexId};
use crate::subham::SubhamCycle;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("expected {expected} edge lines, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("missing header line `p <n> <m>`")]
    MissingHeader,
    #[error("embedding does not match graph: {0}")]
    Mismatch(String),
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, msg: msg.into() }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_num(line: usize, tok: Option<&str>, what: &str) -> Result<usize, ParseError> {
    let tok = tok.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    tok.parse::<usize>()
        .map_err(|_| syntax(line, format!("bad {what} `{tok}`")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let mut it = header.split_whitespace();
    if it.next() != Some("p") {
        return Err(syntax(hl, "header must start with `p`"));
    }
    let n = parse_num(hl, it.next(), "vertex count")?;
    let m = parse_num(hl, it.next(), "edge count")?;
    if it.next().is_some() {
        return Err(syntax(hl, "trailing tokens in header"));
    }
    let mut g = Graph::with_vertices(n);
    let mut found = 0;
    for (ln, l) in lines {
        let mut it = l.split_whitespace();
        let u = parse_num(ln, it.next(), "endpoint")?;
        let v = parse_num(ln, it.next(), "endpoint")?;
        if it.next().is_some() {
            return Err(syntax(ln, "trailing tokens"));
        }
        for w in [u, v] {
            if w >= n {
                return Err(ParseError::Graph {
                    line: ln,
                    source: GraphError::OutOfRange(w, n),
                });
            }
        }
        g.add_edge(VertexId(u as u32), VertexId(v as u32))
            .map_err(|source| ParseError::Graph { line: ln, source })?;
        found += 1;
    }
    if found != m {
        return Err(ParseError::EdgeCount { expected: m, found });
    }
    Ok(g)
}

/// Edge list of a graph whose live vertices are `0..n`; edges in id order.
pub fn serialize_edge_list(g: &Graph) -> String {
    let mut s = String::new();
    writeln!(s, "p {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for e in g.edges() {
        let (u, v) = g.endpoints(e);
        writeln!(s, "{} {}", u, v).unwrap();
    }
    s
}

/// Parsed embedding document, independent of any graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EmbeddingDocument {
    pub order: Vec<u32>,
    pub pages: Vec<(u32, u32, Page)>,
    pub cycle: Option<Vec<u32>>,
    pub aug: Vec<(u32, u32)>,
}

fn parse_list(line: usize, rest: &str) -> Result<Vec<u32>, ParseError> {
    rest.split_whitespace()
        .map(|t| t.parse::<u32>().map_err(|_| syntax(line, format!("bad vertex `{t}`"))))
        .collect()
}

impl EmbeddingDocument {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut doc = EmbeddingDocument::default();
        for (ln, l) in content_lines(text) {
            if let Some(rest) = l.strip_prefix("order:") {
                doc.order = parse_list(ln, rest)?;
            } else if let Some(rest) = l.strip_prefix("cycle:") {
                doc.cycle = Some(parse_list(ln, rest)?);
            } else if let Some(rest) = l.strip_prefix("aug:") {
                let v = parse_list(ln, rest)?;
                if v.len() != 2 {
                    return Err(syntax(ln, "aug needs two vertices"));
                }
                doc.aug.push((v[0], v[1]));
            } else if let Some(rest) = l.strip_prefix("page ") {
                let toks: Vec<&str> = rest.split_whitespace().collect();
                if toks.len() != 3 {
                    return Err(syntax(ln, "page line needs `<u> <v> <top|bottom>`"));
                }
                let u = parse_num(ln, Some(toks[0]), "endpoint")? as u32;
                let v = parse_num(ln, Some(toks[1]), "endpoint")? as u32;
                let p = match toks[2] {
                    "top" => Page::Top,
                    "bottom" => Page::Bottom,
                    other => return Err(syntax(ln, format!("bad page `{other}`"))),
                };
                doc.pages.push((u, v, p));
            } else {
                return Err(syntax(ln, format!("unrecognized line `{l}`")));
            }
        }
        Ok(doc)
    }

    pub fn serialize(&self) -> String {
        let mut s = String::new();
        let join = |v: &[u32]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        if !self.order.is_empty() || self.cycle.is_none() {
            writeln!(s, "order: {}", join(&self.order)).unwrap();
        }
        for &(u, v, p) in &self.pages {
            writeln!(s, "page {u} {v} {p}").unwrap();
        }
        if let Some(c) = &self.cycle {
            writeln!(s, "cycle: {}", join(c)).unwrap();
        }
        for &(u, v) in &self.aug {
            writeln!(s, "aug: {u} {v}").unwrap();
        }
        s
    }

    pub fn from_book(g: &Graph, be: &BookEmbedding) -> Self {
        let pages = g
            .edges()
            .filter_map(|e| {
                let (u, v) = g.endpoints(e);
                be.page(e).map(|p| (u.0, v.0, p))
            })
            .collect();
        EmbeddingDocument {
            order: be.order.iter().map(|v| v.0).collect(),
            pages,
            cycle: None,
            aug: Vec::new(),
        }
    }

    pub fn from_cycle(h: &SubhamCycle) -> Self {
        EmbeddingDocument {
            order: Vec::new(),
            pages: Vec::new(),
            cycle: Some(h.order.iter().map(|v| v.0).collect()),
            aug: h.augmentation.iter().map(|a| (a.u.0, a.v.0)).collect(),
        }
    }

    /// Resolves page lines against `g`; parallel copies are matched in edge-id order.
    pub fn to_book(&self, g: &Graph) -> Result<BookEmbedding, ParseError> {
        let mut be = BookEmbedding::new(self.order.iter().map(|&v| VertexId(v)).collect(), g.edge_bound());
        let mut taken = vec![false; g.edge_bound()];
        for &(u, v, p) in &self.pages {
            let (u, v) = (VertexId(u), VertexId(v));
            if !g.contains_vertex(u) || !g.contains_vertex(v) {
                return Err(ParseError::Mismatch(format!("no edge {u}-{v}")));
            }
            let mut copies: Vec<EdgeId> = g.edges_between(u, v);
            copies.sort_unstable();
            let e = copies
                .into_iter()
                .find(|e| !taken[e.idx()])
                .ok_or_else(|| ParseError::Mismatch(format!("no unused edge {u}-{v}")))?;
            taken[e.idx()] = true;
            be.set_page(e, p);
        }
        Ok(be)
    }

    pub fn to_cycle(&self, g: &Graph) -> Result<SubhamCycle, ParseError> {
        let c = self
            .cycle
            .as_ref()
            .ok_or_else(|| ParseError::Mismatch("no cycle line".into()))?;
        let mut h = SubhamCycle::from_order(g, c.iter().map(|&v| VertexId(v)).collect());
        // keep the document's own augmentation list so verification can compare it
        h.augmentation = self
            .aug
            .iter()
            .map(|&(u, v)| crate::subham::AugEdge {
                u: VertexId(u),
                v: VertexId(v),
                face: None,
            })
            .collect();
        Ok(h)
    }
}
