//! Checkers that share no code with the construction paths.

use std::fmt;

use crate::book::{BookEmbedding, Page};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::subham::SubhamCycle;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    MissingVertex(VertexId),
    RepeatedVertex(VertexId),
    UnknownVertex(VertexId),
    Unpaged(EdgeId),
    Crossing { page: Page, first: EdgeId, second: EdgeId },
    AugmentationMismatch { u: VertexId, v: VertexId },
    NonPlanarAugmentation { first: (VertexId, VertexId), second: (VertexId, VertexId), third: (VertexId, VertexId) },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingVertex(v) => write!(f, "vertex {v} missing"),
            Violation::RepeatedVertex(v) => write!(f, "vertex {v} repeated"),
            Violation::UnknownVertex(v) => write!(f, "vertex {v} not in graph"),
            Violation::Unpaged(e) => write!(f, "edge {e} has no page"),
            Violation::Crossing { page, first, second } => {
                write!(f, "edges {first} and {second} alternate on the {page} page")
            }
            Violation::AugmentationMismatch { u, v } => {
                write!(f, "augmentation list disagrees on pair {u}-{v}")
            }
            Violation::NonPlanarAugmentation { first, second, third } => write!(
                f,
                "chords {}-{}, {}-{}, {}-{} close an odd conflict cycle",
                first.0, first.1, second.0, second.1, third.0, third.1
            ),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pass() {
            return f.write_str("ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

fn check_permutation(g: &Graph, order: &[VertexId], out: &mut Vec<Violation>) -> Vec<usize> {
    let mut pos = vec![usize::MAX; g.vertex_bound()];
    for (i, &v) in order.iter().enumerate() {
        if !g.contains_vertex(v) {
            out.push(Violation::UnknownVertex(v));
        } else if pos[v.idx()] != usize::MAX {
            out.push(Violation::RepeatedVertex(v));
        } else {
            pos[v.idx()] = i;
        }
    }
    for v in g.vertices() {
        if pos[v.idx()] == usize::MAX {
            out.push(Violation::MissingVertex(v));
        }
    }
    pos
}

/// Spine is a permutation, every edge has a page, no two same-page edges alternate.
pub fn verify_book_embedding(g: &Graph, be: &BookEmbedding) -> VerificationReport {
    let mut violations = Vec::new();
    let pos = check_permutation(g, &be.order, &mut violations);
    if !violations.is_empty() {
        return VerificationReport { violations };
    }
    for page in [Page::Top, Page::Bottom] {
        let mut arcs: Vec<(usize, usize, EdgeId)> = Vec::new();
        for e in g.edges() {
            match be.page(e) {
                None if page == Page::Top => violations.push(Violation::Unpaged(e)),
                Some(p) if p == page => {
                    let (u, v) = g.endpoints(e);
                    let (a, b) = (pos[u.idx()], pos[v.idx()]);
                    arcs.push((a.min(b), a.max(b), e));
                }
                _ => {}
            }
        }
        arcs.sort_unstable();
        for i in 0..arcs.len() {
            let (a, b, e) = arcs[i];
            for &(c, d, f) in &arcs[i + 1..] {
                if c >= b {
                    break;
                }
                if a < c && c < b && b < d {
                    violations.push(Violation::Crossing { page, first: e, second: f });
                }
            }
        }
    }
    VerificationReport { violations }
}

/// Spanning check, augmentation bookkeeping check, then planarity of the graph
/// plus the cycle: chords two-colorable with respect to alternation along the cycle.
pub fn verify_subhamiltonian(g: &Graph, h: &SubhamCycle) -> VerificationReport {
    let mut violations = Vec::new();
    let pos = check_permutation(g, &h.order, &mut violations);
    if !violations.is_empty() {
        return VerificationReport { violations };
    }
    let n = h.order.len();
    let key = |u: VertexId, v: VertexId| (u.min(v), u.max(v));
    let mut expected: Vec<(VertexId, VertexId)> = Vec::new();
    if n >= 2 {
        for i in 0..n {
            let (u, v) = (h.order[i], h.order[(i + 1) % n]);
            if n == 2 && i == 1 {
                break;
            }
            if !g.has_edge(u, v) {
                expected.push(key(u, v));
            }
        }
    }
    expected.sort_unstable();
    expected.dedup();
    let mut listed: Vec<(VertexId, VertexId)> =
        h.augmentation.iter().map(|a| key(a.u, a.v)).collect();
    listed.sort_unstable();
    listed.dedup();
    for p in &expected {
        if listed.binary_search(p).is_err() {
            violations.push(Violation::AugmentationMismatch { u: p.0, v: p.1 });
        }
    }
    for p in &listed {
        if expected.binary_search(p).is_err() {
            violations.push(Violation::AugmentationMismatch { u: p.0, v: p.1 });
        }
    }
    let adjacent = |a: usize, b: usize| {
        let d = a.abs_diff(b);
        d == 1 || d + 1 == n
    };
    let mut chords: Vec<(usize, usize, VertexId, VertexId)> = Vec::new();
    for e in g.edges() {
        let (u, v) = g.endpoints(e);
        let (a, b) = (pos[u.idx()], pos[v.idx()]);
        if !adjacent(a, b) {
            chords.push((a.min(b), a.max(b), u, v));
        }
    }
    let k = chords.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); k];
    for i in 0..k {
        for j in i + 1..k {
            let (a, b, _, _) = chords[i];
            let (c, d, _, _) = chords[j];
            if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    let mut color = vec![u8::MAX; k];
    let mut parent = vec![usize::MAX; k];
    'outer: for s in 0..k {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        let mut queue = vec![s];
        let mut qi = 0;
        while qi < queue.len() {
            let x = queue[qi];
            qi += 1;
            for &y in &adj[x] {
                if color[y] == u8::MAX {
                    color[y] = 1 - color[x];
                    parent[y] = x;
                    queue.push(y);
                } else if color[y] == color[x] {
                    let pair = |i: usize| (chords[i].2, chords[i].3);
                    let third = if parent[x] != usize::MAX { parent[x] } else { parent[y] };
                    violations.push(Violation::NonPlanarAugmentation {
                        first: pair(x),
                        second: pair(y),
                        third: pair(if third == usize::MAX { x } else { third }),
                    });
                    break 'outer;
                }
            }
        }
    }
    VerificationReport { violations }
}
