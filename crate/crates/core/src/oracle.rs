//! Exhaustive ground-truth searches for small graphs.

use thiserror::Error;

use crate::book::{BookEmbedding, Page};
use crate::graph::{EdgeId, Graph, VertexId};

pub const DEFAULT_N_CAP: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices, above the oracle cap {cap}")]
    TooLarge { n: usize, cap: usize },
}

fn interleave(a: (usize, usize), b: (usize, usize)) -> bool {
    let (a0, a1) = (a.0.min(a.1), a.0.max(a.1));
    let (b0, b1) = (b.0.min(b.1), b.0.max(b.1));
    (a0 < b0 && b0 < a1 && a1 < b1) || (b0 < a0 && a0 < b1 && b1 < a1)
}

/// Two-coloring of the alternation graph of spine spans, if one exists.
pub(crate) fn two_color(spans: &[(usize, usize)]) -> Option<Vec<u8>> {
    let m = spans.len();
    let mut color = vec![u8::MAX; m];
    for s in 0..m {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for y in 0..m {
                if y == x || !interleave(spans[x], spans[y]) {
                    continue;
                }
                if color[y] == u8::MAX {
                    color[y] = 1 - color[x];
                    stack.push(y);
                } else if color[y] == color[x] {
                    return None;
                }
            }
        }
    }
    Some(color)
}

fn next_permutation(p: &mut [VertexId]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Searches circular spine orders (first vertex pinned, mirror images skipped) in
/// lexicographic order; the first order whose alternation graph is bipartite wins.
pub fn oracle_two_page(g: &Graph, n_cap: usize) -> Result<Option<BookEmbedding>, OracleError> {
    let n = g.vertex_count();
    if n > n_cap {
        return Err(OracleError::TooLarge { n, cap: n_cap });
    }
    let vs: Vec<VertexId> = g.vertices().collect();
    if vs.is_empty() {
        return Ok(Some(BookEmbedding::new(Vec::new(), g.edge_bound())));
    }
    let first = vs[0];
    let mut rest: Vec<VertexId> = vs[1..].to_vec();
    let mut pos = vec![0usize; g.vertex_bound()];
    loop {
        let mirrored_dup = rest.len() >= 2 && rest[0] > rest[rest.len() - 1];
        if !mirrored_dup {
            pos[first.idx()] = 0;
            for (i, &v) in rest.iter().enumerate() {
                pos[v.idx()] = i + 1;
            }
            let edges: Vec<(EdgeId, usize, usize)> = g
                .edges()
                .map(|e| {
                    let (u, v) = g.endpoints(e);
                    (e, pos[u.idx()], pos[v.idx()])
                })
                .collect();
            let spans: Vec<(usize, usize)> = edges.iter().map(|&(_, a, b)| (a, b)).collect();
            if let Some(color) = two_color(&spans) {
                let mut order = vec![first];
                order.extend(rest.iter().copied());
                let mut be = BookEmbedding::new(order, g.edge_bound());
                for (i, &(e, _, _)) in edges.iter().enumerate() {
                    be.set_page(e, if color[i] == 0 { Page::Top } else { Page::Bottom });
                }
                return Ok(Some(be));
            }
        }
        if !next_permutation(&mut rest) {
            return Ok(None);
        }
    }
}

/// Direct search over all page assignments for a fixed order; exponential in m.
pub fn exhaustive_page_assignment(g: &Graph, order: &[VertexId]) -> Option<BookEmbedding> {
    let mut pos = vec![0usize; g.vertex_bound()];
    for (i, &v) in order.iter().enumerate() {
        pos[v.idx()] = i;
    }
    let edges: Vec<EdgeId> = g.edges().collect();
    let m = edges.len();
    assert!(m <= 24, "exhaustive assignment limited to 24 edges");
    let span = |e: EdgeId| {
        let (u, v) = g.endpoints(e);
        (pos[u.idx()], pos[v.idx()])
    };
    for mask in 0u32..(1u32 << m) {
        let ok = (0..m).all(|i| {
            (i + 1..m).all(|j| (mask >> i & 1) != (mask >> j & 1) || !interleave(span(edges[i]), span(edges[j])))
        });
        if ok {
            let mut be = BookEmbedding::new(order.to_vec(), g.edge_bound());
            for (i, &e) in edges.iter().enumerate() {
                be.set_page(e, if mask >> i & 1 == 0 { Page::Top } else { Page::Bottom });
            }
            return Some(be);
        }
    }
    None
}

fn connected_without(g: &Graph, removed: &[VertexId]) -> bool {
    let alive: Vec<VertexId> = g.vertices().filter(|v| !removed.contains(v)).collect();
    let Some(&s) = alive.first() else {
        return true;
    };
    let mut seen = vec![false; g.vertex_bound()];
    for &r in removed {
        seen[r.idx()] = true;
    }
    seen[s.idx()] = true;
    let mut stack = vec![s];
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &(_, w) in g.incident(v) {
            if !seen[w.idx()] {
                seen[w.idx()] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == alive.len()
}

/// Every 3-cycle whose removal disconnects the rest, as sorted triples.
pub fn oracle_separating_triangles(g: &Graph) -> Vec<[VertexId; 3]> {
    let vs: Vec<VertexId> = g.vertices().collect();
    let mut out = Vec::new();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if !g.has_edge(vs[i], vs[j]) {
                continue;
            }
            for k in j + 1..vs.len() {
                let t = [vs[i], vs[j], vs[k]];
                if g.has_edge(vs[j], vs[k]) && g.has_edge(vs[i], vs[k]) && !connected_without(g, &t) {
                    out.push(t);
                }
            }
        }
    }
    out
}

/// First hamiltonian cycle found by backtracking from the smallest vertex with
/// neighbors tried in ascending order.
pub fn oracle_hamiltonian(g: &Graph) -> Option<Vec<VertexId>> {
    let vs: Vec<VertexId> = g.vertices().collect();
    let n = vs.len();
    if n == 0 {
        return None;
    }
    if n == 1 {
        return Some(vs);
    }
    let nbrs: Vec<Vec<VertexId>> = (0..g.vertex_bound())
        .map(|i| {
            let v = VertexId(i as u32);
            if !g.contains_vertex(v) {
                return Vec::new();
            }
            let mut nb = g.neighbors(v);
            nb.sort_unstable();
            nb
        })
        .collect();
    let start = vs[0];
    if n == 2 {
        return (g.multiplicity(vs[0], vs[1]) >= 2).then_some(vs);
    }
    let mut path = vec![start];
    let mut used = vec![false; g.vertex_bound()];
    used[start.idx()] = true;
    fn rec(
        path: &mut Vec<VertexId>,
        used: &mut [bool],
        nbrs: &[Vec<VertexId>],
        n: usize,
        g: &Graph,
    ) -> bool {
        let v = *path.last().unwrap();
        if path.len() == n {
            return g.has_edge(v, path[0]);
        }
        for &w in &nbrs[v.idx()] {
            if used[w.idx()] {
                continue;
            }
            used[w.idx()] = true;
            path.push(w);
            if rec(path, used, nbrs, n, g) {
                return true;
            }
            path.pop();
            used[w.idx()] = false;
        }
        false
    }
    rec(&mut path, &mut used, &nbrs, n, g).then_some(path)
}
