use std::collections::HashSet;

use super::SubhamError;
use crate::graph::{Graph, VertexId};
use crate::planar::PlanarEmbedding;

/// Which component of `G - T` an operation refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    In,
    Out,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::In => Side::Out,
            Side::Out => Side::In,
        }
    }
}

/// Triangle `A, B, Γ` whose removal splits the graph, with one attachment per
/// triangle vertex on each side. The smaller side is called inside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatingTriangle {
    /// `[A, B, Γ]`, sorted by id.
    pub corners: [VertexId; 3],
    /// Inside neighbor of each corner (all equal when the inside is one vertex).
    pub inner: [VertexId; 3],
    /// Outside neighbor of each corner.
    pub outer: [VertexId; 3],
    pub inside: Vec<VertexId>,
    pub outside: Vec<VertexId>,
}

impl SeparatingTriangle {
    pub fn side(&self, s: Side) -> &[VertexId] {
        match s {
            Side::In => &self.inside,
            Side::Out => &self.outside,
        }
    }

    pub fn attachments(&self, s: Side) -> [VertexId; 3] {
        match s {
            Side::In => self.inner,
            Side::Out => self.outer,
        }
    }

    pub fn corner_index(&self, v: VertexId) -> Option<usize> {
        self.corners.iter().position(|&c| c == v)
    }
}

fn facial_triangles(g: &Graph, emb: &PlanarEmbedding) -> HashSet<[VertexId; 3]> {
    emb.faces(g)
        .iter()
        .filter(|f| f.len() == 3)
        .map(|f| {
            let mut t: Vec<VertexId> = f.vertices(g);
            t.sort_unstable();
            [t[0], t[1], t[2]]
        })
        .collect()
}

/// All 3-cycles of a simple graph as sorted triples.
pub fn triangles(g: &Graph) -> Vec<[VertexId; 3]> {
    let mut out = Vec::new();
    for u in g.vertices() {
        let nu = g.neighbors(u);
        for &v in nu.iter().filter(|&&v| v > u) {
            for &w in nu.iter().filter(|&&w| w > v) {
                if g.has_edge(v, w) {
                    out.push([u, v, w]);
                }
            }
        }
    }
    out.sort_unstable();
    out
}

fn components_without(g: &Graph, removed: &[VertexId; 3]) -> Vec<Vec<VertexId>> {
    let mut seen = vec![false; g.vertex_bound()];
    for r in removed {
        seen[r.idx()] = true;
    }
    let mut out = Vec::new();
    for s in g.vertices() {
        if seen[s.idx()] {
            continue;
        }
        seen[s.idx()] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            i += 1;
            for &(_, w) in g.incident(v) {
                if !seen[w.idx()] {
                    seen[w.idx()] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Non-facial triangles of a triconnected 4-planar graph, annotated with both sides.
pub fn find_separating_triangles(
    g: &Graph,
    emb: &PlanarEmbedding,
) -> Result<Vec<SeparatingTriangle>, SubhamError> {
    let facial = facial_triangles(g, emb);
    let mut out: Vec<SeparatingTriangle> = Vec::new();
    let mut used = vec![false; g.vertex_bound()];
    for t in triangles(g) {
        if facial.contains(&t) {
            continue;
        }
        let comps = components_without(g, &t);
        if comps.len() != 2 {
            return Err(SubhamError::Invariant(format!(
                "triangle {}-{}-{} leaves {} components",
                t[0],
                t[1],
                t[2],
                comps.len()
            )));
        }
        let (small, large) = if (comps[0].len(), comps[0][0]) <= (comps[1].len(), comps[1][0]) {
            (comps[0].clone(), comps[1].clone())
        } else {
            (comps[1].clone(), comps[0].clone())
        };
        let attach = |side: &[VertexId], c: VertexId| -> Result<VertexId, SubhamError> {
            let hits: Vec<VertexId> = g
                .neighbors(c)
                .into_iter()
                .filter(|w| side.binary_search(w).is_ok())
                .collect();
            if hits.len() != 1 || g.degree(c) != 4 {
                return Err(SubhamError::Invariant(format!(
                    "corner {c} needs degree 4 and one neighbor per side"
                )));
            }
            Ok(hits[0])
        };
        let mut inner = [t[0]; 3];
        let mut outer = [t[0]; 3];
        for i in 0..3 {
            inner[i] = attach(&small, t[i])?;
            outer[i] = attach(&large, t[i])?;
        }
        for c in t {
            if used[c.idx()] {
                return Err(SubhamError::TriangleOverlap(c));
            }
            used[c.idx()] = true;
        }
        out.push(SeparatingTriangle {
            corners: t,
            inner,
            outer,
            inside: small,
            outside: large,
        });
    }
    Ok(out)
}

/// Keeps side `keep`, drops the other side, and replaces the triangle by a dummy
/// adjacent to the kept side's three attachments.
pub fn replace_triangle(
    g: &Graph,
    t: &SeparatingTriangle,
    keep: Side,
) -> Result<(Graph, VertexId), SubhamError> {
    if t.side(keep).len() == 1 {
        return Err(SubhamError::Degenerate);
    }
    let mut h = g.clone();
    for &v in t.side(keep.other()) {
        h.remove_vertex(v);
    }
    for &c in &t.corners {
        h.remove_vertex(c);
    }
    let dummy = h.add_vertex();
    for a in t.attachments(keep) {
        h.add_edge(dummy, a).map_err(|e| SubhamError::Invariant(e.to_string()))?;
    }
    Ok((h, dummy))
}

/// The kept side together with the triangle.
pub fn side_with_triangle(g: &Graph, t: &SeparatingTriangle, keep: Side) -> Graph {
    let mut h = g.clone();
    for &v in t.side(keep.other()) {
        h.remove_vertex(v);
    }
    h
}
