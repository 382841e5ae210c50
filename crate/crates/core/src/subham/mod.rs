//! Subhamiltonian cycles for triconnected 4-planar graphs.
//!
//! Separating triangles are peeled off one at a time: the side of an innermost
//! triangle is solved by stellation with full freedom over which two triangle
//! edges the cycle uses, the rest is solved recursively with the triangle
//! shrunk to a dummy vertex, and the two cycles are merged across the triangle.

mod faces;
mod hamilton;
mod merge;
mod reroute;
mod triangles;

use thiserror::Error;

pub use faces::FaceIndex;
pub use hamilton::{subham_no_triangles, Backtracking, HamiltonianBackend};
pub use merge::merge_cycles;
pub use reroute::{
    classify, reroute_options, reroute_through_triangle, DummySite, Reroute, RerouteCase, RerouteOptions, TrianglePair,
};
pub use triangles::{
    find_separating_triangles, replace_triangle, side_with_triangle, triangles, SeparatingTriangle, Side,
};

use crate::graph::{Graph, VertexId};
use crate::planar::{connectivity_class, planar_embed, ConnectivityClass};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubhamError {
    #[error("graph is not planar")]
    NotPlanar,
    #[error("graph has a vertex of degree {0}, above 4")]
    DegreeTooHigh(usize),
    #[error("graph has parallel edges")]
    NotSimple,
    #[error("graph is not triconnected")]
    NotTriconnected,
    #[error("separating triangles overlap at vertex {0}")]
    TriangleOverlap(VertexId),
    #[error("kept side is a single vertex")]
    Degenerate,
    #[error("hamiltonian backend found no cycle")]
    BackendFailed,
    #[error("merge hypothesis violated: {0}")]
    MergeHypothesis(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

/// A cycle pair that is not an edge of the graph, with the face it runs through.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AugEdge {
    pub u: VertexId,
    pub v: VertexId,
    pub face: Option<usize>,
}

/// Cyclic vertex order; consecutive pairs missing from the graph are augmentation edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubhamCycle {
    pub order: Vec<VertexId>,
    pub augmentation: Vec<AugEdge>,
    /// Augmentation edges per face of the graph's default embedding; empty
    /// until faces are assigned.
    pub crossings: Vec<u32>,
}

impl SubhamCycle {
    pub fn from_order(g: &Graph, order: Vec<VertexId>) -> Self {
        let n = order.len();
        let mut augmentation = Vec::new();
        if n >= 2 {
            let pairs = if n == 2 { 1 } else { n };
            for i in 0..pairs {
                let (u, v) = (order[i], order[(i + 1) % n]);
                if !g.has_edge(u, v) {
                    augmentation.push(AugEdge { u, v, face: None });
                }
            }
        }
        SubhamCycle { order, augmentation, crossings: Vec::new() }
    }

    pub fn crosses_faces_at_most_once(&self) -> bool {
        self.crossings.iter().all(|&c| c <= 1)
    }

    /// Sorted triangle edges that appear as consecutive pairs.
    pub fn triangle_edges(&self, corners: [VertexId; 3]) -> Vec<(VertexId, VertexId)> {
        let n = self.order.len();
        let mut out: Vec<(VertexId, VertexId)> = (0..n)
            .map(|i| (self.order[i], self.order[(i + 1) % n]))
            .filter(|(u, v)| corners.contains(u) && corners.contains(v))
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

pub fn check_preconditions(g: &Graph) -> Result<(), SubhamError> {
    if !g.is_simple() {
        return Err(SubhamError::NotSimple);
    }
    let d = g.max_degree();
    if d > 4 {
        return Err(SubhamError::DegreeTooHigh(d));
    }
    if planar_embed(g).is_err() {
        return Err(SubhamError::NotPlanar);
    }
    if connectivity_class(g) != ConnectivityClass::ThreeOrMore {
        return Err(SubhamError::NotTriconnected);
    }
    Ok(())
}

/// Subhamiltonian cycle of a triconnected 4-planar graph, with augmentation
/// edges assigned to faces and checked for planarity.
pub fn subham_triconnected(g: &Graph) -> Result<SubhamCycle, SubhamError> {
    subham_triconnected_with(g, &Backtracking::default())
}

pub fn subham_triconnected_with(g: &Graph, backend: &dyn HamiltonianBackend) -> Result<SubhamCycle, SubhamError> {
    check_preconditions(g)?;
    let mut h = solve(g, backend)?;
    let emb = planar_embed(g).map_err(|_| SubhamError::NotPlanar)?;
    let faces = FaceIndex::new(g, &emb);
    faces
        .locate(&mut h.augmentation)
        .map_err(|(u, v)| SubhamError::Invariant(format!("augmentation {u}-{v} shares no face")))?;
    if !faces.chords_planar(&h.augmentation) {
        return Err(SubhamError::Invariant("augmentation edges cross inside a face".into()));
    }
    h.crossings = faces.crossings(&h.augmentation);
    Ok(h)
}

/// Cycle of the triangle plus a single vertex `x` joined to all corners,
/// using the two triangle edges at `apex`.
fn k4_cycle(g: &Graph, corners: [VertexId; 3], x: VertexId, apex: VertexId) -> SubhamCycle {
    let o: Vec<VertexId> = corners.into_iter().filter(|&c| c != apex).collect();
    SubhamCycle::from_order(g, vec![o[0], apex, o[1], x])
}

/// Picks a triangle and one of its sides containing no other triangle.
fn innermost(tris: &[SeparatingTriangle]) -> (usize, Side) {
    let mut corner_of = std::collections::HashSet::new();
    for t in tris {
        corner_of.extend(t.corners);
    }
    for (i, t) in tris.iter().enumerate() {
        for s in [Side::In, Side::Out] {
            if t.side(s).iter().all(|v| !corner_of.contains(v)) {
                return (i, s);
            }
        }
    }
    unreachable!("nested vertex-disjoint triangles always have an innermost one")
}

fn solve(g: &Graph, backend: &dyn HamiltonianBackend) -> Result<SubhamCycle, SubhamError> {
    let emb = planar_embed(g).map_err(|_| SubhamError::NotPlanar)?;
    let tris = find_separating_triangles(g, &emb)?;
    if tris.is_empty() {
        return subham_no_triangles(g, &emb, backend);
    }
    let (ti, free_side) = innermost(&tris);
    let t = &tris[ti];
    let rest = free_side.other();
    let corners = t.corners;

    // remaining side: any cycle, so each apex it can reach is an option
    let g_rest = side_with_triangle(g, t, rest);
    let rest_opts: Vec<(VertexId, SubhamCycle)> = if t.side(rest).len() == 1 {
        let x = t.side(rest)[0];
        corners.iter().map(|&a| (a, k4_cycle(&g_rest, corners, x, a))).collect()
    } else {
        let (gd, dummy) = replace_triangle(g, t, rest)?;
        let hd = solve(&gd, backend)?;
        let o = reroute_options(&gd, &g_rest, &hd, &DummySite { dummy, corners })?;
        o.best.into_iter().map(|(p, c)| (p.apex, c)).collect()
    };

    // triangle-free side: every apex is reachable
    let g_free = side_with_triangle(g, t, free_side);
    let free_opts: Vec<(VertexId, SubhamCycle)> = if t.side(free_side).len() == 1 {
        let x = t.side(free_side)[0];
        corners.iter().map(|&a| (a, k4_cycle(&g_free, corners, x, a))).collect()
    } else {
        let (gd, dummy) = replace_triangle(g, t, free_side)?;
        let emb_d = planar_embed(&gd).map_err(|_| SubhamError::NotPlanar)?;
        let hd = subham_no_triangles(&gd, &emb_d, backend)?;
        let o = reroute_options(&gd, &g_free, &hd, &DummySite { dummy, corners })?;
        if !o.free_choice || o.best.len() != 3 {
            return Err(SubhamError::Invariant(format!(
                "free choice refused at triangle {}-{}-{} ({})",
                corners[0], corners[1], corners[2], o.case
            )));
        }
        o.best.into_iter().map(|(p, c)| (p.apex, c)).collect()
    };

    // distinct apexes y (rest) and x (free) share exactly the edge (x, y)
    let mut best: Option<(usize, &SubhamCycle, &SubhamCycle)> = None;
    for (y, hr) in &rest_opts {
        for (x, hf) in &free_opts {
            let cost = hr.augmentation.len() + hf.augmentation.len();
            if x != y && best.map_or(true, |(c, _, _)| cost < c) {
                best = Some((cost, hf, hr));
            }
        }
    }
    let (_, h_free, h_rest) = best.ok_or_else(|| SubhamError::Invariant("no apex reachable on the remaining side".into()))?;
    merge_cycles(g, h_free, h_rest, corners)
}
