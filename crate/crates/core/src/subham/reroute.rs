use std::fmt;

use super::faces::FaceIndex;
use super::{SubhamCycle, SubhamError};
use crate::graph::{Graph, VertexId};
use crate::planar::planar_embed;

/// Two edges of a triangle, identified by the corner they share.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TrianglePair {
    pub apex: VertexId,
}

impl TrianglePair {
    /// The pair `{(x, y), (y, z)}` as given by its two edges.
    pub fn from_edges(e1: (VertexId, VertexId), e2: (VertexId, VertexId)) -> Option<Self> {
        let key = |e: (VertexId, VertexId)| (e.0.min(e.1), e.0.max(e.1));
        if key(e1) == key(e2) {
            return None;
        }
        let apex = [e1.0, e1.1].into_iter().find(|&v| v == e2.0 || v == e2.1)?;
        Some(TrianglePair { apex })
    }

    pub fn edges(self, corners: [VertexId; 3]) -> [(VertexId, VertexId); 2] {
        let o: Vec<VertexId> = corners.into_iter().filter(|&c| c != self.apex).collect();
        [(o[0], self.apex), (self.apex, o[1])]
    }
}

/// A dummy vertex and the triangle it stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DummySite {
    pub dummy: VertexId,
    pub corners: [VertexId; 3],
}

/// How the cycle meets the dummy: through edges or through faces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RerouteCase {
    /// Predecessor and successor both adjacent to the dummy.
    EdgeEdge,
    /// One neighbor through a face that the edge neighbor also bounds.
    EdgeFaceNear,
    /// One neighbor through the face opposite the edge neighbor.
    EdgeFaceFar,
    /// Both through faces, distinct ones.
    FaceFaceDistinct,
    /// Both through the same face.
    FaceFaceSame,
}

impl fmt::Display for RerouteCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RerouteCase::EdgeEdge => "case 1",
            RerouteCase::EdgeFaceNear => "case 2(i)",
            RerouteCase::EdgeFaceFar => "case 2(ii)",
            RerouteCase::FaceFaceDistinct => "case 3(i)",
            RerouteCase::FaceFaceSame => "case 3(ii)",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct Reroute {
    pub cycle: SubhamCycle,
    pub achieved: TrianglePair,
    pub case: RerouteCase,
    /// Requested pair that had to be replaced by `achieved`.
    pub substituted: Option<TrianglePair>,
    /// The input crossed every face of the dummy graph at most once.
    pub free_choice: bool,
}

/// Classifies how `pred, dummy, succ` meet, from the faces around the dummy.
pub fn classify(
    gd: &Graph,
    faces: &FaceIndex,
    dummy: VertexId,
    pred: VertexId,
    succ: VertexId,
) -> Result<RerouteCase, SubhamError> {
    let face_to = |x: VertexId| {
        faces
            .host_face(dummy, x)
            .ok_or_else(|| SubhamError::Invariant(format!("{x} shares no face with the dummy")))
    };
    let (ap, as_) = (gd.has_edge(dummy, pred), gd.has_edge(dummy, succ));
    Ok(match (ap, as_) {
        (true, true) => RerouteCase::EdgeEdge,
        (true, false) | (false, true) => {
            let (near, far) = if ap { (pred, succ) } else { (succ, pred) };
            if faces.contains(face_to(far)?, near) {
                RerouteCase::EdgeFaceNear
            } else {
                RerouteCase::EdgeFaceFar
            }
        }
        (false, false) => {
            if face_to(pred)? == face_to(succ)? {
                RerouteCase::FaceFaceSame
            } else {
                RerouteCase::FaceFaceDistinct
            }
        }
    })
}

/// Every corner order that keeps the augmentation planar, best one per apex.
#[derive(Clone, Debug)]
pub struct RerouteOptions {
    pub case: RerouteCase,
    pub free_choice: bool,
    /// `(apex, cycle)` sorted by apex, cycle with the fewest augmentation edges.
    pub best: Vec<(TrianglePair, SubhamCycle)>,
}

impl RerouteOptions {
    pub fn for_apex(&self, apex: VertexId) -> Option<&SubhamCycle> {
        self.best.iter().find(|(p, _)| p.apex == apex).map(|(_, c)| c)
    }
}

/// Tries all six ways to replace the dummy of `h` (a cycle of `gd`) by the
/// three corners, giving cycles of `gx` (kept side plus triangle) that each
/// use exactly two triangle edges. A candidate is kept when its augmentation
/// edges lie in faces of `gx` without crossing each other.
pub fn reroute_options(gd: &Graph, gx: &Graph, h: &SubhamCycle, site: &DummySite) -> Result<RerouteOptions, SubhamError> {
    let dummy = site.dummy;
    let n = h.order.len();
    let at = h
        .order
        .iter()
        .position(|&v| v == dummy)
        .ok_or_else(|| SubhamError::Invariant(format!("dummy {dummy} not on cycle")))?;
    let pred = h.order[(at + n - 1) % n];
    let succ = h.order[(at + 1) % n];
    let emb_d = planar_embed(gd).map_err(|_| SubhamError::NotPlanar)?;
    let fd = FaceIndex::new(gd, &emb_d);
    let case = classify(gd, &fd, dummy, pred, succ)?;
    let mut aug_d = h.augmentation.clone();
    fd.locate(&mut aug_d)
        .map_err(|(u, v)| SubhamError::Invariant(format!("pair {u}-{v} shares no face")))?;
    let free_choice = fd.crossings(&aug_d).iter().all(|&c| c <= 1);

    let emb_x = planar_embed(gx).map_err(|_| SubhamError::NotPlanar)?;
    let fx = FaceIndex::new(gx, &emb_x);
    let c = site.corners;
    let orders: [[usize; 3]; 6] = [[1, 0, 2], [2, 0, 1], [0, 1, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0]];
    let mut best: Vec<(TrianglePair, SubhamCycle)> = Vec::new();
    for o in orders {
        let seq = [c[o[0]], c[o[1]], c[o[2]]];
        let mut order = Vec::with_capacity(n + 2);
        order.extend_from_slice(&h.order[..at]);
        order.extend_from_slice(&seq);
        order.extend_from_slice(&h.order[at + 1..]);
        let mut cand = SubhamCycle::from_order(gx, order);
        if fx.locate(&mut cand.augmentation).is_err() || !fx.chords_planar(&cand.augmentation) {
            continue;
        }
        cand.crossings = fx.crossings(&cand.augmentation);
        let pair = TrianglePair { apex: seq[1] };
        match best.iter_mut().find(|(p, _)| *p == pair) {
            Some(slot) if slot.1.augmentation.len() > cand.augmentation.len() => slot.1 = cand,
            Some(_) => {}
            None => best.push((pair, cand)),
        }
    }
    best.sort_by_key(|(p, _)| p.apex);
    Ok(RerouteOptions { case, free_choice, best })
}

/// Reroutes with the requested pair when some planar order achieves it,
/// otherwise with the fewest-augmentation order, reporting the substitution.
pub fn reroute_through_triangle(
    gd: &Graph,
    gx: &Graph,
    h: &SubhamCycle,
    site: &DummySite,
    requested: Option<TrianglePair>,
) -> Result<Reroute, SubhamError> {
    let opts = reroute_options(gd, gx, h, site)?;
    let fewest = || {
        opts.best
            .iter()
            .min_by_key(|(_, c)| c.augmentation.len())
            .cloned()
            .ok_or_else(|| SubhamError::Invariant("no corner order keeps planarity".into()))
    };
    let ((achieved, cycle), substituted) = match requested {
        Some(r) => match opts.for_apex(r.apex) {
            Some(c) => ((r, c.clone()), None),
            None => (fewest()?, Some(r)),
        },
        None => (fewest()?, None),
    };
    Ok(Reroute {
        cycle,
        achieved,
        case: opts.case,
        substituted,
        free_choice: opts.free_choice,
    })
}
