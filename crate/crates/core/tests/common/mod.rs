#![allow(dead_code)]

use quadbook::planar::planar_embed;
use quadbook::subham::*;
use quadbook::{verify_subhamiltonian, Graph, VertexId};

pub fn v(i: u32) -> VertexId {
    VertexId(i)
}

/// Dummy 0 on a 9-cycle 1..9 at 1, 4, 7, so its three faces are pentagons;
/// three outer vertices close the ring. The triangle version swaps 0 for
/// corners 13, 14, 15 attached at 1, 4, 7.
pub fn rosette() -> (Graph, Graph, DummySite) {
    let mut ring = Vec::new();
    for i in 1..=9 {
        ring.push((i, i % 9 + 1));
    }
    ring.extend([(10, 2), (10, 3), (11, 5), (11, 6), (12, 8), (12, 9), (10, 11), (11, 12), (12, 10)]);
    let mut d = ring.clone();
    d.extend([(0, 1), (0, 4), (0, 7)]);
    let gd = Graph::build(13, &d).unwrap();
    let mut x = ring;
    x.extend([(13, 14), (14, 15), (15, 13), (13, 1), (14, 4), (15, 7)]);
    let mut gx = Graph::build(16, &x).unwrap();
    gx.remove_vertex(v(0));
    (gd, gx, DummySite { dummy: v(0), corners: [v(13), v(14), v(15)] })
}

/// Subhamiltonian cycles of `g` of the form `dummy, succ, ..., pred`, at most `limit`.
pub fn cycles_through(g: &Graph, dummy: VertexId, succ: VertexId, pred: VertexId, limit: usize) -> Vec<SubhamCycle> {
    let emb = planar_embed(g).unwrap();
    let faces = FaceIndex::new(g, &emb);
    let n = g.vertex_count();
    let cofacial = |a: VertexId, b: VertexId| a != b && (g.has_edge(a, b) || faces.host_face(a, b).is_some());
    let mut out = Vec::new();
    let mut path = vec![dummy, succ];
    let mut used = vec![false; g.vertex_bound()];
    used[dummy.idx()] = true;
    used[succ.idx()] = true;
    used[pred.idx()] = true;
    fn rec(
        g: &Graph,
        faces: &FaceIndex,
        cofacial: &dyn Fn(VertexId, VertexId) -> bool,
        path: &mut Vec<VertexId>,
        used: &mut Vec<bool>,
        pred: VertexId,
        n: usize,
        limit: usize,
        out: &mut Vec<SubhamCycle>,
    ) {
        if out.len() >= limit {
            return;
        }
        let last = *path.last().unwrap();
        if path.len() == n - 1 {
            if cofacial(last, pred) {
                path.push(pred);
                let mut h = SubhamCycle::from_order(g, path.clone());
                if faces.locate(&mut h.augmentation).is_ok() && faces.chords_planar(&h.augmentation) {
                    h.crossings = faces.crossings(&h.augmentation);
                    out.push(h);
                }
                path.pop();
            }
            return;
        }
        let cands: Vec<VertexId> = g.vertices().filter(|&w| !used[w.idx()] && cofacial(last, w)).collect();
        for w in cands {
            used[w.idx()] = true;
            path.push(w);
            rec(g, faces, cofacial, path, used, pred, n, limit, out);
            path.pop();
            used[w.idx()] = false;
        }
    }
    if succ == pred || !cofacial(dummy, succ) || !cofacial(dummy, pred) {
        return out;
    }
    rec(g, &faces, &cofacial, &mut path, &mut used, pred, n, limit, &mut out);
    out
}

/// Result of rerouting one input cycle with one requested pair.
pub struct Trial {
    pub case: RerouteCase,
    pub free_choice: bool,
    pub requested: TrianglePair,
    pub result: Reroute,
    pub input_aug: usize,
    /// Triangle corner attached to the cycle's predecessor and successor of the dummy.
    pub pred_corner: Option<VertexId>,
    pub succ_corner: Option<VertexId>,
    /// Corner whose attachment is off the face used by both neighbors (same-face case).
    pub far_corner: Option<VertexId>,
}

impl Trial {
    /// Spanning, exactly the achieved two triangle edges, planar augmentation.
    pub fn sound(&self, gx: &Graph, corners: [VertexId; 3]) -> bool {
        let h = &self.result.cycle;
        let te = h.triangle_edges(corners);
        let mut want: Vec<(VertexId, VertexId)> =
            self.result.achieved.edges(corners).iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        want.sort_unstable();
        te == want && verify_subhamiltonian(gx, h).pass()
    }
}

pub fn rosette_trials(per_pair: usize) -> Vec<Trial> {
    let (gd, gx, site) = rosette();
    let emb = planar_embed(&gd).unwrap();
    let faces = FaceIndex::new(&gd, &emb);
    let attach = [v(1), v(4), v(7)];
    let corner_of = |x: VertexId| attach.iter().position(|&a| a == x).map(|i| site.corners[i]);
    let mut out = Vec::new();
    let others: Vec<VertexId> = gd.vertices().filter(|&w| w != site.dummy).collect();
    for &s in &others {
        for &p in &others {
            for h in cycles_through(&gd, site.dummy, s, p, per_pair) {
                let far_corner = match (faces.host_face(site.dummy, p), faces.host_face(site.dummy, s)) {
                    (Some(fp), Some(fs)) if fp == fs && !gd.has_edge(site.dummy, p) && !gd.has_edge(site.dummy, s) => {
                        (0..3).find(|&i| !faces.contains(fp, attach[i])).map(|i| site.corners[i])
                    }
                    _ => None,
                };
                for apex in site.corners {
                    let requested = TrianglePair { apex };
                    let r = reroute_through_triangle(&gd, &gx, &h, &site, Some(requested)).unwrap();
                    out.push(Trial {
                        case: r.case,
                        free_choice: r.free_choice,
                        requested,
                        input_aug: h.augmentation.len(),
                        pred_corner: corner_of(p),
                        succ_corner: corner_of(s),
                        far_corner,
                        result: r,
                    });
                }
            }
        }
    }
    out
}

/// Connected planar graphs with maximum degree 4 on 1..=n vertices.
pub fn corpus(n: usize) -> Vec<Graph> {
    quadbook::io::gen::enumerate_levels(n).unwrap().into_iter().flatten().collect()
}

/// Bridges by deleting each edge and counting components.
pub fn bridges_by_removal(g: &Graph) -> Vec<quadbook::EdgeId> {
    let base = g.components().len();
    let mut out: Vec<quadbook::EdgeId> = g
        .edges()
        .filter(|&e| {
            let mut h = g.clone();
            h.remove_edge(e);
            h.components().len() > base
        })
        .collect();
    out.sort_unstable();
    out
}
