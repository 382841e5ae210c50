//! Rotation systems, faces, planarity and connectivity.

mod chordless;
mod connectivity;
mod lr;
mod recompose;

pub use chordless::{chordless_outerface, outer_cycle_chords, ChordlessError};
pub use connectivity::{
    articulation_points, biconnected_split, connectivity_class, BlockPiece, ConnectivityClass,
};
pub use recompose::{recompose_book_embeddings, BlockCutTree, RecomposeError};

use thiserror::Error;

use crate::graph::{EdgeId, Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanarityError {
    #[error("graph is not planar")]
    NonPlanar,
}

/// A directed side of an edge: `2 * edge + 0` runs from the first endpoint,
/// `2 * edge + 1` from the second.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart(pub u32);

impl Dart {
    #[inline]
    pub fn new(g: &Graph, e: EdgeId, from: VertexId) -> Dart {
        let (a, _) = g.endpoints(e);
        Dart(2 * e.0 + u32::from(a != from))
    }

    #[inline]
    pub fn edge(self) -> EdgeId {
        EdgeId(self.0 >> 1)
    }

    #[inline]
    pub fn rev(self) -> Dart {
        Dart(self.0 ^ 1)
    }

    #[inline]
    pub fn tail(self, g: &Graph) -> VertexId {
        let (a, b) = g.endpoints(self.edge());
        if self.0 & 1 == 0 {
            a
        } else {
            b
        }
    }

    #[inline]
    pub fn head(self, g: &Graph) -> VertexId {
        self.rev().tail(g)
    }
}

/// Closed facial walk, face on the left of every dart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceWalk {
    pub darts: Vec<Dart>,
}

impl FaceWalk {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Tail vertices in walk order.
    pub fn vertices(&self, g: &Graph) -> Vec<VertexId> {
        self.darts.iter().map(|d| d.tail(g)).collect()
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.darts.iter().map(|d| d.edge())
    }
}

/// Counterclockwise cyclic edge order per vertex plus a designated outer face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarEmbedding {
    rot: Vec<Vec<EdgeId>>,
    /// Position of each edge in the rotation of its first and second endpoint.
    pos: Vec<[u32; 2]>,
    outer: Option<Dart>,
}

impl PlanarEmbedding {
    /// Wraps per-vertex counterclockwise edge lists; indices follow vertex ids.
    pub fn from_rotation(g: &Graph, rot: Vec<Vec<EdgeId>>) -> Self {
        let mut emb = PlanarEmbedding {
            rot,
            pos: Vec::new(),
            outer: None,
        };
        emb.rot.resize(g.vertex_bound(), Vec::new());
        emb.reindex(g);
        emb
    }

    fn reindex(&mut self, g: &Graph) {
        self.pos = vec![[u32::MAX; 2]; g.edge_bound()];
        for (v, list) in self.rot.iter().enumerate() {
            for (i, &e) in list.iter().enumerate() {
                let (a, _) = g.endpoints(e);
                let side = usize::from(a.idx() != v);
                self.pos[e.idx()][side] = i as u32;
            }
        }
    }

    #[inline]
    pub fn rotation(&self, v: VertexId) -> &[EdgeId] {
        &self.rot[v.idx()]
    }

    pub fn rotations(&self) -> &[Vec<EdgeId>] {
        &self.rot
    }

    /// Index of `e` inside the rotation at `v`.
    #[inline]
    pub fn position(&self, g: &Graph, v: VertexId, e: EdgeId) -> usize {
        let (a, _) = g.endpoints(e);
        self.pos[e.idx()][usize::from(a != v)] as usize
    }

    /// Edge after `e` counterclockwise around `v`.
    #[inline]
    pub fn ccw_next(&self, g: &Graph, v: VertexId, e: EdgeId) -> EdgeId {
        let r = &self.rot[v.idx()];
        r[(self.position(g, v, e) + 1) % r.len()]
    }

    /// Edge after `e` clockwise around `v`.
    #[inline]
    pub fn cw_next(&self, g: &Graph, v: VertexId, e: EdgeId) -> EdgeId {
        let r = &self.rot[v.idx()];
        r[(self.position(g, v, e) + r.len() - 1) % r.len()]
    }

    /// Successor of `d` along its face (face on the left).
    #[inline]
    pub fn face_next(&self, g: &Graph, d: Dart) -> Dart {
        let v = d.head(g);
        let e = self.cw_next(g, v, d.edge());
        Dart::new(g, e, v)
    }

    pub fn face_of(&self, g: &Graph, start: Dart) -> FaceWalk {
        let mut darts = vec![start];
        let mut d = self.face_next(g, start);
        while d != start {
            darts.push(d);
            d = self.face_next(g, d);
        }
        FaceWalk { darts }
    }

    /// All faces, each directed edge side consumed once, ordered by first dart.
    pub fn faces(&self, g: &Graph) -> Vec<FaceWalk> {
        let mut seen = vec![false; 2 * g.edge_bound()];
        let mut out = Vec::new();
        for e in g.edges() {
            for side in 0..2 {
                let d = Dart(2 * e.0 + side);
                if seen[d.0 as usize] {
                    continue;
                }
                let f = self.face_of(g, d);
                for x in &f.darts {
                    seen[x.0 as usize] = true;
                }
                out.push(f);
            }
        }
        out
    }

    /// Face index per dart, aligned with `faces`.
    pub fn dart_faces(&self, g: &Graph, faces: &[FaceWalk]) -> Vec<usize> {
        let mut out = vec![usize::MAX; 2 * g.edge_bound()];
        for (i, f) in faces.iter().enumerate() {
            for d in &f.darts {
                out[d.0 as usize] = i;
            }
        }
        out
    }

    pub fn outer_dart(&self) -> Option<Dart> {
        self.outer
    }

    pub fn set_outer(&mut self, d: Dart) {
        self.outer = Some(d);
    }

    pub fn outer_face(&self, g: &Graph) -> Option<FaceWalk> {
        self.outer.map(|d| self.face_of(g, d))
    }

    /// Euler's formula per connected component on the traced faces.
    pub fn euler_holds(&self, g: &Graph) -> bool {
        let faces = self.faces(g);
        let comps = g.components();
        let mut comp_of = vec![usize::MAX; g.vertex_bound()];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v.idx()] = i;
            }
        }
        let mut fcount = vec![0i64; comps.len()];
        for f in &faces {
            fcount[comp_of[f.darts[0].tail(g).idx()]] += 1;
        }
        let mut ecount = vec![0i64; comps.len()];
        for e in g.edges() {
            ecount[comp_of[g.endpoints(e).0.idx()]] += 1;
        }
        comps.iter().enumerate().all(|(i, c)| {
            ecount[i] == 0 || c.len() as i64 - ecount[i] + fcount[i] == 2
        })
    }

    /// Rotation consistency with `g`: every live edge listed exactly once at each endpoint.
    pub fn is_consistent(&self, g: &Graph) -> bool {
        let mut count = vec![0u8; g.edge_bound()];
        for v in g.vertices() {
            let r = &self.rot[v.idx()];
            if r.len() != g.degree(v) {
                return false;
            }
            for &e in r {
                if !g.contains_edge(e) {
                    return false;
                }
                let (a, b) = g.endpoints(e);
                if a != v && b != v {
                    return false;
                }
                count[e.idx()] += 1;
            }
        }
        g.edges().all(|e| count[e.idx()] == 2)
    }

    /// Mirror image: every rotation reversed.
    pub fn mirrored(&self, g: &Graph) -> PlanarEmbedding {
        let rot = self
            .rot
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        let mut m = PlanarEmbedding::from_rotation(g, rot);
        m.outer = self.outer.map(|d| d.rev());
        m
    }

    /// Inserts `e` at `v` directly counterclockwise after `after` (or as the only edge).
    pub fn insert_after(&mut self, g: &Graph, v: VertexId, after: Option<EdgeId>, e: EdgeId) {
        let idx = match after {
            Some(a) => self.position(g, v, a) + 1,
            None => self.rot[v.idx()].len(),
        };
        if self.rot.len() < g.vertex_bound() {
            self.rot.resize(g.vertex_bound(), Vec::new());
        }
        self.rot[v.idx()].insert(idx, e);
        self.reindex_vertex(g, v);
    }

    pub fn remove_edge(&mut self, g: &Graph, e: EdgeId) {
        let (a, b) = g.endpoints(e);
        for v in [a, b] {
            self.rot[v.idx()].retain(|&f| f != e);
            self.reindex_vertex(g, v);
        }
        if self.outer.map(|d| d.edge()) == Some(e) {
            self.outer = None;
        }
    }

    fn reindex_vertex(&mut self, g: &Graph, v: VertexId) {
        if self.pos.len() < g.edge_bound() {
            self.pos.resize(g.edge_bound(), [u32::MAX; 2]);
        }
        for (i, &e) in self.rot[v.idx()].iter().enumerate() {
            let (a, _) = g.endpoints(e);
            self.pos[e.idx()][usize::from(a != v)] = i as u32;
        }
    }
}

/// Planar embedding of `g` with rotations canonicalized by ascending neighbor id.
/// Parallel copies sit next to each other and bound an empty bigon.
pub fn planar_embed(g: &Graph) -> Result<PlanarEmbedding, PlanarityError> {
    let order = lr::lr_rotation(g).ok_or(PlanarityError::NonPlanar)?;
    let mut rot = vec![Vec::new(); g.vertex_bound()];
    for v in g.vertices() {
        for &w in &order[v.idx()] {
            let mut copies = g.edges_between(v, w);
            copies.sort_unstable();
            if v > w {
                copies.reverse();
            }
            rot[v.idx()].extend(copies);
        }
    }
    let mut emb = PlanarEmbedding::from_rotation(g, rot);
    if let Some(e) = g.edges().next() {
        // Default outer face: the face of the first dart.
        emb.outer = Some(Dart(2 * e.0));
    }
    Ok(emb)
}

pub fn is_planar(g: &Graph) -> bool {
    lr::lr_rotation(g).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn k4_has_four_triangles() {
        let g = k4();
        let e = planar_embed(&g).unwrap();
        let f = e.faces(&g);
        assert_eq!(f.len(), 4);
        assert!(f.iter().all(|w| w.len() == 3));
        assert!(e.euler_holds(&g));
    }

    #[test]
    fn k5_is_rejected() {
        let mut edges = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                edges.push((i, j));
            }
        }
        let g = Graph::build(5, &edges).unwrap();
        assert_eq!(planar_embed(&g), Err(PlanarityError::NonPlanar));
    }

    #[test]
    fn double_edge_bounds_bigon() {
        let g = Graph::build(3, &[(0, 1), (0, 1), (1, 2), (2, 0)]).unwrap();
        let e = planar_embed(&g).unwrap();
        assert!(e.euler_holds(&g));
        assert!(e.faces(&g).iter().any(|f| f.len() == 2));
    }
}
