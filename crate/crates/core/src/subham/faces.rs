use super::AugEdge;
use crate::graph::{Graph, VertexId};
use crate::planar::PlanarEmbedding;

/// Face boundaries of a fixed embedding, indexed for chord lookups.
#[derive(Clone, Debug)]
pub struct FaceIndex {
    boundary: Vec<Vec<VertexId>>,
    /// Faces incident to each vertex.
    at: Vec<Vec<usize>>,
}

impl FaceIndex {
    pub fn new(g: &Graph, emb: &PlanarEmbedding) -> Self {
        let boundary: Vec<Vec<VertexId>> = emb.faces(g).iter().map(|f| f.vertices(g)).collect();
        let mut at = vec![Vec::new(); g.vertex_bound()];
        for (i, b) in boundary.iter().enumerate() {
            for &v in b {
                if at[v.idx()].last() != Some(&i) {
                    at[v.idx()].push(i);
                }
            }
        }
        for a in &mut at {
            a.sort_unstable();
            a.dedup();
        }
        FaceIndex { boundary, at }
    }

    pub fn face_count(&self) -> usize {
        self.boundary.len()
    }

    pub fn boundary(&self, f: usize) -> &[VertexId] {
        &self.boundary[f]
    }

    pub fn faces_at(&self, v: VertexId) -> &[usize] {
        &self.at[v.idx()]
    }

    /// First face containing both vertices; unique for non-adjacent pairs of a
    /// triconnected graph.
    pub fn host_face(&self, u: VertexId, v: VertexId) -> Option<usize> {
        let fv = &self.at[v.idx()];
        self.at[u.idx()].iter().copied().find(|f| fv.binary_search(f).is_ok())
    }

    pub fn contains(&self, f: usize, v: VertexId) -> bool {
        self.at[v.idx()].binary_search(&f).is_ok()
    }

    /// Assigns a host face to every augmentation edge; `Err` names the first pair
    /// sharing no face.
    pub fn locate(&self, aug: &mut [AugEdge]) -> Result<(), (VertexId, VertexId)> {
        for a in aug.iter_mut() {
            a.face = Some(self.host_face(a.u, a.v).ok_or((a.u, a.v))?);
        }
        Ok(())
    }

    pub fn crossings(&self, aug: &[AugEdge]) -> Vec<u32> {
        let mut c = vec![0u32; self.boundary.len()];
        for a in aug {
            if let Some(f) = a.face {
                c[f] += 1;
            }
        }
        c
    }

    /// True when the located chords of every face pairwise avoid alternation
    /// along its boundary.
    pub fn chords_planar(&self, aug: &[AugEdge]) -> bool {
        let mut by_face: Vec<Vec<(VertexId, VertexId)>> = vec![Vec::new(); self.boundary.len()];
        for a in aug {
            match a.face {
                Some(f) => by_face[f].push((a.u, a.v)),
                None => return false,
            }
        }
        for (f, chords) in by_face.iter().enumerate() {
            if chords.len() < 2 {
                continue;
            }
            let b = &self.boundary[f];
            let pos = |v: VertexId| b.iter().position(|&x| x == v).unwrap();
            let spans: Vec<(usize, usize)> = chords
                .iter()
                .map(|&(u, v)| {
                    let (a, c) = (pos(u), pos(v));
                    (a.min(c), a.max(c))
                })
                .collect();
            for i in 0..spans.len() {
                for j in i + 1..spans.len() {
                    let (a, b) = spans[i];
                    let (c, d) = spans[j];
                    if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                        return false;
                    }
                }
            }
        }
        true
    }
}
