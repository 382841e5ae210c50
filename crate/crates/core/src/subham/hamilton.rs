use super::faces::FaceIndex;
use super::{AugEdge, SubhamCycle, SubhamError};
use crate::graph::{Graph, VertexId};
use crate::planar::PlanarEmbedding;

/// Source of hamiltonian cycles for 4-connected triangulations.
pub trait HamiltonianBackend {
    fn hamiltonian_cycle(&self, g: &Graph) -> Option<Vec<VertexId>>;
}

/// Depth-first search extending a path from a minimum-degree vertex, trying
/// the neighbor with the fewest free neighbors first, and pruning when a
/// skipped vertex is left with fewer than two possible cycle neighbors.
#[derive(Clone, Copy, Debug)]
pub struct Backtracking {
    pub step_budget: u64,
}

impl Default for Backtracking {
    fn default() -> Self {
        Backtracking { step_budget: 50_000_000 }
    }
}

impl HamiltonianBackend for Backtracking {
    fn hamiltonian_cycle(&self, g: &Graph) -> Option<Vec<VertexId>> {
        let vs: Vec<VertexId> = g.vertices().collect();
        let n = vs.len();
        match n {
            0 => return None,
            1 => return Some(vs),
            2 => return (g.multiplicity(vs[0], vs[1]) >= 2).then_some(vs),
            _ => {}
        }
        let nb: Vec<Vec<VertexId>> = (0..g.vertex_bound())
            .map(|i| {
                let v = VertexId(i as u32);
                if g.contains_vertex(v) {
                    let mut x = g.neighbors(v);
                    x.sort_unstable();
                    x.dedup();
                    x
                } else {
                    Vec::new()
                }
            })
            .collect();
        let start = *vs.iter().min_by_key(|&&v| (nb[v.idx()].len(), v)).unwrap();
        let mut used = vec![false; g.vertex_bound()];
        let mut free: Vec<usize> = nb.iter().map(|x| x.len()).collect();
        let mut path = vec![start];
        let visit = |v: VertexId, used: &mut [bool], free: &mut [usize]| {
            used[v.idx()] = true;
            for &w in &nb[v.idx()] {
                free[w.idx()] -= 1;
            }
        };
        let unvisit = |v: VertexId, used: &mut [bool], free: &mut [usize]| {
            used[v.idx()] = false;
            for &w in &nb[v.idx()] {
                free[w.idx()] += 1;
            }
        };
        visit(start, &mut used, &mut free);
        let adj = |a: VertexId, b: VertexId| nb[a.idx()].binary_search(&b).is_ok();
        // frame: candidate list for the vertex at the same depth, next index to try
        let mut frames: Vec<(Vec<VertexId>, usize)> = Vec::new();
        let candidates = |v: VertexId, used: &[bool], free: &[usize]| {
            let mut c: Vec<VertexId> = nb[v.idx()].iter().copied().filter(|w| !used[w.idx()]).collect();
            c.sort_by_key(|w| (free[w.idx()], *w));
            c
        };
        frames.push((candidates(start, &used, &free), 0));
        let mut steps = 0u64;
        while let Some((cands, next)) = frames.last_mut() {
            steps += 1;
            if steps > self.step_budget {
                return None;
            }
            let v = *path.last().unwrap();
            if *next >= cands.len() {
                frames.pop();
                if path.len() > 1 {
                    let last = path.pop().unwrap();
                    unvisit(last, &mut used, &mut free);
                }
                continue;
            }
            let w = cands[*next];
            *next += 1;
            if used[w.idx()] {
                continue;
            }
            visit(w, &mut used, &mut free);
            path.push(w);
            if path.len() == n {
                if adj(w, start) {
                    return Some(path);
                }
                path.pop();
                unvisit(w, &mut used, &mut free);
                continue;
            }
            // v is now interior; every unvisited neighbor of v must still reach two cycle neighbors
            let dead = nb[v.idx()].iter().any(|&u| {
                !used[u.idx()] && free[u.idx()] + usize::from(adj(u, w)) + usize::from(adj(u, start)) < 2
            }) || (free[w.idx()] == 0);
            if dead {
                path.pop();
                unvisit(w, &mut used, &mut free);
                continue;
            }
            let c = candidates(w, &used, &free);
            frames.push((c, 0));
        }
        None
    }
}

/// Stellates every non-triangular face, takes a hamiltonian cycle of the
/// result, and deletes the stellation vertices again. Each deleted vertex
/// leaves at most one augmentation edge inside its face.
pub fn subham_no_triangles(
    g: &Graph,
    emb: &PlanarEmbedding,
    backend: &dyn HamiltonianBackend,
) -> Result<SubhamCycle, SubhamError> {
    let faces = FaceIndex::new(g, emb);
    let mut st = g.clone();
    let mut face_of = vec![usize::MAX; g.vertex_bound()];
    for f in 0..faces.face_count() {
        let b = faces.boundary(f);
        if b.len() <= 3 {
            continue;
        }
        let s = st.add_vertex();
        face_of.resize(st.vertex_bound(), usize::MAX);
        face_of[s.idx()] = f;
        for &v in b {
            st.add_edge(s, v).map_err(|e| SubhamError::Invariant(format!("stellation: {e}")))?;
        }
    }
    let stellated = |v: VertexId| v.idx() >= g.vertex_bound();
    let tour = backend.hamiltonian_cycle(&st).ok_or(SubhamError::BackendFailed)?;
    let k = tour.len();
    let mut order = Vec::with_capacity(g.vertex_count());
    let mut aug = Vec::new();
    for i in 0..k {
        let v = tour[i];
        if stellated(v) {
            continue;
        }
        order.push(v);
        let w = tour[(i + 1) % k];
        if stellated(w) {
            let x = tour[(i + 2) % k];
            if stellated(x) {
                return Err(SubhamError::Invariant("adjacent stellation vertices".into()));
            }
            if !g.has_edge(v, x) {
                aug.push(AugEdge { u: v, v: x, face: Some(face_of[w.idx()]) });
            }
        }
    }
    let crossings = faces.crossings(&aug);
    if let Some(f) = crossings.iter().position(|&c| c > 1) {
        return Err(SubhamError::Invariant(format!("face {f} crossed {} times", crossings[f])));
    }
    Ok(SubhamCycle { order, augmentation: aug, crossings })
}
