//! Undirected multigraph with stable identifiers, plus bridges and bridge-block contraction.

use std::fmt;

use thiserror::Error;

/// Stable vertex identifier. Never reused within one graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub u32);

/// Stable edge identifier. Never reused within one graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub u32);

impl VertexId {
    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

impl EdgeId {
    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

pub const MAX_MULTIPLICITY: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("edge {0}-{1} would exceed multiplicity {MAX_MULTIPLICITY}")]
    Multiplicity(VertexId, VertexId),
    #[error("vertex {0} out of range (graph has {1} vertices)")]
    OutOfRange(usize, usize),
    #[error("vertex {0} was deleted")]
    DeadVertex(VertexId),
}

/// Undirected multigraph. Deleting a vertex masks it; ids stay valid.
#[derive(Clone, Debug, Default)]
pub struct Graph {
    alive: Vec<bool>,
    ends: Vec<[VertexId; 2]>,
    edge_alive: Vec<bool>,
    inc: Vec<Vec<(EdgeId, VertexId)>>,
    n_alive: usize,
    m_alive: usize,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertices(n: usize) -> Self {
        let mut g = Self::new();
        for _ in 0..n {
            g.add_vertex();
        }
        g
    }

    /// Builds a graph on `n` vertices from endpoint pairs.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::with_vertices(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::OutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::OutOfRange(v, n));
            }
            g.add_edge(VertexId(u as u32), VertexId(v as u32))?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self) -> VertexId {
        let v = VertexId(self.alive.len() as u32);
        self.alive.push(true);
        self.inc.push(Vec::new());
        self.n_alive += 1;
        v
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId, GraphError> {
        for w in [u, v] {
            if w.idx() >= self.alive.len() {
                return Err(GraphError::OutOfRange(w.idx(), self.alive.len()));
            }
            if !self.alive[w.idx()] {
                return Err(GraphError::DeadVertex(w));
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.multiplicity(u, v) >= MAX_MULTIPLICITY {
            return Err(GraphError::Multiplicity(u, v));
        }
        let e = EdgeId(self.ends.len() as u32);
        self.ends.push([u, v]);
        self.edge_alive.push(true);
        self.inc[u.idx()].push((e, v));
        self.inc[v.idx()].push((e, u));
        self.m_alive += 1;
        Ok(e)
    }

    pub fn remove_edge(&mut self, e: EdgeId) {
        if !self.contains_edge(e) {
            return;
        }
        let [u, v] = self.ends[e.idx()];
        self.inc[u.idx()].retain(|&(f, _)| f != e);
        self.inc[v.idx()].retain(|&(f, _)| f != e);
        self.edge_alive[e.idx()] = false;
        self.m_alive -= 1;
    }

    /// Masks `v` and deletes its incident edges.
    pub fn remove_vertex(&mut self, v: VertexId) {
        if !self.contains_vertex(v) {
            return;
        }
        let incident: Vec<EdgeId> = self.inc[v.idx()].iter().map(|&(e, _)| e).collect();
        for e in incident {
            self.remove_edge(e);
        }
        self.alive[v.idx()] = false;
        self.n_alive -= 1;
    }

    pub fn vertex_count(&self) -> usize {
        self.n_alive
    }

    pub fn edge_count(&self) -> usize {
        self.m_alive
    }

    /// One past the largest vertex id ever minted.
    pub fn vertex_bound(&self) -> usize {
        self.alive.len()
    }

    /// One past the largest edge id ever minted.
    pub fn edge_bound(&self) -> usize {
        self.ends.len()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.alive.get(v.idx()).copied().unwrap_or(false)
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edge_alive.get(e.idx()).copied().unwrap_or(false)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.alive
            .iter()
            .enumerate()
            .filter(|(_, &a)| a)
            .map(|(i, _)| VertexId(i as u32))
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edge_alive
            .iter()
            .enumerate()
            .filter(|(_, &a)| a)
            .map(|(i, _)| EdgeId(i as u32))
    }

    #[inline]
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        let [u, v] = self.ends[e.idx()];
        (u, v)
    }

    #[inline]
    pub fn other(&self, e: EdgeId, v: VertexId) -> VertexId {
        let [a, b] = self.ends[e.idx()];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    #[inline]
    pub fn incident(&self, v: VertexId) -> &[(EdgeId, VertexId)] {
        &self.inc[v.idx()]
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.inc[v.idx()].len()
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        self.inc[u.idx()].iter().filter(|&&(_, w)| w == v).count()
    }

    pub fn edges_between(&self, u: VertexId, v: VertexId) -> Vec<EdgeId> {
        self.inc[u.idx()]
            .iter()
            .filter(|&&(_, w)| w == v)
            .map(|&(e, _)| e)
            .collect()
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.inc[u.idx()]
            .iter()
            .find(|&&(_, w)| w == v)
            .map(|&(e, _)| e)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// Distinct neighbors of `v`, in incidence order.
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = Vec::with_capacity(self.degree(v));
        for &(_, w) in &self.inc[v.idx()] {
            if !out.contains(&w) {
                out.push(w);
            }
        }
        out
    }

    /// Sorted endpoint pairs (smaller id first) of all live edges, sorted.
    pub fn edge_multiset(&self) -> Vec<(VertexId, VertexId)> {
        let mut out: Vec<_> = self
            .edges()
            .map(|e| {
                let (u, v) = self.endpoints(e);
                (u.min(v), u.max(v))
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn is_simple(&self) -> bool {
        self.vertices()
            .all(|v| self.neighbors(v).len() == self.degree(v))
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut comp = vec![usize::MAX; self.vertex_bound()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if comp[s.idx()] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s.idx()] = id;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                i += 1;
                for &(_, w) in self.incident(v) {
                    if comp[w.idx()] == usize::MAX {
                        comp[w.idx()] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced by `keep`, with compact ids in the order given.
    /// Returns the subgraph, the new-to-old vertex map and the new-to-old edge map.
    pub fn induced(&self, keep: &[VertexId]) -> (Graph, Vec<VertexId>, Vec<EdgeId>) {
        let mut local = vec![u32::MAX; self.vertex_bound()];
        for (i, &v) in keep.iter().enumerate() {
            local[v.idx()] = i as u32;
        }
        let mut sub = Graph::with_vertices(keep.len());
        let mut edge_back = Vec::new();
        for e in self.edges() {
            let (u, v) = self.endpoints(e);
            let (lu, lv) = (local[u.idx()], local[v.idx()]);
            if lu != u32::MAX && lv != u32::MAX {
                sub.add_edge(VertexId(lu), VertexId(lv))
                    .expect("induced subgraph keeps multiplicity");
                edge_back.push(e);
            }
        }
        (sub, keep.to_vec(), edge_back)
    }
}

/// Edges whose removal disconnects their component. Parallel copies are never bridges.
pub fn bridges(g: &Graph) -> Vec<EdgeId> {
    bridges_masked(g, &|_| true)
}

/// Bridges of the subgraph induced by vertices accepted by `keep`.
pub fn bridges_masked(g: &Graph, keep: &dyn Fn(VertexId) -> bool) -> Vec<EdgeId> {
    let nb = g.vertex_bound();
    let mut disc = vec![u32::MAX; nb];
    let mut low = vec![0u32; nb];
    let mut out = Vec::new();
    let mut time = 0u32;
    // (vertex, parent edge, next incidence index)
    let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = Vec::new();
    for root in g.vertices() {
        if !keep(root) || disc[root.idx()] != u32::MAX {
            continue;
        }
        disc[root.idx()] = time;
        low[root.idx()] = time;
        time += 1;
        stack.push((root, None, 0));
        while let Some(top) = stack.last_mut() {
            let (v, pe, i) = *top;
            if i < g.degree(v) {
                top.2 += 1;
                let (e, w) = g.incident(v)[i];
                if Some(e) == pe || !keep(w) {
                    continue;
                }
                if disc[w.idx()] == u32::MAX {
                    disc[w.idx()] = time;
                    low[w.idx()] = time;
                    time += 1;
                    stack.push((w, Some(e), 0));
                } else {
                    low[v.idx()] = low[v.idx()].min(disc[w.idx()]);
                }
            } else {
                stack.pop();
                if let (Some(e), Some(parent)) = (pe, stack.last()) {
                    let p = parent.0;
                    low[p.idx()] = low[p.idx()].min(low[v.idx()]);
                    if low[v.idx()] > disc[p.idx()] {
                        out.push(e);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Bridge-blocks: connected pieces left after deleting all bridges.
#[derive(Clone, Debug, Default)]
pub struct BridgeBlockForest {
    /// Block index per vertex id; `None` for vertices outside the considered subgraph.
    pub block_of: Vec<Option<usize>>,
    /// Members of each block, sorted.
    pub blocks: Vec<Vec<VertexId>>,
    pub bridges: Vec<EdgeId>,
    /// Block adjacency through bridges: `(other block, bridge)`.
    pub tree: Vec<Vec<(usize, EdgeId)>>,
}

impl BridgeBlockForest {
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }
}

pub fn bridge_block_forest(g: &Graph) -> BridgeBlockForest {
    bridge_block_forest_masked(g, &|_| true)
}

/// Bridge-block forest of the subgraph induced by `keep`.
pub fn bridge_block_forest_masked(g: &Graph, keep: &dyn Fn(VertexId) -> bool) -> BridgeBlockForest {
    let bridge_list = bridges_masked(g, keep);
    let mut is_bridge = vec![false; g.edge_bound()];
    for &e in &bridge_list {
        is_bridge[e.idx()] = true;
    }
    let mut block_of = vec![None; g.vertex_bound()];
    let mut blocks = Vec::new();
    for s in g.vertices() {
        if !keep(s) || block_of[s.idx()].is_some() {
            continue;
        }
        let id = blocks.len();
        block_of[s.idx()] = Some(id);
        let mut members = vec![s];
        let mut i = 0;
        while i < members.len() {
            let v = members[i];
            i += 1;
            for &(e, w) in g.incident(v) {
                if !is_bridge[e.idx()] && keep(w) && block_of[w.idx()].is_none() {
                    block_of[w.idx()] = Some(id);
                    members.push(w);
                }
            }
        }
        members.sort_unstable();
        blocks.push(members);
    }
    let mut tree = vec![Vec::new(); blocks.len()];
    for &e in &bridge_list {
        let (u, v) = g.endpoints(e);
        let (bu, bv) = (block_of[u.idx()].unwrap(), block_of[v.idx()].unwrap());
        tree[bu].push((bv, e));
        tree[bv].push((bu, e));
    }
    BridgeBlockForest {
        block_of,
        blocks,
        bridges: bridge_list,
        tree,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContractError {
    #[error("contraction produced multiplicity > {MAX_MULTIPLICITY} between {0} and {1}")]
    Multiplicity(VertexId, VertexId),
}

/// Result of contracting every bridge-block into one vertex.
#[derive(Clone, Debug)]
pub struct Contraction {
    pub graph: Graph,
    /// Contracted vertex for each block.
    pub block_vertex: Vec<VertexId>,
    /// Contracted vertex for each original vertex id outside every block.
    pub kept_vertex: Vec<Option<VertexId>>,
    /// Original vertex behind each contracted vertex that is not a block.
    pub vertex_origin: Vec<Option<VertexId>>,
    /// Original edge behind each contracted edge.
    pub edge_origin: Vec<EdgeId>,
}

/// Contracts each block of `f`; vertices outside the forest are kept as they are.
pub fn contract_blocks(g: &Graph, f: &BridgeBlockForest) -> Result<Contraction, ContractError> {
    let mut out = Graph::new();
    let block_vertex: Vec<VertexId> = (0..f.blocks.len()).map(|_| out.add_vertex()).collect();
    let mut kept_vertex = vec![None; g.vertex_bound()];
    let mut vertex_origin = vec![None; f.blocks.len()];
    for v in g.vertices() {
        if f.block_of.get(v.idx()).copied().flatten().is_none() {
            kept_vertex[v.idx()] = Some(out.add_vertex());
            vertex_origin.push(Some(v));
        }
    }
    let image = |v: VertexId| match f.block_of.get(v.idx()).copied().flatten() {
        Some(b) => block_vertex[b],
        None => kept_vertex[v.idx()].unwrap(),
    };
    let mut edge_origin = Vec::new();
    for e in g.edges() {
        let (u, v) = g.endpoints(e);
        let (a, b) = (image(u), image(v));
        if a == b {
            continue;
        }
        out.add_edge(a, b).map_err(|_| ContractError::Multiplicity(a, b))?;
        edge_origin.push(e);
    }
    Ok(Contraction {
        graph: out,
        block_vertex,
        kept_vertex,
        vertex_origin,
        edge_origin,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_degrees() {
        let g = Graph::build(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(g.vertices().all(|v| g.degree(v) == 2));
    }

    #[test]
    fn double_edge_allowed_triple_rejected() {
        let mut g = Graph::build(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(g.degree(VertexId(0)), 2);
        assert_eq!(
            g.add_edge(VertexId(0), VertexId(1)),
            Err(GraphError::Multiplicity(VertexId(0), VertexId(1)))
        );
    }

    #[test]
    fn self_loop_rejected() {
        assert_eq!(Graph::build(1, &[(0, 0)]).unwrap_err(), GraphError::SelfLoop(VertexId(0)));
    }

    #[test]
    fn removal_masks_ids() {
        let mut g = Graph::build(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        g.remove_vertex(VertexId(1));
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 1);
        assert!(g.contains_edge(EdgeId(2)));
        assert_eq!(g.endpoints(EdgeId(2)), (VertexId(2), VertexId(3)));
    }

    #[test]
    fn bridges_of_small_shapes() {
        let path = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(bridges(&path), vec![EdgeId(0), EdgeId(1)]);
        let cycle = Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(bridges(&cycle).is_empty());
        let dbl = Graph::build(2, &[(0, 1), (0, 1)]).unwrap();
        assert!(bridges(&dbl).is_empty());
    }

    #[test]
    fn contraction_keeps_double_edge() {
        // triangle 0-1-2, outside vertex 3 tied to 0 and 1
        let g = Graph::build(4, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 3)]).unwrap();
        let keep = |v: VertexId| v.0 < 3;
        let f = bridge_block_forest_masked(&g, &keep);
        assert_eq!(f.block_count(), 1);
        let c = contract_blocks(&g, &f).unwrap();
        let b = c.block_vertex[0];
        let out = c.kept_vertex[3].unwrap();
        assert_eq!(c.graph.multiplicity(b, out), 2);
    }
}
