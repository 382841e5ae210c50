use crate::graph::{EdgeId, Graph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ConnectivityClass {
    Disconnected,
    One,
    Two,
    ThreeOrMore,
}

/// A biconnected block with compact local ids.
#[derive(Clone, Debug)]
pub struct BlockPiece {
    pub graph: Graph,
    /// Local vertex index to original id.
    pub vertex_map: Vec<VertexId>,
    /// Local edge index to original id.
    pub edge_map: Vec<EdgeId>,
    /// Parent block index and the shared cut vertex (original id); `None` for the root.
    pub parent: Option<(usize, VertexId)>,
}

impl BlockPiece {
    pub fn local_of(&self, v: VertexId) -> Option<VertexId> {
        self.vertex_map
            .iter()
            .position(|&w| w == v)
            .map(|i| VertexId(i as u32))
    }
}

/// Edge sets of the biconnected components of one connected graph, in discovery order.
fn block_edge_sets(g: &Graph, root: VertexId) -> Vec<Vec<EdgeId>> {
    let nb = g.vertex_bound();
    let mut disc = vec![u32::MAX; nb];
    let mut low = vec![0u32; nb];
    let mut time = 0u32;
    let mut estack: Vec<EdgeId> = Vec::new();
    let mut out = Vec::new();
    let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = vec![(root, None, 0)];
    disc[root.idx()] = 0;
    low[root.idx()] = 0;
    time += 1;
    while let Some(top) = stack.last_mut() {
        let (v, pe, i) = *top;
        if i < g.degree(v) {
            top.2 += 1;
            let (e, w) = g.incident(v)[i];
            if Some(e) == pe {
                continue;
            }
            if disc[w.idx()] == u32::MAX {
                estack.push(e);
                disc[w.idx()] = time;
                low[w.idx()] = time;
                time += 1;
                stack.push((w, Some(e), 0));
            } else if disc[w.idx()] < disc[v.idx()] {
                estack.push(e);
                low[v.idx()] = low[v.idx()].min(disc[w.idx()]);
            }
        } else {
            stack.pop();
            if let (Some(e), Some(parent)) = (pe, stack.last()) {
                let p = parent.0;
                low[p.idx()] = low[p.idx()].min(low[v.idx()]);
                if low[v.idx()] >= disc[p.idx()] {
                    let mut block = Vec::new();
                    while let Some(f) = estack.pop() {
                        block.push(f);
                        if f == e {
                            break;
                        }
                    }
                    block.sort_unstable();
                    out.push(block);
                }
            }
        }
    }
    out
}

/// Cut vertices of `g`, sorted.
pub fn articulation_points(g: &Graph) -> Vec<VertexId> {
    let mut count = vec![0usize; g.vertex_bound()];
    for comp in g.components() {
        for block in block_edge_sets(g, comp[0]) {
            let mut vs: Vec<VertexId> = block
                .iter()
                .flat_map(|&e| {
                    let (a, b) = g.endpoints(e);
                    [a, b]
                })
                .collect();
            vs.sort_unstable();
            vs.dedup();
            for v in vs {
                count[v.idx()] += 1;
            }
        }
    }
    g.vertices().filter(|v| count[v.idx()] > 1).collect()
}

/// Biconnected blocks of a connected graph, parents before children.
pub fn biconnected_split(g: &Graph) -> Vec<BlockPiece> {
    let Some(root) = g.vertices().next() else {
        return Vec::new();
    };
    let sets = block_edge_sets(g, root);
    if sets.is_empty() {
        // single vertex
        let mut piece = Graph::new();
        piece.add_vertex();
        return vec![BlockPiece {
            graph: piece,
            vertex_map: vec![root],
            edge_map: Vec::new(),
            parent: None,
        }];
    }
    let verts: Vec<Vec<VertexId>> = sets
        .iter()
        .map(|b| {
            let mut vs: Vec<VertexId> = b
                .iter()
                .flat_map(|&e| {
                    let (a, c) = g.endpoints(e);
                    [a, c]
                })
                .collect();
            vs.sort_unstable();
            vs.dedup();
            vs
        })
        .collect();
    let mut blocks_at: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_bound()];
    for (i, vs) in verts.iter().enumerate() {
        for v in vs {
            blocks_at[v.idx()].push(i);
        }
    }
    let first = blocks_at[root.idx()][0];
    let mut order = vec![(first, None)];
    let mut seen = vec![false; sets.len()];
    seen[first] = true;
    let mut i = 0;
    while i < order.len() {
        let (b, _) = order[i];
        i += 1;
        for &v in &verts[b] {
            for &c in &blocks_at[v.idx()] {
                if !seen[c] {
                    seen[c] = true;
                    order.push((c, Some((b, v))));
                }
            }
        }
    }
    let mut new_index = vec![0usize; sets.len()];
    for (k, &(b, _)) in order.iter().enumerate() {
        new_index[b] = k;
    }
    order
        .iter()
        .map(|&(b, parent)| {
            let mut graph = Graph::with_vertices(verts[b].len());
            let pos = |v: VertexId| verts[b].binary_search(&v).unwrap();
            for &e in &sets[b] {
                let (x, y) = g.endpoints(e);
                graph
                    .add_edge(VertexId(pos(x) as u32), VertexId(pos(y) as u32))
                    .expect("block keeps multiplicity");
            }
            BlockPiece {
                graph,
                vertex_map: verts[b].clone(),
                edge_map: sets[b].clone(),
                parent: parent.map(|(p, v)| (new_index[p], v)),
            }
        })
        .collect()
}

/// Vertex connectivity bucketed as disconnected, 1, 2 or at least 3.
pub fn connectivity_class(g: &Graph) -> ConnectivityClass {
    let n = g.vertex_count();
    if n == 0 || !g.is_connected() {
        return ConnectivityClass::Disconnected;
    }
    if n <= 2 || !articulation_points(g).is_empty() {
        return ConnectivityClass::One;
    }
    if n == 3 {
        return ConnectivityClass::Two;
    }
    let all: Vec<VertexId> = g.vertices().collect();
    for &v in &all {
        let mut h = g.clone();
        h.remove_vertex(v);
        if !articulation_points(&h).is_empty() {
            return ConnectivityClass::Two;
        }
    }
    ConnectivityClass::ThreeOrMore
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classes() {
        let path = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(connectivity_class(&path), ConnectivityClass::One);
        let cycle = Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(connectivity_class(&cycle), ConnectivityClass::Two);
        let oct = Graph::build(
            6,
            &[
                (0, 1), (0, 2), (0, 3), (0, 4), (5, 1), (5, 2), (5, 3), (5, 4),
                (1, 2), (2, 3), (3, 4), (4, 1),
            ],
        )
        .unwrap();
        assert_eq!(connectivity_class(&oct), ConnectivityClass::ThreeOrMore);
    }

    #[test]
    fn bowtie_splits_at_shared_vertex() {
        let g = Graph::build(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let blocks = biconnected_split(&g);
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[1].parent, Some((0, VertexId(2))));
    }

    #[test]
    fn path_has_one_block_per_edge() {
        let g = Graph::build(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(biconnected_split(&g).len(), 3);
    }
}
