use super::{SubhamCycle, SubhamError};
use crate::graph::{Graph, VertexId};

type Key = (VertexId, VertexId);

fn key(u: VertexId, v: VertexId) -> Key {
    (u.min(v), u.max(v))
}

fn triangle_edges_on(order: &[VertexId], corners: [VertexId; 3]) -> Vec<Key> {
    let n = order.len();
    let mut out: Vec<Key> = (0..n)
        .map(|i| (order[i], order[(i + 1) % n]))
        .filter(|(u, v)| corners.contains(u) && corners.contains(v))
        .map(|(u, v)| key(u, v))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Walks the cycle from `from`, away from `not_towards`, until `to` (inclusive).
fn walk(order: &[VertexId], from: VertexId, not_towards: VertexId, to: VertexId) -> Vec<VertexId> {
    let n = order.len();
    let i = order.iter().position(|&v| v == from).unwrap();
    let step = if order[(i + 1) % n] == not_towards { n - 1 } else { 1 };
    let mut out = vec![from];
    let mut j = i;
    loop {
        j = (j + step) % n;
        out.push(order[j]);
        if order[j] == to {
            return out;
        }
    }
}

/// Joins a cycle of the inside part and a cycle of the outside part (both
/// including the triangle) that share exactly one triangle edge `e` and
/// together use all three: the two paths left after dropping the triangle
/// edges meet at the corner opposite `e`, and `e` closes the result.
pub fn merge_cycles(
    g: &Graph,
    h_in: &SubhamCycle,
    h_out: &SubhamCycle,
    corners: [VertexId; 3],
) -> Result<SubhamCycle, SubhamError> {
    let ti = triangle_edges_on(&h_in.order, corners);
    let to = triangle_edges_on(&h_out.order, corners);
    let show = |s: &[Key]| s.iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(", ");
    if ti.len() != 2 || to.len() != 2 {
        return Err(SubhamError::MergeHypothesis(format!(
            "each cycle must use two triangle edges; inside uses [{}], outside uses [{}]",
            show(&ti),
            show(&to)
        )));
    }
    let common: Vec<Key> = ti.iter().copied().filter(|k| to.contains(k)).collect();
    if common.len() != 1 {
        return Err(SubhamError::MergeHypothesis(format!(
            "cycles must share exactly one triangle edge; they share [{}]",
            show(&common)
        )));
    }
    let mut seen = vec![0u8; g.vertex_bound()];
    for &v in h_in.order.iter().chain(&h_out.order) {
        if v.idx() >= seen.len() || !g.contains_vertex(v) {
            return Err(SubhamError::MergeHypothesis(format!("vertex {v} not in the merged graph")));
        }
        seen[v.idx()] += 1;
    }
    for v in g.vertices() {
        let want = if corners.contains(&v) { 2 } else { 1 };
        if seen[v.idx()] != want {
            return Err(SubhamError::MergeHypothesis(format!(
                "vertex {v} appears {} times across the two cycles",
                seen[v.idx()]
            )));
        }
    }
    let e = common[0];
    let e_in = ti.iter().copied().find(|&k| k != e).unwrap();
    // y: corner of e also on e_in; x: the other end of e; z: opposite corner
    let y = if e_in.0 == e.0 || e_in.1 == e.0 { e.0 } else { e.1 };
    let x = if y == e.0 { e.1 } else { e.0 };
    let z = corners.into_iter().find(|&c| c != x && c != y).unwrap();
    let mut order = walk(&h_out.order, y, x, z);
    let inner = walk(&h_in.order, z, y, x);
    order.extend_from_slice(&inner[1..]);
    Ok(SubhamCycle::from_order(g, order))
}
