use thiserror::Error;

use super::{Dart, PlanarEmbedding};
use crate::graph::{EdgeId, Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChordlessError {
    #[error("outer face is not a simple cycle (graph not biconnected)")]
    NotBiconnected,
    #[error("embedding has no designated outer face")]
    NoOuterFace,
    #[error("re-embedding broke Euler's formula")]
    Corrupted,
}

/// Vertices of the outer face when it is a simple cycle.
fn outer_cycle(g: &Graph, emb: &PlanarEmbedding) -> Result<Vec<Dart>, ChordlessError> {
    let walk = emb.outer_face(g).ok_or(ChordlessError::NoOuterFace)?;
    let mut seen = vec![false; g.vertex_bound()];
    for d in &walk.darts {
        let v = d.tail(g);
        if seen[v.idx()] {
            return Err(ChordlessError::NotBiconnected);
        }
        seen[v.idx()] = true;
    }
    Ok(walk.darts)
}

/// Edges joining two non-consecutive vertices of the outer cycle.
pub fn outer_cycle_chords(g: &Graph, emb: &PlanarEmbedding) -> Vec<EdgeId> {
    let Ok(darts) = outer_cycle(g, emb) else {
        return Vec::new();
    };
    chords_of(g, &darts)
}

fn chords_of(g: &Graph, darts: &[Dart]) -> Vec<EdgeId> {
    let k = darts.len();
    let mut pos = vec![usize::MAX; g.vertex_bound()];
    for (i, d) in darts.iter().enumerate() {
        pos[d.tail(g).idx()] = i;
    }
    let mut out = Vec::new();
    for e in g.edges() {
        let (u, v) = g.endpoints(e);
        let (a, b) = (pos[u.idx()], pos[v.idx()]);
        if a == usize::MAX || b == usize::MAX {
            continue;
        }
        let d = a.abs_diff(b);
        if d != 1 && d + 1 != k {
            out.push(e);
        }
    }
    out
}

/// Edges at `v` strictly between `e_in` and `e_out`, counterclockwise from `e_in`.
fn wedge(g: &Graph, emb: &PlanarEmbedding, v: VertexId, e_in: EdgeId, e_out: EdgeId) -> Vec<EdgeId> {
    let mut out = Vec::new();
    let mut e = emb.ccw_next(g, v, e_in);
    while e != e_out {
        out.push(e);
        e = emb.ccw_next(g, v, e);
    }
    out
}

/// Repeatedly moves the far side of an innermost chord into the face next to it
/// until the outer cycle has no chords.
pub fn chordless_outerface(g: &Graph, emb: &PlanarEmbedding) -> Result<PlanarEmbedding, ChordlessError> {
    let mut emb = emb.clone();
    loop {
        let darts = outer_cycle(g, &emb)?;
        let chords = chords_of(g, &darts);
        if chords.is_empty() {
            return Ok(emb);
        }
        let k = darts.len();
        let mut pos = vec![usize::MAX; g.vertex_bound()];
        for (i, d) in darts.iter().enumerate() {
            pos[d.tail(g).idx()] = i;
        }
        // innermost: shortest arc measured along the walk from one end to the other
        let mut best: Option<(usize, EdgeId, usize, usize)> = None;
        for &c in &chords {
            let (u, v) = g.endpoints(c);
            let (a, b) = (pos[u.idx()], pos[v.idx()]);
            for (s, t) in [(a, b), (b, a)] {
                let len = (t + k - s) % k;
                if best.map_or(true, |(bl, be, _, _)| (len, c) < (bl, be)) {
                    best = Some((len, c, s, t));
                }
            }
        }
        let (len, chord, s, _) = best.unwrap();
        flip_across_chord(g, &mut emb, &darts, chord, s, len)?;
        if !emb.euler_holds(g) {
            return Err(ChordlessError::Corrupted);
        }
    }
}

fn flip_across_chord(
    g: &Graph,
    emb: &mut PlanarEmbedding,
    darts: &[Dart],
    chord: EdgeId,
    s: usize,
    len: usize,
) -> Result<(), ChordlessError> {
    let k = darts.len();
    let arc: Vec<Dart> = (0..len).map(|i| darts[(s + i) % k]).collect();
    let ui = arc[0].tail(g);
    let uj = arc[len - 1].head(g);
    let mut on_cycle = vec![false; g.vertex_bound()];
    for d in &arc {
        on_cycle[d.tail(g).idx()] = true;
    }
    on_cycle[uj.idx()] = true;
    // interior of the new outer cycle lies right of every arc dart
    let mut inside = on_cycle.clone();
    let mut queue = Vec::new();
    let mut cycle_in = Vec::with_capacity(len + 1);
    cycle_in.push(chord);
    for d in &arc {
        cycle_in.push(d.edge());
    }
    for (t, d) in arc.iter().enumerate() {
        let v = d.tail(g);
        for e in wedge(g, emb, v, cycle_in[t], d.edge()) {
            let w = g.other(e, v);
            if !inside[w.idx()] {
                inside[w.idx()] = true;
                queue.push(w);
            }
        }
    }
    for e in wedge(g, emb, uj, arc[len - 1].edge(), chord) {
        let w = g.other(e, uj);
        if !inside[w.idx()] {
            inside[w.idx()] = true;
            queue.push(w);
        }
    }
    while let Some(v) = queue.pop() {
        for &(_, w) in g.incident(v) {
            if !inside[w.idx()] {
                inside[w.idx()] = true;
                queue.push(w);
            }
        }
    }
    let mut rot: Vec<Vec<EdgeId>> = emb.rotations().to_vec();
    for v in g.vertices() {
        if !inside[v.idx()] {
            rot[v.idx()].reverse();
        }
    }
    let first_out = arc[0].edge();
    let last_in = arc[len - 1].edge();
    // at u_i: chord, interior.., first arc edge, far side..  ->  chord, far side reversed, interior.., first arc edge
    let far_i = wedge(g, emb, ui, first_out, chord);
    let near_i = wedge(g, emb, ui, chord, first_out);
    let mut r = vec![chord];
    r.extend(far_i.iter().rev());
    r.extend(near_i);
    r.push(first_out);
    rot[ui.idx()] = r;
    // at u_j: last arc edge, interior.., chord, far side..  ->  last arc edge, interior.., far side reversed, chord
    let far_j = wedge(g, emb, uj, chord, last_in);
    let near_j = wedge(g, emb, uj, last_in, chord);
    let mut r = vec![last_in];
    r.extend(near_j);
    r.extend(far_j.iter().rev());
    r.push(chord);
    rot[uj.idx()] = r;
    let mut next = PlanarEmbedding::from_rotation(g, rot);
    next.set_outer(arc[0]);
    *emb = next;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::planar_embed;

    #[test]
    fn chorded_square_becomes_triangle() {
        // 4-cycle 0-1-2-3 with chord 0-2 and a hub 4 on 1 and 2
        let g = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (4, 1), (4, 2)]).unwrap();
        let mut emb = planar_embed(&g).unwrap();
        let faces = emb.faces(&g);
        for f in &faces {
            emb.set_outer(f.darts[0]);
            let out = chordless_outerface(&g, &emb).unwrap();
            assert!(out.euler_holds(&g));
            assert!(outer_cycle_chords(&g, &out).is_empty());
        }
    }
}
