//! Two-page book embedding for planar graphs of maximum degree four.
//!
//! Each biconnected piece is embedded with a chordless outer face and drawn
//! frame by frame: the current cycle is on the spine, its interior is split into
//! bridge-blocks, the blocks are placed as single vertices and then opened into
//! their own outer cycles. Pieces and components are spliced back at the end.

mod frame;
mod place;
mod spine;

use std::fmt;

use thiserror::Error;

use crate::book::{BookEmbedding, Page};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::planar::{
    biconnected_split, chordless_outerface, is_planar, planar_embed, recompose_book_embeddings, BlockCutTree,
    PlanarEmbedding,
};
use crate::verify::verify_book_embedding;

pub use place::PlaceError;

use frame::Solver;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    #[error("vertex {vertex} has degree {degree}, above four")]
    Degree { vertex: VertexId, degree: usize },
    #[error("graph is not planar")]
    NonPlanar,
    #[error("placement failed: {0}")]
    Place(#[from] PlaceError),
    #[error("{ip} violated: {snapshot}")]
    Invariant { ip: Invariant, snapshot: String },
    #[error("unsupported configuration: {0}")]
    Unsupported(&'static str),
    #[error("internal invariant broken: {0}")]
    Internal(String),
    #[error("result fails verification: {0}")]
    Verification(String),
}

/// Invariants asserted while drawing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Invariant {
    /// The contracted drawing of a frame has two crossing arcs on one page.
    Ip1,
    /// Frame cycle not consecutive on the spine, or its edges on the wrong pages.
    Ip2,
    /// Rightmost cycle vertex with two interior edges.
    Ip3,
    /// Leftmost cycle vertex with two interior edges, exactly one of them a chord.
    Ip4,
    /// A block-vertex whose drawn edges leave it out of rotation order.
    Rotation,
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Invariant::Ip1 => "IP-1",
            Invariant::Ip2 => "IP-2",
            Invariant::Ip3 => "IP-3",
            Invariant::Ip4 => "IP-4",
            Invariant::Rotation => "rotation order",
        })
    }
}

/// Counts of recursion events.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AuditLog {
    pub frames: usize,
    /// Frames split along the path of chords leaving their leftmost vertex.
    pub separated: usize,
    /// Failed attempts followed by another outer face, orientation or v_k.
    pub retries: usize,
}

impl AuditLog {
    fn absorb(&mut self, other: AuditLog) {
        self.frames += other.frames;
        self.separated += other.separated;
        self.retries += other.retries;
    }
}

/// Two-page book embedding of `g`, verified before it is returned.
pub fn embed_two_page(g: &Graph) -> Result<BookEmbedding, EmbedError> {
    embed_two_page_audited(g).map(|(be, _)| be)
}

pub fn embed_two_page_audited(g: &Graph) -> Result<(BookEmbedding, AuditLog), EmbedError> {
    for v in g.vertices() {
        let degree = g.degree(v);
        if degree > 4 {
            return Err(EmbedError::Degree { vertex: v, degree });
        }
    }
    if !is_planar(g) {
        return Err(EmbedError::NonPlanar);
    }
    let mut audit = AuditLog::default();
    let mut out = BookEmbedding::new(Vec::new(), g.edge_bound());
    for comp in g.components() {
        let (h, vmap, emap) = g.induced(&comp);
        let be = embed_connected(&h, &mut audit)?;
        out.order.extend(be.order.iter().map(|v| vmap[v.idx()]));
        for e in h.edges() {
            out.pages[emap[e.idx()].idx()] = be.page(e);
        }
    }
    let report = verify_book_embedding(g, &out);
    if !report.pass() {
        return Err(EmbedError::Verification(report.to_string()));
    }
    Ok((out, audit))
}

fn embed_connected(h: &Graph, audit: &mut AuditLog) -> Result<BookEmbedding, EmbedError> {
    let pieces = biconnected_split(h);
    let mut books = Vec::with_capacity(pieces.len());
    let mut tree = BlockCutTree::default();
    for piece in &pieces {
        let local = embed_piece(&piece.graph, audit)?;
        let mut be = BookEmbedding::new(
            local.order.iter().map(|v| piece.vertex_map[v.idx()]).collect(),
            h.edge_bound(),
        );
        for e in piece.graph.edges() {
            if let Some(p) = local.page(e) {
                be.set_page(piece.edge_map[e.idx()], p);
            }
        }
        books.push(be);
        tree.parent.push(piece.parent);
    }
    recompose_book_embeddings(h, &books, &tree).map_err(|e| EmbedError::Internal(e.to_string()))
}

/// Embeds one biconnected piece (or a single vertex or edge). Parallel edges
/// share the page of their first copy.
fn embed_piece(p: &Graph, audit: &mut AuditLog) -> Result<BookEmbedding, EmbedError> {
    let n = p.vertex_bound();
    let mut simple = Graph::with_vertices(n);
    let mut twin: Vec<(EdgeId, EdgeId)> = Vec::new();
    let mut kept: Vec<EdgeId> = vec![EdgeId(u32::MAX); p.edge_bound()];
    for e in p.edges() {
        let (u, v) = p.endpoints(e);
        match simple.edge_between(u, v) {
            Some(s) => twin.push((e, s)),
            None => {
                let s = simple.add_edge(u, v).expect("simple copy");
                kept[s.idx()] = e;
            }
        }
    }
    let local = embed_simple_piece(&simple, audit)?;
    let mut be = BookEmbedding::new(local.order, p.edge_bound());
    for s in simple.edges() {
        if let Some(pg) = local.pages[s.idx()] {
            be.set_page(kept[s.idx()], pg);
        }
    }
    for (e, s) in twin {
        if let Some(pg) = local.pages[s.idx()] {
            be.set_page(e, pg);
        }
    }
    Ok(be)
}

fn embed_simple_piece(p: &Graph, audit: &mut AuditLog) -> Result<BookEmbedding, EmbedError> {
    let n = p.vertex_count();
    let mut be = BookEmbedding::new(p.vertices().collect(), p.edge_bound());
    if n <= 2 {
        for e in p.edges() {
            be.set_page(e, Page::Top);
        }
        return Ok(be);
    }
    if p.edge_count() == n {
        return Ok(cycle_book(p));
    }
    let emb = planar_embed(p).map_err(|_| EmbedError::NonPlanar)?;
    let base = chordless_outerface(p, &emb).map_err(|e| EmbedError::Internal(e.to_string()))?;
    // the first attempt almost always succeeds; the rest vary the outer face,
    // the orientation and the choice of v_k
    let mut first_err = None;
    let mut tried = 0;
    for emb in attempt_embeddings(p, &base) {
        let walk = emb
            .outer_face(p)
            .ok_or_else(|| EmbedError::Internal("no outer face".into()))?;
        let mut cyc = walk.vertices(p);
        cyc.reverse();
        let k = cyc.len();
        let low: Vec<usize> = (0..k).filter(|&i| p.degree(cyc[i]) <= 3).collect();
        let starts: Vec<usize> = match low.as_slice() {
            [] => vec![k - 1],
            [i] => vec![*i],
            [i, .., j] => vec![*i, *j],
        };
        for i in starts {
            if tried == MAX_ATTEMPTS {
                break;
            }
            tried += 1;
            let mut c = cyc.clone();
            c.rotate_left((i + 1) % k);
            let res = if low.is_empty() { bootstrap(p, &emb, c, audit) } else { solve(p, &emb, c, audit) };
            match res {
                Ok(be) => return Ok(be),
                Err(e) => {
                    audit.retries += 1;
                    first_err.get_or_insert(e);
                }
            }
        }
    }
    Err(first_err.unwrap_or_else(|| EmbedError::Internal("no outer face to start from".into())))
}

const MAX_ATTEMPTS: usize = 16;

/// `base`, its mirror image, then every other face with a simple boundary as the
/// outer face, in both orientations.
fn attempt_embeddings<'a>(p: &'a Graph, base: &'a PlanarEmbedding) -> impl Iterator<Item = PlanarEmbedding> + 'a {
    let first = [base.clone(), base.mirrored(p)];
    let others = base.faces(p).into_iter().filter_map(move |f| {
        let vs = f.vertices(p);
        let mut seen = vs.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != vs.len() || vs.len() < 3 {
            return None;
        }
        let mut e = base.clone();
        e.set_outer(f.darts[0]);
        let e = chordless_outerface(p, &e).ok()?;
        (e.outer_face(p)?.darts != base.outer_face(p)?.darts).then_some(e)
    });
    first.into_iter().chain(others.flat_map(move |e| [e.mirrored(p), e]))
}

fn solve(
    p: &Graph,
    emb: &PlanarEmbedding,
    cyc: Vec<VertexId>,
    audit: &mut AuditLog,
) -> Result<BookEmbedding, EmbedError> {
    let mut s = Solver::new(p, emb, cyc)?;
    let res = s.run();
    audit.absorb(std::mem::take(&mut s.audit));
    res?;
    let mut be = BookEmbedding::new(s.spine.to_vec(), p.edge_bound());
    be.pages = s.pages;
    Ok(be)
}

/// Every outer vertex has degree four: subdivide the closing edge so the last
/// cycle vertex has degree two, draw, then drop the subdivision vertex.
fn bootstrap(
    p: &Graph,
    emb: &PlanarEmbedding,
    mut cyc: Vec<VertexId>,
    audit: &mut AuditLog,
) -> Result<BookEmbedding, EmbedError> {
    let k = cyc.len();
    let (a, b) = (cyc[k - 1], cyc[0]);
    let ab = p
        .edge_between(a, b)
        .ok_or_else(|| EmbedError::Internal("outer cycle edge missing".into()))?;
    let mut h = p.clone();
    let z = h.add_vertex();
    let az = h.add_edge(a, z).expect("fresh edge");
    let zb = h.add_edge(z, b).expect("fresh edge");
    h.remove_edge(ab);
    let mut rot: Vec<Vec<EdgeId>> = emb.rotations().to_vec();
    rot.resize(h.vertex_bound(), Vec::new());
    for (v, with) in [(a, az), (b, zb)] {
        for e in rot[v.idx()].iter_mut() {
            if *e == ab {
                *e = with;
            }
        }
    }
    rot[z.idx()] = vec![az, zb];
    let emb2 = PlanarEmbedding::from_rotation(&h, rot);
    cyc.push(z);
    let drawn = solve(&h, &emb2, cyc, audit)?;
    let mut be = BookEmbedding::new(drawn.order.into_iter().filter(|&v| v != z).collect(), p.edge_bound());
    for e in p.edges() {
        if e != ab {
            be.pages[e.idx()] = drawn.pages[e.idx()];
        }
    }
    be.set_page(ab, Page::Bottom);
    Ok(be)
}

/// A cycle in walk order: path edges below, closing edge above.
fn cycle_book(p: &Graph) -> BookEmbedding {
    let start = p.vertices().next().expect("non-empty cycle");
    let mut order = vec![start];
    let mut be = BookEmbedding::new(Vec::new(), p.edge_bound());
    let (mut prev, mut cur) = (None, start);
    loop {
        let &(e, w) = p
            .incident(cur)
            .iter()
            .find(|&&(e, _)| Some(e) != prev)
            .expect("cycle vertex has degree two");
        if w == start {
            be.set_page(e, Page::Top);
            break;
        }
        be.set_page(e, Page::Bottom);
        order.push(w);
        prev = Some(e);
        cur = w;
    }
    be.order = order;
    be
}
