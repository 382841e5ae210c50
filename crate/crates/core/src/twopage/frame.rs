//! One recursion step: a cycle already on the spine plus everything inside it.
//!
//! The interior is split into bridge-blocks, each contracted to one spine slot.
//! Anchors (blocks touching the cycle) hang off their marked edge, ancillaries
//! (blocks reached only through bridges) fill gaps between the anchors of their
//! tree. Every block is then opened at a seam into its outer cycle, which becomes
//! the next frame.

use crate::book::Page;
use crate::graph::{EdgeId, Graph, VertexId};
use crate::planar::PlanarEmbedding;

use super::place::{self, PlaceError, RotKey, Side};
use super::spine::Spine;
use super::{AuditLog, EmbedError, Invariant};

const NIL: u32 = u32::MAX;

/// A cycle `v_1..v_k` in local left-to-right order. Locally the path edges lie
/// on the bottom page, `(v_1, v_k)` on top, and the interior is on the left of
/// the walk `v_1 -> v_k`. `flip` swaps the pages and `mirror` swaps left and
/// right relative to the global picture.
#[derive(Clone, Debug)]
pub(crate) struct Frame {
    pub cyc: Vec<VertexId>,
    pub flip: bool,
    pub mirror: bool,
    /// Indices `i` where a lobe hanging at `cyc[i]` or `cyc[i + 1]` sits between
    /// the two on the spine; that cycle edge is drawn on top over it.
    pub jumps: Vec<u32>,
    /// Closing edge as seen from `v_1` and from `v_k` when the frame is closed
    /// by a two-edge path through a vertex outside `cyc`.
    pub close: Option<[EdgeId; 2]>,
    /// Vertex drawn left of `v_1` that counts as `v_1`, with the rotation range
    /// (exclusive at both ends) of its edges into the frame.
    pub alias: Option<(VertexId, EdgeId, EdgeId)>,
}

impl Frame {
    /// Vertices `a..=b` closed by the chord `(v_a, v_b)`.
    fn segment(&self, a: usize, b: usize, close: Option<[EdgeId; 2]>) -> Frame {
        Frame {
            cyc: self.cyc[a..=b].to_vec(),
            flip: self.flip,
            mirror: self.mirror,
            jumps: self
                .jumps
                .iter()
                .filter(|&&i| i as usize >= a && (i as usize) < b)
                .map(|&i| i - a as u32)
                .collect(),
            close,
            alias: None,
        }
    }
}

/// Outer cycle of a block, or one lobe of it when the outer walk repeats vertices.
struct Lobe {
    cyc: Vec<VertexId>,
    mirror: bool,
    jumps: Vec<u32>,
}

/// A block opened at a seam: spine layout, page per outer walk edge, lobes.
struct Opened {
    layout: Vec<VertexId>,
    top: Vec<EdgeId>,
    bottom: Vec<EdgeId>,
    lobes: Vec<Lobe>,
}

struct Block {
    members: Vec<VertexId>,
    /// Outer walk as (tail, edge), clockwise around the block; empty for a lone vertex.
    walk: Vec<(VertexId, EdgeId)>,
    /// External edges counterclockwise around the contracted block.
    rot: Vec<EdgeId>,
    /// Corner per `rot` entry; corner `j` belongs to walk position `len - 1 - j`.
    corner: Vec<u32>,
    anchor: bool,
    mark: Option<EdgeId>,
}

/// Edge of the contracted picture between two items (cycle index or `k + block`).
struct CEdge {
    a: u32,
    b: u32,
    e: EdgeId,
    top: bool,
}

struct Tree {
    /// (block, bridge into the tree), left to right.
    anchors: Vec<(u32, EdgeId)>,
    anchor_labels: Vec<u32>,
    /// (label, block) sorted by label.
    ancillaries: Vec<(u32, u32)>,
}

fn internal(msg: impl Into<String>) -> EmbedError {
    EmbedError::Internal(msg.into())
}

fn global(flip: bool, local: Page) -> Page {
    if flip {
        local.flip()
    } else {
        local
    }
}

pub(crate) struct Solver<'a> {
    g: &'a Graph,
    emb: &'a PlanarEmbedding,
    pub pages: Vec<Option<Page>>,
    pub spine: Spine,
    pub audit: AuditLog,
    todo: Vec<Frame>,
    tick: u32,
    cyc_tick: Vec<u32>,
    cyc_at: Vec<u32>,
    in_tick: Vec<u32>,
    blk_at: Vec<u32>,
    loc: Vec<u32>,
    walk_tick: Vec<u32>,
    walk_at: Vec<u32>,
    lay_stamp: u32,
    lay_tick: Vec<u32>,
    lay_at: Vec<u32>,
    stack_tick: Vec<u32>,
    lobe_stamp: u32,
    lobe_tick: Vec<u32>,
    lobe_at: Vec<u32>,
    pocket_tick: Vec<u32>,
    pocket_at: Vec<u32>,
    bridge_tick: Vec<u32>,
    cedge_at: Vec<u32>,
    on_spine: Vec<bool>,
}

impl<'a> Solver<'a> {
    /// Starts from the outer cycle `outer`, listed counterclockwise.
    pub fn new(g: &'a Graph, emb: &'a PlanarEmbedding, outer: Vec<VertexId>) -> Result<Self, EmbedError> {
        let nv = g.vertex_bound();
        let ne = g.edge_bound();
        let mut s = Solver {
            g,
            emb,
            pages: vec![None; ne],
            spine: Spine::new(nv, &outer),
            audit: AuditLog::default(),
            todo: Vec::new(),
            tick: 0,
            cyc_tick: vec![0; nv],
            cyc_at: vec![0; nv],
            in_tick: vec![0; nv],
            blk_at: vec![NIL; nv],
            loc: vec![0; nv],
            walk_tick: vec![0; nv],
            walk_at: vec![0; nv],
            lay_stamp: 0,
            lay_tick: vec![0; nv],
            lay_at: vec![0; nv],
            stack_tick: vec![0; nv],
            lobe_stamp: 0,
            lobe_tick: vec![0; nv],
            lobe_at: vec![0; nv],
            pocket_tick: vec![0; nv],
            pocket_at: vec![0; nv],
            bridge_tick: vec![0; ne],
            cedge_at: vec![NIL; ne],
            on_spine: vec![false; nv],
        };
        let k = outer.len();
        for i in 0..k {
            s.on_spine[outer[i].idx()] = true;
            let e = g
                .edge_between(outer[i], outer[(i + 1) % k])
                .ok_or_else(|| internal("outer cycle edge missing"))?;
            s.pages[e.idx()] = Some(if i + 1 == k { Page::Top } else { Page::Bottom });
        }
        s.todo.push(Frame {
            cyc: outer,
            flip: false,
            mirror: false,
            jumps: Vec::new(),
            close: None,
            alias: None,
        });
        Ok(s)
    }

    pub fn run(&mut self) -> Result<(), EmbedError> {
        while let Some(f) = self.todo.pop() {
            self.frame(&f)?;
        }
        Ok(())
    }

    fn ccw(&self, rev: bool, v: VertexId, e: EdgeId) -> EdgeId {
        if rev {
            self.emb.cw_next(self.g, v, e)
        } else {
            self.emb.ccw_next(self.g, v, e)
        }
    }

    fn cw(&self, rev: bool, v: VertexId, e: EdgeId) -> EdgeId {
        self.ccw(!rev, v, e)
    }

    fn is_cyc(&self, v: VertexId) -> bool {
        self.cyc_tick[v.idx()] == self.tick
    }

    fn inside(&self, v: VertexId) -> bool {
        self.in_tick[v.idx()] == self.tick
    }

    fn in_block(&self, b: u32, v: VertexId, e: EdgeId) -> bool {
        let w = self.g.other(e, v);
        self.inside(w) && self.blk_at[w.idx()] == b && self.bridge_tick[e.idx()] != self.tick
    }

    /// Endpoint of `e` across from cycle position `i` (which may be the alias).
    fn across(&self, e: EdgeId, i: usize) -> VertexId {
        let (u, w) = self.g.endpoints(e);
        if self.is_cyc(u) && self.cyc_at[u.idx()] as usize == i {
            w
        } else {
            u
        }
    }

    /// Endpoint of an external edge of block `b` outside the block.
    fn far(&self, b: u32, e: EdgeId) -> VertexId {
        let (u, w) = self.g.endpoints(e);
        if self.inside(u) && self.blk_at[u.idx()] == b {
            w
        } else {
            u
        }
    }

    fn frame(&mut self, f: &Frame) -> Result<(), EmbedError> {
        let g = self.g;
        self.tick += 1;
        let tick = self.tick;
        self.audit.frames += 1;
        let k = f.cyc.len();
        let rev = f.flip ^ f.mirror;
        for (i, &v) in f.cyc.iter().enumerate() {
            self.cyc_tick[v.idx()] = tick;
            self.cyc_at[v.idx()] = i as u32;
        }
        let mut ce = Vec::with_capacity(k);
        for i in 0..k {
            let e = match f.close {
                Some([first, _]) if i + 1 == k => Some(first),
                _ => g.edge_between(f.cyc[i], f.cyc[(i + 1) % k]),
            };
            ce.push(e.ok_or_else(|| internal("frame cycle edge missing"))?);
        }
        // interior edges per cycle vertex, counterclockwise from the edge to the next vertex
        let mut inner: Vec<Vec<EdgeId>> = vec![Vec::new(); k];
        for i in 0..k {
            let v = f.cyc[i];
            let stop = ce[(i + k - 1) % k];
            let start = match f.close {
                Some([_, last]) if i + 1 == k => last,
                _ => ce[i],
            };
            let mut e = self.ccw(rev, v, start);
            while e != stop {
                inner[i].push(e);
                e = self.ccw(rev, v, e);
            }
        }
        if let Some((a, from, to)) = f.alias {
            self.cyc_tick[a.idx()] = tick;
            self.cyc_at[a.idx()] = 0;
            let mut e = self.ccw(rev, a, from);
            while e != to {
                inner[0].push(e);
                e = self.ccw(rev, a, e);
            }
        }
        if f.alias.is_none() && self.separate(f, &ce, &inner)? {
            return Ok(());
        }
        self.audit_entry(f, &ce, &inner)?;

        let mut chords = Vec::new();
        let mut ivs: Vec<VertexId> = Vec::new();
        for i in 0..k {
            for &e in &inner[i] {
                let w = self.across(e, i);
                if self.is_cyc(w) {
                    if self.cyc_at[w.idx()] as usize > i {
                        chords.push(e);
                    }
                } else if self.in_tick[w.idx()] != tick {
                    self.in_tick[w.idx()] = tick;
                    ivs.push(w);
                }
            }
        }
        let mut h = 0;
        while h < ivs.len() {
            let v = ivs[h];
            h += 1;
            for &(_, w) in g.incident(v) {
                if self.is_cyc(w) || self.in_tick[w.idx()] == tick {
                    continue;
                }
                if self.on_spine[w.idx()] {
                    return Err(internal("interior reaches a vertex drawn elsewhere"));
                }
                self.in_tick[w.idx()] = tick;
                ivs.push(w);
            }
        }
        for (i, &v) in ivs.iter().enumerate() {
            self.loc[v.idx()] = i as u32;
        }
        self.mark_bridges(&ivs);
        let mut blocks = self.split_blocks(rev, &ivs)?;
        let nb = blocks.len();

        // marks
        for b in 0..nb {
            let mut left: Option<u32> = None;
            for &e in &blocks[b].rot {
                let o = self.far(b as u32, e);
                if self.is_cyc(o) {
                    let i = self.cyc_at[o.idx()];
                    left = Some(left.map_or(i, |l| l.min(i)));
                }
            }
            let Some(l) = left else { continue };
            let to_l: Vec<EdgeId> = blocks[b]
                .rot
                .iter()
                .copied()
                .filter(|&e| {
                    let o = self.far(b as u32, e);
                    self.is_cyc(o) && self.cyc_at[o.idx()] == l
                })
                .collect();
            let mark = if to_l.len() == 1 {
                to_l[0]
            } else {
                let r = inner[l as usize][0];
                if !to_l.contains(&r) {
                    return Err(internal("double edge to the leftmost neighbor is not its right edge"));
                }
                r
            };
            blocks[b].anchor = true;
            blocks[b].mark = Some(mark);
        }

        // anchors
        let mut right: Vec<Vec<u32>> = vec![Vec::new(); k];
        let mut left: Vec<Vec<u32>> = vec![Vec::new(); k];
        for i in 0..k {
            let marked: Vec<bool> = inner[i]
                .iter()
                .map(|&e| {
                    let w = self.across(e, i);
                    self.inside(w) && blocks[self.blk_at[w.idx()] as usize].mark == Some(e)
                })
                .collect();
            for (j, side) in place::anchor_sides(&marked, i == 0, i + 1 == k)? {
                let b = self.blk_at[self.across(inner[i][j], i).idx()];
                match side {
                    Side::Right => right[i].push(b),
                    Side::Left => left[i].push(b),
                }
            }
        }
        // clear the gap under each jump edge: anchors move across the lobe's cut
        // vertex, right to left so they pass through consecutive gaps
        let mut raised = vec![false; nb];
        let mut is_jump = vec![false; k];
        let mut jumps = f.jumps.clone();
        jumps.sort_unstable_by(|a, b| b.cmp(a));
        for &i in &jumps {
            let i = i as usize;
            is_jump[i] = true;
            if inner[i].is_empty() {
                let moved = std::mem::take(&mut left[i + 1]);
                if !moved.is_empty() && i == 0 {
                    return Err(EmbedError::Unsupported("lobe gap next to the leftmost cycle vertex"));
                }
                for &b in &moved {
                    raised[b as usize] = true;
                }
                left[i].extend(moved);
            } else if inner[i + 1].is_empty() {
                if !right[i].is_empty() {
                    return Err(EmbedError::Unsupported("lobe gap left of its cut vertex holds anchors"));
                }
            } else {
                return Err(internal("lobe gap between two vertices with interior edges"));
            }
        }
        let kk = k as u32;
        let mut seq: Vec<u32> = Vec::with_capacity(k + nb);
        for i in 0..k {
            seq.push(i as u32);
            seq.extend(right[i].iter().map(|&b| kk + b));
            if i + 1 < k {
                seq.extend(left[i + 1].iter().map(|&b| kk + b));
            }
        }

        // contracted edges
        let mut cedges: Vec<CEdge> = Vec::new();
        for i in 0..k {
            cedges.push(CEdge {
                a: i as u32,
                b: ((i + 1) % k) as u32,
                e: ce[i],
                top: i + 1 == k || is_jump[i],
            });
        }
        for &e in &chords {
            let (u, w) = g.endpoints(e);
            cedges.push(CEdge {
                a: self.cyc_at[u.idx()],
                b: self.cyc_at[w.idx()],
                e,
                top: true,
            });
        }
        for b in 0..nb as u32 {
            for &e in &blocks[b as usize].rot {
                let o = self.far(b, e);
                if self.is_cyc(o) {
                    cedges.push(CEdge {
                        a: kk + b,
                        b: self.cyc_at[o.idx()],
                        e,
                        top: raised[b as usize] || blocks[b as usize].mark != Some(e),
                    });
                } else if self.blk_at[o.idx()] > b {
                    cedges.push(CEdge {
                        a: kk + b,
                        b: kk + self.blk_at[o.idx()],
                        e,
                        top: true,
                    });
                }
            }
        }
        for (i, c) in cedges.iter().enumerate() {
            self.cedge_at[c.e.idx()] = i as u32;
        }
        let nitems = k + nb;
        let mut cadj: Vec<Vec<u32>> = vec![Vec::new(); nitems];
        for (i, c) in cedges.iter().enumerate() {
            cadj[c.a as usize].push(i as u32);
            cadj[c.b as usize].push(i as u32);
        }
        let mut pos = vec![NIL; nitems];
        for (p, &it) in seq.iter().enumerate() {
            pos[it as usize] = p as u32;
        }

        self.place_trees(k, &blocks, &cedges, &cadj, &mut seq, &mut pos)?;

        for top in [true, false] {
            let arcs: Vec<(usize, usize)> = cedges
                .iter()
                .filter(|c| c.top == top)
                .map(|c| (pos[c.a as usize] as usize, pos[c.b as usize] as usize))
                .collect();
            if place::crossing_pair(&arcs).is_some() {
                return Err(EmbedError::Invariant {
                    ip: Invariant::Ip1,
                    snapshot: self.snapshot(f, &seq, &blocks, &cedges),
                });
            }
        }

        // open every block at a seam
        let mut layouts: Vec<Vec<VertexId>> = vec![Vec::new(); nb];
        let mut next_frames = Vec::new();
        for b in 0..nb {
            let blk = &blocks[b];
            if blk.walk.is_empty() {
                layouts[b] = vec![blk.members[0]];
                continue;
            }
            let pc = pos[k + b];
            let keys: Vec<RotKey> = blk
                .rot
                .iter()
                .map(|&e| {
                    let c = &cedges[self.cedge_at[e.idx()] as usize];
                    let other = if c.a as usize == k + b { c.b } else { c.a };
                    let po = pos[other as usize];
                    place::rot_key(c.top, po > pc, po.abs_diff(pc) as usize)
                })
                .collect();
            if !place::cyclic_sorted(&keys) {
                return Err(EmbedError::Invariant {
                    ip: Invariant::Rotation,
                    snapshot: format!("block {b}, keys {keys:?}; {}", self.snapshot(f, &seq, &blocks, &cedges)),
                });
            }
            let opened = self.open_block(b as u32, blk, &keys).map_err(|e| match e {
                EmbedError::Internal(m) => internal(format!(
                    "{m} (block {b}, keys {keys:?}, corners {:?}); {}",
                    blk.corner,
                    self.snapshot(f, &seq, &blocks, &cedges)
                )),
                e => e,
            })?;
            for &e in &opened.top {
                self.pages[e.idx()] = Some(global(f.flip, Page::Top));
            }
            for &e in &opened.bottom {
                self.pages[e.idx()] = Some(global(f.flip, Page::Bottom));
            }
            for lobe in opened.lobes {
                next_frames.push(Frame {
                    cyc: lobe.cyc,
                    flip: !f.flip,
                    mirror: f.mirror ^ lobe.mirror,
                    jumps: lobe.jumps,
                    close: None,
                    alias: None,
                });
            }
            layouts[b] = opened.layout;
        }

        for c in &cedges {
            self.pages[c.e.idx()] = Some(global(f.flip, if c.top { Page::Top } else { Page::Bottom }));
        }
        let mut last = f.cyc[0];
        for &it in &seq {
            if (it as usize) < k {
                last = f.cyc[it as usize];
                continue;
            }
            for &v in &layouts[it as usize - k] {
                if f.mirror {
                    self.spine.insert_before(last, v);
                } else {
                    self.spine.insert_after(last, v);
                }
                self.on_spine[v.idx()] = true;
                last = v;
            }
        }
        self.todo.extend(next_frames);
        Ok(())
    }

    /// Splits `f` when `v_1` has two interior edges and exactly one is a chord.
    /// The chords leaving `v_1` form a path to some `v_j`; everything left of it
    /// becomes one frame per chord, the part right of it is drawn at once with
    /// the path contracted into `v_j`. If `v_1`'s other edge then lies on the
    /// bottom page, `v_1` moves next to `v_j` and the first left frame is closed
    /// through it.
    fn separate(&mut self, f: &Frame, ce: &[EdgeId], inner: &[Vec<EdgeId>]) -> Result<bool, EmbedError> {
        let k = f.cyc.len();
        // a borrowed closing path leaves room for a real v_1-v_k edge in a triangle
        if (k < 4 && f.close.is_none()) || k < 3 || inner[0].len() != 2 {
            return Ok(false);
        }
        let is_chord: Vec<bool> = inner[0].iter().map(|&e| self.is_cyc(self.across(e, 0))).collect();
        if is_chord[0] == is_chord[1] {
            return Ok(false);
        }
        let c = usize::from(is_chord[1]);
        let (chord, other) = (inner[0][c], inner[0][1 - c]);
        let mut path = vec![0, self.cyc_at[self.across(chord, 0).idx()] as usize];
        let mut last = chord;
        loop {
            let at = *path.last().unwrap();
            let next = inner[at].iter().copied().find(|&e| {
                let w = self.across(e, at);
                self.is_cyc(w) && self.cyc_at[w.idx()] as usize > at + 1
            });
            let Some(e) = next else { break };
            self.pages[e.idx()] = Some(global(f.flip, Page::Top));
            path.push(self.cyc_at[self.across(e, at).idx()] as usize);
            last = e;
        }
        self.audit.separated += 1;
        self.pages[chord.idx()] = Some(global(f.flip, Page::Top));
        let j = *path.last().unwrap();
        if c == 0 && j + 1 == k {
            return Err(EmbedError::Unsupported("chord path from v_1 ends at v_k with the other edge outside it"));
        }
        let mut rest = Vec::with_capacity(path.len());
        if j + 1 < k {
            let close_last = f.close.map_or(ce[k - 1], |[_, l]| l);
            let right = Frame {
                cyc: f.cyc[j..].to_vec(),
                flip: f.flip,
                mirror: f.mirror,
                jumps: f.jumps.iter().filter(|&&i| i as usize >= j).map(|&i| i - j as u32).collect(),
                close: Some([last, close_last]),
                alias: Some((f.cyc[0], chord, ce[k - 1])),
            };
            self.frame(&right)?;
            let w1 = f.cyc[0];
            if c == 0 && self.pages[other.idx()] == Some(global(f.flip, Page::Bottom)) {
                let wj = f.cyc[j];
                self.spine.unlink(w1);
                if f.mirror {
                    self.spine.insert_before(wj, w1);
                } else {
                    self.spine.insert_after(wj, w1);
                }
                self.pages[ce[0].idx()] = Some(global(f.flip, Page::Top));
                rest.push(f.segment(1, path[1], Some([ce[0], chord])));
            }
        }
        if rest.is_empty() {
            rest.push(f.segment(0, path[1], None));
        }
        for w in path[1..].windows(2) {
            rest.push(f.segment(w[0], w[1], None));
        }
        self.todo.extend(rest);
        Ok(true)
    }

    /// Frame state for error reports.
    fn snapshot(&self, f: &Frame, seq: &[u32], blocks: &[Block], cedges: &[CEdge]) -> String {
        let k = f.cyc.len() as u32;
        let name = |it: u32| {
            if it < k {
                format!("v{}", f.cyc[it as usize].0)
            } else {
                let m: Vec<u32> = blocks[(it - k) as usize].members.iter().map(|v| v.0).collect();
                format!("B{}{:?}", it - k, m)
            }
        };
        let order: Vec<String> = seq.iter().map(|&it| name(it)).collect();
        let edges: Vec<String> = cedges
            .iter()
            .map(|c| format!("{}-{}{}", name(c.a), name(c.b), if c.top { "T" } else { "B" }))
            .collect();
        format!(
            "frame flip={} mirror={} jumps={:?} order [{}] edges [{}]",
            f.flip,
            f.mirror,
            f.jumps,
            order.join(" "),
            edges.join(" ")
        )
    }

    fn audit_entry(&self, f: &Frame, ce: &[EdgeId], inner: &[Vec<EdgeId>]) -> Result<(), EmbedError> {
        let k = f.cyc.len();
        let mut jump = vec![false; k];
        for &i in &f.jumps {
            jump[i as usize] = true;
        }
        let mut consecutive = true;
        for i in 0..k - 1 {
            let mut v = f.cyc[i];
            loop {
                match self.spine.step(v, !f.mirror) {
                    Some(x) if x == f.cyc[i + 1] => break,
                    Some(x) if jump[i] && !self.is_cyc(x) => v = x,
                    _ => {
                        consecutive = false;
                        break;
                    }
                }
            }
        }
        let paged = ce.iter().enumerate().all(|(i, e)| {
            let want = if i + 1 == k || jump[i] { Page::Top } else { Page::Bottom };
            self.pages[e.idx()] == Some(global(f.flip, want))
        });
        let chords = inner[0].iter().filter(|&&e| self.is_cyc(self.across(e, 0))).count();
        let ip = if !(consecutive && paged) {
            Invariant::Ip2
        } else if inner[k - 1].len() > 1 {
            Invariant::Ip3
        } else if inner[0].len() == 2 && chords == 1 {
            Invariant::Ip4
        } else {
            return Ok(());
        };
        let cyc: Vec<u32> = f.cyc.iter().map(|v| v.0).collect();
        let degrees: Vec<usize> = inner.iter().map(Vec::len).collect();
        Err(EmbedError::Invariant {
            ip,
            snapshot: format!(
                "frame {cyc:?} flip={} mirror={} jumps={:?} interior degrees {degrees:?}",
                f.flip, f.mirror, f.jumps
            ),
        })
    }

    fn mark_bridges(&mut self, ivs: &[VertexId]) {
        let g = self.g;
        let tick = self.tick;
        let n = ivs.len();
        let mut disc = vec![NIL; n];
        let mut low = vec![0u32; n];
        let mut t = 0u32;
        let mut st: Vec<(u32, Option<EdgeId>, u32)> = Vec::new();
        for r in 0..n {
            if disc[r] != NIL {
                continue;
            }
            disc[r] = t;
            low[r] = t;
            t += 1;
            st.push((r as u32, None, 0));
            while let Some(top) = st.last_mut() {
                let (v, pe, it) = *top;
                let inc = g.incident(ivs[v as usize]);
                if (it as usize) < inc.len() {
                    top.2 += 1;
                    let (e, w) = inc[it as usize];
                    if Some(e) == pe || self.in_tick[w.idx()] != tick {
                        continue;
                    }
                    let wl = self.loc[w.idx()] as usize;
                    if disc[wl] == NIL {
                        disc[wl] = t;
                        low[wl] = t;
                        t += 1;
                        st.push((wl as u32, Some(e), 0));
                    } else {
                        low[v as usize] = low[v as usize].min(disc[wl]);
                    }
                } else {
                    st.pop();
                    if let (Some(e), Some(&(p, _, _))) = (pe, st.last()) {
                        let (p, v) = (p as usize, v as usize);
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            self.bridge_tick[e.idx()] = tick;
                        }
                    }
                }
            }
        }
    }

    fn split_blocks(&mut self, rev: bool, ivs: &[VertexId]) -> Result<Vec<Block>, EmbedError> {
        let g = self.g;
        let tick = self.tick;
        for &v in ivs {
            self.blk_at[v.idx()] = NIL;
        }
        let mut blocks = Vec::new();
        for &s in ivs {
            if self.blk_at[s.idx()] != NIL {
                continue;
            }
            let b = blocks.len() as u32;
            self.blk_at[s.idx()] = b;
            let mut members = vec![s];
            let mut h = 0;
            while h < members.len() {
                let v = members[h];
                h += 1;
                for &(e, w) in g.incident(v) {
                    if self.in_tick[w.idx()] == tick
                        && self.bridge_tick[e.idx()] != tick
                        && self.blk_at[w.idx()] == NIL
                    {
                        self.blk_at[w.idx()] = b;
                        members.push(w);
                    }
                }
            }
            blocks.push(self.outline(rev, b, members)?);
        }
        Ok(blocks)
    }

    /// Outer walk, corners and contracted rotation of block `b`.
    fn outline(&self, rev: bool, b: u32, members: Vec<VertexId>) -> Result<Block, EmbedError> {
        let g = self.g;
        if members.len() == 1 {
            let v = members[0];
            let mut rot = Vec::new();
            if let Some(&e0) = self.emb.rotation(v).first() {
                let mut e = e0;
                loop {
                    rot.push(e);
                    e = self.ccw(rev, v, e);
                    if e == e0 {
                        break;
                    }
                }
            }
            let corner = vec![0; rot.len()];
            return Ok(Block {
                members,
                walk: Vec::new(),
                rot,
                corner,
                anchor: false,
                mark: None,
            });
        }
        let (start, ext) = members
            .iter()
            .find_map(|&v| {
                g.incident(v)
                    .iter()
                    .find(|&&(e, _)| !self.in_block(b, v, e))
                    .map(|&(e, _)| (v, e))
            })
            .ok_or_else(|| internal("block without external edge"))?;
        let mut x = self.cw(rev, start, ext);
        while !self.in_block(b, start, x) {
            x = self.cw(rev, start, x);
        }
        let mut walk = Vec::new();
        let (mut v, mut e) = (start, x);
        loop {
            walk.push((v, e));
            let w = g.other(e, v);
            let mut n = self.cw(rev, w, e);
            while !self.in_block(b, w, n) {
                n = self.cw(rev, w, n);
            }
            v = w;
            e = n;
            if v == start && e == x {
                break;
            }
            if walk.len() > 4 * members.len() + 4 {
                return Err(internal("block outer walk does not close"));
            }
        }
        let len = walk.len();
        let mut rot = Vec::new();
        let mut corner = Vec::new();
        for j in 0..len {
            let i = len - 1 - j;
            let (t, out) = walk[i];
            let inc = walk[(i + len - 1) % len].1;
            let mut c = self.ccw(rev, t, out);
            while c != inc {
                rot.push(c);
                corner.push(j as u32);
                c = self.ccw(rev, t, c);
            }
        }
        Ok(Block {
            members,
            walk,
            rot,
            corner,
            anchor: false,
            mark: None,
        })
    }

    /// Opens `blk` at a seam allowed by `keys`, preferring seams whose lobes all
    /// meet the entry conditions of their frames.
    fn open_block(&mut self, b: u32, blk: &Block, keys: &[RotKey]) -> Result<Opened, EmbedError> {
        let tick = self.tick;
        let len = blk.walk.len();
        // walk_tick marks members, walk_at counts visits on the outer walk
        for &(v, _) in &blk.walk {
            if self.walk_tick[v.idx()] != tick {
                self.walk_tick[v.idx()] = tick;
                self.walk_at[v.idx()] = 0;
            }
            self.walk_at[v.idx()] += 1;
        }
        let cands = place::seam_boundaries(keys, &blk.corner, len);
        let mut best: Option<(usize, Opened)> = None;
        let mut starts = Vec::with_capacity(2 * cands.len());
        for &t in &cands {
            let s = len - 1 - t;
            starts.push(s);
            if self.walk_at[blk.walk[s].0.idx()] > 1 {
                starts.push((s + 1) % len);
            }
        }
        for start in starts {
            let (opened, penalty) = self.open_at(b, blk, start)?;
            if best.as_ref().map_or(true, |(p, _)| penalty < *p) {
                let done = penalty == 0;
                best = Some((penalty, opened));
                if done {
                    break;
                }
            }
        }
        best.map(|(_, opened)| opened)
            .ok_or_else(|| internal("no seam opens a block-vertex consistently"))
    }

    /// Layout from walk position `s0`. Each revisit of a vertex closes a lobe;
    /// lobes form a tree and a child lobe sits beside its cut vertex, on the
    /// side that keeps every jump to the right of the cut vertex in the parent's
    /// own frame. Unit steps go on top, jumps and lobe-closing edges below.
    fn open_at(&mut self, b: u32, blk: &Block, s0: usize) -> Result<(Opened, usize), EmbedError> {
        let g = self.g;
        let len = blk.walk.len();
        let start = blk.walk[s0].0;
        self.lay_stamp += 1;
        let stamp = self.lay_stamp;
        self.lay_tick[start.idx()] = stamp;
        self.stack_tick[start.idx()] = stamp;
        let mut stack = vec![start];
        // walk order from the cut vertex; children close before parents, the root last
        let mut raw: Vec<Vec<VertexId>> = Vec::new();
        for j in 0..len {
            let w = blk.walk[(s0 + j + 1) % len].0;
            if self.lay_tick[w.idx()] == stamp {
                if self.stack_tick[w.idx()] != stamp {
                    return Err(internal("outer walk revisits a closed lobe"));
                }
                let mut lobe = Vec::new();
                while let Some(&x) = stack.last() {
                    if x == w {
                        break;
                    }
                    self.stack_tick[x.idx()] = 0;
                    lobe.push(x);
                    stack.pop();
                }
                lobe.push(w);
                lobe.reverse();
                raw.push(lobe);
            } else {
                self.lay_tick[w.idx()] = stamp;
                self.stack_tick[w.idx()] = stamp;
                stack.push(w);
            }
        }
        let nl = raw.len();
        let root = nl - 1;
        for (li, lobe) in raw.iter().enumerate().take(root) {
            self.pocket_tick[lobe[0].idx()] = stamp;
            self.pocket_at[lobe[0].idx()] = li as u32;
        }
        let has_pocket = |this: &Self, li: usize, u: VertexId| {
            (li == root || u != raw[li][0]) && this.pocket_tick[u.idx()] == stamp
        };

        let mut right = vec![true; nl];
        let mut order: Vec<Vec<VertexId>> = vec![Vec::new(); nl];
        let mut mirror = vec![false; nl];
        let mut penalty = 0;
        for li in (0..nl).rev() {
            let ord: Vec<VertexId> = if li == root || right[li] {
                raw[li].clone()
            } else {
                raw[li][1..].iter().chain(&raw[li][..1]).copied().collect()
            };
            let m = ord.len();
            self.lobe_stamp += 1;
            for (i, &v) in ord.iter().enumerate() {
                self.lobe_tick[v.idx()] = self.lobe_stamp;
                self.lobe_at[v.idx()] = i as u32;
            }
            let mut score = [0usize; 2];
            for (mi, sc) in score.iter_mut().enumerate() {
                let (v1, vk) = if mi == 1 { (ord[m - 1], ord[0]) } else { (ord[0], ord[m - 1]) };
                let ok3 = self.lobe_degree(b, vk) <= 3;
                let ok4 = self.lobe_degree(b, v1) < 4 || self.lobe_chords(b, v1, m) != 1;
                *sc = 2 * usize::from(!ok3) + usize::from(!ok4);
            }
            mirror[li] = score[1] < score[0];
            penalty += score[usize::from(mirror[li])];
            for (idx, &u) in ord.iter().enumerate() {
                if has_pocket(self, li, u) {
                    let local = if mirror[li] { m - 1 - idx } else { idx };
                    right[self.pocket_at[u.idx()] as usize] = (local != 0) != mirror[li];
                }
            }
            order[li] = ord;
        }

        enum Item {
            V(VertexId),
            L(usize),
        }
        let mut layout = Vec::with_capacity(len);
        let mut work = vec![Item::L(root)];
        while let Some(it) = work.pop() {
            match it {
                Item::V(v) => {
                    self.lay_at[v.idx()] = layout.len() as u32;
                    layout.push(v);
                }
                Item::L(li) => {
                    for &u in order[li].iter().rev() {
                        if li != root && u == raw[li][0] {
                            continue;
                        }
                        if has_pocket(self, li, u) {
                            let p = self.pocket_at[u.idx()] as usize;
                            if right[p] {
                                work.push(Item::L(p));
                                work.push(Item::V(u));
                            } else {
                                work.push(Item::V(u));
                                work.push(Item::L(p));
                            }
                        } else {
                            work.push(Item::V(u));
                        }
                    }
                }
            }
        }

        let (mut top, mut bottom) = (Vec::new(), Vec::new());
        let mut lobes = Vec::with_capacity(nl);
        for li in 0..nl {
            let ord = &order[li];
            let m = ord.len();
            for i in 0..m {
                let (x, y) = (ord[i], ord[(i + 1) % m]);
                let e = g.edge_between(x, y).ok_or_else(|| internal("lobe edge missing"))?;
                if i + 1 < m && self.lay_at[y.idx()] == self.lay_at[x.idx()] + 1 {
                    top.push(e);
                } else {
                    bottom.push(e);
                }
            }
            let mut cyc = ord.clone();
            if mirror[li] {
                cyc.reverse();
            }
            let jumps = (0..m - 1)
                .filter(|&i| self.lay_at[cyc[i].idx()].abs_diff(self.lay_at[cyc[i + 1].idx()]) != 1)
                .map(|i| i as u32)
                .collect();
            lobes.push(Lobe {
                cyc,
                mirror: mirror[li],
                jumps,
            });
        }
        Ok((Opened { layout, top, bottom, lobes }, penalty))
    }

    /// Degree of `v` inside its lobe: a vertex visited twice by the outer walk
    /// has two edges in each of its lobes.
    fn lobe_degree(&self, b: u32, v: VertexId) -> usize {
        if self.walk_at[v.idx()] > 1 {
            return 2;
        }
        self.g.incident(v).iter().filter(|&&(e, _)| self.in_block(b, v, e)).count()
    }

    /// Chords of the current lobe (of length `m`) at `v`.
    fn lobe_chords(&self, b: u32, v: VertexId, m: usize) -> usize {
        let i = self.lobe_at[v.idx()] as usize;
        self.g
            .incident(v)
            .iter()
            .filter(|&&(e, w)| {
                if !self.in_block(b, v, e) || self.lobe_tick[w.idx()] != self.lobe_stamp {
                    return false;
                }
                let d = i.abs_diff(self.lobe_at[w.idx()] as usize);
                d != 1 && d + 1 != m
            })
            .count()
    }

    fn place_trees(
        &mut self,
        k: usize,
        blocks: &[Block],
        cedges: &[CEdge],
        cadj: &[Vec<u32>],
        seq: &mut Vec<u32>,
        pos: &mut [u32],
    ) -> Result<(), EmbedError> {
        let nb = blocks.len();
        let kk = k as u32;
        let mut tree_of = vec![NIL; nb];
        let mut trees: Vec<Tree> = Vec::new();
        let mut label = vec![NIL; nb];
        let mut parent = vec![NIL; nb];
        let mut pidx = vec![0u32; nb];
        let mut split = vec![0u32; nb];
        let mut kids: Vec<Vec<u32>> = vec![Vec::new(); nb];
        for s in 0..nb {
            if blocks[s].anchor || tree_of[s] != NIL {
                continue;
            }
            let t = trees.len() as u32;
            tree_of[s] = t;
            let mut members = vec![s as u32];
            let mut anchors: Vec<(u32, EdgeId)> = Vec::new();
            let mut h = 0;
            while h < members.len() {
                let a = members[h];
                h += 1;
                for &e in &blocks[a as usize].rot {
                    let o = self.blk_at[self.far(a, e).idx()];
                    if blocks[o as usize].anchor {
                        anchors.push((o, e));
                    } else if tree_of[o as usize] == NIL {
                        tree_of[o as usize] = t;
                        members.push(o);
                    }
                }
            }
            anchors.sort_by_key(|&(b, _)| pos[k + b as usize]);
            if anchors.len() < 2 || anchors.windows(2).any(|w| w[0].0 == w[1].0) {
                return Err(internal("anchored tree needs two distinct anchors"));
            }
            // children counterclockwise after the parent edge, walked from the leftmost anchor
            let (root, root_edge) = anchors[0];
            let mut touched = vec![root];
            label[root as usize] = 0;
            let mut stack = vec![(self.blk_at[self.far(root, root_edge).idx()], root, root_edge)];
            while let Some((x, up, pe)) = stack.pop() {
                if label[x as usize] != NIL {
                    return Err(internal("anchored tree is not a tree"));
                }
                label[x as usize] = 0;
                parent[x as usize] = up;
                touched.push(x);
                if blocks[x as usize].anchor {
                    continue;
                }
                let rot = &blocks[x as usize].rot;
                let p = rot.iter().position(|&e| e == pe).unwrap();
                pidx[x as usize] = p as u32;
                kids[x as usize].clear();
                for d in 1..rot.len() {
                    let e = rot[(p + d) % rot.len()];
                    kids[x as usize].push(self.blk_at[self.far(x, e).idx()]);
                }
                for d in (1..rot.len()).rev() {
                    let e = rot[(p + d) % rot.len()];
                    stack.push((self.blk_at[self.far(x, e).idx()], x, e));
                }
            }
            // a block sits after a prefix of its subtrees; the split leaves the
            // rotation intact and must put the seam between two different corners
            let last = anchors.last().unwrap().0;
            let mut on_path = vec![];
            let mut y = parent[last as usize];
            while y != root {
                on_path.push(y);
                y = parent[y as usize];
            }
            for &x in &touched[1..] {
                let blk = &blocks[x as usize];
                if blk.anchor {
                    continue;
                }
                let d = kids[x as usize].len();
                let cap = if on_path.contains(&x) { d - 1 } else { d };
                let (len, p) = (blk.rot.len(), pidx[x as usize] as usize);
                split[x as usize] = if blk.walk.is_empty() {
                    0
                } else {
                    (0..=cap)
                        .find(|&i| blk.corner[(p + i) % len] != blk.corner[(p + i + 1) % len])
                        .unwrap_or(0) as u32
                };
            }
            enum Step {
                Visit(u32),
                Emit(u32),
            }
            let mut next_label = 1;
            let mut steps = vec![Step::Visit(self.blk_at[self.far(root, root_edge).idx()])];
            while let Some(st) = steps.pop() {
                match st {
                    Step::Emit(x) => {
                        label[x as usize] = next_label;
                        next_label += 1;
                    }
                    Step::Visit(x) if blocks[x as usize].anchor => {
                        label[x as usize] = next_label;
                        next_label += 1;
                    }
                    Step::Visit(x) => {
                        let ch = &kids[x as usize];
                        let i = split[x as usize] as usize;
                        steps.extend(ch[i..].iter().rev().map(|&c| Step::Visit(c)));
                        steps.push(Step::Emit(x));
                        steps.extend(ch[..i].iter().rev().map(|&c| Step::Visit(c)));
                    }
                }
            }
            let anchor_labels: Vec<u32> = anchors.iter().map(|&(b, _)| label[b as usize]).collect();
            if anchor_labels.windows(2).any(|w| w[0] >= w[1]) {
                return Err(PlaceError::LabelOrder.into());
            }
            let mut ancillaries: Vec<(u32, u32)> = members.iter().map(|&a| (label[a as usize], a)).collect();
            ancillaries.sort_unstable();
            for x in touched {
                label[x as usize] = NIL;
            }
            trees.push(Tree {
                anchors,
                anchor_labels,
                ancillaries,
            });
        }
        if trees.is_empty() {
            return Ok(());
        }

        let mut apos: Vec<(u32, u32)> = Vec::new();
        for (t, tr) in trees.iter().enumerate() {
            for &(b, _) in &tr.anchors {
                apos.push((pos[k + b as usize], t as u32));
            }
        }
        apos.sort_unstable();
        let mut deps = Vec::new();
        let mut key = Vec::with_capacity(trees.len());
        for (t, tr) in trees.iter().enumerate() {
            let lo = pos[k + tr.anchors[0].0 as usize];
            let hi = pos[k + tr.anchors.last().unwrap().0 as usize];
            key.push(lo as usize);
            let from = apos.partition_point(|&(p, _)| p <= lo);
            for &(p, o) in &apos[from..] {
                if p >= hi {
                    break;
                }
                if o as usize != t {
                    deps.push((o as usize, t));
                }
            }
        }
        deps.sort_unstable();
        deps.dedup();
        let order = place::tree_order(trees.len(), &deps, &key)?;

        for t in order {
            let tr = &trees[t];
            let mut gaps: Vec<Vec<u32>> = vec![Vec::new(); tr.anchors.len() - 1];
            for &(lab, a) in &tr.ancillaries {
                let j = tr.anchor_labels.partition_point(|&l| l < lab);
                if j == 0 || j == tr.anchors.len() {
                    return Err(internal("ancillary label outside its anchors"));
                }
                gaps[j - 1].push(a);
            }
            for j in (0..gaps.len()).rev() {
                if gaps[j].is_empty() {
                    continue;
                }
                let p0 = pos[k + tr.anchors[j].0 as usize] as usize;
                let p1 = pos[k + tr.anchors[j + 1].0 as usize] as usize;
                let mut arcs = Vec::new();
                for q in p0..=p1 {
                    for &ci in &cadj[seq[q] as usize] {
                        let c = &cedges[ci as usize];
                        if !c.top {
                            continue;
                        }
                        let other = if c.a == seq[q] { c.b } else { c.a };
                        let r = pos[other as usize];
                        if r != NIL && (r as usize) > q && (r as usize) <= p1 {
                            arcs.push((q - p0, r as usize - p0));
                        }
                    }
                }
                let i = place::free_slot(p1 - p0, &arcs).ok_or(PlaceError::NoSlot)?;
                let at = p0 + i + 1;
                seq.splice(at..at, gaps[j].iter().map(|&a| kk + a));
            }
            for (p, &it) in seq.iter().enumerate() {
                pos[it as usize] = p as u32;
            }
        }
        Ok(())
    }
}
