// Left-right planarity test with embedding extraction on the underlying simple graph.

use std::collections::HashMap;

use crate::graph::{Graph, VertexId};

type E = u32;

#[derive(Clone, Copy, Default)]
struct Interval {
    low: Option<E>,
    high: Option<E>,
}

impl Interval {
    fn empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy)]
struct ConflictPair {
    serial: u32,
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct State {
    n: usize,
    adjs: Vec<Vec<u32>>,
    height: Vec<Option<u32>>,
    parent_edge: Vec<Option<E>>,
    roots: Vec<u32>,
    // per oriented edge
    src: Vec<u32>,
    dst: Vec<u32>,
    lowpt: Vec<u32>,
    lowpt2: Vec<u32>,
    nesting: Vec<i64>,
    refe: Vec<Option<E>>,
    side: Vec<i64>,
    lowpt_edge: Vec<E>,
    stack_bottom: Vec<Option<u32>>,
    id_of: HashMap<(u32, u32), E>,
    out: Vec<Vec<E>>,
    ordered: Vec<Vec<E>>,
    s: Vec<ConflictPair>,
    serial: u32,
}

impl State {
    fn oriented(&self, v: u32, w: u32) -> bool {
        self.id_of.contains_key(&(v, w)) || self.id_of.contains_key(&(w, v))
    }

    fn orient(&mut self, v: u32, w: u32) -> E {
        let id = self.src.len() as E;
        self.src.push(v);
        self.dst.push(w);
        self.lowpt.push(0);
        self.lowpt2.push(0);
        self.nesting.push(0);
        self.refe.push(None);
        self.side.push(1);
        self.lowpt_edge.push(id);
        self.stack_bottom.push(None);
        self.id_of.insert((v, w), id);
        self.out[v as usize].push(id);
        id
    }

    fn top_serial(&self) -> Option<u32> {
        self.s.last().map(|p| p.serial)
    }

    fn new_pair(&mut self, left: Interval, right: Interval) -> ConflictPair {
        self.serial += 1;
        ConflictPair {
            serial: self.serial,
            left,
            right,
        }
    }

    fn conflicting(&self, i: &Interval, b: E) -> bool {
        !i.empty() && self.lowpt[i.high.unwrap() as usize] > self.lowpt[b as usize]
    }

    fn lowest(&self, p: &ConflictPair) -> u32 {
        if p.left.empty() {
            return self.lowpt[p.right.low.unwrap() as usize];
        }
        if p.right.empty() {
            return self.lowpt[p.left.low.unwrap() as usize];
        }
        self.lowpt[p.left.low.unwrap() as usize].min(self.lowpt[p.right.low.unwrap() as usize])
    }

    fn dfs_orientation(&mut self, root: u32) {
        let mut stack = vec![root];
        let mut ind = vec![0usize; self.n];
        let mut skip_init: HashMap<(u32, u32), bool> = HashMap::new();
        while let Some(v) = stack.pop() {
            let e = self.parent_edge[v as usize];
            while ind[v as usize] < self.adjs[v as usize].len() {
                let w = self.adjs[v as usize][ind[v as usize]];
                let vw_key = (v, w);
                let vw;
                if !skip_init.get(&vw_key).copied().unwrap_or(false) {
                    if self.oriented(v, w) {
                        ind[v as usize] += 1;
                        continue;
                    }
                    vw = self.orient(v, w);
                    let hv = self.height[v as usize].unwrap();
                    self.lowpt[vw as usize] = hv;
                    self.lowpt2[vw as usize] = hv;
                    if self.height[w as usize].is_none() {
                        self.parent_edge[w as usize] = Some(vw);
                        self.height[w as usize] = Some(hv + 1);
                        stack.push(v);
                        stack.push(w);
                        skip_init.insert(vw_key, true);
                        break;
                    } else {
                        self.lowpt[vw as usize] = self.height[w as usize].unwrap();
                    }
                } else {
                    vw = self.id_of[&vw_key];
                }
                let vwi = vw as usize;
                self.nesting[vwi] = 2 * i64::from(self.lowpt[vwi]);
                if self.lowpt2[vwi] < self.height[v as usize].unwrap() {
                    self.nesting[vwi] += 1;
                }
                if let Some(e) = e {
                    let ei = e as usize;
                    if self.lowpt[vwi] < self.lowpt[ei] {
                        self.lowpt2[ei] = self.lowpt[ei].min(self.lowpt2[vwi]);
                        self.lowpt[ei] = self.lowpt[vwi];
                    } else if self.lowpt[vwi] > self.lowpt[ei] {
                        self.lowpt2[ei] = self.lowpt2[ei].min(self.lowpt[vwi]);
                    } else {
                        self.lowpt2[ei] = self.lowpt2[ei].min(self.lowpt2[vwi]);
                    }
                }
                ind[v as usize] += 1;
            }
        }
    }

    fn dfs_testing(&mut self, root: u32) -> bool {
        let mut stack = vec![root];
        let mut ind = vec![0usize; self.n];
        let mut skip_init = vec![false; self.src.len()];
        while let Some(v) = stack.pop() {
            let e = self.parent_edge[v as usize];
            let mut skip_final = false;
            while ind[v as usize] < self.ordered[v as usize].len() {
                let ei = self.ordered[v as usize][ind[v as usize]];
                let w = self.dst[ei as usize];
                if !skip_init[ei as usize] {
                    self.stack_bottom[ei as usize] = self.top_serial();
                    if Some(ei) == self.parent_edge[w as usize] {
                        stack.push(v);
                        stack.push(w);
                        skip_init[ei as usize] = true;
                        skip_final = true;
                        break;
                    } else {
                        self.lowpt_edge[ei as usize] = ei;
                        let p = self.new_pair(
                            Interval::default(),
                            Interval {
                                low: Some(ei),
                                high: Some(ei),
                            },
                        );
                        self.s.push(p);
                    }
                }
                if self.lowpt[ei as usize] < self.height[v as usize].unwrap() {
                    let e = e.expect("non-root vertex has a parent edge");
                    if ei == self.ordered[v as usize][0] {
                        self.lowpt_edge[e as usize] = self.lowpt_edge[ei as usize];
                    } else if !self.add_constraints(ei, e) {
                        return false;
                    }
                }
                ind[v as usize] += 1;
            }
            if !skip_final {
                if let Some(e) = e {
                    self.remove_back_edges(e);
                }
            }
        }
        true
    }

    fn add_constraints(&mut self, ei: E, e: E) -> bool {
        let mut p = self.new_pair(Interval::default(), Interval::default());
        loop {
            let mut q = self.s.pop().expect("conflict stack underflow");
            if !q.left.empty() {
                q.swap();
            }
            if !q.left.empty() {
                return false;
            }
            if self.lowpt[q.right.low.unwrap() as usize] > self.lowpt[e as usize] {
                if p.right.empty() {
                    p.right = q.right;
                } else {
                    self.refe[p.right.low.unwrap() as usize] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.refe[q.right.low.unwrap() as usize] = Some(self.lowpt_edge[e as usize]);
            }
            if self.top_serial() == self.stack_bottom[ei as usize] {
                break;
            }
        }
        loop {
            let top = match self.s.last() {
                Some(t) => *t,
                None => break,
            };
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.s.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(pl) = p.right.low {
                self.refe[pl as usize] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.empty() {
                p.left = q.left;
            } else {
                self.refe[p.left.low.unwrap() as usize] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.empty() && p.right.empty()) {
            self.s.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: E) {
        let u = self.src[e as usize];
        let hu = self.height[u as usize].unwrap();
        while let Some(top) = self.s.last() {
            if self.lowest(top) != hu {
                break;
            }
            let p = self.s.pop().unwrap();
            if let Some(l) = p.left.low {
                self.side[l as usize] = -1;
            }
        }
        if let Some(mut p) = self.s.pop() {
            while let Some(h) = p.left.high {
                if self.dst[h as usize] != u {
                    break;
                }
                p.left.high = self.refe[h as usize];
            }
            if p.left.high.is_none() {
                if let Some(l) = p.left.low {
                    self.refe[l as usize] = p.right.low;
                    self.side[l as usize] = -1;
                    p.left.low = None;
                }
            }
            while let Some(h) = p.right.high {
                if self.dst[h as usize] != u {
                    break;
                }
                p.right.high = self.refe[h as usize];
            }
            if p.right.high.is_none() {
                if let Some(r) = p.right.low {
                    self.refe[r as usize] = p.left.low;
                    self.side[r as usize] = -1;
                    p.right.low = None;
                }
            }
            self.s.push(p);
        }
        if self.lowpt[e as usize] < hu {
            let top = *self.s.last().expect("return edge implies a pending pair");
            let hl = top.left.high;
            let hr = top.right.high;
            if hl.is_some()
                && (hr.is_none()
                    || self.lowpt[hl.unwrap() as usize] > self.lowpt[hr.unwrap() as usize])
            {
                self.refe[e as usize] = hl;
            } else {
                self.refe[e as usize] = hr;
            }
        }
    }

    fn sign(&mut self, e: E) -> i64 {
        let mut stack = vec![e];
        let mut old_ref: HashMap<E, E> = HashMap::new();
        let mut last = e;
        while let Some(x) = stack.pop() {
            last = x;
            if let Some(r) = self.refe[x as usize] {
                stack.push(x);
                stack.push(r);
                old_ref.insert(x, r);
                self.refe[x as usize] = None;
            } else if let Some(&r) = old_ref.get(&x) {
                self.side[x as usize] *= self.side[r as usize];
            }
        }
        debug_assert_eq!(last, e);
        self.side[e as usize]
    }
}

/// Cyclic neighbor ring with a tracked leftmost entry.
#[derive(Default, Clone)]
struct Ring {
    links: HashMap<u32, (u32, u32)>, // nbr -> (cw, ccw)
    leftmost: Option<u32>,
}

impl Ring {
    fn add_first_edge(&mut self, end: u32) {
        self.links.insert(end, (end, end));
        self.leftmost = Some(end);
    }

    fn add_cw_of(&mut self, end: u32, reference: u32) {
        // new edge placed counterclockwise next to `reference`
        if self.links.is_empty() {
            return self.add_first_edge(end);
        }
        let ref_ccw = self.links[&reference].1;
        self.links.insert(end, (reference, ref_ccw));
        self.links.get_mut(&ref_ccw).unwrap().0 = end;
        self.links.get_mut(&reference).unwrap().1 = end;
        if self.leftmost == Some(reference) {
            self.leftmost = Some(end);
        }
    }

    fn add_ccw_of(&mut self, end: u32, reference: u32) {
        if self.links.is_empty() {
            return self.add_first_edge(end);
        }
        let ref_cw = self.links[&reference].0;
        self.links.insert(end, (ref_cw, reference));
        self.links.get_mut(&ref_cw).unwrap().1 = end;
        self.links.get_mut(&reference).unwrap().0 = end;
    }

    fn add_first(&mut self, end: u32) {
        match self.leftmost {
            Some(l) => self.add_cw_of(end, l),
            None => self.add_first_edge(end),
        }
    }

    fn order(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.links.len());
        if let Some(start) = self.leftmost {
            out.push(start);
            let mut cur = self.links[&start].0;
            while cur != start {
                out.push(cur);
                cur = self.links[&cur].0;
            }
        }
        out
    }
}

/// Cyclic order of distinct neighbors per vertex, or `None` if `g` is not planar.
pub(crate) fn lr_rotation(g: &Graph) -> Option<Vec<Vec<VertexId>>> {
    let n = g.vertex_bound();
    let mut adjs = vec![Vec::new(); n];
    let mut simple_m = 0usize;
    for v in g.vertices() {
        let mut nb: Vec<u32> = g.neighbors(v).into_iter().map(|w| w.0).collect();
        nb.sort_unstable();
        simple_m += nb.len();
        adjs[v.idx()] = nb;
    }
    simple_m /= 2;
    let order_n = g.vertex_count();
    if order_n > 2 && simple_m > 3 * order_n - 6 {
        return None;
    }
    let mut st = State {
        n,
        adjs,
        height: vec![None; n],
        parent_edge: vec![None; n],
        roots: Vec::new(),
        src: Vec::new(),
        dst: Vec::new(),
        lowpt: Vec::new(),
        lowpt2: Vec::new(),
        nesting: Vec::new(),
        refe: Vec::new(),
        side: Vec::new(),
        lowpt_edge: Vec::new(),
        stack_bottom: Vec::new(),
        id_of: HashMap::new(),
        out: vec![Vec::new(); n],
        ordered: vec![Vec::new(); n],
        s: Vec::new(),
        serial: 0,
    };
    for v in g.vertices() {
        let v = v.0;
        if st.height[v as usize].is_none() {
            st.height[v as usize] = Some(0);
            st.roots.push(v);
            st.dfs_orientation(v);
        }
    }
    for v in 0..n {
        let mut o = st.out[v].clone();
        o.sort_by_key(|&e| st.nesting[e as usize]);
        st.ordered[v] = o;
    }
    for r in st.roots.clone() {
        if !st.dfs_testing(r) {
            return None;
        }
    }
    for e in 0..st.src.len() as E {
        let s = st.sign(e);
        st.nesting[e as usize] *= s;
    }
    let mut rings = vec![Ring::default(); n];
    for v in 0..n {
        let mut o = st.out[v].clone();
        o.sort_by_key(|&e| st.nesting[e as usize]);
        let mut prev: Option<u32> = None;
        for &e in &o {
            let w = st.dst[e as usize];
            match prev {
                None => rings[v].add_first_edge(w),
                Some(p) => rings[v].add_ccw_of(w, p),
            }
            prev = Some(w);
        }
        st.ordered[v] = o;
    }
    let mut left_ref = vec![u32::MAX; n];
    let mut right_ref = vec![u32::MAX; n];
    for &root in &st.roots {
        let mut stack = vec![root];
        let mut ind = vec![0usize; n];
        while let Some(v) = stack.pop() {
            let vi = v as usize;
            while ind[vi] < st.ordered[vi].len() {
                let ei = st.ordered[vi][ind[vi]];
                ind[vi] += 1;
                let w = st.dst[ei as usize];
                if Some(ei) == st.parent_edge[w as usize] {
                    rings[w as usize].add_first(v);
                    left_ref[vi] = w;
                    right_ref[vi] = w;
                    stack.push(v);
                    stack.push(w);
                    break;
                } else if st.side[ei as usize] == 1 {
                    rings[w as usize].add_ccw_of(v, right_ref[w as usize]);
                } else {
                    rings[w as usize].add_cw_of(v, left_ref[w as usize]);
                    left_ref[w as usize] = v;
                }
            }
        }
    }
    Some(
        rings
            .iter()
            .map(|r| r.order().into_iter().map(VertexId).collect())
            .collect(),
    )
}
