use crate::graph::VertexId;

const NIL: u32 = u32::MAX;

/// Doubly linked spine over vertex ids.
#[derive(Clone, Debug)]
pub(crate) struct Spine {
    next: Vec<u32>,
    prev: Vec<u32>,
    head: u32,
}

impl Spine {
    pub fn new(bound: usize, initial: &[VertexId]) -> Self {
        let mut s = Spine {
            next: vec![NIL; bound],
            prev: vec![NIL; bound],
            head: NIL,
        };
        for w in initial.windows(2) {
            s.next[w[0].idx()] = w[1].0;
            s.prev[w[1].idx()] = w[0].0;
        }
        if let Some(v) = initial.first() {
            s.head = v.0;
        }
        s
    }

    pub fn insert_after(&mut self, at: VertexId, v: VertexId) {
        let n = self.next[at.idx()];
        self.next[at.idx()] = v.0;
        self.prev[v.idx()] = at.0;
        self.next[v.idx()] = n;
        if n != NIL {
            self.prev[n as usize] = v.0;
        }
    }

    pub fn insert_before(&mut self, at: VertexId, v: VertexId) {
        let p = self.prev[at.idx()];
        self.prev[at.idx()] = v.0;
        self.next[v.idx()] = at.0;
        self.prev[v.idx()] = p;
        if p == NIL {
            self.head = v.0;
        } else {
            self.next[p as usize] = v.0;
        }
    }

    pub fn unlink(&mut self, v: VertexId) {
        let (p, n) = (self.prev[v.idx()], self.next[v.idx()]);
        if p == NIL {
            self.head = n;
        } else {
            self.next[p as usize] = n;
        }
        if n != NIL {
            self.prev[n as usize] = p;
        }
        self.prev[v.idx()] = NIL;
        self.next[v.idx()] = NIL;
    }

    /// Neighbor of `v` towards the right (`forward`) or the left.
    pub fn step(&self, v: VertexId, forward: bool) -> Option<VertexId> {
        let w = if forward { self.next[v.idx()] } else { self.prev[v.idx()] };
        (w != NIL).then_some(VertexId(w))
    }

    pub fn to_vec(&self) -> Vec<VertexId> {
        let mut out = Vec::new();
        let mut v = self.head;
        while v != NIL {
            out.push(VertexId(v));
            v = self.next[v as usize];
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inserts_on_both_sides() {
        let v = |i: u32| VertexId(i);
        let mut s = Spine::new(6, &[v(0), v(1)]);
        s.insert_after(v(0), v(2));
        s.insert_before(v(0), v(3));
        s.insert_after(v(1), v(4));
        assert_eq!(s.to_vec(), vec![v(3), v(0), v(2), v(1), v(4)]);
        s.unlink(v(3));
        s.unlink(v(2));
        assert_eq!(s.to_vec(), vec![v(0), v(1), v(4)]);
        assert_eq!(s.step(v(1), false), Some(v(0)));
    }
}
