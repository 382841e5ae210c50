//! Corpus generators. Every emitted graph is connected, planar and has maximum degree 4.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{bridges, Graph, VertexId};
use crate::planar::is_planar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("parameter {name} = {value} out of range: {reason}")]
    BadParam {
        name: &'static str,
        value: usize,
        reason: &'static str,
    },
}

fn bad(name: &'static str, value: usize, reason: &'static str) -> GenError {
    GenError::BadParam { name, value, reason }
}

pub fn complete4() -> Graph {
    Graph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

/// Antipodal pairs are `(i, i + 3)`.
pub fn octahedron() -> Graph {
    let mut edges = Vec::new();
    for i in 0..6 {
        for j in i + 1..6 {
            if j != i + 3 {
                edges.push((i, j));
            }
        }
    }
    Graph::build(6, &edges).unwrap()
}

/// 3-cube, vertex ids are the corner bit patterns.
pub fn cube() -> Graph {
    let mut edges = Vec::new();
    for v in 0..8usize {
        for b in [1, 2, 4] {
            if v & b == 0 {
                edges.push((v, v | b));
            }
        }
    }
    Graph::build(8, &edges).unwrap()
}

/// `rows x cols` grid, vertex `r * cols + c`.
pub fn grid(rows: usize, cols: usize) -> Result<Graph, GenError> {
    if rows == 0 {
        return Err(bad("rows", rows, "must be positive"));
    }
    if cols == 0 {
        return Err(bad("cols", cols, "must be positive"));
    }
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                edges.push((v, v + 1));
            }
            if r + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    Ok(Graph::build(rows * cols, &edges).expect("grid is simple"))
}

/// Stack of `k` triangles joined level to level (C3 x P_k); vertex `3 * level + i`.
pub fn prism_stack(k: usize) -> Result<Graph, GenError> {
    if k < 2 {
        return Err(bad("k", k, "need at least two levels"));
    }
    let mut edges = Vec::new();
    for l in 0..k {
        for i in 0..3 {
            edges.push((3 * l + i, 3 * l + (i + 1) % 3));
            if l + 1 < k {
                edges.push((3 * l + i, 3 * (l + 1) + i));
            }
        }
    }
    Ok(Graph::build(3 * k, &edges).expect("prism stack is simple"))
}

/// Triangles T_0..T_{k+1} with a hexagon band between consecutive triangles.
/// T_1..T_k are separating; each band hangs off its lower triangle at h0, h2, h4
/// and carries the next triangle at h1, h3, h5.
pub fn gadget_chain(k: usize) -> Result<Graph, GenError> {
    if k == 0 {
        return Err(bad("k", k, "need at least one separating triangle"));
    }
    let tri = |t: usize| 9 * t;
    let hex = |t: usize| 9 * t + 3;
    let n = 9 * (k + 1) + 3;
    let mut edges = Vec::new();
    for t in 0..k + 2 {
        let a = tri(t);
        edges.extend([(a, a + 1), (a + 1, a + 2), (a + 2, a)]);
    }
    for t in 0..k + 1 {
        let h = hex(t);
        for i in 0..6 {
            edges.push((h + i, h + (i + 1) % 6));
        }
        let (lo, hi) = (tri(t), tri(t + 1));
        edges.extend([(lo, h), (lo + 1, h + 2), (lo + 2, h + 4)]);
        edges.extend([(h + 1, hi), (h + 3, hi + 1), (h + 5, hi + 2)]);
    }
    Ok(Graph::build(n, &edges).expect("gadget chain is simple"))
}

/// Triangulation of `n` random points (x-sorted sweep), thinned to maximum degree 4
/// by deleting non-bridge edges at overfull vertices.
pub fn random_4planar(n: usize, seed: u64) -> Result<Graph, GenError> {
    if n == 0 {
        return Err(bad("n", n, "must be positive"));
    }
    for attempt in 0..64u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt.wrapping_mul(0x9e37_79b9)));
        if let Some(g) = try_random_4planar(n, &mut rng) {
            return Ok(g);
        }
    }
    Err(bad("seed", seed as usize, "no connected thinning found"))
}

fn cross(o: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

fn sweep_triangulation(pts: &[(f64, f64)]) -> Vec<(usize, usize)> {
    let n = pts.len();
    let mut edges = Vec::new();
    if n == 1 {
        return edges;
    }
    if n == 2 {
        return vec![(0, 1)];
    }
    // hull as a counterclockwise cycle of point indices
    let mut hull: Vec<usize> = if cross(pts[0], pts[1], pts[2]) > 0.0 {
        vec![0, 1, 2]
    } else {
        vec![0, 2, 1]
    };
    edges.extend([(0, 1), (1, 2), (0, 2)]);
    for p in 3..n {
        let h = hull.len();
        let visible: Vec<bool> = (0..h)
            .map(|i| cross(pts[hull[i]], pts[hull[(i + 1) % h]], pts[p]) < 0.0)
            .collect();
        // visible edges form one cyclic run; find its start
        let start = (0..h)
            .find(|&i| visible[i] && !visible[(i + h - 1) % h])
            .expect("new rightmost point sees the hull");
        let mut run = vec![hull[start]];
        let mut i = start;
        while visible[i] {
            i = (i + 1) % h;
            run.push(hull[i]);
        }
        for &v in &run {
            edges.push((v, p));
        }
        // replace the interior of the run by p
        let mut next = Vec::with_capacity(h + 1);
        let first = run[0];
        let last = *run.last().unwrap();
        let mut j = hull.iter().position(|&v| v == last).unwrap();
        loop {
            next.push(hull[j]);
            if hull[j] == first {
                break;
            }
            j = (j + 1) % h;
        }
        next.push(p);
        hull = next;
    }
    edges
}

fn try_random_4planar(n: usize, rng: &mut ChaCha8Rng) -> Option<Graph> {
    let mut pts: Vec<(f64, f64)> = (0..n).map(|_| (rng.gen::<f64>(), rng.gen::<f64>())).collect();
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut g = Graph::build(n, &sweep_triangulation(&pts)).expect("triangulation is simple");
    loop {
        let over: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) > 4).collect();
        if over.is_empty() {
            return Some(g);
        }
        let is_bridge = {
            let mut b = vec![false; g.edge_bound()];
            for e in bridges(&g) {
                b[e.idx()] = true;
            }
            b
        };
        let v = over[rng.gen_range(0..over.len())];
        let mut candidates: Vec<_> = g
            .incident(v)
            .iter()
            .filter(|(e, _)| !is_bridge[e.idx()])
            .map(|&(e, w)| (g.degree(w), e))
            .collect();
        if candidates.is_empty() {
            return None;
        }
        candidates.sort_unstable_by(|a, b| b.cmp(a));
        let top = candidates[0].0;
        let tied: Vec<_> = candidates.iter().filter(|c| c.0 == top).collect();
        let (_, e) = *tied[rng.gen_range(0..tied.len())];
        g.remove_edge(e);
    }
}

// ---------- exhaustive enumeration ----------

/// Compact simple graph on at most 16 vertices as adjacency bitmasks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Small {
    adj: Vec<u16>,
}

impl Small {
    fn n(&self) -> usize {
        self.adj.len()
    }

    fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                if self.adj[u] >> v & 1 == 1 {
                    edges.push((u, v));
                }
            }
        }
        Graph::build(self.n(), &edges).expect("small graph is simple")
    }

    fn colors(&self) -> Vec<u64> {
        let n = self.n();
        let deg: Vec<u32> = (0..n).map(|v| self.degree(v)).collect();
        (0..n)
            .map(|v| {
                let mut nd: Vec<u32> = (0..n).filter(|&w| self.adj[v] >> w & 1 == 1).map(|w| deg[w]).collect();
                nd.sort_unstable();
                let tri: u32 = (0..n)
                    .filter(|&w| self.adj[v] >> w & 1 == 1)
                    .map(|w| (self.adj[v] & self.adj[w]).count_ones())
                    .sum();
                let mut h = u64::from(deg[v]);
                for d in nd {
                    h = h * 7 + u64::from(d);
                }
                h * 64 + u64::from(tri)
            })
            .collect()
    }

    fn invariant(&self) -> (usize, Vec<u64>) {
        let mut c = self.colors();
        c.sort_unstable();
        (self.n(), c)
    }
}

fn isomorphic(a: &Small, b: &Small) -> bool {
    let n = a.n();
    if n != b.n() {
        return false;
    }
    let (ca, cb) = (a.colors(), b.colors());
    let mut order: Vec<usize> = (0..n).collect();
    // rarest colors first, then neighbors of already-ordered vertices
    let freq = |c: u64| ca.iter().filter(|&&x| x == c).count();
    order.sort_by_key(|&v| (freq(ca[v]), v));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        i: usize,
        order: &[usize],
        a: &Small,
        b: &Small,
        ca: &[u64],
        cb: &[u64],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        for w in 0..b.n() {
            if used[w] || cb[w] != ca[v] {
                continue;
            }
            let ok = order[..i].iter().all(|&u| {
                let x = map[u];
                (a.adj[v] >> u & 1) == (b.adj[w] >> x & 1)
            });
            if !ok {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if rec(i + 1, order, a, b, ca, cb, map, used) {
                return true;
            }
            used[w] = false;
            map[v] = usize::MAX;
        }
        false
    }
    rec(0, &order, a, b, &ca, &cb, &mut map, &mut used)
}

/// Isomorphism-filtered store.
#[derive(Default)]
struct Catalog {
    buckets: HashMap<(usize, Vec<u64>), Vec<usize>>,
    items: Vec<Small>,
}

impl Catalog {
    fn insert(&mut self, s: Small) -> bool {
        let key = s.invariant();
        let bucket = self.buckets.entry(key).or_default();
        if bucket.iter().any(|&i| isomorphic(&self.items[i], &s)) {
            return false;
        }
        bucket.push(self.items.len());
        self.items.push(s);
        true
    }
}

fn extend_level(prev: &[Small], min_new_degree: u32) -> Vec<Small> {
    let mut cat = Catalog::default();
    for s in prev {
        let n = s.n();
        let open: Vec<usize> = (0..n).filter(|&v| s.degree(v) < 4).collect();
        let k = open.len();
        for mask in 1u32..(1 << k) {
            let size = mask.count_ones();
            if size > 4 || size < min_new_degree {
                continue;
            }
            let mut adj = s.adj.clone();
            let mut nb = 0u16;
            for (i, &v) in open.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    adj[v] |= 1 << n;
                    nb |= 1 << v;
                }
            }
            adj.push(nb);
            let cand = Small { adj };
            if n + 1 >= 5 && !is_planar(&cand.to_graph()) {
                continue;
            }
            cat.insert(cand);
        }
    }
    cat.items
}

/// Every connected planar graph with maximum degree 4 on `n` vertices, up to isomorphism.
/// Each is grown from a smaller one by adding a non-cut vertex.
pub fn enumerate_small(n: usize) -> Result<Vec<Graph>, GenError> {
    Ok(enumerate_levels(n)?.pop().unwrap_or_default())
}

/// Levels 1..=n of `enumerate_small`.
pub fn enumerate_levels(n: usize) -> Result<Vec<Vec<Graph>>, GenError> {
    if n == 0 || n > 10 {
        return Err(bad("n", n, "exhaustive enumeration supports 1..=10"));
    }
    let mut level = vec![Small { adj: vec![0] }];
    let mut out = vec![level.iter().map(Small::to_graph).collect::<Vec<_>>()];
    for _ in 2..=n {
        level = extend_level(&level, 1);
        out.push(level.iter().map(Small::to_graph).collect());
    }
    Ok(out)
}

/// Triconnected members of the `n`-vertex corpus, built from the `(n-1)`-vertex level
/// by attaching a vertex of degree 3 or 4.
pub fn enumerate_triconnected(prev_level: &[Graph]) -> Vec<Graph> {
    let prev: Vec<Small> = prev_level
        .iter()
        .map(|g| {
            let n = g.vertex_count();
            let mut adj = vec![0u16; n];
            for e in g.edges() {
                let (u, v) = g.endpoints(e);
                adj[u.idx()] |= 1 << v.0;
                adj[v.idx()] |= 1 << u.0;
            }
            Small { adj }
        })
        .collect();
    extend_level(&prev, 3)
        .iter()
        .map(Small::to_graph)
        .filter(|g| crate::planar::connectivity_class(g) == crate::planar::ConnectivityClass::ThreeOrMore)
        .collect()
}
