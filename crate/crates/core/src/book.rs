//! Spine order plus a page per edge.

use std::fmt;

use crate::graph::{EdgeId, Graph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Page {
    Top,
    Bottom,
}

impl Page {
    pub fn flip(self) -> Page {
        match self {
            Page::Top => Page::Bottom,
            Page::Bottom => Page::Top,
        }
    }
}

impl fmt::Display for Page {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Page::Top => "top",
            Page::Bottom => "bottom",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BookEmbedding {
    pub order: Vec<VertexId>,
    /// Page per edge id; `None` for ids without a page.
    pub pages: Vec<Option<Page>>,
}

impl BookEmbedding {
    pub fn new(order: Vec<VertexId>, edge_bound: usize) -> Self {
        BookEmbedding {
            order,
            pages: vec![None; edge_bound],
        }
    }

    pub fn set_page(&mut self, e: EdgeId, p: Page) {
        if self.pages.len() <= e.idx() {
            self.pages.resize(e.idx() + 1, None);
        }
        self.pages[e.idx()] = Some(p);
    }

    pub fn page(&self, e: EdgeId) -> Option<Page> {
        self.pages.get(e.idx()).copied().flatten()
    }

    /// Spine position per vertex id; `usize::MAX` for absent ids.
    pub fn positions(&self, vertex_bound: usize) -> Vec<usize> {
        let mut pos = vec![usize::MAX; vertex_bound];
        for (i, v) in self.order.iter().enumerate() {
            if v.idx() < vertex_bound {
                pos[v.idx()] = i;
            }
        }
        pos
    }

    /// Cyclic shift so that `v` comes first.
    pub fn rotate_to_front(&mut self, v: VertexId) {
        if let Some(i) = self.order.iter().position(|&w| w == v) {
            self.order.rotate_left(i);
        }
    }

    /// Edges of `g` on `page`, as spine position pairs (left, right).
    pub fn arcs(&self, g: &Graph, page: Page) -> Vec<(usize, usize, EdgeId)> {
        let pos = self.positions(g.vertex_bound());
        g.edges()
            .filter(|&e| self.page(e) == Some(page))
            .map(|e| {
                let (u, v) = g.endpoints(e);
                let (a, b) = (pos[u.idx()], pos[v.idx()]);
                (a.min(b), a.max(b), e)
            })
            .collect()
    }
}
