//! Arc-diagram rendering. Vertices sit equispaced on a horizontal spine, top-page
//! arcs above it and bottom-page arcs below; arc height grows with span.

use std::fmt::Write as _;

use crate::book::{BookEmbedding, Page};
use crate::graph::{Graph, VertexId};
use crate::oracle::two_color;
use crate::subham::SubhamCycle;

const STEP: f64 = 40.0;
const MARGIN: f64 = 30.0;
const RISE: f64 = 0.5;

#[derive(Clone, Copy, Debug)]
struct Arc {
    l: usize,
    r: usize,
    page: Page,
    dashed: bool,
}

fn draw(labels: &[VertexId], arcs: &mut [Arc]) -> String {
    arcs.sort_by_key(|a| (a.page == Page::Bottom, a.l, a.r, a.dashed));
    let n = labels.len();
    let widest = arcs.iter().map(|a| a.r - a.l).max().unwrap_or(0) as f64;
    let half = widest * STEP * RISE / 2.0 + MARGIN;
    let width = 2.0 * MARGIN + STEP * n.saturating_sub(1) as f64;
    let height = 2.0 * half;
    let x = |i: usize| MARGIN + STEP * i as f64;

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1}" height="{height:.1}" viewBox="0 0 {width:.1} {height:.1}">"#
    )
    .unwrap();
    writeln!(
        s,
        r#"<line class="spine" x1="{:.1}" y1="{half:.1}" x2="{:.1}" y2="{half:.1}" stroke="gray" stroke-width="1"/>"#,
        MARGIN / 2.0,
        width - MARGIN / 2.0
    )
    .unwrap();
    let mut prev: Option<(usize, usize, Page)> = None;
    let mut copy = 0usize;
    for a in arcs.iter() {
        let key = (a.l, a.r, a.page);
        copy = if prev == Some(key) { copy + 1 } else { 0 };
        prev = Some(key);
        let rx = (x(a.r) - x(a.l)) / 2.0;
        let ry = rx * RISE * (1.0 - 0.2 * copy as f64);
        let (class, sweep) = match a.page {
            Page::Top => ("top", 1),
            Page::Bottom => ("bottom", 0),
        };
        let dash = if a.dashed { r#" stroke-dasharray="4 3""# } else { "" };
        let class = if a.dashed { format!("{class} aug") } else { class.to_string() };
        writeln!(
            s,
            r#"<path class="{class}" d="M {:.1} {half:.1} A {rx:.1} {ry:.1} 0 0 {sweep} {:.1} {half:.1}" fill="none" stroke="black" stroke-width="1.5"{dash}/>"#,
            x(a.l),
            x(a.r)
        )
        .unwrap();
    }
    for (i, v) in labels.iter().enumerate() {
        writeln!(
            s,
            r#"<circle cx="{:.1}" cy="{half:.1}" r="4" fill="black"/><text x="{:.1}" y="{:.1}" font-size="10" text-anchor="middle">{v}</text>"#,
            x(i),
            x(i),
            half + 14.0
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}

/// Unpaged edges are skipped.
pub fn render_book_svg(g: &Graph, be: &BookEmbedding) -> String {
    let pos = be.positions(g.vertex_bound());
    let mut arcs: Vec<Arc> = g
        .edges()
        .filter_map(|e| {
            let page = be.page(e)?;
            let (u, v) = g.endpoints(e);
            let (a, b) = (pos[u.idx()], pos[v.idx()]);
            Some(Arc { l: a.min(b), r: a.max(b), page, dashed: false })
        })
        .collect();
    draw(&be.order, &mut arcs)
}

/// The cycle is laid out from its first vertex; graph edges and dashed augmentation
/// edges are paged by two-coloring their alternation graph. An invalid cycle has
/// no such coloring and is drawn with every arc on top.
pub fn render_cycle_svg(g: &Graph, h: &SubhamCycle) -> String {
    let mut pos = vec![0usize; g.vertex_bound()];
    for (i, &v) in h.order.iter().enumerate() {
        pos[v.idx()] = i;
    }
    let span = |u: VertexId, v: VertexId| {
        let (a, b) = (pos[u.idx()], pos[v.idx()]);
        (a.min(b), a.max(b))
    };
    let mut spans: Vec<((usize, usize), bool)> = g
        .edges()
        .map(|e| {
            let (u, v) = g.endpoints(e);
            (span(u, v), false)
        })
        .collect();
    spans.extend(h.augmentation.iter().map(|a| (span(a.u, a.v), true)));
    let plain: Vec<(usize, usize)> = spans.iter().map(|s| s.0).collect();
    let color = two_color(&plain).unwrap_or_else(|| vec![0; plain.len()]);
    let mut arcs: Vec<Arc> = spans
        .iter()
        .zip(&color)
        .map(|(&((l, r), dashed), &c)| Arc {
            l,
            r,
            page: if c == 0 { Page::Top } else { Page::Bottom },
            dashed,
        })
        .collect();
    draw(&h.order, &mut arcs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_book_renders() {
        let g = Graph::with_vertices(1);
        let be = BookEmbedding::new(vec![VertexId(0)], 0);
        let svg = render_book_svg(&g, &be);
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
        assert!(!svg.contains("<path"));
    }
}
