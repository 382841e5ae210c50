mod common;

use common::{corpus, v};
use quadbook::io::gen;
use quadbook::twopage::{embed_two_page, embed_two_page_audited, EmbedError};
use quadbook::{verify_book_embedding, Graph, Page};

fn embed_ok(g: &Graph) -> quadbook::BookEmbedding {
    let be = embed_two_page(g).unwrap_or_else(|e| panic!("{e} on {:?}", g.edge_multiset()));
    let report = verify_book_embedding(g, &be);
    assert!(report.pass(), "{report}");
    be
}

fn cycle(n: usize) -> Graph {
    Graph::build(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
}

#[test]
fn cycle_is_laid_out_along_the_spine() {
    for n in 3..12 {
        let g = cycle(n);
        let be = embed_ok(&g);
        let pos = be.positions(g.vertex_bound());
        let mut top = 0;
        for e in g.edges() {
            let (a, b) = g.endpoints(e);
            let span = pos[a.idx()].abs_diff(pos[b.idx()]);
            match be.page(e).unwrap() {
                Page::Top => {
                    assert_eq!(span, n - 1);
                    top += 1;
                }
                Page::Bottom => assert_eq!(span, 1),
            }
        }
        assert_eq!(top, 1);
    }
}

#[test]
fn k4_and_grid() {
    embed_ok(&gen::complete4());
    let be = embed_ok(&gen::grid(5, 5).unwrap());
    assert_eq!(be.order.len(), 25);
}

#[test]
fn chorded_cycle_and_chorded_inner_block() {
    let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
    edges.push((1, 4));
    embed_ok(&Graph::build(6, &edges).unwrap());
    // the same block hanging inside a square by two edges
    edges.extend([(6, 7), (7, 8), (8, 9), (9, 6), (0, 6), (3, 8)]);
    let g = Graph::build(10, &edges).unwrap();
    let (be, audit) = embed_two_page_audited(&g).unwrap();
    assert!(verify_book_embedding(&g, &be).pass());
    assert!(audit.frames >= 2);
}

#[test]
fn three_blocks_inside_a_cycle() {
    // 8-cycle around a triangle, a lone vertex and a second triangle joined by bridges
    let mut edges: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
    edges.extend([(8, 9), (9, 10), (10, 8), (12, 13), (13, 14), (14, 12), (10, 11), (11, 12)]);
    edges.extend([(8, 0), (9, 2), (11, 4), (13, 5), (14, 6)]);
    let g = Graph::build(15, &edges).unwrap();
    let (be, audit) = embed_two_page_audited(&g).unwrap();
    assert!(verify_book_embedding(&g, &be).pass());
    assert!(audit.frames >= 2, "{audit:?}");
}

#[test]
fn all_degree_four_outer_faces() {
    embed_ok(&gen::octahedron());
    for k in 3..8 {
        embed_ok(&gen::prism_stack(k).unwrap());
    }
}

#[test]
fn parallel_edges_and_components() {
    embed_ok(&Graph::build(2, &[(0, 1), (0, 1)]).unwrap());
    embed_ok(&Graph::build(4, &[(0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (3, 0)]).unwrap());
    embed_ok(&Graph::build(7, &[(0, 1), (1, 2), (2, 0), (3, 4), (5, 6), (5, 6)]).unwrap());
    embed_ok(&Graph::with_vertices(3));
    embed_ok(&Graph::new());
}

#[test]
fn rejects_degree_five_and_non_planar() {
    let star = Graph::build(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
    assert_eq!(embed_two_page(&star).unwrap_err(), EmbedError::Degree { vertex: v(0), degree: 5 });
    let mut k5 = Vec::new();
    for i in 0..5 {
        for j in i + 1..5 {
            k5.push((i, j));
        }
    }
    assert_eq!(embed_two_page(&Graph::build(5, &k5).unwrap()).unwrap_err(), EmbedError::NonPlanar);
}

#[test]
fn whole_small_corpus_with_clean_audit() {
    let mut separated = 0;
    let all = corpus(8);
    assert_eq!(all.len(), 2088);
    for g in &all {
        let (be, audit) = embed_two_page_audited(g).unwrap_or_else(|e| panic!("{e} on {:?}", g.edge_multiset()));
        assert!(verify_book_embedding(g, &be).pass());
        separated += audit.separated;
    }
    assert!(separated >= 1);
}

#[test]
fn random_graphs() {
    for n in [10, 25, 60, 150, 400] {
        for seed in 0..20 {
            embed_ok(&gen::random_4planar(n, seed).unwrap());
        }
    }
}

#[test]
fn gadget_chains_and_large_grids() {
    for k in [1, 2, 5, 20] {
        embed_ok(&gen::gadget_chain(k).unwrap());
    }
    for (r, c) in [(1, 10), (2, 9), (7, 3), (20, 20), (31, 33)] {
        embed_ok(&gen::grid(r, c).unwrap());
    }
}

#[test]
fn output_is_deterministic() {
    let g = gen::random_4planar(300, 7).unwrap();
    assert_eq!(embed_two_page(&g).unwrap(), embed_two_page(&g).unwrap());
}
