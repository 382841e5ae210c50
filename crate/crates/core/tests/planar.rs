mod common;

use common::{corpus, v};
use quadbook::book::{BookEmbedding, Page};
use quadbook::io::gen;
use quadbook::planar::*;
use quadbook::{verify_book_embedding, Graph};

fn face_lengths(g: &Graph) -> Vec<usize> {
    let emb = planar_embed(g).unwrap();
    let mut l: Vec<usize> = emb.faces(g).iter().map(|f| f.len()).collect();
    l.sort_unstable();
    l
}

#[test]
fn octahedron_has_eight_triangles() {
    assert_eq!(face_lengths(&gen::octahedron()), vec![3; 8]);
}

#[test]
fn triangle_has_two_faces() {
    let g = Graph::build(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
    assert_eq!(face_lengths(&g), vec![3, 3]);
}

#[test]
fn cube_has_six_squares() {
    assert_eq!(face_lengths(&gen::cube()), vec![4; 6]);
}

#[test]
fn octahedron_is_triconnected() {
    assert_eq!(connectivity_class(&gen::octahedron()), ConnectivityClass::ThreeOrMore);
}

#[test]
fn square_outer_face_is_kept() {
    let g = Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    let emb = planar_embed(&g).unwrap();
    let out = chordless_outerface(&g, &emb).unwrap();
    assert_eq!(out.rotations(), emb.rotations());
    assert!(outer_cycle_chords(&g, &out).is_empty());
}

#[test]
fn every_k4_face_is_a_chordless_outer_face() {
    let g = gen::complete4();
    let emb = planar_embed(&g).unwrap();
    for f in emb.faces(&g) {
        let mut e = emb.clone();
        e.set_outer(f.darts[0]);
        assert!(outer_cycle_chords(&g, &e).is_empty());
        let out = chordless_outerface(&g, &e).unwrap();
        assert_eq!(out.outer_face(&g).unwrap().len(), 3);
    }
}

#[test]
fn biconnected_graph_is_one_block() {
    assert_eq!(biconnected_split(&gen::cube()).len(), 1);
}

#[test]
fn recompose_single_block_is_identity() {
    let g = Graph::build(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
    let mut be = BookEmbedding::new(vec![v(0), v(1), v(2)], 3);
    for e in g.edges() {
        be.set_page(e, Page::Top);
    }
    let out = recompose_book_embeddings(&g, &[be.clone()], &BlockCutTree { parent: vec![None] }).unwrap();
    assert_eq!(out, be);
}

#[test]
fn bowtie_recomposes_to_five_vertex_spine() {
    let g = Graph::build(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
    let pieces = biconnected_split(&g);
    assert_eq!(pieces.len(), 2);
    let mut blocks = Vec::new();
    let mut tree = BlockCutTree::default();
    for p in &pieces {
        let mut be = BookEmbedding::new(Vec::new(), g.edge_bound());
        let mut order: Vec<_> = p.vertex_map.clone();
        if let Some((_, cut)) = p.parent {
            order.retain(|&x| x != cut);
            order.insert(0, cut);
        }
        be.order = order;
        for &e in &p.edge_map {
            be.set_page(e, Page::Top);
        }
        blocks.push(be);
        tree.parent.push(p.parent);
    }
    let out = recompose_book_embeddings(&g, &blocks, &tree).unwrap();
    assert_eq!(out.order.len(), 5);
    assert!(verify_book_embedding(&g, &out).pass());
}

#[test]
fn star_recomposes_with_center_first_on_one_page() {
    let g = Graph::build(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
    let pieces = biconnected_split(&g);
    assert_eq!(pieces.len(), 3);
    let mut blocks = Vec::new();
    let mut tree = BlockCutTree::default();
    for p in &pieces {
        let mut order = p.vertex_map.clone();
        order.sort_by_key(|&x| x != v(0));
        let mut be = BookEmbedding::new(order, g.edge_bound());
        be.set_page(p.edge_map[0], Page::Top);
        blocks.push(be);
        tree.parent.push(p.parent);
    }
    let out = recompose_book_embeddings(&g, &blocks, &tree).unwrap();
    assert_eq!(out.order[0], v(0));
    assert!(g.edges().all(|e| out.page(e) == Some(Page::Top)));
    assert!(verify_book_embedding(&g, &out).pass());
}

#[test]
fn euler_holds_and_outer_faces_are_chordless_on_corpus() {
    for g in corpus(8) {
        let Ok(emb) = planar_embed(&g) else { panic!("corpus graph rejected") };
        assert!(emb.euler_holds(&g));
        if connectivity_class(&g) >= ConnectivityClass::Two && g.vertex_count() >= 3 {
            let out = chordless_outerface(&g, &emb).unwrap();
            assert!(out.euler_holds(&g));
            assert!(outer_cycle_chords(&g, &out).is_empty());
        }
    }
}

#[test]
fn k5_and_k33_are_not_planar() {
    let mut k5 = Vec::new();
    for i in 0..5 {
        for j in i + 1..5 {
            k5.push((i, j));
        }
    }
    assert!(!is_planar(&Graph::build(5, &k5).unwrap()));
    let mut k33 = Vec::new();
    for i in 0..3 {
        for j in 3..6 {
            k33.push((i, j));
        }
    }
    assert!(!is_planar(&Graph::build(6, &k33).unwrap()));
}
