mod common;

use common::bridges_by_removal;
use proptest::prelude::*;
use quadbook::graph::{bridge_block_forest, bridges, contract_blocks};
use quadbook::io::format::{parse_edge_list, serialize_edge_list, EmbeddingDocument};
use quadbook::io::gen;
use quadbook::{embed_two_page, planar_embed, subham_triconnected, verify_book_embedding, verify_subhamiltonian, EdgeId, Graph, Page};

/// Random 4-planar graph with some edges dropped, which may leave it disconnected.
fn thinned(n: usize, seed: u64, drop: &[usize]) -> Graph {
    let mut g = gen::random_4planar(n, seed).unwrap();
    let edges: Vec<EdgeId> = g.edges().collect();
    for &i in drop.iter().filter(|_| !edges.is_empty()) {
        let e = edges[i % edges.len()];
        if g.contains_edge(e) {
            g.remove_edge(e);
        }
    }
    g
}

fn alternating_same_page(g: &Graph, be: &quadbook::BookEmbedding) -> bool {
    let pos = be.positions(g.vertex_bound());
    let span = |e: EdgeId| {
        let (a, b) = g.endpoints(e);
        (pos[a.idx()].min(pos[b.idx()]), pos[a.idx()].max(pos[b.idx()]))
    };
    let es: Vec<EdgeId> = g.edges().collect();
    es.iter().enumerate().any(|(i, &e)| {
        es[i + 1..].iter().any(|&f| {
            let ((a, b), (c, d)) = (span(e), span(f));
            be.page(e) == be.page(f) && ((a < c && c < b && b < d) || (c < a && a < d && d < b))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn embeddings_verify_and_repeat(n in 1usize..250, seed in any::<u64>(), drop in proptest::collection::vec(any::<usize>(), 0..6)) {
        let g = thinned(n, seed, &drop);
        let be = embed_two_page(&g).unwrap();
        prop_assert!(verify_book_embedding(&g, &be).pass());
        prop_assert_eq!(embed_two_page(&g).unwrap(), be);
    }

    #[test]
    fn verifier_flags_exactly_the_alternations(n in 4usize..60, seed in any::<u64>(), flips in proptest::collection::vec(any::<usize>(), 1..4)) {
        let g = gen::random_4planar(n, seed).unwrap();
        let mut be = embed_two_page(&g).unwrap();
        let edges: Vec<EdgeId> = g.edges().collect();
        for i in flips {
            let e = edges[i % edges.len()];
            be.set_page(e, be.page(e).unwrap().flip());
        }
        prop_assert_eq!(verify_book_embedding(&g, &be).pass(), !alternating_same_page(&g, &be));
    }

    #[test]
    fn bridges_match_removal(n in 2usize..40, seed in any::<u64>(), drop in proptest::collection::vec(any::<usize>(), 0..8)) {
        let g = thinned(n, seed, &drop);
        let mut fast = bridges(&g);
        fast.sort_unstable();
        prop_assert_eq!(fast, bridges_by_removal(&g));
    }

    #[test]
    fn contraction_keeps_inter_block_edges(n in 2usize..60, seed in any::<u64>(), drop in proptest::collection::vec(any::<usize>(), 0..8)) {
        let g = thinned(n, seed, &drop);
        let f = bridge_block_forest(&g);
        let c = contract_blocks(&g, &f).unwrap();
        let crossing = g.edges().filter(|&e| {
            let (a, b) = g.endpoints(e);
            f.block_of[a.idx()] != f.block_of[b.idx()]
        }).count();
        prop_assert_eq!(c.graph.edge_count(), crossing);
        prop_assert_eq!(c.graph.vertex_count(), f.block_count());
        prop_assert_eq!(crossing, f.bridges.len());
    }

    #[test]
    fn euler_holds(n in 1usize..200, seed in any::<u64>()) {
        let g = gen::random_4planar(n, seed).unwrap();
        prop_assert!(planar_embed(&g).unwrap().euler_holds(&g));
    }

    #[test]
    fn documents_round_trip(n in 1usize..120, seed in any::<u64>()) {
        let g = gen::random_4planar(n, seed).unwrap();
        let text = serialize_edge_list(&g);
        prop_assert_eq!(serialize_edge_list(&parse_edge_list(&text).unwrap()), text);
        let be = embed_two_page(&g).unwrap();
        let doc = EmbeddingDocument::from_book(&g, &be);
        let parsed = EmbeddingDocument::parse(&doc.serialize()).unwrap();
        prop_assert_eq!(parsed.to_book(&g).unwrap(), be);
    }

    #[test]
    fn page_flip_is_an_involution(top in any::<bool>()) {
        let p = if top { Page::Top } else { Page::Bottom };
        prop_assert_eq!(p.flip().flip(), p);
        prop_assert_ne!(p.flip(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn triconnected_families_yield_valid_cycles(k in 2usize..30, chain in any::<bool>()) {
        let g = if chain { gen::gadget_chain(k).unwrap() } else { gen::prism_stack(k).unwrap() };
        let h = subham_triconnected(&g).unwrap();
        prop_assert!(verify_subhamiltonian(&g, &h).pass());
        prop_assert_eq!(subham_triconnected(&g).unwrap(), h);
    }
}
