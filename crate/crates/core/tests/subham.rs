use quadbook::io::gen;
use quadbook::oracle::{oracle_hamiltonian, oracle_separating_triangles};
use quadbook::planar::{connectivity_class, planar_embed, ConnectivityClass};
use quadbook::subham::*;
use quadbook::{verify_subhamiltonian, Graph, VertexId};

fn v(i: u32) -> VertexId {
    VertexId(i)
}

fn no_triangles(g: &Graph) -> SubhamCycle {
    let emb = planar_embed(g).unwrap();
    subham_no_triangles(g, &emb, &Backtracking::default()).unwrap()
}

#[test]
fn octahedron_has_no_separating_triangle_and_a_hamiltonian_cycle() {
    let g = gen::octahedron();
    let emb = planar_embed(&g).unwrap();
    assert!(find_separating_triangles(&g, &emb).unwrap().is_empty());
    let h = no_triangles(&g);
    assert!(h.augmentation.is_empty());
    assert!(verify_subhamiltonian(&g, &h).pass());
}

#[test]
fn k4_needs_no_augmentation() {
    let g = gen::complete4();
    let h = no_triangles(&g);
    assert_eq!(h.order.len(), 4);
    assert!(h.augmentation.is_empty());
    assert!(h.crossings.iter().all(|&c| c == 0));
    let emb = planar_embed(&g).unwrap();
    assert!(find_separating_triangles(&g, &emb).unwrap().is_empty());
}

#[test]
fn cube_crosses_each_face_at_most_once() {
    let g = gen::cube();
    let h = no_triangles(&g);
    assert_eq!(h.crossings.len(), 6);
    assert!(h.crosses_faces_at_most_once());
    assert!(verify_subhamiltonian(&g, &h).pass());
}

#[test]
fn backend_finds_stellated_cube_cycle() {
    let g = gen::cube();
    let emb = planar_embed(&g).unwrap();
    let mut st = g.clone();
    for f in emb.faces(&g) {
        let s = st.add_vertex();
        for u in f.vertices(&g) {
            st.add_edge(s, u).unwrap();
        }
    }
    let c = Backtracking::default().hamiltonian_cycle(&st).unwrap();
    assert_eq!(c.len(), 14);
    for i in 0..14 {
        assert!(st.has_edge(c[i], c[(i + 1) % 14]));
    }
}

#[test]
fn prism_stack_three_has_the_middle_triangle() {
    let g = gen::prism_stack(3).unwrap();
    let emb = planar_embed(&g).unwrap();
    let t = find_separating_triangles(&g, &emb).unwrap();
    assert_eq!(t.len(), 1);
    assert_eq!(t[0].corners, [v(3), v(4), v(5)]);
    assert_eq!(t[0].inner, [v(0), v(1), v(2)]);
    assert_eq!(t[0].outer, [v(6), v(7), v(8)]);
}

#[test]
fn replacing_the_middle_triangle_leaves_a_dummy_of_degree_three() {
    let g = gen::prism_stack(3).unwrap();
    let emb = planar_embed(&g).unwrap();
    let t = &find_separating_triangles(&g, &emb).unwrap()[0];
    for side in [Side::Out, Side::In] {
        let (gd, d) = replace_triangle(&g, t, side).unwrap();
        assert_eq!(gd.vertex_count(), 4);
        assert_eq!(gd.degree(d), 3);
        assert_eq!(connectivity_class(&gd), ConnectivityClass::ThreeOrMore);
        let e = planar_embed(&gd).unwrap();
        assert!(find_separating_triangles(&gd, &e).unwrap().is_empty());
    }
}

#[test]
fn replacing_toward_a_single_vertex_side_is_degenerate() {
    // K4 plus a vertex inside face 0-1-2: triangle 0-1-2 separates {3} from {4}
    let g = Graph::build(5, &[(0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (3, 2), (4, 0), (4, 1), (4, 2)]).unwrap();
    let emb = planar_embed(&g).unwrap();
    let t = find_separating_triangles(&g, &emb).unwrap();
    assert_eq!(t.len(), 1);
    assert!(matches!(replace_triangle(&g, &t[0], Side::In), Err(SubhamError::Degenerate)));
    assert!(matches!(replace_triangle(&g, &t[0], Side::Out), Err(SubhamError::Degenerate)));
    let h = subham_triconnected(&g).unwrap();
    assert!(verify_subhamiltonian(&g, &h).pass());
}

fn merge_fixture() -> (Graph, [VertexId; 3]) {
    // triangle A=0 B=1 Γ=2, inside vertex 3, outside vertex 4
    let g = Graph::build(5, &[(0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (3, 2), (4, 0), (4, 1), (4, 2)]).unwrap();
    (g, [v(0), v(1), v(2)])
}

#[test]
fn merge_textbook_instance() {
    let (g, t) = merge_fixture();
    let mut gi = g.clone();
    gi.remove_vertex(v(4));
    let mut go = g.clone();
    go.remove_vertex(v(3));
    // inside uses e=(A,B) and e_in=(B,Γ); outside uses e and e_out=(A,Γ)
    let h_in = SubhamCycle::from_order(&gi, vec![v(0), v(1), v(2), v(3)]);
    let h_out = SubhamCycle::from_order(&go, vec![v(2), v(0), v(1), v(4)]);
    let h = merge_cycles(&g, &h_in, &h_out, t).unwrap();
    let mut seen = h.order.clone();
    seen.sort_unstable();
    assert_eq!(seen, (0..5).map(v).collect::<Vec<_>>());
    assert!(verify_subhamiltonian(&g, &h).pass());
}

#[test]
fn merge_rejects_bad_edge_patterns() {
    let (g, t) = merge_fixture();
    let mut gi = g.clone();
    gi.remove_vertex(v(4));
    let mut go = g.clone();
    go.remove_vertex(v(3));
    // (apex of inside pair, apex of outside pair): equal apexes share two edges
    let same = |a: u32| {
        let o: Vec<u32> = (0..3).filter(|&x| x != a).collect();
        (
            SubhamCycle::from_order(&gi, vec![v(o[0]), v(a), v(o[1]), v(3)]),
            SubhamCycle::from_order(&go, vec![v(o[0]), v(a), v(o[1]), v(4)]),
        )
    };
    for a in 0..3 {
        let (hi, ho) = same(a);
        let err = merge_cycles(&g, &hi, &ho, t).unwrap_err();
        assert!(matches!(err, SubhamError::MergeHypothesis(ref m) if m.contains("share")), "{err}");
    }
    // one triangle edge only
    let hi = SubhamCycle::from_order(&gi, vec![v(0), v(1), v(3), v(2)]);
    let ho = SubhamCycle::from_order(&go, vec![v(2), v(0), v(1), v(4)]);
    assert!(matches!(merge_cycles(&g, &hi, &ho, t), Err(SubhamError::MergeHypothesis(_))));
    // a vertex covered twice
    let ho = SubhamCycle::from_order(&go, vec![v(2), v(0), v(1), v(3)]);
    let hi = SubhamCycle::from_order(&gi, vec![v(0), v(1), v(2), v(3)]);
    assert!(matches!(merge_cycles(&g, &hi, &ho, t), Err(SubhamError::MergeHypothesis(_))));
}

#[test]
fn prism_stack_three_halves_merge_to_a_hamiltonian_cycle() {
    let g = gen::prism_stack(3).unwrap();
    let t = [v(3), v(4), v(5)];
    let mut gi = g.clone();
    let mut go = g.clone();
    for i in 6..9 {
        gi.remove_vertex(v(i));
    }
    for i in 0..3 {
        go.remove_vertex(v(i));
    }
    let order = |xs: &[u32]| xs.iter().map(|&x| v(x)).collect::<Vec<_>>();
    let h_in = SubhamCycle::from_order(&gi, order(&[3, 4, 5, 2, 1, 0]));
    let h_out = SubhamCycle::from_order(&go, order(&[5, 3, 4, 7, 6, 8]));
    assert!(h_in.augmentation.is_empty() && h_out.augmentation.is_empty());
    let h = merge_cycles(&g, &h_in, &h_out, t).unwrap();
    assert!(h.augmentation.is_empty());
    assert!(verify_subhamiltonian(&g, &h).pass());
    assert_eq!(oracle_hamiltonian(&g).map(|c| c.len()), Some(9));
}

#[test]
fn prism_stack_three_after_one_recursion() {
    let g = gen::prism_stack(3).unwrap();
    let h = subham_triconnected(&g).unwrap();
    assert!(verify_subhamiltonian(&g, &h).pass());
}

#[test]
fn octahedron_end_to_end() {
    let g = gen::octahedron();
    let h = subham_triconnected(&g).unwrap();
    assert!(verify_subhamiltonian(&g, &h).pass());
}

#[test]
fn prism_stacks_up_to_fifty() {
    for k in 2..=50 {
        let g = gen::prism_stack(k).unwrap();
        let h = subham_triconnected(&g).unwrap();
        let r = verify_subhamiltonian(&g, &h);
        assert!(r.pass(), "k={k}: {r}");
    }
}

#[test]
fn gadget_chains_up_to_fifty() {
    for k in 1..=50 {
        let g = gen::gadget_chain(k).unwrap();
        let emb = planar_embed(&g).unwrap();
        assert_eq!(find_separating_triangles(&g, &emb).unwrap().len(), k);
        let h = subham_triconnected(&g).unwrap();
        let r = verify_subhamiltonian(&g, &h);
        assert!(r.pass(), "k={k}: {r}");
    }
}

#[test]
fn preconditions_are_checked_first() {
    let c4 = Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    assert_eq!(subham_triconnected(&c4), Err(SubhamError::NotTriconnected));
    let mut k5 = Vec::new();
    for i in 0..5 {
        for j in i + 1..5 {
            k5.push((i, j));
        }
    }
    let k5 = Graph::build(5, &k5).unwrap();
    assert_eq!(subham_triconnected(&k5), Err(SubhamError::NotPlanar));
}

fn triconnected_corpus() -> Vec<Graph> {
    let levels = gen::enumerate_levels(8).unwrap();
    let mut out: Vec<Graph> = levels
        .iter()
        .flatten()
        .filter(|g| g.vertex_count() >= 4 && connectivity_class(g) == ConnectivityClass::ThreeOrMore)
        .cloned()
        .collect();
    out.extend(gen::enumerate_triconnected(levels.last().unwrap()));
    out
}

#[test]
fn separating_triangles_match_oracle_and_cycles_verify_on_small_corpus() {
    let corpus = triconnected_corpus();
    assert!(corpus.len() > 125);
    for g in &corpus {
        let emb = planar_embed(g).unwrap();
        let mut found: Vec<[VertexId; 3]> =
            find_separating_triangles(g, &emb).unwrap().iter().map(|t| t.corners).collect();
        found.sort_unstable();
        assert_eq!(found, oracle_separating_triangles(g));
        let h = subham_triconnected(g).unwrap();
        assert!(verify_subhamiltonian(g, &h).pass());
    }
}
