mod common;

use std::path::PathBuf;
use std::process::{Command, Output};

use common::{corpus, v};
use quadbook::io::bench::{self, Family, Pipeline};
use quadbook::io::format::{parse_edge_list, serialize_edge_list, EmbeddingDocument, ParseError};
use quadbook::io::gen;
use quadbook::io::svg::{render_book_svg, render_cycle_svg};
use quadbook::planar::is_planar;
use quadbook::{embed_two_page, subham_triconnected, Graph, SubhamCycle};

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("quadbook-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn quadbook(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quadbook")).args(args).output().unwrap()
}

fn path(p: &PathBuf) -> &str {
    p.to_str().unwrap()
}

#[test]
fn edge_lists_round_trip_over_corpus() {
    for g in corpus(7) {
        let text = serialize_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        assert_eq!(back.edge_multiset(), g.edge_multiset());
        assert_eq!(serialize_edge_list(&back), text);
    }
}

#[test]
fn embedding_documents_round_trip() {
    for g in corpus(7).iter().chain([gen::grid(6, 7).unwrap(), gen::random_4planar(200, 3).unwrap()].iter()) {
        let be = embed_two_page(g).unwrap();
        let doc = EmbeddingDocument::from_book(g, &be);
        let text = doc.serialize();
        let parsed = EmbeddingDocument::parse(&text).unwrap();
        assert_eq!(parsed, doc);
        assert_eq!(parsed.serialize(), text);
        assert_eq!(parsed.to_book(g).unwrap(), be);
    }
}

#[test]
fn cycle_documents_round_trip() {
    for g in [gen::octahedron(), gen::prism_stack(6).unwrap(), gen::gadget_chain(3).unwrap()] {
        let h = subham_triconnected(&g).unwrap();
        let doc = EmbeddingDocument::from_cycle(&h);
        let parsed = EmbeddingDocument::parse(&doc.serialize()).unwrap();
        assert_eq!(parsed, doc);
        let back = parsed.to_cycle(&g).unwrap();
        assert_eq!(back.order, h.order);
        assert_eq!(back.augmentation.len(), h.augmentation.len());
    }
}

#[test]
fn malformed_documents_are_positioned() {
    assert!(matches!(parse_edge_list("p 3\n"), Err(ParseError::Syntax { line: 1, .. })));
    assert!(matches!(parse_edge_list("p 2 2\n0 1\n"), Err(ParseError::EdgeCount { expected: 2, found: 1 })));
    assert!(matches!(parse_edge_list("p 2 3\n0 1\n0 1\n1 0\n"), Err(ParseError::Graph { line: 4, .. })));
    assert!(matches!(parse_edge_list("# only a comment\n"), Err(ParseError::MissingHeader)));
    assert!(matches!(EmbeddingDocument::parse("order: 0 1\npage 0 1 left\n"), Err(ParseError::Syntax { line: 2, .. })));
}

#[test]
fn grid_and_prism_generators() {
    let g = gen::grid(3, 3).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count(), g.max_degree()), (9, 12, 4));
    assert_eq!(g.degree(v(4)), 4);
    let p = gen::prism_stack(3).unwrap();
    assert_eq!((p.vertex_count(), p.edge_count()), (9, 15));
    assert!(p.vertices().all(|x| p.degree(x) == if x.0 / 3 == 1 { 4 } else { 3 }));
    assert!(gen::grid(0, 3).is_err());
    assert!(gen::prism_stack(1).is_err());
}

/// Connected planar simple graphs with maximum degree 4 up to isomorphism, by
/// brute force over labelled edge sets.
fn brute_force_count(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut perms = vec![(0..n).collect::<Vec<_>>()];
    while let Some(next) = {
        let mut p = perms.last().unwrap().clone();
        let ok = (1..n).rev().find(|&i| p[i - 1] < p[i]).map(|i| {
            let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
            p.swap(i - 1, j);
            p[i..].reverse();
        });
        ok.map(|_| p)
    } {
        perms.push(next);
    }
    let bit = |a: usize, b: usize| pairs.iter().position(|&q| q == (a.min(b), a.max(b))).unwrap();
    let mut seen = std::collections::HashSet::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
        let g = Graph::build(n, &edges).unwrap();
        if !g.is_connected() || g.max_degree() > 4 || !is_planar(&g) {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| edges.iter().fold(0u32, |acc, &(a, b)| acc | 1 << bit(p[a], p[b])))
            .min()
            .unwrap();
        seen.insert(canon);
    }
    seen.len()
}

#[test]
fn enumeration_counts_match_brute_force() {
    let levels = gen::enumerate_levels(6).unwrap();
    for n in 1..=6 {
        assert_eq!(levels[n - 1].len(), brute_force_count(n), "n = {n}");
    }
    assert_eq!(levels[3].len(), 6);
}

#[test]
fn enumeration_counts_are_frozen() {
    let counts: Vec<usize> = gen::enumerate_levels(8).unwrap().iter().map(Vec::len).collect();
    assert_eq!(counts, vec![1, 1, 2, 6, 20, 74, 321, 1663]);
    let last = gen::enumerate_levels(9).unwrap();
    assert_eq!(gen::enumerate_triconnected(&last[7]).len(), 125);
}

#[test]
fn random_family_is_seed_deterministic() {
    let a = gen::random_4planar(120, 5).unwrap();
    let b = gen::random_4planar(120, 5).unwrap();
    assert_eq!(serialize_edge_list(&a), serialize_edge_list(&b));
    assert_ne!(serialize_edge_list(&a), serialize_edge_list(&gen::random_4planar(120, 6).unwrap()));
}

#[test]
fn c4_renders_three_arcs_below_one_above() {
    let g = Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    let svg = render_book_svg(&g, &embed_two_page(&g).unwrap());
    assert_eq!(svg.matches(r#"class="bottom""#).count(), 3);
    assert_eq!(svg.matches(r#"class="top""#).count(), 1);
    assert!(!svg.contains("stroke-dasharray"));
}

#[test]
fn one_augmentation_edge_renders_one_dashed_arc() {
    let g = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
    let h = SubhamCycle::from_order(&g, vec![v(0), v(1), v(2)]);
    assert_eq!(h.augmentation.len(), 1);
    let svg = render_cycle_svg(&g, &h);
    assert_eq!(svg.matches("stroke-dasharray").count(), 1);
    assert_eq!(svg.matches("<path").count(), 3);
}

#[test]
fn rendering_is_byte_stable() {
    let g = gen::random_4planar(80, 2).unwrap();
    let be = embed_two_page(&g).unwrap();
    assert_eq!(render_book_svg(&g, &be), render_book_svg(&g, &be));
    let t = gen::gadget_chain(2).unwrap();
    let h = subham_triconnected(&t).unwrap();
    assert_eq!(render_cycle_svg(&t, &h), render_cycle_svg(&t, &h));
}

#[test]
fn bench_rows_are_sorted_and_stable() {
    let rows = bench::run(Family::Grid, &[400, 100, 200], 0, Pipeline::Embed, 1).unwrap();
    let ns: Vec<usize> = rows.iter().map(|r| r.n).collect();
    assert_eq!(ns, vec![100, 210, 400]);
    let strip = |csv: String| csv.lines().map(|l| l.rsplit_once(',').unwrap().0.to_string()).collect::<Vec<_>>();
    let again = bench::run(Family::Grid, &[100, 200, 400], 0, Pipeline::Embed, 1).unwrap();
    assert_eq!(strip(bench::to_csv(&rows)), strip(bench::to_csv(&again)));
    assert_eq!(bench::to_csv(&rows).lines().next(), Some("family,n,m,millis"));
}

#[test]
fn cli_embed_then_verify() {
    let g = scratch("grid.txt");
    let e = scratch("grid.emb");
    assert!(quadbook(&["gen", "grid", "--rows", "4", "--cols", "4", "-o", path(&g)]).status.success());
    assert!(quadbook(&["embed", path(&g), "-o", path(&e)]).status.success());
    let out = quadbook(&["verify", path(&g), path(&e)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}

#[test]
fn cli_verify_reports_tampered_page() {
    let g = scratch("k4.txt");
    let e = scratch("k4.emb");
    std::fs::write(&g, serialize_edge_list(&gen::complete4())).unwrap();
    assert!(quadbook(&["embed", path(&g), "-o", path(&e)]).status.success());
    let doc = std::fs::read_to_string(&e).unwrap();
    // K4 needs both pages, so moving every top edge down creates a crossing
    std::fs::write(&e, doc.replace(" top", " bottom")).unwrap();
    let out = quadbook(&["verify", path(&g), path(&e)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("alternate"));
}

#[test]
fn cli_rejects_degree_five_with_code_two() {
    let g = scratch("star.txt");
    std::fs::write(&g, "p 6 5\n0 1\n0 2\n0 3\n0 4\n0 5\n").unwrap();
    let out = quadbook(&["embed", path(&g)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    let bad = scratch("bad.txt");
    std::fs::write(&bad, "p 2 1\n0 5\n").unwrap();
    assert_eq!(quadbook(&["embed", path(&bad)]).status.code(), Some(2));
}

#[test]
fn cli_subham_render_and_oracle() {
    let g = scratch("chain.txt");
    let c = scratch("chain.cyc");
    let svg = scratch("chain.svg");
    assert!(quadbook(&["gen", "gadget-chain", "--k", "2", "-o", path(&g)]).status.success());
    assert!(quadbook(&["subham", path(&g), "-o", path(&c)]).status.success());
    assert!(std::fs::read_to_string(&c).unwrap().starts_with("cycle: "));
    assert_eq!(quadbook(&["verify", path(&g), path(&c)]).status.code(), Some(0));
    assert!(quadbook(&["render", path(&g), path(&c), "-o", path(&svg)]).status.success());
    let first = std::fs::read(&svg).unwrap();
    assert!(quadbook(&["render", path(&g), path(&c), "-o", path(&svg)]).status.success());
    assert_eq!(std::fs::read(&svg).unwrap(), first);

    let o = scratch("octa.txt");
    assert!(quadbook(&["gen", "octahedron", "-o", path(&o)]).status.success());
    let out = quadbook(&["oracle", path(&o)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("order: 0 1 2 3 4 5"));
    assert_eq!(quadbook(&["oracle", path(&g)]).status.code(), Some(2));
    let path3 = scratch("path3.txt");
    std::fs::write(&path3, "p 3 2\n0 1\n1 2\n").unwrap();
    assert_eq!(quadbook(&["subham", path(&path3)]).status.code(), Some(2));
}

#[test]
fn cli_bench_and_gen_are_deterministic() {
    let out = quadbook(&["bench", "grid", "--sizes", "200,100"]);
    assert!(out.status.success());
    let csv = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "family,n,m,millis");
    assert!(lines[1].starts_with("grid,100,180,") && lines[2].starts_with("grid,210,391,"));
    let a = quadbook(&["gen", "random4planar", "--n", "50", "--seed", "9"]).stdout;
    let b = quadbook(&["gen", "random4planar", "--n", "50", "--seed", "9"]).stdout;
    assert!(!a.is_empty());
    assert_eq!(a, b);
}
