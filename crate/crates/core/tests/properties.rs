use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use great_shadow::blocks::block_decomposition;
use great_shadow::circuit::{interrupt_expansion, parse_matrix, routability_report, Routability};
use great_shadow::cycles::find_odd_cycle;
use great_shadow::embedding::{embed_shadow, render_shadow};
use great_shadow::generators::{random_cactus, random_edge_subgraph, random_graph};
use great_shadow::oracle::{is_planar, kuratowski_witness, Kuratowski};
use great_shadow::theta::find_theta;
use great_shadow::witness::{k33_search, k5_search, shadow_witness, SearchBound};
use great_shadow::{classify, great_shadow, mycielskian, small_shadow, Graph};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.0..0.8f64, any::<u64>())
        .prop_map(|(n, p, seed)| random_graph(n, p, &mut ChaCha8Rng::seed_from_u64(seed)))
}

fn arb_cactus(max_n: usize, even_only: bool) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>()).prop_map(move |(n, seed)| random_cactus(n, even_only, &mut ChaCha8Rng::seed_from_u64(seed)))
}

/// Several random cacti side by side, so components get exercised too.
fn arb_cactus_forest() -> impl Strategy<Value = Graph> {
    prop::collection::vec(arb_cactus(12, true), 1..4)
        .prop_map(|parts| parts.iter().skip(1).fold(parts[0].clone(), |acc, g| acc.disjoint_union(g)))
}

fn two_colourable(g: &Graph) -> bool {
    let mut colour: Vec<Option<bool>> = vec![None; g.order()];
    for s in g.vertices() {
        if colour[s].is_some() {
            continue;
        }
        colour[s] = Some(false);
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            let cx = colour[x].unwrap();
            for &y in g.neighbors(x) {
                match colour[y] {
                    None => {
                        colour[y] = Some(!cx);
                        stack.push(y);
                    }
                    Some(c) if c == cx => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn shadow_size_and_degree_laws(g in arb_graph(30)) {
        let (n, m) = (g.order(), g.size());
        let s = great_shadow(&g);
        prop_assert!(s.check_invariants(&g).is_ok());
        prop_assert_eq!(s.graph.size(), 3 * m + n);
        for v in g.vertices() {
            prop_assert_eq!(s.graph.degree(v), 2 * g.degree(v) + 1);
            prop_assert_eq!(s.graph.degree(v + n), g.degree(v) + 1);
        }
        let small = small_shadow(&g).graph;
        prop_assert_eq!(small.size(), 3 * m);
        prop_assert!(small.edges().iter().all(|&(a, b)| s.graph.has_edge(a, b)));
        let myc = mycielskian(&g).graph;
        let without_center = myc.edge_subgraph(|a, b| a != 2 * n && b != 2 * n);
        let (trimmed, _) = without_center.induced_subgraph(&(0..2 * n).collect::<Vec<_>>());
        prop_assert_eq!(trimmed, small);
    }

    #[test]
    fn monotone_under_edge_deletion(g in arb_graph(25), p in 0.0..1.0f64, seed in any::<u64>()) {
        let h = random_edge_subgraph(&g, p, &mut ChaCha8Rng::seed_from_u64(seed));
        let (sh, sg) = (great_shadow(&h).graph, great_shadow(&g).graph);
        prop_assert!(sh.edges().iter().all(|&(a, b)| sg.has_edge(a, b)));
    }

    #[test]
    fn odd_cycle_iff_not_two_colourable(g in arb_graph(20)) {
        let c = find_odd_cycle(&g);
        prop_assert_eq!(c.is_none(), two_colourable(&g));
        if let Some(c) = c {
            prop_assert!(c.validate(&g).is_ok());
            prop_assert!(c.is_odd_cycle());
        }
    }

    #[test]
    fn theta_iff_non_cycle_block(g in arb_graph(16)) {
        let blocks = block_decomposition(&g);
        let all_simple = blocks.blocks.iter().all(|b| {
            let (nv, ne) = (b.vertices.len(), b.edges.len());
            ne == 1 || (nv == ne && nv >= 3)
        });
        let th = find_theta(&g);
        prop_assert_eq!(th.is_none(), all_simple);
        if let Some(th) = th {
            prop_assert!(th.validate(&g).is_ok());
        }
    }

    #[test]
    fn verdict_certificates_validate(g in arb_graph(16)) {
        let v = classify(&g);
        prop_assert!(v.validate(&g));
        prop_assert_eq!(v.is_bipartite_cactus(), find_odd_cycle(&g).is_none() && find_theta(&g).is_none());
    }

    #[test]
    fn witness_exists_exactly_off_bipartite_cacti(g in arb_graph(14)) {
        let w = shadow_witness(&g).unwrap();
        prop_assert_eq!(w.is_none(), classify(&g).is_bipartite_cactus());
        if let Some(w) = w {
            prop_assert!(w.check(&great_shadow(&g).graph).is_ok());
        }
    }

    #[test]
    fn embeddings_are_euler_certified(g in arb_cactus_forest()) {
        let rs = embed_shadow(&g).unwrap();
        prop_assert!(rs.euler_check().is_ok());
        prop_assert_eq!(rs.to_graph(), Some(great_shadow(&g).graph));
        let d = render_shadow(&g).unwrap();
        prop_assert_eq!(d.crossing_count(), 0);
    }

    #[test]
    fn non_bipartite_cacti_are_rejected(g in arb_cactus(14, false)) {
        prop_assert_eq!(embed_shadow(&g).is_ok(), classify(&g).is_bipartite_cactus());
        prop_assert_eq!(is_planar(&great_shadow(&g).graph), classify(&g).is_bipartite_cactus());
    }

    #[test]
    fn routability_matches_oracle(g in arb_graph(12), flip in any::<u64>()) {
        let mut text = format!("pins={}\n", g.order());
        for (i, &(a, b)) in g.edges().iter().enumerate() {
            let (x, y) = if flip >> (i % 64) & 1 == 1 { (b, a) } else { (a, b) };
            text.push_str(&format!("{x} -> {y}\n"));
        }
        let k = parse_matrix(&text).unwrap();
        let r = routability_report(&k).unwrap();
        let planar = is_planar(&interrupt_expansion(&k).shadow.graph);
        prop_assert_eq!(r.verdict == Routability::SingleSided, planar);
        prop_assert_eq!(serde_json::to_string(&r).unwrap(), serde_json::to_string(&routability_report(&k).unwrap()).unwrap());
    }

    #[test]
    fn oracle_respects_euler_bound(g in arb_graph(14)) {
        let (n, m) = (g.order(), g.size());
        if n >= 3 && m > 3 * n - 6 {
            prop_assert!(!is_planar(&g));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn oracle_agrees_with_subdivision_search(g in arb_graph(8)) {
        let bound = SearchBound::default();
        let found = k33_search(&g, bound).unwrap().is_some() || k5_search(&g, bound).unwrap().is_some();
        prop_assert_eq!(is_planar(&g), !found);
        match kuratowski_witness(&g, 16).unwrap() {
            None => prop_assert!(is_planar(&g)),
            Some(Kuratowski::K33(w)) => prop_assert!(w.check(&g).is_ok()),
            Some(Kuratowski::K5(w)) => prop_assert!(w.check(&g).is_ok()),
        }
    }
}
