//! Randomized invariants checked against the brute-force oracles.

mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use clawfree::decompose::{find_clique_cutset, verify_clique_cutset};
use clawfree::forbidden::{find_structure, verify_witness, ForbiddenKind};
use clawfree::graph::{is_strong_stable_set, line_graph, maximal_cliques as library_cliques};
use clawfree::linegraph::{is_suitable_matching, recover_root, suitable_matching, verify_root};
use clawfree::recognizers::{find_claw, is_claw_free, is_simplicial};
use clawfree::solver::{solve, SolveInput, Status};
use clawfree::workbench::certificate::{verify_certificate, Certificate};
use clawfree::workbench::generators::{consistent_safe_set, random_claw_free_innocent, random_harmless};
use clawfree::workbench::io::{from_edge_list, from_graph6, to_edge_list, to_graph6};
use clawfree::{Budget, Graph, VertexSet};

use common::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<(usize, usize)> = pairs.zip(bits).filter(|&(_, on)| on).map(|(e, _)| e).collect();
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

fn claw_free_innocent() -> impl Strategy<Value = Graph> {
    (any::<u64>(), 3usize..=10, 0.0f64..0.6).prop_map(|(seed, size, rate)| random_claw_free_innocent(seed, size, rate).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn complement_is_an_involution(g in graph(12)) {
        let c = g.complement();
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.n() * g.n().saturating_sub(1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn maximal_cliques_match_oracle(g in graph(9)) {
        let mut lib: Vec<u128> = library_cliques(&g, &Budget::default()).unwrap().into_iter().map(VertexSet::bits).collect();
        let mut oracle = maximal_cliques(&g);
        lib.sort_unstable();
        oracle.sort_unstable();
        prop_assert_eq!(lib, oracle);
    }

    #[test]
    fn text_formats_round_trip(g in graph(14)) {
        prop_assert_eq!(&from_graph6(&to_graph6(&g)).unwrap(), &g);
        prop_assert_eq!(&from_edge_list(&to_edge_list(&g)).unwrap(), &g);
    }

    #[test]
    fn claw_search_matches_oracle(g in graph(10)) {
        prop_assert_eq!(is_claw_free(&g), !has_claw(&g));
        if let Some(w) = find_claw(&g) {
            prop_assert!(w.verify(&g));
        }
    }

    #[test]
    fn detectors_match_oracle(g in graph(9)) {
        let expected = forbidden_kinds(&g);
        for (i, kind) in ForbiddenKind::ALL.into_iter().enumerate() {
            let found = find_structure(&g, kind, &Budget::default()).unwrap();
            prop_assert_eq!(found.is_some(), expected[i], "{}", KIND_NAMES[i]);
            if let Some(w) = found {
                prop_assert!(verify_witness(&g, &w));
            }
        }
    }

    #[test]
    fn clique_cutsets_match_oracle(g in graph(8)) {
        let found = find_clique_cutset(&g);
        prop_assert_eq!(found.is_some(), has_clique_cutset(&g));
        if let Some(c) = found {
            prop_assert!(verify_clique_cutset(&g, &c));
        }
    }

    #[test]
    fn solutions_verify(g in claw_free_innocent(), with_required in any::<bool>()) {
        let b = Budget::default();
        let z = if with_required { consistent_safe_set(&g, &b).unwrap() } else { VertexSet::new() };
        let r = solve(&SolveInput::with_required(g.clone(), z), &b).unwrap();
        prop_assert!(matches!(r.status, Status::Found | Status::FallbackFound));
        let s = r.s.unwrap();
        prop_assert!(z.is_subset(s));
        prop_assert!(is_strong_stable_set(&g, s, &b).unwrap());
        if g.n() <= 12 {
            prop_assert!(is_strong_stable(&g, s.bits()));
        }
    }

    #[test]
    fn safe_sets_are_simplicial(g in claw_free_innocent()) {
        let z = consistent_safe_set(&g, &Budget::default()).unwrap();
        prop_assert!(is_stable(&g, z.bits()));
        for v in z {
            prop_assert!(is_simplicial(&g, v));
        }
    }

    #[test]
    fn certificates_round_trip(g in graph(8)) {
        let c = Certificate::check(&g, &Budget::default()).unwrap();
        let back = Certificate::from_json(&c.to_json()).unwrap();
        prop_assert_eq!(&back, &c);
        prop_assert!(verify_certificate(&back).unwrap());
    }

    #[test]
    fn line_graphs_are_claw_free_and_recoverable(seed in any::<u64>(), m in 1usize..=14) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let root = random_bipartite_multigraph(&mut rng, m);
        let (l, _) = line_graph(&root).unwrap();
        prop_assert_eq!(&l, &line_graph_of(&root));
        prop_assert!(!has_claw(&l));
        let r = recover_root(&l, &Budget::default()).unwrap();
        prop_assert!(r.is_some());
        let r = r.unwrap();
        prop_assert!(verify_root(&l, &r));
        // Input vertex v is root edge edge_map[v].
        let lr = line_graph_of(&r.root);
        for u in 0..l.n() {
            for v in 0..l.n() {
                prop_assert_eq!(l.adjacent(u, v), u != v && lr.adjacent(r.edge_map[u], r.edge_map[v]));
            }
        }
    }

    #[test]
    fn suitable_matchings_are_strong(size in 2usize..=10, seed in any::<u64>()) {
        let b = Budget::default();
        let root = random_harmless(size, seed).unwrap();
        let m = suitable_matching(&root, &[], &b).unwrap();
        prop_assert!(m.is_some());
        let edges = m.unwrap().edges;
        prop_assert!(is_suitable_matching(&root, &edges));
        let l = line_graph_of(&root);
        if l.n() <= 14 {
            prop_assert!(is_strong_stable(&l, mask(&edges)));
        }
    }
}
