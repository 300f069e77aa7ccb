mod common;

use admg_markov::format::{emit_graph, parse_graph};
use admg_markov::generate::RandomGraph;
use admg_markov::{Admg, VertexSet};
use common::{district_bfs, mixed_cycle_literal, mixed_path_enumerated, subsets};
use proptest::prelude::*;

fn graph() -> impl Strategy<Value = Admg> {
    (1usize..=7, 0.0f64..0.7, 0.0f64..0.6, any::<u64>())
        .prop_map(|(n, d, b, seed)| RandomGraph::new(n, d, b).sample(seed))
}

fn graph_and_sets() -> impl Strategy<Value = (Admg, VertexSet, VertexSet)> {
    graph().prop_flat_map(|g| {
        let n = g.n();
        let mask = (1u64 << n) - 1;
        (Just(g), 0..=mask, 0..=mask).prop_map(|(g, a, b)| {
            let s1 = VertexSet::from_mask(a & b);
            let s2 = VertexSet::from_mask(a);
            (g, s1, s2)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn relations_are_monotone((g, small, big) in graph_and_sets()) {
        prop_assert!(small.is_subset(&big));
        prop_assert!(g.parents(&small).is_subset(&g.parents(&big)));
        prop_assert!(g.children(&small).is_subset(&g.children(&big)));
        prop_assert!(g.spouses(&small).is_subset(&g.spouses(&big)));
        prop_assert!(g.ancestors(&small).is_subset(&g.ancestors(&big)));
        prop_assert!(g.descendants(&small).is_subset(&g.descendants(&big)));
    }

    #[test]
    fn ancestral_closure_is_idempotent_and_extensive((g, _s, a) in graph_and_sets()) {
        let an = g.ancestral_closure(&a);
        prop_assert!(a.is_subset(&an));
        prop_assert_eq!(g.ancestral_closure(&an), an.clone());
        prop_assert!(g.is_ancestral(&an));
        prop_assert_eq!(g.is_ancestral(&a), common::is_ancestral_naive(&g, &a));
    }

    #[test]
    fn districts_partition_vertices(g in graph()) {
        let comps = g.c_components();
        let mut seen = VertexSet::new();
        for c in &comps {
            prop_assert!(c.is_disjoint(&seen));
            seen.extend_from(c);
        }
        prop_assert_eq!(seen, g.all());
        for x in 0..g.n() {
            let d = g.district(x);
            prop_assert!(d.contains(x));
            prop_assert!(comps.contains(&d));
            prop_assert_eq!(&d, &district_bfs(&g, x, &g.all()));
        }
    }

    #[test]
    fn districts_within_subsets_match_flood_fill((g, _s, a) in graph_and_sets()) {
        for x in &a {
            prop_assert_eq!(g.district_within(x, &a), district_bfs(&g, x, &a));
        }
    }

    #[test]
    fn emit_then_parse_round_trips(g in graph()) {
        let text = emit_graph(&g);
        prop_assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn no_bidirected_edges_means_no_mixed_cycle(n in 1usize..=8, d in 0.0f64..1.0, seed in any::<u64>()) {
        let g = RandomGraph::new(n, d, 0.0).sample(seed);
        prop_assert!(!g.has_mixed_directed_cycle());
    }
}

#[test]
fn mixed_paths_match_enumeration() {
    for g in common::corpus(300, 7, 11) {
        for a in 0..g.n() {
            for b in 0..g.n() {
                assert_eq!(
                    g.has_mixed_directed_path(a, b),
                    mixed_path_enumerated(&g, a, b),
                    "{}: {} -> {}",
                    emit_graph(&g),
                    g.name(a),
                    g.name(b)
                );
            }
        }
    }
}

#[test]
fn mixed_cycles_match_definition() {
    let graphs = common::corpus(300, 7, 12);
    let cyclic = graphs.iter().filter(|g| mixed_cycle_literal(g)).count();
    assert!(
        cyclic > 30 && cyclic < 270,
        "corpus should mix both kinds, got {cyclic}"
    );
    for g in &graphs {
        assert_eq!(
            g.has_mixed_directed_cycle(),
            mixed_cycle_literal(g),
            "{}",
            emit_graph(g)
        );
    }
}

#[test]
fn induced_subgraph_keeps_exactly_internal_edges() {
    for g in common::corpus(60, 6, 13) {
        let all: Vec<usize> = (0..g.n()).collect();
        for a in subsets(&all).into_iter().filter(|s| !s.is_empty()) {
            let h = g.induced_subgraph(&a);
            assert_eq!(h.n(), a.len());
            let names = |s: &Admg, e: &[(usize, usize)]| -> Vec<(String, String)> {
                e.iter()
                    .map(|&(u, v)| (s.name(u).to_string(), s.name(v).to_string()))
                    .collect()
            };
            let keep = |e: &&(usize, usize)| a.contains(e.0) && a.contains(e.1);
            let dir: Vec<_> = g.directed_edges().iter().filter(keep).copied().collect();
            let bi: Vec<_> = g.bidirected_edges().iter().filter(keep).copied().collect();
            let mut want = names(&g, &dir);
            let mut got = names(&h, h.directed_edges());
            want.sort();
            got.sort();
            assert_eq!(got, want);
            let mut want = names(&g, &bi);
            let mut got = names(&h, h.bidirected_edges());
            want.sort();
            got.sort();
            assert_eq!(got, want);
        }
    }
}
