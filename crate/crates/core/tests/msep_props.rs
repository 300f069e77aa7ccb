mod common;

use admg_markov::format::emit_graph;
use admg_markov::generate::RandomGraph;
use admg_markov::msep::{m_separated, m_separated_bruteforce, SeparationQuery};
use admg_markov::VertexSet;
use common::{d_separated_moral, query, singleton_queries};
use proptest::prelude::*;

#[test]
fn fast_path_matches_path_enumeration_on_random_graphs() {
    let graphs = common::corpus(220, 7, 21);
    let mut checked = 0usize;
    for g in &graphs {
        for (x, y, z) in singleton_queries(g) {
            let q = query(x, y, &z);
            assert_eq!(
                m_separated(g, &q).unwrap(),
                m_separated_bruteforce(g, &q).unwrap(),
                "{}\n{q:?}",
                emit_graph(g)
            );
            checked += 1;
        }
    }
    assert!(checked > 10_000);
}

#[test]
fn dag_case_matches_moralization() {
    for seed in 0..150 {
        let g = RandomGraph::new(2 + (seed as usize % 6), 0.45, 0.0).sample(seed);
        for (x, y, z) in singleton_queries(&g) {
            let q = query(x, y, &z);
            assert_eq!(
                m_separated(&g, &q).unwrap(),
                d_separated_moral(&g, &q.x_set, &q.y_set, &z),
                "{}\n{q:?}",
                emit_graph(&g)
            );
        }
    }
}

fn set_query() -> impl Strategy<
    Value = (
        admg_markov::Admg,
        VertexSet,
        VertexSet,
        VertexSet,
        VertexSet,
    ),
> {
    (
        3usize..=7,
        0.0f64..0.6,
        0.0f64..0.5,
        any::<u64>(),
        any::<u64>(),
    )
        .prop_map(|(n, d, b, seed, split)| {
            let g = RandomGraph::new(n, d, b).sample(seed);
            // Each vertex lands in X, Y, W, Z or nowhere.
            let mut parts = [
                VertexSet::new(),
                VertexSet::new(),
                VertexSet::new(),
                VertexSet::new(),
                VertexSet::new(),
            ];
            // The first three vertices of a rotation seed X, Y and W.
            let start = (split % n as u64) as usize;
            let mut s = split / n as u64;
            for i in 0..n {
                let v = (start + i) % n;
                let part = if i < 3 { i } else { (s % 5) as usize };
                parts[part].insert(v);
                s /= 5;
            }
            let [x, y, w, z, _] = parts;
            (g, x, y, w, z)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn symmetric_in_x_and_y((g, x, y, _w, z) in set_query()) {
        prop_assume!(!x.is_empty() && !y.is_empty());
        let a = m_separated(&g, &SeparationQuery::new(x.clone(), y.clone(), z.clone())).unwrap();
        let b = m_separated(&g, &SeparationQuery::new(y, x, z)).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn decomposition_and_composition_hold((g, x, y, w, z) in set_query()) {
        prop_assume!(!x.is_empty() && !y.is_empty() && !w.is_empty());
        let sep = |t: &VertexSet| m_separated(&g, &SeparationQuery::new(x.clone(), t.clone(), z.clone())).unwrap();
        let joint = sep(&y.union(&w));
        prop_assert_eq!(joint, sep(&y) && sep(&w));
    }

    #[test]
    fn set_query_is_all_pairs((g, x, y, _w, z) in set_query()) {
        prop_assume!(!x.is_empty() && !y.is_empty());
        let whole = m_separated(&g, &SeparationQuery::new(x.clone(), y.clone(), z.clone())).unwrap();
        let pairs = x.iter().all(|a| y.iter().all(|b| m_separated(&g, &query(a, b, &z)).unwrap()));
        prop_assert_eq!(whole, pairs);
    }
}
