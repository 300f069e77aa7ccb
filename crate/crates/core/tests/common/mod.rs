//! Shared corpora and reference implementations for the integration tests.
//! Oracles here only use the public graph accessors, never the algorithms
//! under test.
#![allow(dead_code)]

use admg_markov::generate::RandomGraph;
use admg_markov::msep::{m_separated_bruteforce, SeparationQuery};
use admg_markov::{Admg, CiStatement, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `count` random ADMGs with 2..=max_n vertices and varied densities.
pub fn corpus(count: usize, max_n: usize, seed: u64) -> Vec<Admg> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(2..=max_n);
            let d = rng.random_range(0.1..0.6);
            let b = rng.random_range(0.0..0.5);
            RandomGraph::new(n, d, b).sample_with(&mut rng)
        })
        .collect()
}

/// Like [`corpus`] but only graphs without a mixed directed cycle.
pub fn cycle_free_corpus(count: usize, max_n: usize, seed: u64) -> Vec<Admg> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.random_range(2..=max_n);
        let d = rng.random_range(0.1..0.5);
        let b = rng.random_range(0.0..0.4);
        let g = RandomGraph::new(n, d, b).sample_with(&mut rng);
        if !mixed_cycle_literal(&g) {
            out.push(g);
        }
    }
    out
}

/// Every subset of `items`.
pub fn subsets(items: &[usize]) -> Vec<VertexSet> {
    (0u32..1 << items.len())
        .map(|bits| {
            items
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect()
        })
        .collect()
}

/// All `(x, y, Z)` with `x < y` and `Z ⊆ V \ {x, y}`.
pub fn singleton_queries(g: &Admg) -> Vec<(usize, usize, VertexSet)> {
    let n = g.n();
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            let rest: Vec<usize> = (0..n).filter(|&v| v != x && v != y).collect();
            for z in subsets(&rest) {
                out.push((x, y, z));
            }
        }
    }
    out
}

pub fn query(x: usize, y: usize, z: &VertexSet) -> SeparationQuery {
    SeparationQuery::new(VertexSet::singleton(x), VertexSet::singleton(y), z.clone())
}

pub fn holds(g: &Admg, s: &CiStatement) -> bool {
    let q = SeparationQuery::new(s.x.clone(), s.y.clone(), s.z.clone());
    m_separated_bruteforce(g, &q).unwrap()
}

/// Forward steps of a mixed directed path: `(next, used_directed_edge)`.
fn forward_steps(g: &Admg, v: usize) -> Vec<(usize, bool)> {
    let mut out: Vec<(usize, bool)> = g
        .directed_edges()
        .iter()
        .filter(|&&(t, _)| t == v)
        .map(|&(_, h)| (h, true))
        .collect();
    for &(a, b) in g.bidirected_edges() {
        if a == v {
            out.push((b, false));
        } else if b == v {
            out.push((a, false));
        }
    }
    out
}

/// Enumerates vertex-simple paths from `alpha` looking for one that ends at
/// `beta` and uses at least one directed edge.
pub fn mixed_path_enumerated(g: &Admg, alpha: usize, beta: usize) -> bool {
    fn go(g: &Admg, v: usize, beta: usize, used: bool, seen: &mut Vec<bool>) -> bool {
        for (w, directed) in forward_steps(g, v) {
            if w == beta && (used || directed) {
                return true;
            }
            if seen[w] || w == beta {
                continue;
            }
            seen[w] = true;
            let found = go(g, w, beta, used || directed, seen);
            seen[w] = false;
            if found {
                return true;
            }
        }
        false
    }
    if alpha == beta {
        return false;
    }
    let mut seen = vec![false; g.n()];
    seen[alpha] = true;
    go(g, alpha, beta, false, &mut seen)
}

/// A mixed directed path from α to β closed by `β -> α` or `β <-> α`.
pub fn mixed_cycle_literal(g: &Admg) -> bool {
    let closers = g.directed_edges().iter().map(|&(t, h)| (h, t)).chain(
        g.bidirected_edges()
            .iter()
            .flat_map(|&(a, b)| [(a, b), (b, a)]),
    );
    closers
        .into_iter()
        .any(|(alpha, beta)| mixed_path_enumerated(g, alpha, beta))
}

fn ancestors_naive(g: &Admg, s: &VertexSet) -> VertexSet {
    let mut an = s.clone();
    loop {
        let before = an.len();
        for &(t, h) in g.directed_edges() {
            if an.contains(h) {
                an.insert(t);
            }
        }
        if an.len() == before {
            return an;
        }
    }
}

/// d-separation on a DAG by moralizing the ancestral subgraph of `X ∪ Y ∪ Z`.
pub fn d_separated_moral(g: &Admg, x: &VertexSet, y: &VertexSet, z: &VertexSet) -> bool {
    assert!(g.bidirected_edges().is_empty());
    let keep = ancestors_naive(g, &x.union(y).union(z));
    let n = g.n();
    let mut adj = vec![vec![false; n]; n];
    for &(t, h) in g.directed_edges() {
        if keep.contains(t) && keep.contains(h) {
            adj[t][h] = true;
            adj[h][t] = true;
        }
    }
    for v in &keep {
        let pa: Vec<usize> = g.parents_of(v).iter().collect();
        for &p in &pa {
            for &q in &pa {
                if p != q {
                    adj[p][q] = true;
                }
            }
        }
    }
    let mut seen: Vec<bool> = (0..n).map(|v| z.contains(v) || !keep.contains(v)).collect();
    let mut stack: Vec<usize> = x.iter().collect();
    for v in x {
        seen[v] = true;
    }
    while let Some(v) = stack.pop() {
        if y.contains(v) {
            return false;
        }
        for w in 0..n {
            if adj[v][w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    true
}

/// Is `a` closed under taking parents? Checked edge by edge.
pub fn is_ancestral_naive(g: &Admg, a: &VertexSet) -> bool {
    g.directed_edges()
        .iter()
        .all(|&(t, h)| !a.contains(h) || a.contains(t))
}

/// District of `x` inside `within`, by flood fill over bi-directed edges.
pub fn district_bfs(g: &Admg, x: usize, within: &VertexSet) -> VertexSet {
    let mut out = VertexSet::singleton(x);
    let mut stack = vec![x];
    while let Some(v) = stack.pop() {
        for &(a, b) in g.bidirected_edges() {
            let w = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if within.contains(w) && out.insert(w) {
                stack.push(w);
            }
        }
    }
    out
}

/// `pa(dis_A(x)) ∪ dis_A(x) \ {x}` from first principles.
pub fn blanket_naive(g: &Admg, x: usize, a: &VertexSet) -> VertexSet {
    let dis = district_bfs(g, x, a);
    let mut mb = dis.clone();
    for &(t, h) in g.directed_edges() {
        if dis.contains(h) {
            mb.insert(t);
        }
    }
    mb.without(x)
}
