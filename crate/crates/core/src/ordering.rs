//! Consistent vertex orderings and the contraction-based construction.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use crate::error::{Error, Result};
use crate::graph::Admg;
use crate::mixed::MixedAdjacency;
use crate::set::{VertexId, VertexSet};

/// A total order on the vertices of a graph such that no vertex precedes
/// one of its own ancestors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexOrdering {
    seq: Vec<VertexId>,
    pos: Vec<usize>,
}

impl VertexOrdering {
    /// Validates that `seq` is a permutation of the vertices of `g` and is
    /// consistent with it.
    pub fn new(g: &Admg, seq: Vec<VertexId>) -> Result<Self> {
        let n = g.n();
        if seq.len() != n {
            return Err(Error::InvalidInput(format!(
                "ordering lists {} vertices, graph has {n}",
                seq.len()
            )));
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in seq.iter().enumerate() {
            if v >= n {
                return Err(Error::UnknownVertex(format!("#{v}")));
            }
            if pos[v] != usize::MAX {
                return Err(Error::InvalidInput(format!(
                    "vertex `{}` appears twice in the ordering",
                    g.name(v)
                )));
            }
            pos[v] = i;
        }
        for &(t, h) in g.directed_edges() {
            if pos[t] > pos[h] {
                return Err(Error::InvalidInput(format!(
                    "ordering is inconsistent: `{}` is an ancestor of `{}` but comes after it",
                    g.name(t),
                    g.name(h)
                )));
            }
        }
        Ok(Self { seq, pos })
    }

    /// Parses a list of vertex names.
    pub fn from_names<S: AsRef<str>>(g: &Admg, names: &[S]) -> Result<Self> {
        let seq = names
            .iter()
            .map(|n| g.id(n.as_ref()))
            .collect::<Result<_>>()?;
        Self::new(g, seq)
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn position(&self, v: VertexId) -> usize {
        self.pos[v]
    }

    /// `v` and every vertex before it.
    pub fn pre(&self, v: VertexId) -> VertexSet {
        self.seq[..=self.pos[v]].iter().copied().collect()
    }

    pub fn names(&self, g: &Admg) -> Vec<String> {
        self.seq.iter().map(|&v| g.name(v).to_string()).collect()
    }
}

/// Result of contracting bi-directed edges and sorting the contracted DAG.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollapsedOrdering {
    pub ordering: VertexOrdering,
    /// Blocks of combined vertices, in ordering order.
    pub blocks: Vec<VertexSet>,
    /// Bi-directed edges whose endpoints were combined.
    pub merged: Vec<(VertexId, VertexId)>,
    /// Bi-directed edges dropped because a mixed directed path joins their endpoints.
    pub removed: Vec<(VertexId, VertexId)>,
}

/// Working state: blocks of original vertices and the edges between them.
struct Contraction {
    block_of: Vec<usize>,
    members: Vec<VertexSet>,
    alive: Vec<bool>,
    directed: BTreeSet<(usize, usize)>,
    bidirected: BTreeSet<(usize, usize)>,
}

impl Contraction {
    fn new(g: &Admg) -> Self {
        let n = g.n();
        Self {
            block_of: (0..n).collect(),
            members: (0..n).map(VertexSet::singleton).collect(),
            alive: vec![true; n],
            directed: g.directed_edges().iter().copied().collect(),
            bidirected: g.bidirected_edges().iter().copied().collect(),
        }
    }

    fn adjacency(&self) -> MixedAdjacency {
        let n = self.members.len();
        let mut adj = MixedAdjacency {
            directed: vec![Vec::new(); n],
            bidirected: vec![Vec::new(); n],
        };
        for &(t, h) in &self.directed {
            adj.directed[t].push(h);
        }
        for &(a, b) in &self.bidirected {
            adj.bidirected[a].push(b);
            adj.bidirected[b].push(a);
        }
        adj
    }

    fn edge_kinds(&self, s: usize, gamma: usize) -> (bool, bool, bool) {
        (
            self.directed.contains(&(s, gamma)),
            self.directed.contains(&(gamma, s)),
            self.bidirected.contains(&(s.min(gamma), s.max(gamma))),
        )
    }

    /// Combines block `t` into block `s`.
    ///
    /// Parallel edges to a common neighbour collapse into one: `s -> g` with
    /// `t -> g`, `g -> s` with `g -> t`, `s <-> g` with `t <-> g`. Any other
    /// combination would close a mixed directed path between `s` and `t`,
    /// which the caller has ruled out.
    fn merge(&mut self, s: usize, t: usize) -> Result<()> {
        for gamma in 0..self.members.len() {
            if !self.alive[gamma] || gamma == s || gamma == t {
                continue;
            }
            let (s_out, s_in, s_bi) = self.edge_kinds(s, gamma);
            let (t_out, t_in, t_bi) = self.edge_kinds(t, gamma);
            let s_any = s_out || s_in || s_bi;
            let t_any = t_out || t_in || t_bi;
            if s_any && t_any {
                let clash = (s_out && (t_in || t_bi))
                    || (t_out && (s_in || s_bi))
                    || (s_in && t_bi)
                    || (t_in && s_bi);
                if clash {
                    return Err(Error::Internal(format!(
                        "uncovered merge case between blocks {s}, {t} and neighbour {gamma}"
                    )));
                }
            }
        }
        let relabel = |v: usize| if v == t { s } else { v };
        self.directed = self
            .directed
            .iter()
            .map(|&(a, b)| (relabel(a), relabel(b)))
            .collect();
        self.bidirected = self
            .bidirected
            .iter()
            .map(|&(a, b)| (relabel(a), relabel(b)))
            .filter(|&(a, b)| a != b)
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        if self.directed.iter().any(|&(a, b)| a == b) {
            return Err(Error::Internal(
                "merge produced a directed self-loop".into(),
            ));
        }
        let moved = std::mem::take(&mut self.members[t]);
        for v in &moved {
            self.block_of[v] = s;
        }
        self.members[s].extend_from(&moved);
        self.alive[t] = false;
        Ok(())
    }
}

/// Contracts bi-directed edges in lexicographic order of their endpoints:
/// an edge whose endpoints (as current blocks) are joined by no mixed
/// directed path is contracted, otherwise it is dropped. The contracted DAG
/// is sorted topologically, breaking ties by the smallest member name, and
/// each block is expanded in name order.
pub fn build_collapsed_ordering(g: &Admg) -> Result<CollapsedOrdering> {
    let mut c = Contraction::new(g);
    let mut merged = Vec::new();
    let mut removed = Vec::new();
    for &(a, b) in g.bidirected_edges() {
        let (s, t) = (c.block_of[a], c.block_of[b]);
        if s == t {
            merged.push((a, b));
            continue;
        }
        let (s, t) = (s.min(t), s.max(t));
        let adj = c.adjacency();
        if adj.has_mixed_directed_path(s, t) || adj.has_mixed_directed_path(t, s) {
            c.bidirected.remove(&(s, t));
            removed.push((a, b));
        } else {
            c.merge(s, t)?;
            merged.push((a, b));
        }
    }

    let blocks: Vec<usize> = (0..c.members.len()).filter(|&b| c.alive[b]).collect();
    let mut indeg = vec![0usize; c.members.len()];
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); c.members.len()];
    for &(t, h) in &c.directed {
        succ[t].push(h);
        indeg[h] += 1;
    }
    // Blocks are keyed by their smallest member, which is also their index.
    let mut heap: BinaryHeap<Reverse<usize>> = blocks
        .iter()
        .filter(|&&b| indeg[b] == 0)
        .map(|&b| Reverse(b))
        .collect();
    let mut seq = Vec::with_capacity(g.n());
    let mut block_seq = Vec::with_capacity(blocks.len());
    while let Some(Reverse(b)) = heap.pop() {
        seq.extend(c.members[b].iter());
        block_seq.push(c.members[b].clone());
        for &h in &succ[b] {
            indeg[h] -= 1;
            if indeg[h] == 0 {
                heap.push(Reverse(h));
            }
        }
    }
    if block_seq.len() != blocks.len() {
        return Err(Error::Internal("contracted graph is not acyclic".into()));
    }
    let ordering = VertexOrdering::new(g, seq)
        .map_err(|e| Error::Internal(format!("constructed ordering rejected: {e}")))?;
    Ok(CollapsedOrdering {
        ordering,
        blocks: block_seq,
        merged,
        removed,
    })
}
