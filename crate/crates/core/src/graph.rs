//! Acyclic directed mixed graphs and their structural relations.
//!
//! An [`Admg`] is a set of named vertices with directed edges (`a -> b`,
//! acyclic among themselves) and bi-directed edges (`a <-> b`). A pair of
//! vertices may carry one edge of each kind. Graphs are immutable once
//! built; every relation below is a pure function of the graph.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap, HashMap};

use crate::error::{Error, Result};
use crate::mixed::MixedAdjacency;
use crate::set::{VertexId, VertexSet};

/// Returns true for names made of ASCII letters, digits and underscores.
pub fn is_valid_name(name: &str) -> bool {
    !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Admg {
    names: Vec<String>,
    index: HashMap<String, VertexId>,
    directed: Vec<(VertexId, VertexId)>,
    bidirected: Vec<(VertexId, VertexId)>,
    parents: Vec<VertexSet>,
    children: Vec<VertexSet>,
    spouses: Vec<VertexSet>,
}

/// Incremental construction of an [`Admg`] by vertex name.
#[derive(Default, Debug, Clone)]
pub struct AdmgBuilder {
    vertices: BTreeSet<String>,
    directed: BTreeSet<(String, String)>,
    bidirected: BTreeSet<(String, String)>,
}

impl AdmgBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(&mut self, name: &str) -> Result<&mut Self> {
        if !is_valid_name(name) {
            return Err(Error::InvalidName(name.to_string()));
        }
        self.vertices.insert(name.to_string());
        Ok(self)
    }

    pub fn directed(&mut self, tail: &str, head: &str) -> Result<&mut Self> {
        self.check_pair(tail, head)?;
        if !self.directed.insert((tail.to_string(), head.to_string())) {
            return Err(Error::DuplicateEdge(format!("{tail} -> {head}")));
        }
        self.vertex(tail)?.vertex(head)
    }

    pub fn bidirected(&mut self, a: &str, b: &str) -> Result<&mut Self> {
        self.check_pair(a, b)?;
        let key = if a < b { (a, b) } else { (b, a) };
        if !self
            .bidirected
            .insert((key.0.to_string(), key.1.to_string()))
        {
            return Err(Error::DuplicateEdge(format!("{a} <-> {b}")));
        }
        self.vertex(a)?.vertex(b)
    }

    fn check_pair(&self, a: &str, b: &str) -> Result<()> {
        for name in [a, b] {
            if !is_valid_name(name) {
                return Err(Error::InvalidName(name.to_string()));
            }
        }
        if a == b {
            return Err(Error::SelfLoop(a.to_string()));
        }
        Ok(())
    }

    /// Validates acyclicity of the directed part and freezes the graph.
    pub fn build(&self) -> Result<Admg> {
        let names: Vec<String> = self.vertices.iter().cloned().collect();
        let index: HashMap<String, VertexId> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        let id = |n: &String| index[n];
        let directed: Vec<_> = self.directed.iter().map(|(a, b)| (id(a), id(b))).collect();
        let bidirected: Vec<_> = self
            .bidirected
            .iter()
            .map(|(a, b)| (id(a), id(b)))
            .collect();
        let n = names.len();
        let mut parents = vec![VertexSet::new(); n];
        let mut children = vec![VertexSet::new(); n];
        let mut spouses = vec![VertexSet::new(); n];
        for &(t, h) in &directed {
            parents[h].insert(t);
            children[t].insert(h);
        }
        for &(a, b) in &bidirected {
            spouses[a].insert(b);
            spouses[b].insert(a);
        }
        let g = Admg {
            names,
            index,
            directed,
            bidirected,
            parents,
            children,
            spouses,
        };
        if let Some(v) = g.find_directed_cycle() {
            return Err(Error::DirectedCycle {
                vertex: g.names[v].clone(),
            });
        }
        Ok(g)
    }
}

impl Admg {
    /// Builds a graph from vertex names and named edge lists.
    pub fn new<S: AsRef<str>>(
        vertices: &[S],
        directed: &[(S, S)],
        bidirected: &[(S, S)],
    ) -> Result<Admg> {
        let mut b = AdmgBuilder::new();
        for v in vertices {
            b.vertex(v.as_ref())?;
        }
        for (t, h) in directed {
            b.directed(t.as_ref(), h.as_ref())?;
        }
        for (x, y) in bidirected {
            b.bidirected(x.as_ref(), y.as_ref())?;
        }
        b.build()
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v]
    }

    pub fn id(&self, name: &str) -> Result<VertexId> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    /// Resolves a list of names into a vertex set.
    pub fn set<S: AsRef<str>>(&self, names: &[S]) -> Result<VertexSet> {
        names.iter().map(|n| self.id(n.as_ref())).collect()
    }

    pub fn set_names(&self, s: &VertexSet) -> Vec<String> {
        s.iter().map(|v| self.names[v].clone()).collect()
    }

    pub fn all(&self) -> VertexSet {
        (0..self.n()).collect()
    }

    /// Directed edges as (tail, head), sorted.
    pub fn directed_edges(&self) -> &[(VertexId, VertexId)] {
        &self.directed
    }

    /// Bi-directed edges as (smaller, larger), sorted.
    pub fn bidirected_edges(&self) -> &[(VertexId, VertexId)] {
        &self.bidirected
    }

    pub fn has_directed(&self, tail: VertexId, head: VertexId) -> bool {
        self.children[tail].contains(head)
    }

    pub fn has_bidirected(&self, a: VertexId, b: VertexId) -> bool {
        self.spouses[a].contains(b)
    }

    pub fn parents_of(&self, v: VertexId) -> &VertexSet {
        &self.parents[v]
    }

    pub fn children_of(&self, v: VertexId) -> &VertexSet {
        &self.children[v]
    }

    pub fn spouses_of(&self, v: VertexId) -> &VertexSet {
        &self.spouses[v]
    }

    pub fn parents(&self, s: &VertexSet) -> VertexSet {
        s.iter().flat_map(|v| self.parents[v].iter()).collect()
    }

    pub fn children(&self, s: &VertexSet) -> VertexSet {
        s.iter().flat_map(|v| self.children[v].iter()).collect()
    }

    pub fn spouses(&self, s: &VertexSet) -> VertexSet {
        s.iter().flat_map(|v| self.spouses[v].iter()).collect()
    }

    /// Reflexive-transitive closure of `s` backwards along directed edges.
    pub fn ancestors(&self, s: &VertexSet) -> VertexSet {
        self.closure(s, &self.parents)
    }

    /// Reflexive-transitive closure of `s` forwards along directed edges.
    pub fn descendants(&self, s: &VertexSet) -> VertexSet {
        self.closure(s, &self.children)
    }

    fn closure(&self, s: &VertexSet, step: &[VertexSet]) -> VertexSet {
        let mut out = s.clone();
        let mut stack: Vec<VertexId> = s.iter().collect();
        while let Some(v) = stack.pop() {
            for w in &step[v] {
                if out.insert(w) {
                    stack.push(w);
                }
            }
        }
        out
    }

    /// The smallest ancestral superset of `s`.
    pub fn ancestral_closure(&self, s: &VertexSet) -> VertexSet {
        self.ancestors(s)
    }

    pub fn is_ancestral(&self, a: &VertexSet) -> bool {
        a.iter().all(|v| self.parents[v].is_subset(a))
    }

    /// The c-component containing `x`.
    pub fn district(&self, x: VertexId) -> VertexSet {
        self.district_within(x, &self.all())
    }

    /// The district of `x` in the induced subgraph on `within`.
    ///
    /// `x` must belong to `within`.
    pub fn district_within(&self, x: VertexId, within: &VertexSet) -> VertexSet {
        debug_assert!(within.contains(x));
        let mut out = VertexSet::singleton(x);
        let mut stack = vec![x];
        while let Some(v) = stack.pop() {
            for w in &self.spouses[v] {
                if within.contains(w) && out.insert(w) {
                    stack.push(w);
                }
            }
        }
        out
    }

    /// Partition of the vertices into c-components, ordered by smallest member.
    pub fn c_components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for v in 0..self.n() {
            if !seen.contains(v) {
                let d = self.district(v);
                seen.extend_from(&d);
                out.push(d);
            }
        }
        out
    }

    /// The subgraph induced by `a`. Vertex names are preserved.
    pub fn induced_subgraph(&self, a: &VertexSet) -> Admg {
        let mut b = AdmgBuilder::new();
        for v in a {
            b.vertex(&self.names[v]).expect("names were validated");
        }
        for &(t, h) in &self.directed {
            if a.contains(t) && a.contains(h) {
                b.directed(&self.names[t], &self.names[h])
                    .expect("edge was valid");
            }
        }
        for &(x, y) in &self.bidirected {
            if a.contains(x) && a.contains(y) {
                b.bidirected(&self.names[x], &self.names[y])
                    .expect("edge was valid");
            }
        }
        b.build().expect("induced subgraph of an ADMG is an ADMG")
    }

    /// Topological order of the directed part; ties go to the smallest name.
    pub fn topological_order(&self) -> Vec<VertexId> {
        let mut indeg: Vec<usize> = self.parents.iter().map(VertexSet::len).collect();
        let mut heap: BinaryHeap<Reverse<VertexId>> = (0..self.n())
            .filter(|&v| indeg[v] == 0)
            .map(Reverse)
            .collect();
        let mut out = Vec::with_capacity(self.n());
        while let Some(Reverse(v)) = heap.pop() {
            out.push(v);
            for w in &self.children[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    heap.push(Reverse(w));
                }
            }
        }
        out
    }

    fn find_directed_cycle(&self) -> Option<VertexId> {
        let order = self.topological_order();
        if order.len() == self.n() {
            return None;
        }
        let placed: VertexSet = order.into_iter().collect();
        (0..self.n()).find(|v| !placed.contains(*v))
    }

    pub(crate) fn adjacency(&self) -> MixedAdjacency {
        MixedAdjacency {
            directed: self.children.iter().map(|c| c.iter().collect()).collect(),
            bidirected: self.spouses.iter().map(|s| s.iter().collect()).collect(),
        }
    }

    /// True iff a path from `alpha` to `beta` exists whose edges are all
    /// `<->` or `->` pointing towards `beta`, with at least one `->`.
    pub fn has_mixed_directed_path(&self, alpha: VertexId, beta: VertexId) -> bool {
        alpha != beta && self.adjacency().has_mixed_directed_path(alpha, beta)
    }

    /// True iff some mixed directed path from `a` to `b` is closed by an edge
    /// `b -> a` or `b <-> a`.
    ///
    /// Decided on the quotient that contracts every c-component: the graph
    /// has a mixed directed cycle exactly when that quotient has a directed
    /// cycle or a directed edge inside a single c-component.
    pub fn has_mixed_directed_cycle(&self) -> bool {
        let comps = self.c_components();
        let mut comp_of = vec![0usize; self.n()];
        for (i, c) in comps.iter().enumerate() {
            for v in c {
                comp_of[v] = i;
            }
        }
        let k = comps.len();
        let mut succ: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); k];
        for &(t, h) in &self.directed {
            let (ct, ch) = (comp_of[t], comp_of[h]);
            if ct == ch {
                return true;
            }
            succ[ct].insert(ch);
        }
        let mut indeg = vec![0usize; k];
        for s in &succ {
            for &c in s {
                indeg[c] += 1;
            }
        }
        let mut stack: Vec<usize> = (0..k).filter(|&c| indeg[c] == 0).collect();
        let mut placed = 0;
        while let Some(c) = stack.pop() {
            placed += 1;
            for &d in &succ[c] {
                indeg[d] -= 1;
                if indeg[d] == 0 {
                    stack.push(d);
                }
            }
        }
        placed != k
    }
}
