//! Local Markov properties of ADMGs.
//!
//! * [`ordered_local_markov`]: for every vertex `x` and every ancestral set
//!   `A` within the prefix of `x` that is maximal for its Markov blanket,
//!   `I({x}, mb(x, A), A \ (mb(x, A) ∪ {x}))`.
//! * [`reduced_local_markov`]: one statement `I({x}, pa(x), V \ f(x))` per
//!   vertex, which suffices under composition when the graph has no mixed
//!   directed cycle.
//! * [`reduction_procedure`]: for arbitrary graphs, mixes the two, using the
//!   one-statement form wherever the district prefix of `x` is consecutive
//!   and free of directed edges, and dropping ordered statements that follow
//!   from the largest one.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Admg;
use crate::ordering::{build_collapsed_ordering, CollapsedOrdering, VertexOrdering};
use crate::set::{VertexId, VertexSet};
use crate::statement::CiStatement;

/// Upper bound on ancestral sets enumerated for one vertex.
pub const MAX_ANCESTRAL_SETS: usize = 1 << 20;

/// `pa(dis(x)) ∪ (dis(x) \ {x})`, both taken in the subgraph induced by `a`.
pub fn markov_blanket(g: &Admg, x: VertexId, a: &VertexSet) -> Result<VertexSet> {
    if !a.contains(x) {
        return Err(Error::InvalidInput(format!(
            "`{}` is not in the ancestral set",
            g.name(x)
        )));
    }
    if !g.is_ancestral(a) {
        return Err(Error::InvalidInput(
            "Markov blanket needs an ancestral set".into(),
        ));
    }
    if !g.children_of(x).is_disjoint(a) {
        return Err(Error::InvalidInput(format!(
            "`{}` has a child inside the ancestral set",
            g.name(x)
        )));
    }
    Ok(blanket(g, x, a))
}

fn blanket(g: &Admg, x: VertexId, a: &VertexSet) -> VertexSet {
    let dis = g.district_within(x, a);
    g.parents(&dis).intersection(a).union(&dis.without(x))
}

/// The statement `I({x}, mb(x, A), A \ (mb(x, A) ∪ {x}))`, or `None` when its
/// independent side is empty.
fn ordered_statement(g: &Admg, x: VertexId, a: &VertexSet) -> Option<CiStatement> {
    let mb = blanket(g, x, a);
    let rest = a.difference(&mb).without(x);
    CiStatement::local(x, mb, rest)
}

/// Is the ancestral set `a` (with `x ∈ a ⊆ pre(x)`) maximal for its blanket?
///
/// A vertex `v ∈ pre(x) \ a` whose parents all lie in `a` extends `a` to an
/// ancestral set; the blanket survives the extension exactly when `v` has no
/// spouse in the district of `x`. So `a` is maximal iff every such `v` has one.
pub fn is_maximal(g: &Admg, x: VertexId, ord: &VertexOrdering, a: &VertexSet) -> bool {
    let dis = g.district_within(x, a);
    let spouses = g.spouses(&dis);
    ord.pre(x)
        .difference(a)
        .iter()
        .filter(|&v| g.parents_of(v).is_subset(a))
        .all(|v| spouses.contains(v))
}

/// All ancestral `A` with `x ∈ A ⊆ pre(x)` that are maximal for their
/// Markov blanket, largest first, ties in lexicographic order.
///
/// Enumerates every ancestral set in the prefix and keeps the largest
/// member of each blanket class.
pub fn maximal_ancestral_sets(
    g: &Admg,
    x: VertexId,
    ord: &VertexOrdering,
) -> Result<Vec<VertexSet>> {
    let base = g.ancestors(&VertexSet::singleton(x));
    let pre = ord.pre(x);
    if !base.is_subset(&pre) {
        return Err(Error::InvalidInput(format!(
            "ordering places an ancestor of `{}` after it",
            g.name(x)
        )));
    }
    let free: Vec<VertexId> = ord
        .as_slice()
        .iter()
        .copied()
        .take(ord.position(x))
        .filter(|&v| !base.contains(v))
        .collect();

    let mut buckets: HashMap<VertexSet, Vec<VertexSet>> = HashMap::new();
    let mut count = 0usize;
    let mut current = base;
    enumerate(g, x, &free, 0, &mut current, &mut buckets, &mut count)?;

    let mut out = Vec::with_capacity(buckets.len());
    for (mb, sets) in buckets {
        let union = sets.iter().fold(VertexSet::new(), |acc, s| acc.union(s));
        if sets.contains(&union) {
            out.push(union);
        } else {
            // No unique maximum: keep every set without a strict superset of
            // the same blanket.
            debug_assert!(false, "blanket {mb:?} has several maximal sets");
            for s in &sets {
                if !sets.iter().any(|t| t != s && s.is_subset(t)) {
                    out.push(s.clone());
                }
            }
        }
    }
    out.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

fn enumerate(
    g: &Admg,
    x: VertexId,
    free: &[VertexId],
    i: usize,
    current: &mut VertexSet,
    buckets: &mut HashMap<VertexSet, Vec<VertexSet>>,
    count: &mut usize,
) -> Result<()> {
    if i == free.len() {
        *count += 1;
        if *count > MAX_ANCESTRAL_SETS {
            return Err(Error::Capacity {
                what: "ancestral sets per vertex",
                actual: *count,
                limit: MAX_ANCESTRAL_SETS,
            });
        }
        buckets
            .entry(blanket(g, x, current))
            .or_default()
            .push(current.clone());
        return Ok(());
    }
    enumerate(g, x, free, i + 1, current, buckets, count)?;
    let v = free[i];
    if g.parents_of(v).is_subset(current) {
        current.insert(v);
        enumerate(g, x, free, i + 1, current, buckets, count)?;
        current.remove(v);
    }
    Ok(())
}

/// The ordered local Markov property: every vertex in ordering order, and
/// for each the statements of its maximal ancestral sets, largest first.
/// Vacuous statements are dropped.
pub fn ordered_local_markov(g: &Admg, ord: &VertexOrdering) -> Result<Vec<CiStatement>> {
    let mut out: Vec<CiStatement> = Vec::new();
    for &x in ord.as_slice() {
        for a in maximal_ancestral_sets(g, x, ord)? {
            if let Some(s) = ordered_statement(g, x, &a) {
                if !out.contains(&s) {
                    out.push(s);
                }
            }
        }
    }
    Ok(out)
}

/// Number of (vertex, maximal ancestral set) pairs, i.e. statements of the
/// ordered local property before vacuous ones are dropped.
pub fn ordered_local_invocations(g: &Admg, ord: &VertexOrdering) -> Result<usize> {
    ord.as_slice()
        .iter()
        .map(|&x| maximal_ancestral_sets(g, x, ord).map(|s| s.len()))
        .sum()
}

/// `pa(x) ∪ de({x} ∪ sp(x))`.
pub fn reduced_scope(g: &Admg, x: VertexId) -> VertexSet {
    let seeds = g.spouses_of(x).with(x);
    g.parents_of(x).union(&g.descendants(&seeds))
}

fn reduced_statement(g: &Admg, x: VertexId) -> Option<CiStatement> {
    let rest = g.all().difference(&reduced_scope(g, x));
    CiStatement::local(x, g.parents_of(x).clone(), rest)
}

/// `I({x}, pa(x), V \ f(x))` for every vertex, in name order, without
/// vacuous or repeated statements. Requires a graph with no mixed directed
/// cycle.
pub fn reduced_local_markov(g: &Admg) -> Result<Vec<CiStatement>> {
    if g.has_mixed_directed_cycle() {
        return Err(Error::Precondition(
            "graph has a mixed directed cycle; use the reduction procedure (mode auto) instead"
                .into(),
        ));
    }
    let mut out: Vec<CiStatement> = Vec::new();
    for x in 0..g.n() {
        if let Some(s) = reduced_statement(g, x) {
            if !out.contains(&s) {
                out.push(s);
            }
        }
    }
    Ok(out)
}

/// The vertices of `x`'s district up to `x` are consecutive in `ord` and no
/// directed edge joins two of them.
pub fn lemma1_applies(g: &Admg, x: VertexId, ord: &VertexOrdering) -> bool {
    let prefix = g.district(x).intersection(&ord.pre(x));
    let positions: Vec<usize> = prefix.iter().map(|v| ord.position(v)).collect();
    let lo = positions.iter().copied().min().unwrap_or(0);
    let hi = positions.iter().copied().max().unwrap_or(0);
    if hi - lo + 1 != prefix.len() {
        return false;
    }
    let no_edges = prefix.iter().all(|v| g.children_of(v).is_disjoint(&prefix));
    no_edges
}

/// Intermediate sets of the pruning test for a smaller ancestral set `A'`
/// against `A = pre(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma2Check {
    /// `dis_A(x) \ dis_A'(x)`
    pub y: VertexSet,
    /// `dis_A(x) \ A'`
    pub y1: VertexSet,
    /// `Y \ Y1`
    pub y2: VertexSet,
    /// `pa(Y)`
    pub pa_y: VertexSet,
    /// `mb(x, A')`
    pub blanket: VertexSet,
}

impl Lemma2Check {
    /// The statement for `A'` follows from the one for `pre(x)`.
    pub fn implied(&self) -> bool {
        self.y2.is_empty() && self.pa_y.is_subset(&self.blanket)
    }
}

pub fn lemma2_check(
    g: &Admg,
    x: VertexId,
    ord: &VertexOrdering,
    a_prime: &VertexSet,
) -> Result<Lemma2Check> {
    let a = ord.pre(x);
    if !a_prime.contains(x) || !a_prime.is_subset(&a) {
        return Err(Error::InvalidInput(format!(
            "A' must contain `{}` and lie within its prefix",
            g.name(x)
        )));
    }
    if !g.is_ancestral(a_prime) {
        return Err(Error::InvalidInput("A' is not ancestral".into()));
    }
    if !is_maximal(g, x, ord, a_prime) {
        return Err(Error::InvalidInput(
            "A' is not maximal for its Markov blanket".into(),
        ));
    }
    let dis_a = g.district_within(x, &a);
    let dis_a_prime = g.district_within(x, a_prime);
    let y = dis_a.difference(&dis_a_prime);
    let y1 = dis_a.difference(a_prime);
    let y2 = y.difference(&y1);
    let pa_y = g.parents(&y);
    Ok(Lemma2Check {
        y,
        y1,
        y2,
        pa_y,
        blanket: blanket(g, x, a_prime),
    })
}

/// Whether the statement of `a_prime` is implied by the statement of `pre(x)`.
pub fn lemma2_implied(
    g: &Admg,
    x: VertexId,
    ord: &VertexOrdering,
    a_prime: &VertexSet,
) -> Result<bool> {
    Ok(lemma2_check(g, x, ord, a_prime)?.implied())
}

/// Why a statement is in (or was left out of) a [`ReducedBasis`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Provenance {
    /// `I({x}, pa(x), V \ f(x))`.
    ReducedForm,
    /// An ordered local statement kept in the basis.
    OrderedLocal,
    /// An ordered local statement implied by basis statement `implied_by`.
    OrderedLocalPruned { implied_by: usize },
}

impl Provenance {
    pub fn tag(&self) -> &'static str {
        match self {
            Provenance::ReducedForm => "ReducedForm",
            Provenance::OrderedLocal => "OrderedLocal",
            Provenance::OrderedLocalPruned { .. } => "OrderedLocalPruned",
        }
    }

    pub fn implied_by(&self) -> Option<usize> {
        match self {
            Provenance::OrderedLocalPruned { implied_by } => Some(*implied_by),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisEntry {
    pub vertex: VertexId,
    pub statement: CiStatement,
    pub provenance: Provenance,
}

/// Output of the reduction procedure.
#[derive(Clone, Debug)]
pub struct ReducedBasis {
    pub ordering: VertexOrdering,
    pub statements: Vec<BasisEntry>,
    /// Ordered local statements left out because a basis statement implies them.
    pub pruned: Vec<BasisEntry>,
    /// How the ordering was built, when it was constructed.
    pub collapse: Option<CollapsedOrdering>,
}

impl ReducedBasis {
    pub fn list(&self) -> Vec<CiStatement> {
        self.statements
            .iter()
            .map(|e| e.statement.clone())
            .collect()
    }

    pub fn len(&self) -> usize {
        self.statements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.statements.is_empty()
    }

    fn push(&mut self, vertex: VertexId, statement: CiStatement, provenance: Provenance) -> usize {
        if let Some(i) = self
            .statements
            .iter()
            .position(|e| e.statement == statement)
        {
            return i;
        }
        self.statements.push(BasisEntry {
            vertex,
            statement,
            provenance,
        });
        self.statements.len() - 1
    }
}

/// Builds the contracted ordering and reduces the ordered local property
/// under it.
pub fn reduction_procedure(g: &Admg) -> Result<ReducedBasis> {
    let collapse = build_collapsed_ordering(g)?;
    let mut basis = reduce_with_ordering(g, &collapse.ordering)?;
    basis.collapse = Some(collapse);
    Ok(basis)
}

/// Reduction under a caller-supplied consistent ordering.
///
/// The one-statement form is used for `x` whenever [`lemma1_applies`];
/// otherwise the statement of `pre(x)` is kept and each smaller maximal
/// ancestral set is kept unless [`lemma2_implied`] holds for it.
pub fn reduce_with_ordering(g: &Admg, ord: &VertexOrdering) -> Result<ReducedBasis> {
    let mut basis = ReducedBasis {
        ordering: ord.clone(),
        statements: Vec::new(),
        pruned: Vec::new(),
        collapse: None,
    };
    for &x in ord.as_slice() {
        if lemma1_applies(g, x, ord) {
            if let Some(s) = reduced_statement(g, x) {
                basis.push(x, s, Provenance::ReducedForm);
            }
            continue;
        }
        let sets = maximal_ancestral_sets(g, x, ord)?;
        let (largest, smaller) = sets
            .split_first()
            .ok_or_else(|| Error::Internal("no maximal ancestral set".into()))?;
        // pre(x) is ancestral for a consistent ordering, and trivially maximal.
        if *largest != ord.pre(x) {
            return Err(Error::Internal(format!(
                "prefix of `{}` is not its largest maximal ancestral set",
                g.name(x)
            )));
        }
        let anchor =
            ordered_statement(g, x, largest).map(|s| basis.push(x, s, Provenance::OrderedLocal));
        for a_prime in smaller {
            let Some(s) = ordered_statement(g, x, a_prime) else {
                continue;
            };
            match anchor {
                Some(i) if lemma2_implied(g, x, ord, a_prime)? => {
                    if !basis.statements.iter().any(|e| e.statement == s) {
                        basis.pruned.push(BasisEntry {
                            vertex: x,
                            statement: s,
                            provenance: Provenance::OrderedLocalPruned { implied_by: i },
                        });
                    }
                }
                _ => {
                    basis.push(x, s, Provenance::OrderedLocal);
                }
            }
        }
    }
    Ok(basis)
}
