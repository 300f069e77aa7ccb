use std::collections::BTreeSet;
use std::fmt;

/// Index of a vertex inside an [`Admg`](crate::Admg).
///
/// Vertices are indexed by the rank of their name, so ascending ids are
/// ascending names.
pub type VertexId = usize;

/// A set of vertices of one graph, iterated in ascending name order.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(BTreeSet<VertexId>);

impl VertexSet {
    pub fn new() -> Self {
        Self(BTreeSet::new())
    }

    pub fn singleton(v: VertexId) -> Self {
        Self(BTreeSet::from([v]))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: VertexId) -> bool {
        self.0.insert(v)
    }

    pub fn remove(&mut self, v: VertexId) -> bool {
        self.0.remove(&v)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<VertexId> {
        self.0.first().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        Self(self.0.union(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        Self(self.0.intersection(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        Self(self.0.difference(&other.0).copied().collect())
    }

    pub fn without(&self, v: VertexId) -> VertexSet {
        let mut out = self.clone();
        out.remove(v);
        out
    }

    pub fn with(&self, v: VertexId) -> VertexSet {
        let mut out = self.clone();
        out.insert(v);
        out
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn extend_from(&mut self, other: &VertexSet) {
        self.0.extend(other.0.iter().copied());
    }

    /// Bit mask of the members; every member must be below 64.
    pub fn to_mask(&self) -> u64 {
        self.iter().fold(0u64, |m, v| {
            debug_assert!(v < 64);
            m | (1 << v)
        })
    }

    pub fn from_mask(mask: u64) -> VertexSet {
        (0..64).filter(|v| mask >> v & 1 == 1).collect()
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl Extend<VertexId> for VertexSet {
    fn extend<I: IntoIterator<Item = VertexId>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = VertexId;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, VertexId>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}
