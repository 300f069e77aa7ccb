use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::graph::Admg;
use crate::set::VertexSet;

/// `I(X, Z, Y)`: X is conditionally independent of Y given Z.
///
/// The statement keeps the orientation it was built with for display, but
/// equality, ordering and hashing go through the symmetric canonical form,
/// so `I(X, Z, Y)` and `I(Y, Z, X)` are the same statement.
#[derive(Clone, Debug)]
pub struct CiStatement {
    pub x: VertexSet,
    pub z: VertexSet,
    pub y: VertexSet,
}

impl CiStatement {
    pub fn new(x: VertexSet, z: VertexSet, y: VertexSet) -> Result<Self> {
        if x.is_empty() || y.is_empty() {
            return Err(Error::InvalidInput(
                "independence statement needs non-empty sides".into(),
            ));
        }
        if !x.is_disjoint(&y) || !x.is_disjoint(&z) || !y.is_disjoint(&z) {
            return Err(Error::InvalidInput(
                "independence statement sets must be pairwise disjoint".into(),
            ));
        }
        Ok(Self { x, z, y })
    }

    /// Builds a statement from vertex names.
    pub fn from_names<S: AsRef<str>>(g: &Admg, x: &[S], z: &[S], y: &[S]) -> Result<Self> {
        Self::new(g.set(x)?, g.set(z)?, g.set(y)?)
    }

    /// `I({x}, z, y)` unless `y` is empty, in which case the statement is vacuous.
    pub(crate) fn local(x: usize, z: VertexSet, y: VertexSet) -> Option<Self> {
        (!y.is_empty()).then(|| Self {
            x: VertexSet::singleton(x),
            z,
            y,
        })
    }

    pub fn swapped(&self) -> Self {
        Self {
            x: self.y.clone(),
            z: self.z.clone(),
            y: self.x.clone(),
        }
    }

    /// The orientation with the lexicographically smaller side first.
    pub fn canonical(&self) -> Self {
        if self.x <= self.y {
            self.clone()
        } else {
            self.swapped()
        }
    }

    fn key(&self) -> (&VertexSet, &VertexSet, &VertexSet) {
        if self.x <= self.y {
            (&self.x, &self.z, &self.y)
        } else {
            (&self.y, &self.z, &self.x)
        }
    }

    /// `I({a} ; {d} ; {e})`
    pub fn display(&self, g: &Admg) -> String {
        let side = |s: &VertexSet| format!("{{{}}}", g.set_names(s).join(","));
        format!(
            "I({} ; {} ; {})",
            side(&self.x),
            side(&self.z),
            side(&self.y)
        )
    }
}

impl PartialEq for CiStatement {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for CiStatement {}

impl Hash for CiStatement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state)
    }
}

impl PartialOrd for CiStatement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CiStatement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}
