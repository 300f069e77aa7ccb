//! Local Markov properties for acyclic directed mixed graphs (ADMGs).
//!
//! Given a path diagram this crate computes small sets of conditional
//! independence statements that, under the composition axiom, imply every
//! m-separation of the graph, and checks them three ways: against
//! m-separation, by closure under the graphoid axioms, and by vanishing
//! partial correlations of linear Gaussian structural equation models.

pub mod ci;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod gaussian;
pub mod generate;
pub mod graph;
pub mod markov;
mod mixed;
pub mod msep;
pub mod ordering;
pub mod set;
pub mod statement;

pub use error::{Error, Result};
pub use graph::{Admg, AdmgBuilder};
pub use ordering::{build_collapsed_ordering, CollapsedOrdering, VertexOrdering};
pub use set::{VertexId, VertexSet};
pub use statement::CiStatement;
