//! Exact computations in simply laced Coxeter groups: reduced words and their
//! commutation classes, root sequences and inversion triples, the signature
//! map on commutation classes, contracted expressions, and a few
//! whole-group probes.
//!
//! Everything is computed over the integers in the root basis, so no floating
//! point is involved anywhere.

pub mod analysis;
pub mod contraction;
pub mod error;
pub mod graph;
pub mod inversions;
pub mod profile;
pub mod signature;
pub mod words;

pub use error::{Error, Result};
pub use graph::{enumerate_elements, parse_graph, CoxeterGraph, GroupElement, Letter, Root, Word};
pub use inversions::{RootSequence, Triple};
pub use profile::ElementProfile;
