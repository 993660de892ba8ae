//! Homology over the two-element field.
//!
//! Chains are sets of simplices and addition is symmetric difference, so
//! boundary columns carry no orientation signs. Persistence comes from the
//! standard column reduction of a filtration's boundary matrix; Betti
//! numbers of a fixed complex come from ranks of its boundary operators.

mod betti;
mod diagram;
mod reduction;

pub use betti::{betti_numbers, BettiVector};
pub use diagram::{persistence_diagram, PersistenceDiagram, PersistencePair};
pub use reduction::{boundary_matrix, reduce, reduce_without_clearing, BoundaryMatrix, Reduction};
