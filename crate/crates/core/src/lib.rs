//! Homological diagnostics for finite simplicial complexes.
//!
//! The crate computes reduced homology over ℚ or GF(p), depth of the
//! Stanley-Reisner ring by three independent routes (links, higher nerves
//! and rank selection of the face poset), Serre's condition `(S_ℓ)`, and the
//! Cohen-Macaulay / Buchsbaum / Gorenstein* family of predicates. The
//! [`harness`] module turns the known identities relating these invariants
//! into executable checks and hosts a seeded counterexample prospector.

pub mod balanced;
pub mod complex;
pub mod diagnostics;
mod error;
pub mod format;
pub mod harness;
pub mod homology;
pub mod nerve;
pub mod poset;

pub use balanced::{BalanceViolation, BalancedComplex};
pub use complex::{FVector, Face, HVector, SimplicialComplex, VertexId};
pub use diagnostics::{analyze, DiagnosticsReport};
pub use error::{Error, Result};
pub use homology::{reduced_betti, BettiVector, FieldSpec};
pub use nerve::{higher_nerve, nerve_family, NerveFamily};
pub use poset::Poset;
