//! Pfaffian constructions of the generic free resolutions of grade-3 almost
//! complete intersections, with exact symbolic verification of the identities
//! they rest on.
//!
//! Matrix and index conventions are 1-based throughout, matching the usual
//! notation `T[i_1 ... i_k; j_1 ... j_l]` for submatrices.

pub mod brill;
pub mod equivariant;
#[cfg(test)]
mod golden;
pub mod index_set;
pub mod matrix;
pub mod pfaffian;
pub mod polyring;
pub mod resolution;
pub mod schubert;
pub mod verify;
mod parity;
pub mod ring;

pub use equivariant::{EquivariantComplex, EquivariantError, ExteriorElement};
pub use index_set::IndexSet;
pub use matrix::{Matrix, PolyMatrix};
pub use parity::Parity;
pub use pfaffian::{generic_skew, word_sign, zero_block_skew, LemmaCase, LemmaId, PfaffianError, SkewMatrix};
pub use polyring::{Bidegree, Monomial, PolyError, Polynomial, VarClass, VarKind, VariableId};
pub use resolution::{build, ResolutionComplex, ResolutionError, Variant};
pub use ring::{PolyRing, PrimeField, Ring};
pub use schubert::{GradedFormat, IdealKind, SchubertError, SubsetPoset};
pub use verify::{CheckOutcome, Suite, VerificationReport, VerifyOptions};
