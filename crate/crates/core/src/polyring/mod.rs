//! Exact sparse multivariate polynomials over the integers.
//!
//! Variables are indexed by pairs (`t_i_j`, plus `c_i_j` and `u_k_i` for the
//! equivariant presentation). The canonical string form lists terms in
//! descending graded-lexicographic order, e.g. `t_1_2*t_3_4-t_1_3*t_2_4+t_1_4*t_2_3`.

mod monomial;
mod parse;
mod poly;
mod var;

pub use monomial::Monomial;
pub use poly::{class_by_kind, Bidegree, Polynomial, VarClass};
pub use var::{VarKind, VariableId, MAX_INDEX};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("no value assigned to variable {0}")]
    MissingVariable(VariableId),
    #[error("cannot parse polynomial: {0:?}")]
    Parse(String),
}

#[cfg(test)]
mod tests;
