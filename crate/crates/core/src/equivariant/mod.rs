//! The equivariant form of the resolutions: `F` free of rank `2m` (odd
//! `n = 2m + 3`) or `2m + 1` (even `n = 2m + 4`), `C = sum c_i_j g_i ^ g_j`
//! in the second exterior power and `u_1, u_2, u_3` in `F`. The generators
//! are top exterior forms built from powers of `C` and the `u_k`.
//!
//! `C^j` denotes the divided power: its coefficient on `g_S` is the
//! sub-Pfaffian `Pf(A[S; S])` of `A = (c_i_j)`, which is `1/j!` times the
//! literal `j`-fold wedge of `C`.

mod complex;
mod exterior;

pub use complex::{
    bidegree_check, compare_with_resolution, derive_sign_table, equivariant_differentials, sign_table,
    substitute, substitution_check, EquivariantComplex, Grading, SignTable,
};
pub use exterior::{c_form, iterated_wedge, u_vector, ExteriorElement};

use crate::pfaffian::SkewMatrix;
use crate::polyring::{Bidegree, Polynomial, VariableId};
use crate::resolution::ResolutionError;
use crate::ring::PolyRing;
use crate::{IndexSet, Parity};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EquivariantError {
    #[error("exterior elements over modules of ranks {0} and {1}")]
    RankMismatch(usize, usize),
    #[error("cannot add forms of degrees {0} and {1}")]
    DegreeMismatch(usize, usize),
    #[error("C^{j} needs 2*{j} <= rank {rank}")]
    DegreeOverflow { j: usize, rank: usize },
    #[error("the parameter m must be at least 1, got {0}")]
    BadParameter(usize),
    #[error("{what}: expected {expected}, found {found}")]
    Mismatch {
        what: String,
        expected: Polynomial,
        found: Polynomial,
    },
    #[error("{matrix} entry ({row}, {col}) should have bidegree {expected:?}, found {found:?}")]
    Bidegree {
        matrix: &'static str,
        row: usize,
        col: usize,
        expected: (i64, i64),
        found: Bidegree,
    },
    #[error(transparent)]
    Resolution(#[from] ResolutionError),
}

/// Rank of `F`.
pub fn f_rank(m: usize, parity: Parity) -> usize {
    match parity {
        Parity::Odd => 2 * m,
        Parity::Even => 2 * m + 1,
    }
}

/// The size `n` of the matching resolution.
pub fn matrix_size(m: usize, parity: Parity) -> usize {
    f_rank(m, parity) + 3
}

fn check_parameter(m: usize) -> Result<(), EquivariantError> {
    if m == 0 {
        Err(EquivariantError::BadParameter(m))
    } else {
        Ok(())
    }
}

/// The generic skew matrix `A = (c_i_j)`.
pub fn c_matrix(rank: usize) -> SkewMatrix {
    SkewMatrix::from_fn(PolyRing, rank, |i, j| Polynomial::var(VariableId::c(i, j)))
}

/// `C^j = sum_{|S| = 2j} Pf(A[S; S]) g_S`.
pub fn build_c_power(m: usize, parity: Parity, j: usize) -> Result<ExteriorElement, EquivariantError> {
    check_parameter(m)?;
    let rank = f_rank(m, parity);
    if 2 * j > rank {
        return Err(EquivariantError::DegreeOverflow { j, rank });
    }
    Ok(c_power(&c_matrix(rank), j))
}

pub(crate) fn c_power(a: &SkewMatrix, j: usize) -> ExteriorElement {
    let rank = a.n();
    let terms = IndexSet::k_subsets(rank, 2 * j).map(|s| (s, a.sub_pfaffian(s)));
    ExteriorElement::from_terms(rank, 2 * j, terms)
}

fn top_wedge(factors: &[ExteriorElement]) -> Polynomial {
    let (first, rest) = factors.split_first().expect("at least one factor");
    rest.iter()
        .fold(first.clone(), |acc, f| acc.wedge(f).expect("same rank"))
        .top_coefficient()
}

/// The generators `x_1..x_4` in the order of the first differential:
/// odd `C^m, C^{m-1} u2 u3, C^{m-1} u1 u3, C^{m-1} u1 u2`; even
/// `C^{m-1} u1 u2 u3, C^m u1, C^m u2, C^m u3`.
pub(crate) fn x_generators(m: usize, parity: Parity) -> [Polynomial; 4] {
    let rank = f_rank(m, parity);
    let a = c_matrix(rank);
    let u = |k: usize| u_vector(rank, k);
    let (lo, hi) = (c_power(&a, m - 1), c_power(&a, m));
    match parity {
        Parity::Odd => [
            hi.top_coefficient(),
            top_wedge(&[lo.clone(), u(2), u(3)]),
            top_wedge(&[lo.clone(), u(1), u(3)]),
            top_wedge(&[lo, u(1), u(2)]),
        ],
        Parity::Even => [
            top_wedge(&[lo, u(1), u(2), u(3)]),
            top_wedge(&[hi.clone(), u(1)]),
            top_wedge(&[hi.clone(), u(2)]),
            top_wedge(&[hi, u(3)]),
        ],
    }
}

/// The four generators as listed for the ideal: odd `C^m, C^{m-1} u1 u2,
/// C^{m-1} u1 u3, C^{m-1} u2 u3`; even `C^{m-1} u1 u2 u3, C^m u1, C^m u2, C^m u3`.
pub fn equivariant_generators(m: usize, parity: Parity) -> Result<Vec<Polynomial>, EquivariantError> {
    check_parameter(m)?;
    let [x1, x2, x3, x4] = x_generators(m, parity);
    Ok(match parity {
        Parity::Odd => vec![x1, x4, x3, x2],
        Parity::Even => vec![x1, x2, x3, x4],
    })
}

#[cfg(test)]
mod tests;
