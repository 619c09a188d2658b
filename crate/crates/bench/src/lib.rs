//! Shared inputs for the benchmarks.

use aci_core::{PrimeField, SkewMatrix};

pub const PRIME: u64 = 32003;

/// A dense skew matrix mod `PRIME` with fixed, pseudo-random entries.
pub fn field_matrix(n: usize) -> SkewMatrix<PrimeField> {
    let field = PrimeField::new(PRIME).expect("prime");
    SkewMatrix::from_fn(field, n, |i, j| ((i * 7919 + j * 104_729 + i * j * 31) as u64) % PRIME)
}
