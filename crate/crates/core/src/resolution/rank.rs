//! Rank evidence: integer independence of the columns of `d3`, and ranks of
//! the differentials at random points over a prime field.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{ResolutionComplex, ResolutionError};
use crate::matrix::{Matrix, PolyMatrix};
use crate::polyring::{Monomial, VariableId};
use crate::ring::{PrimeField, Ring};

/// Ranks of `(d3, d2, d1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Ranks {
    pub d3: usize,
    pub d2: usize,
    pub d1: usize,
}

impl Ranks {
    /// The ranks a resolution of format `(1, 4, n, n-3)` must have.
    pub fn expected(n: usize) -> Ranks {
        Ranks { d3: n - 3, d2: 3, d1: 1 }
    }
}

impl fmt::Display for Ranks {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.d3, self.d2, self.d1)
    }
}

/// Rank over the rationals of an integer matrix, by fraction-free elimination.
pub fn integer_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..cols {
        let Some(pivot) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        for r in rank + 1..a.len() {
            for c in col + 1..cols {
                let v = (&a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c]) / &prev;
                a[r][c] = v;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Rank over a prime field by Gaussian elimination.
pub fn rank_mod_p(m: &Matrix<PrimeField>) -> usize {
    let f = *m.ring();
    let mut a: Vec<Vec<u64>> = (1..=m.rows()).map(|i| m.row(i).to_vec()).collect();
    let cols = m.cols();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..a.len()).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = f.inv(a[rank][col]).expect("nonzero pivot");
        for r in rank + 1..a.len() {
            if a[r][col] == 0 {
                continue;
            }
            let factor = f.mul(&a[r][col], &inv);
            for c in col..cols {
                let sub = f.mul(&factor, &a[rank][c]);
                a[r][c] = f.sub(&a[r][c], &sub);
            }
        }
        rank += 1;
    }
    rank
}

/// The columns of `d3` are linearly independent over the integers.
pub fn check_column_independence(c: &ResolutionComplex) -> Result<(), ResolutionError> {
    column_independence(&c.d3)
}

pub(crate) fn column_independence(m: &PolyMatrix) -> Result<(), ResolutionError> {
    // one integer row per (matrix row, monomial)
    let mut index: BTreeMap<(usize, Monomial), usize> = BTreeMap::new();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for (i, j, p) in m.iter_entries() {
        for (mono, coeff) in p.terms() {
            let k = *index.entry((i, mono.clone())).or_insert_with(|| {
                rows.push(vec![BigInt::zero(); m.cols()]);
                rows.len() - 1
            });
            rows[k][j - 1] = coeff.clone();
        }
    }
    let rank = integer_rank(&rows);
    if rank == m.cols() {
        Ok(())
    } else {
        Err(ResolutionError::DependentColumns { rank, cols: m.cols() })
    }
}

/// Ranks of the three differentials with every variable replaced by `value(v)` mod `p`.
pub fn ranks_at(c: &ResolutionComplex, field: PrimeField, value: impl Fn(VariableId) -> u64) -> Ranks {
    let p = field.modulus();
    let eval = |m: &PolyMatrix| {
        m.map(field, |e| {
            e.evaluate_mod(|v| Some(value(v)), p)
                .expect("every variable has a value")
        })
    };
    Ranks {
        d3: rank_mod_p(&eval(&c.d3)),
        d2: rank_mod_p(&eval(&c.d2)),
        d1: rank_mod_p(&eval(&c.d1)),
    }
}

/// Ranks at a random point: each `t_i_j` (in lexicographic order of `(i, j)`)
/// gets a uniform value mod `prime` from a ChaCha8 stream seeded by `seed`.
pub fn specialize_and_rank(c: &ResolutionComplex, seed: u64, prime: u64) -> Result<Ranks, ResolutionError> {
    let field = PrimeField::new(prime).map_err(|e| ResolutionError::NotPrime(e.0))?;
    let bound = (c.n * c.n) as u64;
    if prime <= bound {
        return Err(ResolutionError::PrimeTooSmall { p: prime, bound });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut values = BTreeMap::new();
    for i in 1..=c.n {
        for j in i + 1..=c.n {
            values.insert(VariableId::tau(i, j), rng.gen_range(0..prime));
        }
    }
    Ok(ranks_at(c, field, |v| values.get(&v).copied().unwrap_or(0)))
}

/// Majority vote over several seeds; returns the winning ranks and how
/// many seeds produced them. Ties go to the larger ranks.
pub fn rank_vote(c: &ResolutionComplex, seeds: &[u64], prime: u64) -> Result<(Ranks, usize), ResolutionError> {
    let mut counts: BTreeMap<Ranks, usize> = BTreeMap::new();
    for &seed in seeds {
        *counts.entry(specialize_and_rank(c, seed, prime)?).or_default() += 1;
    }
    Ok(counts
        .into_iter()
        .max_by_key(|&(r, k)| (k, r))
        .unwrap_or((Ranks { d3: 0, d2: 0, d1: 0 }, 0)))
}
