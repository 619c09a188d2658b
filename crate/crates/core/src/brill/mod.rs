//! Minors of skew-symmetric matrices.
//!
//! [`brill_minor`] writes an arbitrary square minor as a signed sum of
//! products of two Pfaffians. [`det_oracle`] is an independent
//! division-free determinant used to check it. [`d3_minor_formula`] gives
//! closed forms for the minors `det T[rows without r; columns 4..n]` that
//! control the last differential of the resolution.

use std::collections::HashMap;

pub use crate::matrix::PolyMatrix;
use crate::matrix::Matrix;
use crate::pfaffian::{word_sign, SkewMatrix};
use crate::ring::Ring;
use crate::{IndexSet, Parity};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BrillError {
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("{rows} rows but {cols} columns selected")]
    SizeMismatch { rows: usize, cols: usize },
    #[error("index {index} is outside 1..{n}")]
    OutOfRange { index: usize, n: usize },
    #[error("matrix size {n} does not fit parity {parity} (need at least {min})")]
    Parity { n: usize, parity: Parity, min: usize },
    #[error("indices {0:?} are not strictly increasing")]
    NotIncreasing(Vec<usize>),
}

/// Determinant by Laplace expansion along rows, memoized over column subsets.
pub fn det_oracle<R: Ring>(m: &Matrix<R>) -> Result<R::Elem, BrillError> {
    if !m.is_square() {
        return Err(BrillError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    assert!(n <= 64, "determinant of size {n} is out of reach");
    let r = m.ring();
    // level[S] = det of the first k rows on the columns in S
    let mut level: HashMap<u64, R::Elem> = HashMap::from([(0, r.one())]);
    for k in 0..n {
        let row = m.row(k + 1);
        let mut next: HashMap<u64, Vec<R::Elem>> = HashMap::new();
        for (&cols, d) in &level {
            for (c, entry) in row.iter().enumerate() {
                if cols & (1 << c) != 0 || r.is_zero(entry) {
                    continue;
                }
                let pos = (cols & ((1u64 << c) - 1)).count_ones() as usize;
                let term = r.mul(entry, d);
                let term = if (k + pos) % 2 == 0 { term } else { r.neg(&term) };
                next.entry(cols | (1 << c)).or_default().push(term);
            }
        }
        level = next
            .into_iter()
            .map(|(cols, terms)| (cols, r.sum(terms)))
            .filter(|(_, d)| !r.is_zero(d))
            .collect();
    }
    Ok(level.into_values().next().unwrap_or_else(|| r.zero()))
}

/// Generalized Laplace expansion of `det m` along the sorted columns `cols`:
/// the sum over row sets `I` of `(-1)^(sum I + sum cols) det m[I; cols]`
/// times `complement(I)`, which must be the complementary minor.
pub fn laplace_expansion<R: Ring>(
    m: &Matrix<R>,
    cols: &[usize],
    complement: impl Fn(&[usize]) -> R::Elem,
) -> R::Elem {
    assert!(m.is_square(), "laplace expansion needs a square matrix");
    let r = m.ring();
    let col_sum: usize = cols.iter().sum();
    let terms = IndexSet::k_subsets(m.rows(), cols.len()).filter_map(|rows| {
        let rows = rows.to_vec();
        let minor = det_oracle(&m.submatrix(&rows, cols)).expect("square");
        if r.is_zero(&minor) {
            return None;
        }
        let sign = if (rows.iter().sum::<usize>() + col_sum) % 2 == 0 { 1 } else { -1 };
        Some(r.signed(sign, &r.mul(&minor, &complement(&rows))))
    });
    r.sum(terms.collect::<Vec<_>>())
}

fn check_set(set: IndexSet, n: usize) -> Result<(), BrillError> {
    match set.max() {
        Some(top) if top > n => Err(BrillError::OutOfRange { index: top, n }),
        _ => Ok(()),
    }
}

/// `det T[rows; cols]` through the Pfaffian expansion
/// `(-1)^floor(m/2) sum_k (-1)^k sum_{|w| = 2k} sgn(rho -> w (rho \ w)) pf(w) pf((rho \ w) sigma)`.
pub fn brill_minor<R: Ring>(t: &SkewMatrix<R>, rows: IndexSet, cols: IndexSet) -> Result<R::Elem, BrillError> {
    if rows.len() != cols.len() || rows.is_empty() {
        return Err(BrillError::SizeMismatch {
            rows: rows.len(),
            cols: cols.len(),
        });
    }
    check_set(rows, t.n())?;
    check_set(cols, t.n())?;
    let r = t.ring();
    let m = rows.len();
    let rho = rows.to_vec();
    let sigma = cols.to_vec();
    // pf((rho \ w) sigma) vanishes unless w contains every shared letter
    let forced = rows.intersection(cols);
    let free = rows.difference(cols);
    let mut terms = Vec::new();
    for extra in free.subsets() {
        let omega = forced.union(extra);
        if omega.len() % 2 == 1 {
            continue;
        }
        let pf_omega = t.sub_pfaffian(omega);
        if r.is_zero(&pf_omega) {
            continue;
        }
        let rest = rows.difference(omega);
        let mut reordered = omega.to_vec();
        reordered.extend(rest.iter());
        let mut word = rest.to_vec();
        word.extend_from_slice(&sigma);
        let pf_rest = t.pfaffian_word(&word);
        if r.is_zero(&pf_rest) {
            continue;
        }
        let k = omega.len() / 2;
        let sign = word_sign(&rho, &reordered) * if (m / 2 + k) % 2 == 0 { 1 } else { -1 };
        terms.push(r.signed(sign, &r.mul(&pf_omega, &pf_rest)));
    }
    Ok(r.sum(terms))
}

/// Determinant of `T` with rows `removed_rows` and columns `removed_cols` deleted.
pub fn complementary_minor<R: Ring>(
    t: &SkewMatrix<R>,
    removed_rows: IndexSet,
    removed_cols: IndexSet,
) -> Result<R::Elem, BrillError> {
    check_set(removed_rows, t.n())?;
    check_set(removed_cols, t.n())?;
    let rows = removed_rows.complement(t.n()).to_vec();
    let cols = removed_cols.complement(t.n()).to_vec();
    if rows.len() != cols.len() {
        return Err(BrillError::SizeMismatch {
            rows: rows.len(),
            cols: cols.len(),
        });
    }
    det_oracle(&t.submatrix(&rows, &cols))
}

/// Closed form of `det T[complement of r; complement of {1,2,3}]`.
pub fn d3_minor_formula<R: Ring>(t: &SkewMatrix<R>, parity: Parity, r: [usize; 3]) -> Result<R::Elem, BrillError> {
    let n = t.n();
    if Parity::of(n) != parity || n < parity.min_size() {
        return Err(BrillError::Parity {
            n,
            parity,
            min: parity.min_size(),
        });
    }
    if !(r[0] < r[1] && r[1] < r[2]) {
        return Err(BrillError::NotIncreasing(r.to_vec()));
    }
    if r[0] == 0 || r[2] > n {
        let index = if r[0] == 0 { 0 } else { r[2] };
        return Err(BrillError::OutOfRange { index, n });
    }
    let ring = t.ring();
    let pb = |xs: &[usize]| t.comp_pfaffian(xs.iter().copied().collect::<IndexSet>());
    let pp = |a: &[usize], b: &[usize]| ring.mul(&pb(a), &pb(b));
    let [r1, r2, r3] = r;
    let value = match parity {
        Parity::Odd => {
            let head = pp(&[r1, r2, r3], &[1, 2, 3]);
            if r2 <= 3 {
                head
            } else if r1 <= 3 {
                ring.sub(&head, &pp(&[1, 2, 3, r2, r3], &[r1]))
            } else {
                ring.sum([
                    head,
                    ring.neg(&pp(&[2, 3, r1, r2, r3], &[1])),
                    pp(&[1, 3, r1, r2, r3], &[2]),
                    ring.neg(&pp(&[1, 2, r1, r2, r3], &[3])),
                ])
            }
        }
        Parity::Even => {
            if r3 == 3 {
                ring.zero()
            } else if r2 <= 3 {
                pp(&[1, 2, 3, r3], &[r1, r2])
            } else if r1 == 1 {
                ring.sub(&pp(&[1, 2, r2, r3], &[1, 3]), &pp(&[1, 3, r2, r3], &[1, 2]))
            } else if r1 == 2 {
                ring.sub(&pp(&[1, 2, r2, r3], &[2, 3]), &pp(&[2, 3, r2, r3], &[1, 2]))
            } else if r1 == 3 {
                ring.sub(&pp(&[1, 3, r2, r3], &[2, 3]), &pp(&[2, 3, r2, r3], &[1, 3]))
            } else {
                ring.sum([
                    pp(&[1, r1, r2, r3], &[2, 3]),
                    ring.neg(&pp(&[2, r1, r2, r3], &[1, 3])),
                    pp(&[3, r1, r2, r3], &[1, 2]),
                    ring.neg(&ring.mul(&pb(&[1, 2, 3, r1, r2, r3]), &t.pfaffian())),
                ])
            }
        }
    };
    Ok(value)
}
