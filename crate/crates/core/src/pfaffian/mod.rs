//! Pfaffians of skew-symmetric matrices.
//!
//! The Pfaffian of a principal submatrix is computed by expansion along its
//! first index, memoized per matrix over index subsets. Words (sequences of
//! letters, repeats allowed) are evaluated through the sign of the sorting
//! permutation, with the value 0 on odd-length words and words with repeats.

mod identities;

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

pub use identities::{
    admissible_cases, check_lemma, check_overlapping, check_overlapping_form, overlapping_cases, LemmaCase, LemmaId,
    Overlap, OverlapCase,
};

use crate::matrix::Matrix;
use crate::polyring::Polynomial;
use crate::ring::{PolyRing, Ring};
use crate::IndexSet;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PfaffianError {
    #[error("matrix size {n} is too small, need at least {min}")]
    TooSmall { n: usize, min: usize },
    #[error("letter {letter} is outside 1..{n}")]
    LetterOutOfRange { letter: usize, n: usize },
    #[error("letter {letter} occurs in both {first} and {second}")]
    NotDisjoint {
        letter: usize,
        first: &'static str,
        second: &'static str,
    },
    #[error("letter {letter} is repeated in {word}")]
    RepeatedLetter { letter: usize, word: &'static str },
    #[error("letter {letter} is not in beta")]
    LetterNotInBeta { letter: usize },
    #[error("malformed index data: {0}")]
    Malformed(String),
}

/// An `n x n` skew-symmetric matrix over a ring, with a Pfaffian cache.
pub struct SkewMatrix<R: Ring = PolyRing> {
    ring: R,
    n: usize,
    entries: Vec<R::Elem>,
    cache: Mutex<HashMap<u64, R::Elem>>,
}

/// The generic matrix with entries `t_i_j` above the diagonal.
pub fn generic_skew(n: usize) -> SkewMatrix {
    SkewMatrix::from_fn(PolyRing, n, |i, j| Polynomial::tau(i, j))
}

/// The generic matrix with its upper-left 3x3 block replaced by zeros.
pub fn zero_block_skew(n: usize) -> Result<SkewMatrix, PfaffianError> {
    if n < 4 {
        return Err(PfaffianError::TooSmall { n, min: 4 });
    }
    Ok(SkewMatrix::from_fn(PolyRing, n, |i, j| {
        if j <= 3 {
            Polynomial::zero()
        } else {
            Polynomial::tau(i, j)
        }
    }))
}

/// Sign of the permutation carrying the word `rho` to `sigma`; 0 when `rho`
/// has a repeated letter or `sigma` is not a rearrangement of `rho`.
pub fn word_sign(rho: &[usize], sigma: &[usize]) -> i32 {
    if rho.len() != sigma.len() {
        return 0;
    }
    let mut pos = HashMap::with_capacity(rho.len());
    for (k, &a) in rho.iter().enumerate() {
        if pos.insert(a, k).is_some() {
            return 0;
        }
    }
    let mut perm = Vec::with_capacity(sigma.len());
    for a in sigma {
        match pos.remove(a) {
            Some(k) => perm.push(k),
            None => return 0,
        }
    }
    permutation_sign(&perm)
}

/// Sign of a permutation given as a sequence of distinct integers.
pub fn permutation_sign(perm: &[usize]) -> i32 {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

impl<R: Ring> SkewMatrix<R> {
    /// Builds the matrix from its entries above the diagonal; `f(i, j)` is
    /// called for `1 <= i < j <= n`.
    pub fn from_fn(ring: R, n: usize, f: impl Fn(usize, usize) -> R::Elem) -> Self {
        assert!(n <= crate::index_set::MAX_ELEMENT, "matrix size {n} too large");
        let mut entries = vec![ring.zero(); n * n];
        for i in 1..=n {
            for j in i + 1..=n {
                let x = f(i, j);
                entries[(j - 1) * n + (i - 1)] = ring.neg(&x);
                entries[(i - 1) * n + (j - 1)] = x;
            }
        }
        SkewMatrix {
            ring,
            n,
            entries,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    /// Entry in row `i`, column `j` (1-based).
    pub fn entry(&self, i: usize, j: usize) -> &R::Elem {
        assert!((1..=self.n).contains(&i) && (1..=self.n).contains(&j));
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    /// Applies `f` to every entry above the diagonal.
    pub fn map<S: Ring>(&self, ring: S, f: impl Fn(&R::Elem) -> S::Elem) -> SkewMatrix<S> {
        SkewMatrix::from_fn(ring, self.n, |i, j| f(self.entry(i, j)))
    }

    /// The submatrix on the given rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix<R> {
        Matrix::from_fn(self.ring.clone(), rows.len(), cols.len(), |a, b| {
            self.entry(rows[a - 1], cols[b - 1]).clone()
        })
    }

    pub fn to_matrix(&self) -> Matrix<R> {
        let all: Vec<usize> = (1..=self.n).collect();
        self.submatrix(&all, &all)
    }

    /// Pfaffian of the principal submatrix on `I`; 1 on the empty set.
    pub fn sub_pfaffian(&self, set: impl Into<IndexSet>) -> R::Elem {
        let set = set.into();
        assert!(
            set.is_subset(IndexSet::full(self.n)),
            "index set {set} not inside 1..{}",
            self.n
        );
        self.pf_bits(set.bits())
    }

    /// Pfaffian of the submatrix obtained by deleting the rows and columns in `I`.
    pub fn comp_pfaffian(&self, set: impl Into<IndexSet>) -> R::Elem {
        let set = set.into();
        assert!(set.is_subset(IndexSet::full(self.n)));
        self.pf_bits(set.complement(self.n).bits())
    }

    /// Pfaffian of the whole matrix.
    pub fn pfaffian(&self) -> R::Elem {
        self.pf_bits(IndexSet::full(self.n).bits())
    }

    /// The function on words: signed Pfaffian of the sorted word, 0 on odd
    /// length or repeated letters.
    pub fn pfaffian_word(&self, word: &[usize]) -> R::Elem {
        for &a in word {
            assert!((1..=self.n).contains(&a), "letter {a} outside 1..{}", self.n);
        }
        if word.len() % 2 == 1 {
            return self.ring.zero();
        }
        let mut sorted = word.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return self.ring.zero();
        }
        let sign = word_sign(word, &sorted);
        let set: IndexSet = sorted.into_iter().collect();
        self.ring.signed(sign, &self.pf_bits(set.bits()))
    }

    fn pf_bits(&self, bits: u64) -> R::Elem {
        if bits == 0 {
            return self.ring.one();
        }
        if bits.count_ones() % 2 == 1 {
            return self.ring.zero();
        }
        if let Some(v) = self.cache.lock().expect("pfaffian cache poisoned").get(&bits) {
            return v.clone();
        }
        let a = bits.trailing_zeros() as usize;
        let rest = bits & !(1 << a);
        let mut terms = Vec::new();
        let mut r = rest;
        let mut pos = 0;
        while r != 0 {
            let b = r.trailing_zeros() as usize;
            r &= r - 1;
            let t = &self.entries[a * self.n + b];
            if !self.ring.is_zero(t) {
                let sub = self.pf_bits(rest & !(1 << b));
                if !self.ring.is_zero(&sub) {
                    let prod = self.ring.mul(t, &sub);
                    terms.push(if pos % 2 == 0 { prod } else { self.ring.neg(&prod) });
                }
            }
            pos += 1;
        }
        let value = self.ring.sum(terms);
        self.cache
            .lock()
            .expect("pfaffian cache poisoned")
            .insert(bits, value.clone());
        value
    }
}

impl<R: Ring> Clone for SkewMatrix<R> {
    fn clone(&self) -> Self {
        SkewMatrix {
            ring: self.ring.clone(),
            n: self.n,
            entries: self.entries.clone(),
            cache: Mutex::new(HashMap::new()),
        }
    }
}

impl<R: Ring> PartialEq for SkewMatrix<R> {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.entries == other.entries
    }
}

impl<R: Ring> fmt::Debug for SkewMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SkewMatrix")
            .field("n", &self.n)
            .field("entries", &self.entries)
            .finish()
    }
}
