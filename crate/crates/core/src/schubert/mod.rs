//! Combinatorics of the codimension-three Schubert varieties in the
//! orthogonal Grassmannian: the posets of even and odd subsets of
//! `{1..n}` with their Weyl group action, the dictionary between spinor
//! coordinates and Pfaffians of the big-cell matrix `X`, the generators of
//! the two Schubert ideals, and the graded formats obtained by linkage.
//!
//! The order is the reflexive-transitive closure of the generating
//! inequalities `I <= I'` (one element `i` of `I` replaced by `i + 1`, which
//! is `s_i(I)`) and `I <= I u {n-1, n}` (which is `s_n(I)`).

mod format;
mod ideals;

pub use format::{mapping_cone, mapping_cone_format, GradedFormat, MappingCone};
pub use ideals::{
    coset_subset, generator_signs, schubert_ideal, schubert_ideal_generators, spinor_to_pfaffian, IdealKind,
    SchubertGenerator, SchubertIdeal,
};

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::polyring::Polynomial;
use crate::{IndexSet, Parity};

/// Largest `n` for which posets are materialized (`2^11` elements).
pub const MAX_POSET_SIZE: usize = 12;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SchubertError {
    #[error("n = {n} is outside the supported range {min}..={max}")]
    SizeOutOfRange { n: usize, min: usize, max: usize },
    #[error("reflection s{i} does not exist for n = {n}")]
    BadReflection { i: usize, n: usize },
    #[error("{set} is not an element of the {class} subset poset of {{1..{n}}}")]
    NotInPoset { set: IndexSet, n: usize, class: Parity },
    #[error("the matrix has size {found}, expected {expected}")]
    MatrixSize { expected: usize, found: usize },
    #[error("generator {0} is not an entry of the first differential up to sign")]
    Unmatched(Polynomial),
}

fn check_range(n: usize, min: usize, max: usize) -> Result<(), SchubertError> {
    if (min..=max).contains(&n) {
        Ok(())
    } else {
        Err(SchubertError::SizeOutOfRange { n, min, max })
    }
}

/// The simple reflection `s_i` of `W(D_n)` acting on a subset of `{1..n}`:
/// `s_i` (`i < n`) swaps `i` and `i + 1`; `s_n` adds `{n-1, n}` to a set
/// missing both and removes it from a set containing both.
pub fn weyl_action(n: usize, i: usize, set: IndexSet) -> Result<IndexSet, SchubertError> {
    if n < 2 || i == 0 || i > n {
        return Err(SchubertError::BadReflection { i, n });
    }
    let (a, b) = if i < n { (i, i + 1) } else { (n - 1, n) };
    let out = match (set.contains(a), set.contains(b)) {
        (true, false) if i < n => set.without(a).with(b),
        (false, true) if i < n => set.without(b).with(a),
        (false, false) if i == n => set.with(a).with(b),
        (true, true) if i == n => set.without(a).without(b),
        _ => set,
    };
    Ok(out)
}

/// A cover relation `lower < upper` with `upper = s_reflection(lower)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cover {
    pub lower: IndexSet,
    pub upper: IndexSet,
    pub reflection: usize,
}

/// The subsets of `{1..n}` of one cardinality parity with the order above.
#[derive(Debug, Clone)]
pub struct SubsetPoset {
    n: usize,
    class: Parity,
    /// Sorted by element sum, which strictly increases along the order.
    elements: Vec<IndexSet>,
    index: HashMap<IndexSet, usize>,
    /// `up[a]` has bit `b` set when `elements[a] <= elements[b]`.
    up: Vec<Vec<u64>>,
    covers: Vec<Cover>,
}

impl SubsetPoset {
    pub fn new(n: usize, class: Parity) -> Result<Self, SchubertError> {
        check_range(n, 1, MAX_POSET_SIZE)?;
        let wanted = match class {
            Parity::Even => 0,
            Parity::Odd => 1,
        };
        let mut elements: Vec<IndexSet> = IndexSet::full(n).subsets().filter(|s| s.len() % 2 == wanted).collect();
        elements.sort_by_key(|s| (s.iter().sum::<usize>(), s.len(), s.bits()));
        let index: HashMap<IndexSet, usize> = elements.iter().enumerate().map(|(k, s)| (*s, k)).collect();

        let steps: Vec<Vec<(usize, usize)>> = elements
            .iter()
            .map(|&s| {
                generating_steps(n, s)
                    .into_iter()
                    .map(|(t, i)| (index[&t], i))
                    .collect()
            })
            .collect();

        let words = elements.len().div_ceil(64);
        let mut up = vec![vec![0u64; words]; elements.len()];
        for a in (0..elements.len()).rev() {
            let mut row = vec![0u64; words];
            row[a / 64] |= 1 << (a % 64);
            for &(b, _) in &steps[a] {
                debug_assert!(b > a, "generating steps increase the element sum");
                for (w, x) in row.iter_mut().zip(&up[b]) {
                    *w |= x;
                }
            }
            up[a] = row;
        }

        let bit = |row: &[u64], b: usize| row[b / 64] >> (b % 64) & 1 == 1;
        let mut covers = Vec::new();
        for (a, out) in steps.iter().enumerate() {
            for &(b, i) in out {
                let shortcut = out.iter().any(|&(c, _)| c != b && bit(&up[c], b));
                if !shortcut {
                    covers.push(Cover {
                        lower: elements[a],
                        upper: elements[b],
                        reflection: i,
                    });
                }
            }
        }
        covers.sort_by_key(|c| (index[&c.lower], index[&c.upper]));

        Ok(SubsetPoset {
            n,
            class,
            elements,
            index,
            up,
            covers,
        })
    }

    /// The poset indexing the spinor coordinates for size `n`: even subsets
    /// for even `n`, odd subsets for odd `n`.
    pub fn spinor(n: usize) -> Result<Self, SchubertError> {
        Self::new(n, Parity::of(n))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn class(&self) -> Parity {
        self.class
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements in a linear extension of the order.
    pub fn elements(&self) -> &[IndexSet] {
        &self.elements
    }

    pub fn contains(&self, set: IndexSet) -> bool {
        self.index.contains_key(&set)
    }

    fn position(&self, set: IndexSet) -> Result<usize, SchubertError> {
        self.index.get(&set).copied().ok_or(SchubertError::NotInPoset {
            set,
            n: self.n,
            class: self.class,
        })
    }

    /// `s_i` restricted to the poset.
    pub fn act(&self, i: usize, set: IndexSet) -> Result<IndexSet, SchubertError> {
        self.position(set)?;
        weyl_action(self.n, i, set)
    }

    pub fn leq(&self, a: IndexSet, b: IndexSet) -> Result<bool, SchubertError> {
        let (a, b) = (self.position(a)?, self.position(b)?);
        Ok(self.up[a][b / 64] >> (b % 64) & 1 == 1)
    }

    /// The Hasse diagram, every edge labelled by its reflection.
    pub fn covers(&self) -> &[Cover] {
        &self.covers
    }

    pub fn minimal_elements(&self) -> Vec<IndexSet> {
        let mut has_lower = vec![false; self.len()];
        for c in &self.covers {
            has_lower[self.index[&c.upper]] = true;
        }
        self.elements.iter().zip(has_lower).filter(|(_, l)| !l).map(|(s, _)| *s).collect()
    }

    pub fn maximal_elements(&self) -> Vec<IndexSet> {
        let mut has_upper = vec![false; self.len()];
        for c in &self.covers {
            has_upper[self.index[&c.lower]] = true;
        }
        self.elements.iter().zip(has_upper).filter(|(_, u)| !u).map(|(s, _)| *s).collect()
    }

    /// Graphviz source of the Hasse diagram. Arrows point from `I` to
    /// `s_i(I)` when `s_i(I) <= I`.
    pub fn to_dot(&self) -> String {
        let name = |s: IndexSet| if s.is_empty() { "∅".to_string() } else { s.to_string() };
        let tag = match self.class {
            Parity::Even => "PE",
            Parity::Odd => "PO",
        };
        let mut out = format!("digraph {tag}{} {{\n", self.n);
        for &s in &self.elements {
            let _ = writeln!(out, "  \"{}\";", name(s));
        }
        for c in &self.covers {
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"s{}\"];",
                name(c.upper),
                name(c.lower),
                c.reflection
            );
        }
        out.push_str("}\n");
        out
    }
}

/// The generating inequalities leaving `set`, as `(larger set, reflection)`.
fn generating_steps(n: usize, set: IndexSet) -> Vec<(IndexSet, usize)> {
    let mut out: Vec<(IndexSet, usize)> = set
        .iter()
        .filter(|&i| i < n && !set.contains(i + 1))
        .map(|i| (set.without(i).with(i + 1), i))
        .collect();
    if n >= 2 && !set.contains(n - 1) && !set.contains(n) {
        out.push((set.with(n - 1).with(n), n));
    }
    out
}

/// `poset_leq` for subsets of `{1..n}` in the spinor poset of size `n`.
pub fn poset_leq(n: usize, a: IndexSet, b: IndexSet) -> Result<bool, SchubertError> {
    SubsetPoset::spinor(n)?.leq(a, b)
}

#[cfg(test)]
mod tests;
