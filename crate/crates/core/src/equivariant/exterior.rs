use std::collections::BTreeMap;
use std::fmt;

use super::EquivariantError;
use crate::polyring::{Polynomial, VariableId};
use crate::IndexSet;

/// A homogeneous element of the exterior algebra of a free module of rank
/// `rank`, with polynomial coefficients on the basis forms `g_S`.
#[derive(Clone, PartialEq, Eq)]
pub struct ExteriorElement {
    rank: usize,
    degree: usize,
    terms: BTreeMap<IndexSet, Polynomial>,
}

/// Sign of `g_S ^ g_T` relative to `g_{S u T}`; 0 when they overlap.
fn shuffle_sign(s: IndexSet, t: IndexSet) -> i32 {
    if !s.intersection(t).is_empty() {
        return 0;
    }
    let inversions: usize = t.iter().map(|b| s.iter().filter(|&a| a > b).count()).sum();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

impl ExteriorElement {
    pub fn zero(rank: usize, degree: usize) -> Self {
        ExteriorElement {
            rank,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(rank: usize, p: Polynomial) -> Self {
        Self::from_terms(rank, 0, [(IndexSet::default(), p)])
    }

    /// The basis form `g_{i1} ^ ... ^ g_{ik}`, in the order given.
    pub fn basis(rank: usize, indices: &[usize]) -> Self {
        let set: IndexSet = indices.iter().copied().collect();
        assert_eq!(set.len(), indices.len(), "repeated basis index");
        assert!(set.max().map_or(true, |m| m <= rank), "basis index beyond rank {rank}");
        let sign = crate::pfaffian::permutation_sign(indices);
        Self::from_terms(rank, indices.len(), [(set, Polynomial::constant(sign))])
    }

    /// `sum_i coeffs[i-1] g_i`.
    pub fn vector(rank: usize, coeffs: impl IntoIterator<Item = Polynomial>) -> Self {
        Self::from_terms(
            rank,
            1,
            coeffs.into_iter().enumerate().map(|(k, p)| (IndexSet::singleton(k + 1), p)),
        )
    }

    pub fn from_terms(rank: usize, degree: usize, terms: impl IntoIterator<Item = (IndexSet, Polynomial)>) -> Self {
        let mut out = Self::zero(rank, degree);
        for (set, p) in terms {
            assert_eq!(set.len(), degree, "form {set} is not of degree {degree}");
            out.add_term(set, p);
        }
        out
    }

    fn add_term(&mut self, set: IndexSet, p: Polynomial) {
        if p.is_zero() {
            return;
        }
        let slot = self.terms.entry(set).or_default();
        *slot += &p;
        if slot.is_zero() {
            self.terms.remove(&set);
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (IndexSet, &Polynomial)> {
        self.terms.iter().map(|(s, p)| (*s, p))
    }

    pub fn coefficient(&self, set: IndexSet) -> Polynomial {
        self.terms.get(&set).cloned().unwrap_or_else(Polynomial::zero)
    }

    /// The coefficient of `g_1 ^ ... ^ g_rank`, identifying the top power with the ring.
    pub fn top_coefficient(&self) -> Polynomial {
        self.coefficient(IndexSet::full(self.rank))
    }

    pub fn add(&self, other: &Self) -> Result<Self, EquivariantError> {
        self.same_rank(other)?;
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(EquivariantError::DegreeMismatch(self.degree, other.degree));
        }
        let degree = if self.is_zero() { other.degree } else { self.degree };
        let mut out = Self::zero(self.rank, degree);
        for (s, p) in self.terms().chain(other.terms()) {
            out.add_term(s, p.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Polynomial) -> Self {
        Self::from_terms(self.rank, self.degree, self.terms().map(|(s, p)| (s, p * c)))
    }

    pub fn wedge(&self, other: &Self) -> Result<Self, EquivariantError> {
        self.same_rank(other)?;
        let degree = self.degree + other.degree;
        let mut out = Self::zero(self.rank, degree);
        if degree > self.rank {
            return Ok(out);
        }
        for (s, a) in self.terms() {
            for (t, b) in other.terms() {
                let sign = shuffle_sign(s, t);
                if sign == 0 {
                    continue;
                }
                let prod = a * b;
                out.add_term(s.union(t), if sign > 0 { prod } else { -prod });
            }
        }
        Ok(out)
    }

    fn same_rank(&self, other: &Self) -> Result<(), EquivariantError> {
        if self.rank == other.rank {
            Ok(())
        } else {
            Err(EquivariantError::RankMismatch(self.rank, other.rank))
        }
    }
}

impl fmt::Display for ExteriorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (s, p)) in self.terms().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let form: Vec<String> = s.iter().map(|i| format!("g{i}")).collect();
            if form.is_empty() {
                write!(f, "({p})")?;
            } else {
                write!(f, "({p})*{}", form.join("^"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ExteriorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExteriorElement(rank {}, degree {}: {self})", self.rank, self.degree)
    }
}

/// `C = sum_{i<j} c_i_j g_i ^ g_j`.
pub fn c_form(rank: usize) -> ExteriorElement {
    let mut terms = Vec::new();
    for i in 1..=rank {
        for j in i + 1..=rank {
            terms.push((IndexSet::from([i, j]), Polynomial::var(VariableId::c(i, j))));
        }
    }
    ExteriorElement::from_terms(rank, 2, terms)
}

/// `u_k = sum_i u_k_i g_i`.
pub fn u_vector(rank: usize, k: usize) -> ExteriorElement {
    ExteriorElement::vector(rank, (1..=rank).map(|i| Polynomial::var(VariableId::u(k, i))))
}

/// `e ^ e ^ ... ^ e` (`j` factors; the scalar 1 for `j = 0`).
pub fn iterated_wedge(e: &ExteriorElement, j: usize) -> ExteriorElement {
    let mut out = ExteriorElement::scalar(e.rank(), Polynomial::one());
    for _ in 0..j {
        out = out.wedge(e).expect("same rank");
    }
    out
}
