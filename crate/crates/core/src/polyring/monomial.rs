use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use super::VariableId;

/// A power product of variables.
///
/// Factors are stored as `(variable << 16) | exponent`, sorted by variable,
/// with no zero exponents.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: SmallVec<[u32; 8]>,
}

fn pack(v: VariableId, e: u32) -> u32 {
    assert!(e > 0 && e <= u16::MAX as u32, "exponent out of range: {e}");
    ((v.raw() as u32) << 16) | e
}

fn var_of(f: u32) -> u16 {
    (f >> 16) as u16
}

fn exp_of(f: u32) -> u32 {
    f & 0xffff
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: VariableId) -> Self {
        Self::pow(v, 1)
    }

    pub fn pow(v: VariableId, e: u32) -> Self {
        let mut factors = SmallVec::new();
        if e > 0 {
            factors.push(pack(v, e));
        }
        Monomial { factors }
    }

    /// Builds a monomial from `(variable, exponent)` pairs in any order;
    /// repeated variables have their exponents summed.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (VariableId, u32)>) -> Self {
        pairs
            .into_iter()
            .fold(Monomial::one(), |acc, (v, e)| &acc * &Monomial::pow(v, e))
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|&f| exp_of(f)).sum()
    }

    pub fn exponent(&self, v: VariableId) -> u32 {
        self.factors
            .iter()
            .find(|&&f| var_of(f) == v.raw())
            .map_or(0, |&f| exp_of(f))
    }

    pub fn iter(&self) -> impl Iterator<Item = (VariableId, u32)> + '_ {
        self.factors
            .iter()
            .map(|&f| (VariableId::from_raw(var_of(f)), exp_of(f)))
    }

    /// Graded lexicographic comparison; the first variable in `(i, j)` order
    /// is the largest.
    pub fn cmp_grlex(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.cmp_lex(other))
    }

    fn cmp_lex(&self, other: &Self) -> Ordering {
        for (a, b) in self.factors.iter().zip(other.factors.iter()) {
            let (va, vb) = (var_of(*a), var_of(*b));
            if va != vb {
                return if va < vb {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
            }
            match exp_of(*a).cmp(&exp_of(*b)) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        self.factors.len().cmp(&other.factors.len())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_grlex(other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::ops::Mul for &Monomial {
    type Output = Monomial;

    fn mul(self, rhs: &Monomial) -> Monomial {
        let (a, b) = (&self.factors, &rhs.factors);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            let (va, vb) = (var_of(a[i]), var_of(b[j]));
            match va.cmp(&vb) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = exp_of(a[i]) + exp_of(b[j]);
                    out.push(pack(VariableId::from_raw(va), e));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { factors: out }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
