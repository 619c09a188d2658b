use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Monomial, PolyError, VarKind, VariableId};

/// Sparse polynomial with big-integer coefficients.
///
/// Terms are kept sorted by descending monomial order with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, BigInt)>,
}

/// Bigrading class of a variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarClass {
    C,
    U,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bidegree {
    /// The zero polynomial, homogeneous of every bidegree.
    Zero,
    Homogeneous(u32, u32),
    Inhomogeneous,
}

/// Default bigrading: `c` variables are C-class, everything else U-class.
pub fn class_by_kind(v: VariableId) -> VarClass {
    match v.kind() {
        VarKind::C => VarClass::C,
        _ => VarClass::U,
    }
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(Monomial::one(), c)
    }

    pub fn var(v: VariableId) -> Self {
        Self::monomial(Monomial::var(v), 1)
    }

    pub fn tau(i: usize, j: usize) -> Self {
        Self::var(VariableId::tau(i, j))
    }

    pub fn monomial(m: Monomial, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    /// Canonicalizes an arbitrary list of terms.
    pub fn from_terms(mut terms: Vec<(Monomial, BigInt)>) -> Self {
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, BigInt)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial { terms: out }
    }

    /// Sum of many polynomials with a single normalization pass.
    pub fn sum<I: IntoIterator<Item = Polynomial>>(items: I) -> Self {
        let mut terms = Vec::new();
        for p in items {
            terms.extend(p.terms);
        }
        Self::from_terms(terms)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl ExactSizeIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().map(|(m, c)| (m, c))
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms
            .binary_search_by(|(tm, _)| m.cmp(tm))
            .map_or_else(|_| BigInt::zero(), |k| self.terms[k].1.clone())
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&Monomial::one())
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    /// Smallest total degree of a term; `None` for zero.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.last().map(|(m, _)| m.degree())
    }

    /// Distinct variables, in increasing variable order.
    pub fn variables(&self) -> Vec<VariableId> {
        let mut vs: Vec<_> = self
            .terms
            .iter()
            .flat_map(|(m, _)| m.iter().map(|(v, _)| v))
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(tm, k)| (tm * m, k * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn evaluate(&self, assignment: &BTreeMap<VariableId, BigInt>) -> Result<BigInt, PolyError> {
        if let Some(v) = self.variables().into_iter().find(|v| !assignment.contains_key(v)) {
            return Err(PolyError::MissingVariable(v));
        }
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.iter() {
                t *= num_traits::pow(assignment[&v].clone(), e as usize);
            }
            total += t;
        }
        Ok(total)
    }

    /// Evaluates modulo `p` with variable values supplied by `value`.
    pub fn evaluate_mod(
        &self,
        value: impl Fn(VariableId) -> Option<u64>,
        p: u64,
    ) -> Result<u64, PolyError> {
        let pb = BigInt::from(p);
        let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
        let mut total = 0u64;
        for (m, c) in &self.terms {
            let mut t = (((c % &pb) + &pb) % &pb).to_u64().expect("reduced coefficient");
            for (v, e) in m.iter() {
                let x = value(v).ok_or(PolyError::MissingVariable(v))? % p;
                for _ in 0..e {
                    t = mulmod(t, x);
                }
            }
            total = (total + t) % p;
        }
        Ok(total)
    }

    /// Simultaneous substitution of every variable.
    pub fn substitute(&self, map: &BTreeMap<VariableId, Polynomial>) -> Result<Polynomial, PolyError> {
        if let Some(v) = self.variables().into_iter().find(|v| !map.contains_key(v)) {
            return Err(PolyError::MissingVariable(v));
        }
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(c.clone());
            for (v, e) in m.iter() {
                t = &t * &map[&v].pow(e);
            }
            terms.extend(t.terms);
        }
        Ok(Self::from_terms(terms))
    }

    /// Renames variables through `f`; the map must be injective on the
    /// variables that occur.
    pub fn rename(&self, f: impl Fn(VariableId) -> VariableId) -> Polynomial {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (Monomial::from_pairs(m.iter().map(|(v, e)| (f(v), e))), c.clone()))
                .collect(),
        )
    }

    pub fn bidegree(&self, classify: impl Fn(VariableId) -> VarClass) -> Bidegree {
        let mut found = None;
        for (m, _) in &self.terms {
            let mut d = (0, 0);
            for (v, e) in m.iter() {
                match classify(v) {
                    VarClass::C => d.0 += e,
                    VarClass::U => d.1 += e,
                }
            }
            match found {
                None => found = Some(d),
                Some(f) if f != d => return Bidegree::Inhomogeneous,
                _ => {}
            }
        }
        found.map_or(Bidegree::Zero, |(c, u)| Bidegree::Homogeneous(c, u))
    }

    /// LaTeX rendering, e.g. `t_{12}t_{34} - t_{13}t_{24}`.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let wide = self
            .variables()
            .iter()
            .any(|v| v.i() > 9 || v.j() > 9);
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            if !a.is_one() || m.is_one() {
                s.push_str(&a.to_string());
            }
            for (v, e) in m.iter() {
                let sep = if wide { "," } else { "" };
                s.push_str(&format!("{}_{{{}{}{}}}", v.kind().prefix(), v.i(), sep, v.j()));
                if e > 1 {
                    s.push_str(&format!("^{{{e}}}"));
                }
            }
        }
        s
    }

    fn merge(a: &[(Monomial, BigInt)], b: &[(Monomial, BigInt)], negate_b: bool) -> Self {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let nb = |c: &BigInt| if negate_b { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), nb(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a[i].1 + nb(&b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), nb(c))));
        Polynomial { terms: out }
    }
}

impl From<VariableId> for Polynomial {
    fn from(v: VariableId) -> Self {
        Polynomial::var(v)
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Self {
        Polynomial::constant(c)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::merge(&self.terms, &rhs.terms, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::merge(&self.terms, &rhs.terms, true)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        if self.terms.len() == 1 {
            return rhs.mul_monomial(&self.terms[0].0, &self.terms[0].1);
        }
        if rhs.terms.len() == 1 {
            return self.mul_monomial(&rhs.terms[0].0, &rhs.terms[0].1);
        }
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                terms.push((ma * mb, ca * cb));
            }
        }
        Polynomial::from_terms(terms)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(mut self) -> Polynomial {
        for (_, c) in &mut self.terms {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: &Polynomial) -> Polynomial {
                (&self).$f(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        *self = &*self + rhs;
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if c.is_negative() {
                f.write_str("-")?;
            } else if k > 0 {
                f.write_str("+")?;
            }
            let a = c.abs();
            match (a.is_one(), m.is_one()) {
                (_, true) => write!(f, "{a}")?,
                (true, false) => write!(f, "{m}")?,
                (false, false) => write!(f, "{a}*{m}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
