//! Products `F1 x F1 -> F2` on the zero-block resolution, and the induced
//! values of `d3` on `F1 x F2` through the Leibniz rule.

use std::collections::BTreeMap;

use super::{alt, build, mismatch, ResolutionComplex, ResolutionError, Variant};
use crate::polyring::Polynomial;
use crate::{IndexSet, Parity};

/// Products `e_i e_j` as coefficient vectors in the basis `f_1..f_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductTable {
    n: usize,
    entries: BTreeMap<(usize, usize), Vec<Polynomial>>,
}

impl ProductTable {
    /// `e_i e_j`, using `e_j e_i = -e_i e_j` and `e_i e_i = 0`.
    pub fn product(&self, i: usize, j: usize) -> Vec<Polynomial> {
        if i == j {
            return vec![Polynomial::zero(); self.n];
        }
        if let Some(v) = self.entries.get(&(i, j)) {
            return v.clone();
        }
        let v = self
            .entries
            .get(&(j, i))
            .unwrap_or_else(|| panic!("no product e{i}e{j}"));
        v.iter().map(|p| -p).collect()
    }

    /// The pairs `(i, j)` for which the product was set, in that order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.entries.keys().copied()
    }
}

fn basis(n: usize, k: usize, coeff: Polynomial) -> Vec<Polynomial> {
    let mut v = vec![Polynomial::zero(); n];
    v[k - 1] = coeff;
    v
}

fn tail_sum(n: usize, row: usize) -> Vec<Polynomial> {
    let mut v = vec![Polynomial::zero(); n];
    for i in 4..=n {
        v[i - 1] = Polynomial::tau(row, i);
    }
    v
}

/// The products on `F1` for the zero-block resolution.
pub fn product_table(n: usize, parity: Parity) -> ProductTable {
    let one = Polynomial::one;
    let entries = match parity {
        Parity::Odd => BTreeMap::from([
            ((4, 1), basis(n, 1, one())),
            ((4, 2), basis(n, 2, one())),
            ((4, 3), basis(n, 3, one())),
            ((1, 2), tail_sum(n, 3)),
            ((2, 3), tail_sum(n, 1)),
            ((3, 1), tail_sum(n, 2)),
        ]),
        Parity::Even => BTreeMap::from([
            ((2, 3), basis(n, 1, -one())),
            ((3, 4), basis(n, 3, -one())),
            ((4, 2), basis(n, 2, -one())),
            ((1, 2), tail_sum(n, 3)),
            ((1, 3), tail_sum(n, 2)),
            ((1, 4), tail_sum(n, 1)),
        ]),
    };
    ProductTable { n, entries }
}

fn apply(m: &crate::matrix::PolyMatrix, v: &[Polynomial]) -> Vec<Polynomial> {
    (1..=m.rows())
        .map(|i| Polynomial::sum((1..=m.cols()).map(|j| m.entry(i, j) * &v[j - 1])))
        .collect()
}

fn vectors_equal(what: &str, a: &[Polynomial], b: &[Polynomial]) -> Result<(), ResolutionError> {
    for (k, (x, y)) in a.iter().zip(b).enumerate() {
        mismatch(format!("{what}, coordinate {}", k + 1), x.clone(), y.clone())?;
    }
    Ok(())
}

fn in_square_of_maximal_ideal(v: &[Polynomial]) -> bool {
    v.iter().all(|p| p.min_degree().map_or(true, |d| d >= 2))
}

/// `d3(e_i f_j) = d1(e_i) f_j - e_i d2(f_j)`.
pub fn d3_of_product(c: &ResolutionComplex, table: &ProductTable, i: usize, j: usize) -> Vec<Polynomial> {
    let n = c.n;
    let mut out = basis(n, j, c.d1.entry(1, i).clone());
    for k in 1..=4 {
        let coeff = c.d2.entry(k, j);
        if coeff.is_zero() {
            continue;
        }
        for (slot, p) in out.iter_mut().zip(table.product(i, k)) {
            *slot = &*slot - &(coeff * &p);
        }
    }
    out
}

/// Verifies the product table against the Koszul relations, the Leibniz
/// consistency `d2 d3(e_i f_j) = 0`, the explicit values of `d3(e_4 f_j)` in
/// the odd case (including the special products for `n = 5`), and that the
/// remaining `d3(e_i f_j)` have all coefficients in the square of the
/// maximal ideal.
pub fn check_dg_products(n: usize, parity: Parity) -> Result<(), ResolutionError> {
    let c = build(n, parity, Variant::ZeroBlock)?;
    let table = product_table(n, parity);
    let d1 = |i: usize| c.d1.entry(1, i).clone();
    for (i, j) in table.pairs() {
        let koszul: Vec<Polynomial> = (1..=4)
            .map(|k| {
                if k == j {
                    d1(i)
                } else if k == i {
                    -d1(j)
                } else {
                    Polynomial::zero()
                }
            })
            .collect();
        vectors_equal(&format!("d2(e{i}e{j}) = Koszul"), &apply(&c.d2, &table.product(i, j)), &koszul)?;
    }
    let zero = vec![Polynomial::zero(); n];
    let zero4 = vec![Polynomial::zero(); 4];
    for i in 1..=4 {
        for j in 1..=n {
            let x = d3_of_product(&c, &table, i, j);
            vectors_equal(&format!("d2 d3(e{i}f{j}) = 0"), &apply(&c.d2, &x), &zero4)?;
            let must_be_small = match parity {
                Parity::Odd => i <= 3 || (j >= 4 && n >= 7),
                Parity::Even => true,
            };
            if must_be_small && !in_square_of_maximal_ideal(&x) {
                let bad = x.iter().find(|p| p.min_degree().is_some_and(|d| d < 2)).cloned().unwrap_or_else(Polynomial::zero);
                return Err(ResolutionError::Mismatch {
                    what: format!("d3(e{i}f{j}) has a coefficient outside m^2"),
                    lhs: bad,
                    rhs: Polynomial::zero(),
                });
            }
            if parity == Parity::Odd && i == 4 {
                if j <= 3 {
                    vectors_equal(&format!("d3(e4f{j}) = 0"), &x, &zero)?;
                } else {
                    let pb = |xs: &[usize]| c.matrix.comp_pfaffian(xs.iter().copied().collect::<IndexSet>());
                    let s = alt(j);
                    let sg = |p: Polynomial| if s > 0 { p } else { -p };
                    let mut expected = basis(n, j, pb(&[1, 2, 3]));
                    expected[0] = sg(pb(&[2, 3, j]));
                    expected[1] = sg(pb(&[1, 3, j]));
                    expected[2] = sg(pb(&[1, 2, j]));
                    vectors_equal(&format!("d3(e4f{j}) explicit"), &x, &expected)?;
                }
            }
        }
    }
    if parity == Parity::Odd && n == 5 {
        let g = |k: usize| c.d3.column(k);
        vectors_equal("d3(e4f4) = d3(g2)", &d3_of_product(&c, &table, 4, 4), &g(2))?;
        let minus_g1: Vec<Polynomial> = g(1).iter().map(|p| -p).collect();
        vectors_equal("d3(e4f5) = -d3(g1)", &d3_of_product(&c, &table, 4, 5), &minus_g1)?;
    }
    Ok(())
}
