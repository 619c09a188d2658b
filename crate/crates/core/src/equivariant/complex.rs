use std::fmt;

use serde_json::{json, Value};

use super::{c_matrix, check_parameter, f_rank, matrix_size, x_generators, EquivariantError};
use crate::brill::det_oracle;
use crate::matrix::PolyMatrix;
use crate::pfaffian::{permutation_sign, SkewMatrix};
use crate::polyring::{class_by_kind, Bidegree, Polynomial, VarKind, VariableId};
use crate::resolution::{build, check_differentials, Variant};
use crate::ring::PolyRing;
use crate::{IndexSet, Parity};

/// Degree shifts `(a, b)` of the free modules, each summand being `A(-a, -b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grading {
    pub f1: Vec<(i64, i64)>,
    pub f2: Vec<(i64, i64)>,
    pub f3: Vec<(i64, i64)>,
}

impl Grading {
    pub fn new(m: usize, parity: Parity) -> Grading {
        let m = m as i64;
        let r = f_rank(m as usize, parity);
        let rep = |x: (i64, i64), k: usize| std::iter::repeat(x).take(k);
        let (x1, rest, koszul, tail, last) = match parity {
            Parity::Odd => ((m, 0), (m - 1, 2), (2 * m - 1, 2), (2 * m - 2, 3), (2 * m - 1, 3)),
            Parity::Even => ((m - 1, 3), (m, 1), (2 * m, 2), (2 * m - 1, 3), (2 * m, 3)),
        };
        Grading {
            f1: rep(x1, 1).chain(rep(rest, 3)).collect(),
            f2: rep(koszul, 3).chain(rep(tail, r)).collect(),
            f3: rep(last, r).collect(),
        }
    }
}

/// The equivariant complex over `Z[c_i_j, u_k_i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct EquivariantComplex {
    pub m: usize,
    pub parity: Parity,
    pub d3: PolyMatrix,
    pub d2: PolyMatrix,
    pub d1: PolyMatrix,
    pub grading: Grading,
}

/// `sgn(word, rest) * Pf(A[rest; rest])`, where `rest` is the sorted
/// complement of the letters of `word` and the sign is that of the
/// concatenation `word rest` as a permutation; 0 on a repeated letter.
fn pfbar_word(a: &SkewMatrix, word: &[usize]) -> Polynomial {
    let set: IndexSet = word.iter().copied().collect();
    if set.len() != word.len() {
        return Polynomial::zero();
    }
    let mut full = word.to_vec();
    full.extend(set.complement(a.n()).iter());
    let p = a.comp_pfaffian(set);
    if permutation_sign(&full) > 0 {
        p
    } else {
        -p
    }
}

fn u_matrix(rank: usize) -> PolyMatrix {
    PolyMatrix::from_fn(PolyRing, 3, rank, |k, i| Polynomial::var(VariableId::u(k, i)))
}

fn minor(b: &PolyMatrix, rows: &[usize], cols: &[usize]) -> Polynomial {
    det_oracle(&b.submatrix(rows, cols)).expect("square minor")
}

/// Koszul column for the pair `(a, b)`: `x_b` in row `a`, `-x_a` in row `b`.
fn koszul(x: &[Polynomial; 4], a: usize, b: usize) -> [Polynomial; 4] {
    let mut col: [Polynomial; 4] = Default::default();
    col[a - 1] = x[b - 1].clone();
    col[b - 1] = -&x[a - 1];
    col
}

/// Cyclic order of the row pairs of `B`, indexed by the third row `c`.
const CYCLIC_PAIRS: [[usize; 2]; 3] = [[2, 3], [3, 1], [1, 2]];

/// The differentials, with rows of `d2` indexed by `x_1..x_4`, the three
/// Koszul relations first among its columns, and `d3 = [B; A]`.
///
/// With `(a, b)` the cyclic pair opposite `c`:
/// odd `w_i = sum_{j<k<l} D^{jkl} pfbar(ijkl)` and, in row `c + 1`,
/// `sgn(a, b) sum_j u_{c j} pfbar(ji)`;
/// even `w_i = pfbar(i)` and, in row `c + 1`, `sum_{j<k} D^{jk}_{ab} pfbar(jik)`.
/// `D` are minors of the `u` matrix `B` with rows taken in the given order.
pub fn equivariant_differentials(m: usize, parity: Parity) -> Result<EquivariantComplex, EquivariantError> {
    check_parameter(m)?;
    let rank = f_rank(m, parity);
    let n = rank + 3;
    let a = c_matrix(rank);
    let b = u_matrix(rank);
    let x = x_generators(m, parity);

    let d1 = PolyMatrix::from_fn(PolyRing, 1, 4, |_, k| x[k - 1].clone());
    let d3 = PolyMatrix::from_fn(PolyRing, n, rank, |i, j| {
        if i <= 3 {
            b.entry(i, j).clone()
        } else {
            a.entry(i - 3, j).clone()
        }
    });

    let koszul_pairs = match parity {
        Parity::Odd => [(2, 1), (1, 3), (4, 1)],
        Parity::Even => [(4, 3), (2, 4), (3, 2)],
    };
    let mut columns: Vec<[Polynomial; 4]> = koszul_pairs.iter().map(|&(p, q)| koszul(&x, p, q)).collect();
    for i in 1..=rank {
        let mut col: [Polynomial; 4] = Default::default();
        match parity {
            Parity::Odd => {
                col[0] = Polynomial::sum(IndexSet::k_subsets(rank, 3).map(|s| {
                    let t = s.to_vec();
                    minor(&b, &[1, 2, 3], &t) * pfbar_word(&a, &[i, t[0], t[1], t[2]])
                }));
                for (c, [p, q]) in CYCLIC_PAIRS.into_iter().enumerate() {
                    let v = Polynomial::sum((1..=rank).map(|j| b.entry(c + 1, j) * &pfbar_word(&a, &[j, i])));
                    col[c + 1] = if p < q { v } else { -v };
                }
            }
            Parity::Even => {
                col[0] = pfbar_word(&a, &[i]);
                for (c, pair) in CYCLIC_PAIRS.iter().enumerate() {
                    col[c + 1] = Polynomial::sum(IndexSet::k_subsets(rank, 2).map(|s| {
                        let t = s.to_vec();
                        minor(&b, pair, &t) * pfbar_word(&a, &[t[0], i, t[1]])
                    }));
                }
            }
        }
        columns.push(col);
    }
    let d2 = PolyMatrix::from_fn(PolyRing, 4, n, |k, j| columns[j - 1][k - 1].clone());
    Ok(EquivariantComplex {
        m,
        parity,
        d3,
        d2,
        d1,
        grading: Grading::new(m, parity),
    })
}

/// `c_i_j -> t_{i+3, j+3}`, `u_k_i -> t_{k, i+3}`.
fn substitute_var(v: VariableId) -> VariableId {
    match v.kind() {
        VarKind::C => VariableId::tau(v.i() + 3, v.j() + 3),
        VarKind::U => VariableId::tau(v.i(), v.j() + 3),
        VarKind::Tau => v,
    }
}

/// The three differentials `(d1, d2, d3)` after the substitution into `t` variables.
pub fn substitute(c: &EquivariantComplex) -> (PolyMatrix, PolyMatrix, PolyMatrix) {
    let s = |m: &PolyMatrix| m.map(PolyRing, |p| p.rename(substitute_var));
    (s(&c.d1), s(&c.d2), s(&c.d3))
}

/// Relates the substituted equivariant complex to the zero-block resolution:
/// resolution basis vector `e_k` is `f1[k] * x_{f1_perm[k]}`, and `f_j`, `g_l`
/// are rescaled by `f2[j]`, `f3[l]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignTable {
    pub f1_perm: [usize; 4],
    pub f1: [i8; 4],
    pub f2: Vec<i8>,
    pub f3: Vec<i8>,
}

impl fmt::Display for SignTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let signs = |v: &[i8]| v.iter().map(|s| if *s > 0 { '+' } else { '-' }).collect::<String>();
        let perm: Vec<String> = self.f1_perm.iter().map(|p| format!("x{p}")).collect();
        write!(
            f,
            "e <- {} f1 {} f2 {} f3 {}",
            perm.join(","),
            signs(&self.f1),
            signs(&self.f2),
            signs(&self.f3)
        )
    }
}

fn f1_perm(parity: Parity) -> [usize; 4] {
    match parity {
        Parity::Odd => [2, 3, 4, 1],
        Parity::Even => [1, 4, 3, 2],
    }
}

/// The sign table in force for every `m`.
pub fn sign_table(m: usize, parity: Parity) -> SignTable {
    let n = matrix_size(m, parity);
    SignTable {
        f1_perm: f1_perm(parity),
        f1: match parity {
            Parity::Odd => [1, -1, 1, 1],
            Parity::Even => [-1, 1, 1, 1],
        },
        f2: vec![1; n],
        f3: vec![1; n - 3],
    }
}

fn sign_between(what: String, target: &Polynomial, source: &Polynomial) -> Result<i8, EquivariantError> {
    if target == source {
        Ok(1)
    } else if *target == -source {
        Ok(-1)
    } else {
        Err(EquivariantError::Mismatch {
            what,
            expected: target.clone(),
            found: source.clone(),
        })
    }
}

/// Recovers the sign table by comparing with the zero-block resolution.
pub fn derive_sign_table(c: &EquivariantComplex) -> Result<SignTable, EquivariantError> {
    let n = matrix_size(c.m, c.parity);
    let res = build(n, c.parity, Variant::ZeroBlock)?;
    let (d1, d2, d3) = substitute(c);
    let perm = f1_perm(c.parity);
    let mut f1 = [1i8; 4];
    for k in 1..=4 {
        f1[k - 1] = sign_between(format!("d1 entry {k}"), res.d1.entry(1, k), d1.entry(1, perm[k - 1]))?;
    }
    let mut f2 = vec![1i8; n];
    for j in 1..=n {
        if let Some(k) = (1..=4).find(|&k| !res.d2.entry(k, j).is_zero()) {
            let s = sign_between(format!("d2 entry ({k}, {j})"), res.d2.entry(k, j), d2.entry(perm[k - 1], j))?;
            f2[j - 1] = s * f1[k - 1];
        }
    }
    let mut f3 = vec![1i8; n - 3];
    for l in 1..=n - 3 {
        if let Some(j) = (1..=n).find(|&j| !res.d3.entry(j, l).is_zero()) {
            let s = sign_between(format!("d3 entry ({j}, {l})"), res.d3.entry(j, l), d3.entry(j, l))?;
            f3[l - 1] = s * f2[j - 1];
        }
    }
    let table = SignTable {
        f1_perm: perm,
        f1,
        f2,
        f3,
    };
    compare_with_resolution(c, &table)?;
    Ok(table)
}

fn signed(s: i8, p: &Polynomial) -> Polynomial {
    if s > 0 {
        p.clone()
    } else {
        -p
    }
}

/// Entrywise comparison, after substitution and the rescaling of `table`,
/// with the zero-block resolution; reports the first differing entry.
pub fn compare_with_resolution(c: &EquivariantComplex, table: &SignTable) -> Result<(), EquivariantError> {
    let n = matrix_size(c.m, c.parity);
    let res = build(n, c.parity, Variant::ZeroBlock)?;
    let (d1, d2, d3) = substitute(c);
    let p = table.f1_perm;
    for k in 1..=4 {
        let found = signed(table.f1[k - 1], d1.entry(1, p[k - 1]));
        expect_equal(format!("d1 entry {k}"), res.d1.entry(1, k), found)?;
        for j in 1..=n {
            let found = signed(table.f1[k - 1] * table.f2[j - 1], d2.entry(p[k - 1], j));
            expect_equal(format!("d2 entry ({k}, {j})"), res.d2.entry(k, j), found)?;
        }
    }
    for j in 1..=n {
        for l in 1..=n - 3 {
            let found = signed(table.f2[j - 1] * table.f3[l - 1], d3.entry(j, l));
            expect_equal(format!("d3 entry ({j}, {l})"), res.d3.entry(j, l), found)?;
        }
    }
    Ok(())
}

fn expect_equal(what: String, expected: &Polynomial, found: Polynomial) -> Result<(), EquivariantError> {
    if *expected == found {
        Ok(())
    } else {
        Err(EquivariantError::Mismatch {
            what,
            expected: expected.clone(),
            found,
        })
    }
}

/// Builds the complex, checks that it is a complex after substitution, and
/// compares it with the zero-block resolution under [`sign_table`].
pub fn substitution_check(m: usize, parity: Parity) -> Result<(), EquivariantError> {
    let c = equivariant_differentials(m, parity)?;
    let (d1, d2, d3) = substitute(&c);
    check_differentials(&d1, &d2, &d3)?;
    compare_with_resolution(&c, &sign_table(m, parity))
}

/// Every entry is bihomogeneous of the bidegree dictated by the twists
/// (zero where that bidegree has a negative component).
pub fn bidegree_check(c: &EquivariantComplex) -> Result<(), EquivariantError> {
    let g = &c.grading;
    let f0 = [(0, 0)];
    for (name, matrix, targets, sources) in [
        ("d1", &c.d1, &f0[..], &g.f1[..]),
        ("d2", &c.d2, &g.f1[..], &g.f2[..]),
        ("d3", &c.d3, &g.f2[..], &g.f3[..]),
    ] {
        for (row, col, p) in matrix.iter_entries() {
            let (s, t) = (sources[col - 1], targets[row - 1]);
            let expected = (s.0 - t.0, s.1 - t.1);
            let found = p.bidegree(class_by_kind);
            let ok = match found {
                Bidegree::Zero => true,
                Bidegree::Homogeneous(a, b) => (a as i64, b as i64) == expected,
                Bidegree::Inhomogeneous => false,
            };
            if !ok {
                return Err(EquivariantError::Bidegree {
                    matrix: name,
                    row,
                    col,
                    expected,
                    found,
                });
            }
        }
    }
    Ok(())
}

impl EquivariantComplex {
    /// The resolution JSON layout plus `m` and a `grading` block of twists
    /// `[-a, -b]` for each summand `A(-a, -b)`.
    pub fn to_json(&self) -> Value {
        let twists = |v: &[(i64, i64)]| v.iter().map(|&(a, b)| json!([-a, -b])).collect::<Vec<_>>();
        json!({
            "m": self.m,
            "n": matrix_size(self.m, self.parity),
            "parity": self.parity,
            "d3": self.d3.to_strings(),
            "d2": self.d2.to_strings(),
            "d1": self.d1.to_strings(),
            "grading": {
                "f0": [[0, 0]],
                "f1": twists(&self.grading.f1),
                "f2": twists(&self.grading.f2),
                "f3": twists(&self.grading.f3),
            },
        })
    }
}
