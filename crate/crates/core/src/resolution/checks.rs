use super::{alt, build, check_size, mismatch, ResolutionComplex, ResolutionError, Variant};
use crate::brill::{det_oracle, laplace_expansion};
use crate::matrix::PolyMatrix;
use crate::pfaffian::{generic_skew, zero_block_skew, SkewMatrix};
use crate::polyring::Polynomial;
use crate::ring::PolyRing;
use crate::{IndexSet, Parity};

fn t(i: usize, j: usize) -> Polynomial {
    Polynomial::tau(i, j)
}

fn pb(m: &SkewMatrix, xs: &[usize]) -> Polynomial {
    m.comp_pfaffian(xs.iter().copied().collect::<IndexSet>())
}

fn signed(k: i64, p: Polynomial) -> Polynomial {
    if k > 0 {
        p
    } else {
        -p
    }
}

fn matrices_equal(what: &str, a: &PolyMatrix, b: &PolyMatrix) -> Result<(), ResolutionError> {
    assert_eq!((a.rows(), a.cols()), (b.rows(), b.cols()), "{what}: shapes differ");
    for (i, j, x) in a.iter_entries() {
        mismatch(format!("{what} entry ({i}, {j})"), x.clone(), b.entry(i, j).clone())?;
    }
    Ok(())
}

/// The expansions showing that the generic and zero-block Pfaffians generate
/// the same ideal.
pub fn check_ideal_equality(n: usize, parity: Parity) -> Result<(), ResolutionError> {
    check_size(n, parity)?;
    let tm = generic_skew(n);
    let um = zero_block_skew(n).expect("size already checked");
    let (t_, u_) = (|xs: &[usize]| pb(&tm, xs), |xs: &[usize]| pb(&um, xs));
    match parity {
        Parity::Odd => {
            for (k, coeff) in [(1, t(2, 3)), (2, t(1, 3)), (3, t(1, 2))] {
                mismatch(
                    format!("pfbar_T({k}) = t*pfbar_U(123) + pfbar_U({k})"),
                    t_(&[k]),
                    &coeff * &u_(&[1, 2, 3]) + u_(&[k]),
                )?;
            }
            mismatch("pfbar_T(123) = pfbar_U(123)", t_(&[1, 2, 3]), u_(&[1, 2, 3]))?;
            for i in 3..=n {
                mismatch(format!("pfbar_T(12{i}) = pfbar_U(12{i})"), t_(&[1, 2, i]), u_(&[1, 2, i]))?;
            }
        }
        Parity::Even => {
            for pair in [[1, 2], [1, 3], [2, 3]] {
                mismatch(format!("pfbar_T({pair:?}) = pfbar_U({pair:?})"), t_(&pair), u_(&pair))?;
            }
            mismatch(
                "Pf(T) - t12 pfbar(12) + t13 pfbar(13) = t23 pfbar(23) + Pf(U)",
                tm.pfaffian() - &t(1, 2) * &t_(&[1, 2]) + &t(1, 3) * &t_(&[1, 3]),
                &t(2, 3) * &t_(&[2, 3]) + um.pfaffian(),
            )?;
            for i in 4..=n {
                mismatch(
                    format!("pfbar_T(1{i}) = t23 pfbar_T(123{i}) + pfbar_U(1{i})"),
                    t_(&[1, i]),
                    &t(2, 3) * &t_(&[1, 2, 3, i]) + u_(&[1, i]),
                )?;
            }
        }
    }
    Ok(())
}

/// The matrices relating the generic resolution to the zero-block one.
#[derive(Debug, Clone, PartialEq)]
pub struct ChangeOfBasis {
    pub s: PolyMatrix,
    pub s_inv: PolyMatrix,
}

pub fn change_of_basis(parity: Parity) -> ChangeOfBasis {
    let one = Polynomial::one;
    let zero = Polynomial::zero;
    let id = |i: usize, j: usize| if i == j { one() } else { zero() };
    let (s, s_inv) = match parity {
        // last row carries t23, -t13, t12
        Parity::Odd => {
            let row = [t(2, 3), -t(1, 3), t(1, 2)];
            let s = PolyMatrix::from_fn(PolyRing, 4, 4, |i, j| if i == 4 && j < 4 { row[j - 1].clone() } else { id(i, j) });
            let s_inv =
                PolyMatrix::from_fn(PolyRing, 4, 4, |i, j| if i == 4 && j < 4 { -row[j - 1].clone() } else { id(i, j) });
            (s, s_inv)
        }
        // first column carries -t12, t13, -t23
        Parity::Even => {
            let col = [-t(1, 2), t(1, 3), -t(2, 3)];
            let s = PolyMatrix::from_fn(PolyRing, 4, 4, |i, j| if j == 1 && i > 1 { col[i - 2].clone() } else { id(i, j) });
            let s_inv =
                PolyMatrix::from_fn(PolyRing, 4, 4, |i, j| if j == 1 && i > 1 { -col[i - 2].clone() } else { id(i, j) });
            (s, s_inv)
        }
    };
    ChangeOfBasis { s, s_inv }
}

/// `S S^{-1} = 1`, `d1^L = d1^F S`, `d2^L = S^{-1} d2^F`, `d3^L = d3^F`, where
/// `F` is the generic and `L` the zero-block resolution.
pub fn check_change_of_basis(n: usize, parity: Parity) -> Result<(), ResolutionError> {
    let f = build(n, parity, Variant::Generic)?;
    let l = build(n, parity, Variant::ZeroBlock)?;
    let ChangeOfBasis { s, s_inv } = change_of_basis(parity);
    let prod = |a: &PolyMatrix, b: &PolyMatrix| a.mul(b).expect("4x4 shapes");
    matrices_equal("S S^-1", &prod(&s, &s_inv), &PolyMatrix::identity(PolyRing, 4))?;
    matrices_equal("d1^L = d1^F S", &l.d1, &prod(&f.d1, &s))?;
    matrices_equal("d2^L = S^-1 d2^F", &l.d2, &prod(&s_inv, &f.d2))?;
    matrices_equal("d3^L = d3^F", &l.d3, &f.d3)
}

/// Expansions of the generators in terms of smaller complementary
/// Pfaffians. For odd `n` the two expansions hold modulo `pfbar(123)`; the
/// explicit multiple of `pfbar(123)` is checked.
pub fn check_regseq_expansions(n: usize, parity: Parity) -> Result<(), ResolutionError> {
    check_size(n, parity)?;
    let m = generic_skew(n);
    let p = |xs: &[usize]| pb(&m, xs);
    match parity {
        Parity::Odd => {
            for (k, other) in [(1, 2), (2, 1)] {
                let sum = Polynomial::sum((4..=n).map(|i| signed(alt(i - 1), &t(other, i) * &p(&[1, 2, i]))));
                mismatch(
                    format!("pfbar({k}) - sum (-1)^(i-1) t{other}i pfbar(12i) = t{other}3 pfbar(123)"),
                    p(&[k]) - sum,
                    &t(other, 3) * &p(&[1, 2, 3]),
                )?;
            }
        }
        Parity::Even => {
            for (pair, other) in [([1, 2], 3), ([1, 3], 2), ([2, 3], 1)] {
                let sum = Polynomial::sum((4..=n).map(|i| signed(alt(i), &t(other, i) * &p(&[1, 2, 3, i]))));
                mismatch(format!("pfbar({pair:?}) = sum (-1)^i t{other}i pfbar(123i)"), p(&pair), sum)?;
            }
        }
    }
    Ok(())
}

/// Each square of a generator is a principal minor of the matrix, and its
/// Laplace expansion along the columns in `{1,2,3}` writes it through the
/// maximal minors of `d3`.
pub fn check_square_minors(n: usize, parity: Parity) -> Result<(), ResolutionError> {
    let c = build(n, parity, Variant::Generic)?;
    let m = &c.matrix;
    let all = IndexSet::full(n);
    let principal: Vec<(Polynomial, IndexSet)> = match parity {
        Parity::Odd => vec![
            (pb(m, &[1]), all.without(1)),
            (pb(m, &[2]), all.without(2)),
            (pb(m, &[3]), all.without(3)),
            (pb(m, &[1, 2, 3]), IndexSet::from([1, 2, 3]).complement(n)),
        ],
        Parity::Even => vec![
            (m.pfaffian(), all),
            (pb(m, &[1, 2]), IndexSet::from([1, 2]).complement(n)),
            (pb(m, &[1, 3]), IndexSet::from([1, 3]).complement(n)),
            (pb(m, &[2, 3]), IndexSet::from([2, 3]).complement(n)),
        ],
    };
    for (g, p) in principal {
        let idx = p.to_vec();
        let sub = m.submatrix(&idx, &idx);
        let square = &g * &g;
        let det = det_oracle(&sub).expect("principal submatrix is square");
        mismatch(format!("square of generator = det on {p}"), square.clone(), det)?;
        // positions of the columns 1, 2, 3 inside the principal submatrix
        let head: Vec<usize> = (1..=idx.len()).filter(|&k| idx[k - 1] <= 3).collect();
        let expansion = laplace_expansion(&sub, &head, |rows| {
            let kept: Vec<usize> = idx
                .iter()
                .enumerate()
                .filter(|(k, _)| !rows.contains(&(k + 1)))
                .map(|(_, &r)| r)
                .collect();
            let cols: Vec<usize> = (1..=n - 3).collect();
            det_oracle(&c.d3.submatrix(&kept, &cols)).expect("square")
        });
        mismatch(format!("expansion through d3 minors on {p}"), square, expansion)?;
    }
    Ok(())
}

fn check_triple(x: [usize; 3], max: usize) -> Result<(), ResolutionError> {
    if x[0] >= 1 && x[0] < x[1] && x[1] < x[2] && x[2] <= max {
        Ok(())
    } else {
        Err(ResolutionError::BadTriple { triple: x, max })
    }
}

/// The maximal minor of `d3` on the rows outside `r`.
pub(crate) fn d3_minor(c: &ResolutionComplex, r: [usize; 3]) -> Polynomial {
    let rows: Vec<usize> = (1..=c.n).filter(|i| !r.contains(i)).collect();
    let cols: Vec<usize> = (1..=c.n - 3).collect();
    det_oracle(&c.d3.submatrix(&rows, &cols)).expect("square")
}

/// Sign `e` with `det d3[not r; all] * d1[not s] = e * det d2[s; r]`; `+1`
/// when both sides vanish.
pub fn check_minor_product(c: &ResolutionComplex, r: [usize; 3], s: [usize; 3]) -> Result<i8, ResolutionError> {
    check_triple(r, c.n)?;
    check_triple(s, 4)?;
    minor_product_sign(c, &d3_minor(c, r), r, s)
}

pub(crate) fn minor_product_sign(
    c: &ResolutionComplex,
    d3_minor: &Polynomial,
    r: [usize; 3],
    s: [usize; 3],
) -> Result<i8, ResolutionError> {
    let missing = (1..=4).find(|k| !s.contains(k)).expect("s has three of four values");
    let lhs = d3_minor * c.d1.entry(1, missing);
    let rhs = det_oracle(&c.d2.submatrix(&s, &r)).expect("3x3");
    if lhs == rhs {
        Ok(1)
    } else if lhs == -&rhs {
        Ok(-1)
    } else {
        Err(ResolutionError::MinorProduct { r, s, lhs, rhs })
    }
}

/// Signs for every pair of triples, with `r` in lexicographic order and the
/// four `s` triples `123, 124, 134, 234` for each.
pub fn minor_product_signs(c: &ResolutionComplex) -> Result<Vec<([usize; 3], [usize; 3], i8)>, ResolutionError> {
    let mut out = Vec::new();
    for r in IndexSet::k_subsets(c.n, 3) {
        let r = triple(r);
        let minor = d3_minor(c, r);
        for s in IndexSet::k_subsets(4, 3) {
            let s = triple(s);
            out.push((r, s, minor_product_sign(c, &minor, r, s)?));
        }
    }
    Ok(out)
}

pub(crate) fn triple(s: IndexSet) -> [usize; 3] {
    let v = s.to_vec();
    [v[0], v[1], v[2]]
}
