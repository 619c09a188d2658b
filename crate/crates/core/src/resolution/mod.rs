//! The length-three resolutions of format `(1, 4, n, n-3)` built from the
//! Pfaffians of a skew-symmetric matrix, and checks of the identities that
//! make them resolutions.
//!
//! For odd `n` the ideal is generated by `-pfbar(1), pfbar(2), -pfbar(3),
//! pfbar(123)`; for even `n` by `Pf, pfbar(12), pfbar(13), pfbar(23)`. In
//! both cases `d3` is the matrix columns `4..n`. The zero-block variant uses
//! the matrix with its upper-left 3x3 block set to zero; it resolves the
//! same ideal.
//!
//! Bases are positional: `e_1..e_4` index the rows of `d2`, `f_1..f_n` its
//! columns (and the rows of `d3`), `g_1..g_{n-3}` the columns of `d3`.

mod checks;
mod products;
mod rank;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use checks::{
    change_of_basis, check_change_of_basis, check_ideal_equality, check_minor_product, check_regseq_expansions,
    check_square_minors, minor_product_signs, ChangeOfBasis,
};
pub use products::{check_dg_products, d3_of_product, product_table, ProductTable};
pub use rank::{check_column_independence, integer_rank, rank_mod_p, rank_vote, ranks_at, specialize_and_rank, Ranks};

use crate::matrix::PolyMatrix;
use crate::pfaffian::{generic_skew, zero_block_skew, SkewMatrix};
use crate::polyring::Polynomial;
use crate::ring::PolyRing;
use crate::{IndexSet, Parity};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    Generic,
    ZeroBlock,
}

impl Variant {
    pub const ALL: [Variant; 2] = [Variant::Generic, Variant::ZeroBlock];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Generic => "generic",
            Variant::ZeroBlock => "zero-block",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "generic" => Ok(Variant::Generic),
            "zero-block" => Ok(Variant::ZeroBlock),
            _ => Err(format!("unknown variant {s:?}, expected generic or zero-block")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Differential {
    D1,
    D2,
    D3,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ResolutionError {
    #[error("size {n} does not fit parity {parity} (need n >= {min} of that parity)")]
    Parity { n: usize, parity: Parity, min: usize },
    #[error("{product} has nonzero entry {value} at ({row}, {col})")]
    NotComplex {
        product: &'static str,
        row: usize,
        col: usize,
        value: Polynomial,
    },
    #[error("{what}: {lhs} != {rhs}")]
    Mismatch {
        what: String,
        lhs: Polynomial,
        rhs: Polynomial,
    },
    #[error("minors for r={r:?}, s={s:?} differ by more than a sign: {lhs} vs {rhs}")]
    MinorProduct {
        r: [usize; 3],
        s: [usize; 3],
        lhs: Polynomial,
        rhs: Polynomial,
    },
    #[error("invalid triple {triple:?}: need strictly increasing values in 1..={max}")]
    BadTriple { triple: [usize; 3], max: usize },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("prime {p} must exceed n^2 = {bound}")]
    PrimeTooSmall { p: u64, bound: u64 },
    #[error("columns of d3 are linearly dependent (integer rank {rank} < {cols})")]
    DependentColumns { rank: usize, cols: usize },
}

pub(crate) fn check_size(n: usize, parity: Parity) -> Result<(), ResolutionError> {
    if Parity::of(n) != parity || n < parity.min_size() {
        return Err(ResolutionError::Parity {
            n,
            parity,
            min: parity.min_size(),
        });
    }
    Ok(())
}

pub(crate) fn mismatch(what: impl Into<String>, lhs: Polynomial, rhs: Polynomial) -> Result<(), ResolutionError> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(ResolutionError::Mismatch {
            what: what.into(),
            lhs,
            rhs,
        })
    }
}

pub(crate) fn alt(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A complex `0 -> R^{n-3} -> R^n -> R^4 -> R`.
#[derive(Debug, Clone, PartialEq)]
pub struct ResolutionComplex {
    pub n: usize,
    pub parity: Parity,
    pub variant: Variant,
    pub d3: PolyMatrix,
    pub d2: PolyMatrix,
    pub d1: PolyMatrix,
    pub matrix: SkewMatrix,
}

/// Builds the resolution of the given parity and variant for size `n`.
pub fn build(n: usize, parity: Parity, variant: Variant) -> Result<ResolutionComplex, ResolutionError> {
    check_size(n, parity)?;
    let m = match variant {
        Variant::Generic => generic_skew(n),
        Variant::ZeroBlock => zero_block_skew(n).expect("size already checked"),
    };
    Ok(from_matrix(m, parity, variant))
}

/// Builds the differentials from an arbitrary skew matrix; `variant` is
/// recorded as given.
pub fn from_matrix(m: SkewMatrix, parity: Parity, variant: Variant) -> ResolutionComplex {
    let n = m.n();
    let pb = |xs: &[usize]| m.comp_pfaffian(xs.iter().copied().collect::<IndexSet>());
    let signed = |k: i64, p: Polynomial| if k > 0 { p } else { -p };
    let rows: Vec<usize> = (1..=n).collect();
    let cols: Vec<usize> = (4..=n).collect();
    let d3 = m.submatrix(&rows, &cols);
    let (d2, d1) = match parity {
        Parity::Odd => {
            let d2 = PolyMatrix::from_fn(PolyRing, 4, n, |i, j| {
                if i == 4 {
                    return signed(alt(j - 1), pb(&[j]));
                }
                if j <= 3 {
                    return if i == j { pb(&[1, 2, 3]) } else { Polynomial::zero() };
                }
                let pair = match i {
                    1 => [2, 3],
                    2 => [1, 3],
                    _ => [1, 2],
                };
                signed(alt(j - 1), pb(&[pair[0], pair[1], j]))
            });
            let d1 = PolyMatrix::from_rows(PolyRing, vec![vec![-pb(&[1]), pb(&[2]), -pb(&[3]), pb(&[1, 2, 3])]]);
            (d2, d1)
        }
        Parity::Even => {
            let d2 = PolyMatrix::from_fn(PolyRing, 4, n, |i, j| {
                if j >= 4 {
                    return match i {
                        1 => signed(alt(j - 1), pb(&[1, 2, 3, j])),
                        2 => signed(alt(j), pb(&[3, j])),
                        3 => signed(alt(j - 1), pb(&[2, j])),
                        _ => signed(alt(j), pb(&[1, j])),
                    };
                }
                match (i, j) {
                    (2, 1) => pb(&[1, 3]),
                    (2, 2) => -pb(&[2, 3]),
                    (3, 1) => -pb(&[1, 2]),
                    (3, 3) => pb(&[2, 3]),
                    (4, 2) => pb(&[1, 2]),
                    (4, 3) => -pb(&[1, 3]),
                    _ => Polynomial::zero(),
                }
            });
            let d1 = PolyMatrix::from_rows(PolyRing, vec![vec![m.pfaffian(), pb(&[1, 2]), pb(&[1, 3]), pb(&[2, 3])]]);
            (d2, d1)
        }
    };
    ResolutionComplex {
        n,
        parity,
        variant,
        d3,
        d2,
        d1,
        matrix: m,
    }
}

impl ResolutionComplex {
    pub fn differential(&self, d: Differential) -> &PolyMatrix {
        match d {
            Differential::D1 => &self.d1,
            Differential::D2 => &self.d2,
            Differential::D3 => &self.d3,
        }
    }

    /// Replaces one entry of a differential.
    pub fn set_entry(&mut self, d: Differential, i: usize, j: usize, value: Polynomial) {
        match d {
            Differential::D1 => self.d1.set(i, j, value),
            Differential::D2 => self.d2.set(i, j, value),
            Differential::D3 => self.d3.set(i, j, value),
        }
    }

    /// The generators of the ideal, i.e. the entries of `d1`.
    pub fn generators(&self) -> Vec<Polynomial> {
        self.d1.row(1).to_vec()
    }

    /// JSON object with the three differentials as canonical strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "parity": self.parity,
            "variant": self.variant,
            "d3": self.d3.to_strings(),
            "d2": self.d2.to_strings(),
            "d1": self.d1.to_strings(),
        })
    }

    pub fn to_latex(&self) -> String {
        format!(
            "\\partial_3 = {}\n\n\\partial_2 = {}\n\n\\partial_1 = {}\n",
            self.d3.to_latex(),
            self.d2.to_latex(),
            self.d1.to_latex()
        )
    }
}

impl fmt::Display for ResolutionComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n = {}, {}, {}", self.n, self.parity, self.variant)?;
        writeln!(f, "d3 ({}x{}):", self.d3.rows(), self.d3.cols())?;
        write!(f, "{}", self.d3)?;
        writeln!(f, "d2 ({}x{}):", self.d2.rows(), self.d2.cols())?;
        write!(f, "{}", self.d2)?;
        writeln!(f, "d1 ({}x{}):", self.d1.rows(), self.d1.cols())?;
        write!(f, "{}", self.d1)
    }
}

/// Checks `d1 d2 = 0` and `d2 d3 = 0`, reporting the first nonzero entry.
pub fn check_complex(c: &ResolutionComplex) -> Result<(), ResolutionError> {
    check_differentials(&c.d1, &c.d2, &c.d3)
}

/// [`check_complex`] for bare matrices; shapes must compose.
pub fn check_differentials(d1: &PolyMatrix, d2: &PolyMatrix, d3: &PolyMatrix) -> Result<(), ResolutionError> {
    for (product, a, b) in [("d1*d2", d1, d2), ("d2*d3", d2, d3)] {
        let p = a.mul(b).expect("differential shapes compose");
        let defect = p.iter_entries().find(|(_, _, e)| !e.is_zero()).map(|(row, col, e)| (row, col, e.clone()));
        if let Some((row, col, value)) = defect {
            return Err(ResolutionError::NotComplex { product, row, col, value });
        }
    }
    Ok(())
}
