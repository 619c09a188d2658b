//! Dense rectangular matrices over a [`Ring`].

use std::fmt;

use crate::polyring::Polynomial;
use crate::ring::{PolyRing, Ring};

/// A dense `rows x cols` matrix, stored row-major, indexed from 1.
#[derive(Clone, PartialEq)]
pub struct Matrix<R: Ring = PolyRing> {
    ring: R,
    rows: usize,
    cols: usize,
    entries: Vec<R::Elem>,
}

pub type PolyMatrix = Matrix<PolyRing>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot multiply a {left_rows}x{left_cols} matrix by a {right_rows}x{right_cols} matrix")]
pub struct ShapeError {
    pub left_rows: usize,
    pub left_cols: usize,
    pub right_rows: usize,
    pub right_cols: usize,
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(ring: R, rows: usize, cols: usize) -> Self {
        let entries = vec![ring.zero(); rows * cols];
        Matrix { ring, rows, cols, entries }
    }

    /// Builds the matrix from `f(i, j)` for `1 <= i <= rows`, `1 <= j <= cols`.
    pub fn from_fn(ring: R, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R::Elem) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                entries.push(f(i, j));
            }
        }
        Matrix { ring, rows, cols, entries }
    }

    /// Builds the matrix from its rows; panics on ragged input.
    pub fn from_rows(ring: R, rows: Vec<Vec<R::Elem>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let n = rows.len();
        Matrix {
            ring,
            rows: n,
            cols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn identity(ring: R, n: usize) -> Self {
        let (one, zero) = (ring.one(), ring.zero());
        Matrix::from_fn(ring, n, n, |i, j| if i == j { one.clone() } else { zero.clone() })
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &R::Elem {
        assert!((1..=self.rows).contains(&i) && (1..=self.cols).contains(&j), "entry ({i}, {j}) out of range");
        &self.entries[(i - 1) * self.cols + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: R::Elem) {
        assert!((1..=self.rows).contains(&i) && (1..=self.cols).contains(&j), "entry ({i}, {j}) out of range");
        self.entries[(i - 1) * self.cols + (j - 1)] = value;
    }

    pub fn row(&self, i: usize) -> &[R::Elem] {
        assert!((1..=self.rows).contains(&i));
        &self.entries[(i - 1) * self.cols..i * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<R::Elem> {
        (1..=self.rows).map(|i| self.entry(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.ring.is_zero(e))
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.ring.clone(), self.cols, self.rows, |i, j| self.entry(j, i).clone())
    }

    /// The submatrix on the given rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(self.ring.clone(), rows.len(), cols.len(), |a, b| {
            self.entry(rows[a - 1], cols[b - 1]).clone()
        })
    }

    pub fn map<S: Ring>(&self, ring: S, f: impl Fn(&R::Elem) -> S::Elem) -> Matrix<S> {
        Matrix {
            ring,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(self.ring.clone(), |e| self.ring.neg(e))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ShapeError> {
        if self.cols != other.rows {
            return Err(ShapeError {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        let r = &self.ring;
        Ok(Matrix::from_fn(r.clone(), self.rows, other.cols, |i, j| {
            r.sum((1..=self.cols).filter_map(|k| {
                let (a, b) = (self.entry(i, k), other.entry(k, j));
                (!r.is_zero(a) && !r.is_zero(b)).then(|| r.mul(a, b))
            }))
        }))
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "column counts differ");
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Matrix {
            ring: self.ring.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "row counts differ");
        Matrix::from_fn(self.ring.clone(), self.rows, self.cols + other.cols, |i, j| {
            if j <= self.cols {
                self.entry(i, j).clone()
            } else {
                other.entry(i, j - self.cols).clone()
            }
        })
    }

    pub fn iter_entries(&self) -> impl Iterator<Item = (usize, usize, &R::Elem)> {
        self.entries
            .iter()
            .enumerate()
            .map(move |(k, e)| (k / self.cols + 1, k % self.cols + 1, e))
    }
}

impl PolyMatrix {
    /// Entries as canonical strings, row by row.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (1..=self.rows).map(|i| self.row(i).iter().map(Polynomial::to_string).collect()).collect()
    }

    /// A LaTeX `pmatrix`.
    pub fn to_latex(&self) -> String {
        let mut out = String::from("\\begin{pmatrix}\n");
        for i in 1..=self.rows {
            let row: Vec<String> = self.row(i).iter().map(Polynomial::to_latex).collect();
            out.push_str(&row.join(" & "));
            out.push_str(if i < self.rows { " \\\\\n" } else { "\n" });
        }
        out.push_str("\\end{pmatrix}");
        out
    }
}

impl<R: Ring> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matrix")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("entries", &self.entries)
            .finish()
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.rows {
            let row: Vec<String> = self.row(i).iter().map(Polynomial::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
