//! Dense exact linear algebra over a finite field.
//!
//! Everything the Grassmannian layer needs: reduced row echelon form with the
//! transforming matrix, rank, minors with sign tracking, inversion, and the
//! sum/intersection dimension pair of two row spaces. Matrices are immutable
//! values; index tuples handed to [`MatrixGF::minor`] are 1-based, matching
//! the Pluecker index convention used throughout the crate.

use std::fmt;

use crate::gf::{Field, FieldElement, FieldError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixError {
    FieldMismatch,
    DimensionMismatch { left: (usize, usize), right: (usize, usize) },
    NotSquare { rows: usize, cols: usize },
    Singular,
    IndexOutOfRange { index: usize, bound: usize },
    TupleNotAscending,
    TupleSizeMismatch { rows: usize, cols: usize },
    BadEntry(FieldError),
    ShapeMismatch { expected: usize, got: usize },
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixError::FieldMismatch => write!(f, "matrices live over different fields"),
            MatrixError::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {}x{} vs {}x{}", left.0, left.1, right.0, right.1)
            }
            MatrixError::NotSquare { rows, cols } => {
                write!(f, "matrix is {rows}x{cols}, expected square")
            }
            MatrixError::Singular => write!(f, "matrix is singular"),
            MatrixError::IndexOutOfRange { index, bound } => {
                write!(f, "index {index} out of range 1..={bound}")
            }
            MatrixError::TupleNotAscending => write!(f, "index tuple is not strictly ascending"),
            MatrixError::TupleSizeMismatch { rows, cols } => {
                write!(f, "row tuple has {rows} entries but column tuple has {cols}")
            }
            MatrixError::BadEntry(e) => write!(f, "bad entry: {e}"),
            MatrixError::ShapeMismatch { expected, got } => {
                write!(f, "expected {expected} entries, got {got}")
            }
        }
    }
}

impl std::error::Error for MatrixError {}

impl From<FieldError> for MatrixError {
    fn from(e: FieldError) -> Self {
        MatrixError::BadEntry(e)
    }
}

/// Dense matrix over a finite field, entries in row-major order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatrixGF {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<FieldElement>,
}

/// Output of [`MatrixGF::rref`]: `r = transform * m`, `transform` invertible,
/// `pivots` the 1-based pivot column indices in ascending order.
#[derive(Clone, Debug)]
pub struct Rref {
    pub r: MatrixGF,
    pub pivots: Vec<usize>,
    pub transform: MatrixGF,
}

impl fmt::Debug for MatrixGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatrixGF {}x{} over {}", self.rows, self.cols, self.field.spec_string())?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl MatrixGF {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        MatrixGF { field, rows, cols, entries: vec![FieldElement::ZERO; rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = MatrixGF::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, FieldElement::ONE);
        }
        m
    }

    /// Builds a matrix from integer codes in row-major order.
    pub fn from_codes(
        field: Field,
        rows: usize,
        cols: usize,
        codes: &[u64],
    ) -> Result<Self, MatrixError> {
        if codes.len() != rows * cols {
            return Err(MatrixError::ShapeMismatch { expected: rows * cols, got: codes.len() });
        }
        let entries = codes
            .iter()
            .map(|&c| field.element(c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MatrixGF { field, rows, cols, entries })
    }

    /// Builds a matrix from rows of integer codes.
    pub fn from_rows(field: Field, rows: &[Vec<u64>]) -> Result<Self, MatrixError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(MatrixError::ShapeMismatch { expected: c, got: 0 });
        }
        let flat: Vec<u64> = rows.iter().flatten().copied().collect();
        MatrixGF::from_codes(field, r, c, &flat)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at 0-based position (r, c).
    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        debug_assert!(r < self.rows && c < self.cols);
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        debug_assert!(r < self.rows && c < self.cols);
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    self.get(r, c) == if r == c { FieldElement::ONE } else { FieldElement::ZERO }
                })
            })
    }

    pub fn mul(&self, other: &MatrixGF) -> Result<MatrixGF, MatrixError> {
        if self.field != other.field {
            return Err(MatrixError::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(MatrixError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let f = &self.field;
        let mut out = MatrixGF::zeros(self.field.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = f.mul(a, other.get(l, j));
                    out.set(i, j, f.add(out.get(i, j), add));
                }
            }
        }
        Ok(out)
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &MatrixGF) -> Result<MatrixGF, MatrixError> {
        if self.field != other.field {
            return Err(MatrixError::FieldMismatch);
        }
        if self.cols != other.cols {
            return Err(MatrixError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(MatrixGF { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, entries })
    }

    /// Reduced row echelon form via Gauss-Jordan elimination, returning the
    /// canonical form, the 1-based pivot columns and the invertible transform
    /// with `r = transform * self`.
    pub fn rref(&self) -> Rref {
        let f = self.field.clone();
        let mut r = self.clone();
        let mut t = MatrixGF::identity(f.clone(), self.rows);
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        for col in 0..self.cols {
            // Find a pivot at or below `lead`.
            let Some(pr) = (lead..self.rows).find(|&i| !r.get(i, col).is_zero()) else {
                continue;
            };
            if pr != lead {
                r.swap_rows(pr, lead);
                t.swap_rows(pr, lead);
            }
            let inv = f.inv(r.get(lead, col)).expect("pivot is nonzero");
            r.scale_row(lead, inv);
            t.scale_row(lead, inv);
            for i in 0..self.rows {
                if i != lead {
                    let factor = r.get(i, col);
                    if !factor.is_zero() {
                        r.add_scaled_row(lead, i, f.neg(factor));
                        t.add_scaled_row(lead, i, f.neg(factor));
                    }
                }
            }
            pivots.push(col + 1);
            lead += 1;
            if lead == self.rows {
                break;
            }
        }
        Rref { r, pivots, transform: t }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, by: FieldElement) {
        let f = self.field.clone();
        for c in 0..self.cols {
            let v = self.get(r, c);
            self.set(r, c, f.mul(v, by));
        }
    }

    /// row[to] += factor * row[from]
    fn add_scaled_row(&mut self, from: usize, to: usize, factor: FieldElement) {
        let f = self.field.clone();
        for c in 0..self.cols {
            let v = f.add(self.get(to, c), f.mul(factor, self.get(from, c)));
            self.set(to, c, v);
        }
    }

    fn check_tuple(&self, tuple: &[usize], bound: usize) -> Result<(), MatrixError> {
        let mut prev = 0usize;
        for &i in tuple {
            if i == 0 || i > bound {
                return Err(MatrixError::IndexOutOfRange { index: i, bound });
            }
            if i <= prev {
                return Err(MatrixError::TupleNotAscending);
            }
            prev = i;
        }
        Ok(())
    }

    /// Submatrix selected by 1-based ascending row/column index tuples.
    pub fn submatrix(&self, rowset: &[usize], colset: &[usize]) -> Result<MatrixGF, MatrixError> {
        self.check_tuple(rowset, self.rows)?;
        self.check_tuple(colset, self.cols)?;
        let mut out = MatrixGF::zeros(self.field.clone(), rowset.len(), colset.len());
        for (i, &r) in rowset.iter().enumerate() {
            for (j, &c) in colset.iter().enumerate() {
                out.set(i, j, self.get(r - 1, c - 1));
            }
        }
        Ok(out)
    }

    /// Determinant of the square submatrix on the given 1-based ascending
    /// index tuples, by Gaussian elimination with the row-swap sign tracked
    /// (the sign matters in odd characteristic).
    pub fn minor(&self, rowset: &[usize], colset: &[usize]) -> Result<FieldElement, MatrixError> {
        if rowset.len() != colset.len() {
            return Err(MatrixError::TupleSizeMismatch { rows: rowset.len(), cols: colset.len() });
        }
        let sub = self.submatrix(rowset, colset)?;
        Ok(sub.determinant())
    }

    /// Determinant of a square matrix (panics on non-square input).
    pub fn determinant(&self) -> FieldElement {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let f = self.field.clone();
        let n = self.rows;
        if n == 0 {
            return FieldElement::ONE;
        }
        let mut m = self.clone();
        let mut det = FieldElement::ONE;
        let mut negate = false;
        for col in 0..n {
            let Some(pr) = (col..n).find(|&i| !m.get(i, col).is_zero()) else {
                return FieldElement::ZERO;
            };
            if pr != col {
                m.swap_rows(pr, col);
                negate = !negate;
            }
            let pivot = m.get(col, col);
            det = f.mul(det, pivot);
            let inv = f.inv(pivot).expect("pivot is nonzero");
            for i in col + 1..n {
                let factor = f.mul(m.get(i, col), inv);
                if !factor.is_zero() {
                    m.add_scaled_row(col, i, f.neg(factor));
                }
            }
        }
        if negate {
            det = f.neg(det);
        }
        det
    }

    /// Inverse of a square full-rank matrix.
    pub fn inverse(&self) -> Result<MatrixGF, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let rr = self.rref();
        if rr.pivots.len() != self.rows {
            return Err(MatrixError::Singular);
        }
        Ok(rr.transform)
    }
}

/// Dimension of the sum and of the intersection of the row spaces of `u`
/// and `v` (matrices over the same field with the same column count).
pub fn stack_dims(u: &MatrixGF, v: &MatrixGF) -> Result<(usize, usize), MatrixError> {
    let stacked = u.vstack(v)?;
    let dim_sum = stacked.rank();
    let dim_intersection = u.rank() + v.rank() - dim_sum;
    Ok((dim_sum, dim_intersection))
}
