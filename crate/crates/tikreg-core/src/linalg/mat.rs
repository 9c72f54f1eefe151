//! Column-major dense matrices and slice-based vector helpers.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use num_traits::Float;

/// Errors raised by dense factorizations and solves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinalgError {
    /// A factorization detected rank below the requested tolerance.
    RankDeficient,
    /// An iterative factorization hit its iteration cap.
    ConvergenceFailure,
    /// A triangular or positive-definite solve met a negligible pivot.
    SingularSystem,
    /// Operand shapes are incompatible.
    DimensionMismatch,
    /// A non-finite entry was passed in.
    NonFinite,
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            LinalgError::RankDeficient => "matrix is rank deficient below tolerance",
            LinalgError::ConvergenceFailure => "iteration cap reached before convergence",
            LinalgError::SingularSystem => "solve encountered a negligible pivot",
            LinalgError::DimensionMismatch => "operand dimensions are incompatible",
            LinalgError::NonFinite => "non-finite entry in input",
        };
        f.write_str(msg)
    }
}

impl core::error::Error for LinalgError {}

/// Dense real matrix, column-major storage.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Mat {
    /// Build from column-major data. Rejects empty shapes, length mismatches
    /// and non-finite entries.
    pub fn from_col_major(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self, LinalgError> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch);
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(LinalgError::NonFinite);
        }
        Ok(Self { rows, cols, data })
    }

    /// Build from row-major data (convenient for literals in tests).
    pub fn from_rows(rows: usize, cols: usize, entries: &[f64]) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch);
        }
        let mut data = vec![0.0; rows * cols];
        for i in 0..rows {
            for j in 0..cols {
                data[j * rows + i] = entries[i * cols + j];
            }
        }
        Self::from_col_major(rows, cols, data)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "empty matrix shape");
        Self { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for j in 0..cols {
            for i in 0..rows {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn col(&self, j: usize) -> &[f64] {
        &self.data[j * self.rows..(j + 1) * self.rows]
    }

    #[inline]
    pub fn col_mut(&mut self, j: usize) -> &mut [f64] {
        &mut self.data[j * self.rows..(j + 1) * self.rows]
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for j in 0..self.cols {
            for i in 0..self.rows {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    /// `y = M x`.
    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.cols, "matvec dimension mismatch");
        let mut y = vec![0.0; self.rows];
        for j in 0..self.cols {
            axpy(x[j], self.col(j), &mut y);
        }
        y
    }

    /// `y = Mᵀ x`.
    pub fn tr_matvec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.rows, "tr_matvec dimension mismatch");
        let mut y = vec![0.0; self.cols];
        for j in 0..self.cols {
            y[j] = dot(self.col(j), x);
        }
        y
    }

    pub fn matmul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "matmul dimension mismatch");
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for j in 0..rhs.cols {
            let rcol = rhs.col(j);
            let ocol = out.col_mut(j);
            for k in 0..self.cols {
                axpy(rcol[k], self.col(k), ocol);
            }
        }
        out
    }

    pub fn frob_norm(&self) -> f64 {
        norm2(&self.data)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Columns `lo..hi` as a new matrix.
    pub fn columns(&self, lo: usize, hi: usize) -> Mat {
        assert!(lo < hi && hi <= self.cols, "column range out of bounds");
        Mat {
            rows: self.rows,
            cols: hi - lo,
            data: self.data[lo * self.rows..hi * self.rows].to_vec(),
        }
    }

    /// New matrix whose `k`-th column is column `idx[k]` of `self`.
    pub fn select_columns(&self, idx: &[usize]) -> Mat {
        assert!(!idx.is_empty());
        let mut out = Mat::zeros(self.rows, idx.len());
        for (k, &j) in idx.iter().enumerate() {
            out.col_mut(k).copy_from_slice(self.col(j));
        }
        out
    }

    pub fn swap_columns(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let rows = self.rows;
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let (left, right) = self.data.split_at_mut(hi * rows);
        left[lo * rows..(lo + 1) * rows].swap_with_slice(&mut right[..rows]);
    }

    /// Vertical stack `[top; bottom]`.
    pub fn vstack(top: &Mat, bottom: &Mat) -> Mat {
        assert_eq!(top.cols, bottom.cols, "vstack needs equal column counts");
        let rows = top.rows + bottom.rows;
        let mut out = Mat::zeros(rows, top.cols);
        for j in 0..top.cols {
            out.col_mut(j)[..top.rows].copy_from_slice(top.col(j));
            out.col_mut(j)[top.rows..].copy_from_slice(bottom.col(j));
        }
        out
    }

    pub fn scaled(&self, alpha: f64) -> Mat {
        let mut out = self.clone();
        for v in &mut out.data {
            *v *= alpha;
        }
        out
    }

    pub fn sub(&self, rhs: &Mat) -> Mat {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        let mut out = self.clone();
        for (o, r) in out.data.iter_mut().zip(&rhs.data) {
            *o -= r;
        }
        out
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = f64;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[j * self.rows + i]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[j * self.rows + i]
    }
}

#[inline]
pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let mut s = 0.0;
    for i in 0..a.len() {
        s += a[i] * b[i];
    }
    s
}

#[inline]
pub fn norm2_sq(a: &[f64]) -> f64 {
    dot(a, a)
}

#[inline]
pub fn norm2(a: &[f64]) -> f64 {
    norm2_sq(a).sqrt()
}

/// `y += alpha * x`.
#[inline]
pub fn axpy(alpha: f64, x: &[f64], y: &mut [f64]) {
    debug_assert_eq!(x.len(), y.len());
    if alpha == 0.0 {
        return;
    }
    for i in 0..x.len() {
        y[i] += alpha * x[i];
    }
}

/// `a - b` elementwise.
pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Relative difference `‖a − b‖ / max(‖b‖, floor)`.
pub fn rel_diff(a: &[f64], b: &[f64]) -> f64 {
    let d = norm2(&sub(a, b));
    d / norm2(b).max(1e-300)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construct_rejects_bad_input() {
        assert_eq!(Mat::from_col_major(2, 2, vec![1.0; 3]), Err(LinalgError::DimensionMismatch));
        assert_eq!(
            Mat::from_col_major(1, 2, vec![1.0, f64::NAN]),
            Err(LinalgError::NonFinite)
        );
        assert_eq!(Mat::from_col_major(0, 2, vec![]), Err(LinalgError::DimensionMismatch));
    }

    #[test]
    fn row_major_layout_matches_indexing() {
        let m = Mat::from_rows(2, 3, &[1.0, 2.0, 3.0, 4.0, 5.0, 6.0]).unwrap();
        assert_eq!(m[(0, 1)], 2.0);
        assert_eq!(m[(1, 2)], 6.0);
        assert_eq!(m.col(0), &[1.0, 4.0]);
    }

    #[test]
    fn matvec_and_transpose_agree() {
        let m = Mat::from_rows(3, 2, &[1.0, 2.0, 0.0, -1.0, 3.0, 5.0]).unwrap();
        let x = [2.0, 1.0];
        let y = m.matvec(&x);
        assert_eq!(y, vec![4.0, -1.0, 11.0]);
        let yt = m.transpose().tr_matvec(&x);
        // (Mᵀ)ᵀ x = M x
        assert_eq!(yt, y);
    }

    #[test]
    fn vstack_and_columns() {
        let a = Mat::identity(2);
        let b = Mat::from_rows(1, 2, &[3.0, 4.0]).unwrap();
        let s = Mat::vstack(&a, &b);
        assert_eq!(s.rows(), 3);
        assert_eq!(s.col(1), &[0.0, 1.0, 4.0]);
        let c = s.columns(1, 2);
        assert_eq!(c.cols(), 1);
        assert_eq!(c.col(0), &[0.0, 1.0, 4.0]);
    }
}
