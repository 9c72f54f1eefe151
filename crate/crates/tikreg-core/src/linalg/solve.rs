//! Triangular, least-squares and positive-definite solves.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Float;

use super::mat::{LinalgError, Mat};
use super::qr::qr_reduced;

/// Back substitution for an upper triangular system `R x = b`.
///
/// Rejects diagonals with an entry below `1e-14 · max|diag|`.
pub fn solve_upper_triangular(r: &Mat, b: &[f64]) -> Result<Vec<f64>, LinalgError> {
    let n = r.rows();
    if r.cols() != n || b.len() != n {
        return Err(LinalgError::DimensionMismatch);
    }
    let max_diag = (0..n).fold(0.0f64, |m, i| m.max(r[(i, i)].abs()));
    if max_diag == 0.0 {
        return Err(LinalgError::SingularSystem);
    }
    let tol = 1e-14 * max_diag;
    let mut x = b.to_vec();
    for i in (0..n).rev() {
        let d = r[(i, i)];
        if d.abs() < tol {
            return Err(LinalgError::SingularSystem);
        }
        let mut s = x[i];
        for j in i + 1..n {
            s -= r[(i, j)] * x[j];
        }
        x[i] = s / d;
    }
    Ok(x)
}

/// Linear least squares `min ‖M x − b‖₂` through the reduced QR of `M`.
pub fn solve_lls(m: &Mat, b: &[f64]) -> Result<Vec<f64>, LinalgError> {
    if b.len() != m.rows() {
        return Err(LinalgError::DimensionMismatch);
    }
    let (q, r) = qr_reduced(m)?;
    let y = q.tr_matvec(b);
    solve_upper_triangular(&r, &y)
}

/// Cholesky factor `L` (lower triangular) of a symmetric positive definite
/// matrix, `A = L Lᵀ`.
pub fn cholesky(a: &Mat) -> Result<Mat, LinalgError> {
    let n = a.rows();
    if a.cols() != n {
        return Err(LinalgError::DimensionMismatch);
    }
    let mut l = Mat::zeros(n, n);
    for j in 0..n {
        let mut d = a[(j, j)];
        for k in 0..j {
            d -= l[(j, k)] * l[(j, k)];
        }
        if d <= 0.0 {
            return Err(LinalgError::SingularSystem);
        }
        let dj = d.sqrt();
        l[(j, j)] = dj;
        for i in j + 1..n {
            let mut s = a[(i, j)];
            for k in 0..j {
                s -= l[(i, k)] * l[(j, k)];
            }
            l[(i, j)] = s / dj;
        }
    }
    Ok(l)
}

/// Solve `L Lᵀ x = b` given the Cholesky factor `L`.
pub fn cholesky_solve(l: &Mat, b: &[f64]) -> Vec<f64> {
    let n = l.rows();
    debug_assert_eq!(b.len(), n);
    let mut y = b.to_vec();
    for i in 0..n {
        let mut s = y[i];
        for j in 0..i {
            s -= l[(i, j)] * y[j];
        }
        y[i] = s / l[(i, i)];
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut s = y[i];
        for j in i + 1..n {
            s -= l[(j, i)] * x[j];
        }
        x[i] = s / l[(i, i)];
    }
    x
}

/// Solve a symmetric positive definite system `A x = b`.
pub fn solve_spd(a: &Mat, b: &[f64]) -> Result<Vec<f64>, LinalgError> {
    if b.len() != a.rows() {
        return Err(LinalgError::DimensionMismatch);
    }
    let l = cholesky(a)?;
    Ok(cholesky_solve(&l, b))
}
