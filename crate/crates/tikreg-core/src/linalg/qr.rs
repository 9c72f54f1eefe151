//! Householder QR with a non-negative R diagonal.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Float;

use super::mat::{norm2, LinalgError, Mat};

/// Relative rank tolerance for the reduced QR factorization.
pub const QR_RANK_TOL: f64 = 1e-12;

/// Reduced QR factorization `M = Q R` for `M` with `rows ≥ cols`.
///
/// `Q` is `rows × cols` with orthonormal columns, `R` is `cols × cols` upper
/// triangular with non-negative diagonal (the sign convention that makes the
/// factorization unique, so downstream decompositions are deterministic).
///
/// Fails with [`LinalgError::RankDeficient`] when the smallest `|R[i,i]|`
/// falls below `1e-12 · ‖M‖_F`.
pub fn qr_reduced(m: &Mat) -> Result<(Mat, Mat), LinalgError> {
    let (rows, cols) = (m.rows(), m.cols());
    if rows < cols {
        return Err(LinalgError::DimensionMismatch);
    }
    let scale = m.frob_norm();

    let mut work = m.clone();
    let mut taus = vec![0.0; cols];
    for k in 0..cols {
        let sigma = norm2(&work.col(k)[k..]);
        if sigma == 0.0 {
            // Column already zero below and on the diagonal; no reflector.
            taus[k] = 0.0;
            continue;
        }
        let x0 = work[(k, k)];
        let alpha = if x0 >= 0.0 { -sigma } else { sigma };
        let v0 = x0 - alpha;
        for i in k + 1..rows {
            work[(i, k)] /= v0;
        }
        work[(k, k)] = alpha;
        taus[k] = (alpha - x0) / alpha;
        for j in k + 1..cols {
            let mut s = work[(k, j)];
            for i in k + 1..rows {
                s += work[(i, k)] * work[(i, j)];
            }
            s *= taus[k];
            work[(k, j)] -= s;
            for i in k + 1..rows {
                let w = work[(i, k)];
                work[(i, j)] -= s * w;
            }
        }
    }

    let mut r = Mat::zeros(cols, cols);
    for j in 0..cols {
        for i in 0..=j {
            r[(i, j)] = work[(i, j)];
        }
    }

    // Backward accumulation of the thin Q.
    let mut q = Mat::zeros(rows, cols);
    for j in 0..cols {
        q[(j, j)] = 1.0;
    }
    for k in (0..cols).rev() {
        if taus[k] == 0.0 {
            continue;
        }
        for j in k..cols {
            let mut s = q[(k, j)];
            for i in k + 1..rows {
                s += work[(i, k)] * q[(i, j)];
            }
            s *= taus[k];
            q[(k, j)] -= s;
            for i in k + 1..rows {
                let w = work[(i, k)];
                q[(i, j)] -= s * w;
            }
        }
    }

    // Fix signs so the R diagonal is non-negative.
    for j in 0..cols {
        if r[(j, j)] < 0.0 {
            for c in j..cols {
                r[(j, c)] = -r[(j, c)];
            }
            for i in 0..rows {
                q[(i, j)] = -q[(i, j)];
            }
        }
    }

    let min_diag = (0..cols).fold(f64::INFINITY, |acc, j| acc.min(r[(j, j)].abs()));
    if min_diag <= QR_RANK_TOL * scale {
        return Err(LinalgError::RankDeficient);
    }

    Ok((q, r))
}

/// Extend `basis` (orthonormal columns of length `dim`) with one more unit
/// column orthogonal to all existing ones, chosen deterministically from the
/// standard basis by twice-repeated Gram-Schmidt.
pub fn orthonormal_completion(basis: &[Vec<f64>], dim: usize) -> Vec<f64> {
    assert!(basis.len() < dim, "basis already spans the space");
    let mut best: Option<(f64, Vec<f64>)> = None;
    for cand in 0..dim {
        let mut v = vec![0.0; dim];
        v[cand] = 1.0;
        for _ in 0..2 {
            for col in basis {
                let c = super::mat::dot(col, &v);
                super::mat::axpy(-c, col, &mut v);
            }
        }
        let nrm = norm2(&v);
        if best.as_ref().map_or(true, |(n, _)| nrm > *n) {
            best = Some((nrm, v));
        }
        // Any residual norm this large is already safely independent.
        if nrm > 0.5 {
            break;
        }
    }
    let (nrm, mut v) = best.expect("dim > 0");
    assert!(nrm > 1e-8, "no independent direction found");
    for x in &mut v {
        *x /= nrm;
    }
    v
}
