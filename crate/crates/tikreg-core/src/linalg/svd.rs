//! Thin singular value decomposition.
//!
//! Householder bidiagonalization followed by Golub-Kahan implicit-shift QR
//! sweeps on the bidiagonal, with rotations accumulated into thin `U` and
//! square `V`. Singular values are returned non-negative and descending;
//! the iteration cap is `100 · min(rows, cols)` sweeps.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Float;

use super::mat::{norm2, LinalgError, Mat};

/// Thin SVD `M = U diag(sigma) Vᵀ` with `U: m×n`, `V: n×n`.
#[derive(Clone, Debug)]
pub struct SvdThin {
    pub u: Mat,
    pub sigma: Vec<f64>,
    pub v: Mat,
}

/// Givens pair `(c, s)` with `c·a + s·b = r ≥ 0` and `c·b − s·a = 0`.
#[inline]
fn givens(a: f64, b: f64) -> (f64, f64) {
    let r = a.hypot(b);
    if r == 0.0 {
        (1.0, 0.0)
    } else {
        (a / r, b / r)
    }
}

/// Columns `a` and `b` of `m` are replaced by `c·a + s·b` and `c·b − s·a`.
fn rotate_cols(m: &mut Mat, a: usize, b: usize, c: f64, s: f64) {
    for i in 0..m.rows() {
        let va = m[(i, a)];
        let vb = m[(i, b)];
        m[(i, a)] = c * va + s * vb;
        m[(i, b)] = c * vb - s * va;
    }
}

pub fn svd_thin(a: &Mat) -> Result<SvdThin, LinalgError> {
    let (m, n) = (a.rows(), a.cols());
    if m < n {
        return Err(LinalgError::DimensionMismatch);
    }

    let mut work = a.clone();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n.saturating_sub(1)];
    let mut tau_l = vec![0.0; n];
    let mut tau_r = vec![0.0; n];

    // Householder bidiagonalization; reflector tails stay in `work`.
    for k in 0..n {
        let sigma = norm2(&work.col(k)[k..]);
        if sigma > 0.0 {
            let x0 = work[(k, k)];
            let alpha = if x0 >= 0.0 { -sigma } else { sigma };
            let v0 = x0 - alpha;
            for i in k + 1..m {
                work[(i, k)] /= v0;
            }
            work[(k, k)] = alpha;
            tau_l[k] = (alpha - x0) / alpha;
            d[k] = alpha;
            for j in k + 1..n {
                let mut s = work[(k, j)];
                for i in k + 1..m {
                    s += work[(i, k)] * work[(i, j)];
                }
                s *= tau_l[k];
                work[(k, j)] -= s;
                for i in k + 1..m {
                    let w = work[(i, k)];
                    work[(i, j)] -= s * w;
                }
            }
        } else {
            d[k] = work[(k, k)];
        }

        if k + 2 < n {
            // Zero out the row segment beyond the superdiagonal.
            let mut sigma_sq = 0.0;
            for j in k + 1..n {
                sigma_sq += work[(k, j)] * work[(k, j)];
            }
            let sigma = sigma_sq.sqrt();
            if sigma > 0.0 {
                let x0 = work[(k, k + 1)];
                let alpha = if x0 >= 0.0 { -sigma } else { sigma };
                let v0 = x0 - alpha;
                for j in k + 2..n {
                    work[(k, j)] /= v0;
                }
                work[(k, k + 1)] = alpha;
                tau_r[k] = (alpha - x0) / alpha;
                e[k] = alpha;
                for i in k + 1..m {
                    let mut s = work[(i, k + 1)];
                    for j in k + 2..n {
                        s += work[(k, j)] * work[(i, j)];
                    }
                    s *= tau_r[k];
                    work[(i, k + 1)] -= s;
                    for j in k + 2..n {
                        let w = work[(k, j)];
                        work[(i, j)] -= s * w;
                    }
                }
            } else {
                e[k] = work[(k, k + 1)];
            }
        } else if k + 1 < n {
            e[k] = work[(k, k + 1)];
        }
    }

    // Thin U: apply left reflectors backwards to the leading identity block.
    let mut u = Mat::zeros(m, n);
    for j in 0..n {
        u[(j, j)] = 1.0;
    }
    for k in (0..n).rev() {
        if tau_l[k] == 0.0 {
            continue;
        }
        for j in k..n {
            let mut s = u[(k, j)];
            for i in k + 1..m {
                s += work[(i, k)] * u[(i, j)];
            }
            s *= tau_l[k];
            u[(k, j)] -= s;
            for i in k + 1..m {
                let w = work[(i, k)];
                u[(i, j)] -= s * w;
            }
        }
    }

    // V: apply right reflectors backwards. Reflector k acts on rows k+1..n.
    let mut v = Mat::identity(n);
    if n > 2 {
        for k in (0..n - 2).rev() {
            if tau_r[k] == 0.0 {
                continue;
            }
            for j in k + 1..n {
                let mut s = v[(k + 1, j)];
                for i in k + 2..n {
                    s += work[(k, i)] * v[(i, j)];
                }
                s *= tau_r[k];
                v[(k + 1, j)] -= s;
                for i in k + 2..n {
                    let w = work[(k, i)];
                    v[(i, j)] -= s * w;
                }
            }
        }
    }

    bidiagonal_qr(&mut d, &mut e, &mut u, &mut v, 100 * n)?;

    // Flip signs so singular values are non-negative, then sort descending.
    for i in 0..n {
        if d[i] < 0.0 {
            d[i] = -d[i];
            for r in 0..m {
                u[(r, i)] = -u[(r, i)];
            }
        }
    }
    for i in 0..n {
        let mut arg = i;
        for j in i + 1..n {
            if d[j] > d[arg] {
                arg = j;
            }
        }
        if arg != i {
            d.swap(i, arg);
            u.swap_columns(i, arg);
            v.swap_columns(i, arg);
        }
    }

    Ok(SvdThin { u, sigma: d, v })
}

/// Implicit-shift QR sweeps on the bidiagonal `(d, e)`.
fn bidiagonal_qr(
    d: &mut [f64],
    e: &mut [f64],
    u: &mut Mat,
    v: &mut Mat,
    max_iter: usize,
) -> Result<(), LinalgError> {
    let n = d.len();
    if n <= 1 {
        return Ok(());
    }
    let eps = f64::EPSILON;
    let bnorm = d
        .iter()
        .chain(e.iter())
        .fold(0.0f64, |acc, x| acc.max(x.abs()));
    if bnorm == 0.0 {
        return Ok(());
    }

    let mut iter = 0usize;
    let mut hi = n - 1;
    while hi > 0 {
        if e[hi - 1].abs() <= eps * (d[hi - 1].abs() + d[hi].abs()) {
            e[hi - 1] = 0.0;
            hi -= 1;
            continue;
        }
        let mut lo = hi - 1;
        while lo > 0 {
            if e[lo - 1].abs() <= eps * (d[lo - 1].abs() + d[lo].abs()) {
                e[lo - 1] = 0.0;
                break;
            }
            lo -= 1;
        }

        iter += 1;
        if iter > max_iter {
            return Err(LinalgError::ConvergenceFailure);
        }

        // A negligible diagonal entry breaks the Wilkinson shift; chase the
        // corresponding superdiagonal off the block with left rotations.
        let mut deflated_zero = false;
        for idx in lo..hi {
            if d[idx].abs() <= eps * bnorm {
                d[idx] = 0.0;
                let mut z = e[idx];
                e[idx] = 0.0;
                for j in idx + 1..=hi {
                    let (c, s) = givens(d[j], z);
                    d[j] = c * d[j] + s * z;
                    if j < hi {
                        z = -s * e[j];
                        e[j] = c * e[j];
                    }
                    rotate_cols(u, j, idx, c, s);
                }
                deflated_zero = true;
                break;
            }
        }
        if deflated_zero {
            continue;
        }

        // Wilkinson shift from the trailing 2×2 of BᵀB.
        let e_prev = if hi >= 2 && hi - 2 >= lo { e[hi - 2] } else { 0.0 };
        let t11 = d[hi - 1] * d[hi - 1] + e_prev * e_prev;
        let t12 = d[hi - 1] * e[hi - 1];
        let t22 = d[hi] * d[hi] + e[hi - 1] * e[hi - 1];
        let delta = (t11 - t22) / 2.0;
        let sign_delta = if delta >= 0.0 { 1.0 } else { -1.0 };
        let mu = t22 - t12 * t12 / (delta + sign_delta * (delta * delta + t12 * t12).sqrt());

        // Bulge chase.
        let mut x = d[lo] * d[lo] - mu;
        let mut z = d[lo] * e[lo];
        for k in lo..hi {
            let (c, s) = givens(x, z);
            if k > lo {
                e[k - 1] = c * x + s * z;
            }
            let dk = d[k];
            let ek = e[k];
            let dk1 = d[k + 1];
            d[k] = c * dk + s * ek;
            e[k] = c * ek - s * dk;
            let bulge = s * dk1;
            d[k + 1] = c * dk1;
            rotate_cols(v, k, k + 1, c, s);

            let (c2, s2) = givens(d[k], bulge);
            d[k] = c2 * d[k] + s2 * bulge;
            let old_ek = e[k];
            let old_dk1 = d[k + 1];
            e[k] = c2 * old_ek + s2 * old_dk1;
            d[k + 1] = c2 * old_dk1 - s2 * old_ek;
            if k + 1 < hi {
                let old_ek1 = e[k + 1];
                x = e[k];
                z = s2 * old_ek1;
                e[k + 1] = c2 * old_ek1;
            }
            rotate_cols(u, k, k + 1, c2, s2);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::mat::rel_diff;
    use crate::rng::SplitMix64;

    fn reconstruct(svd: &SvdThin) -> Mat {
        let n = svd.sigma.len();
        let mut us = svd.u.clone();
        for j in 0..n {
            for v in us.col_mut(j) {
                *v *= svd.sigma[j];
            }
        }
        us.matmul(&svd.v.transpose())
    }

    fn orthonormality_defect(q: &Mat) -> f64 {
        let g = q.transpose().matmul(q);
        let mut defect: f64 = 0.0;
        for i in 0..g.rows() {
            for j in 0..g.cols() {
                let target = if i == j { 1.0 } else { 0.0 };
                defect = defect.max((g[(i, j)] - target).abs());
            }
        }
        defect
    }

    /// Cyclic Jacobi eigensolver for symmetric matrices; the independent
    /// oracle for singular values via eig(MᵀM).
    fn jacobi_eigenvalues(a: &Mat) -> Vec<f64> {
        let n = a.rows();
        let mut m = a.clone();
        for _sweep in 0..60 {
            let mut off = 0.0f64;
            for p in 0..n {
                for q in p + 1..n {
                    off = off.max(m[(p, q)].abs());
                }
            }
            if off < 1e-14 * m.max_abs().max(1e-300) {
                break;
            }
            for p in 0..n {
                for q in p + 1..n {
                    let apq = m[(p, q)];
                    if apq.abs() == 0.0 {
                        continue;
                    }
                    let theta = (m[(q, q)] - m[(p, p)]) / (2.0 * apq);
                    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                    let c = 1.0 / (t * t + 1.0).sqrt();
                    let s = t * c;
                    for k in 0..n {
                        let akp = m[(k, p)];
                        let akq = m[(k, q)];
                        m[(k, p)] = c * akp - s * akq;
                        m[(k, q)] = s * akp + c * akq;
                    }
                    for k in 0..n {
                        let apk = m[(p, k)];
                        let aqk = m[(q, k)];
                        m[(p, k)] = c * apk - s * aqk;
                        m[(q, k)] = s * apk + c * aqk;
                    }
                }
            }
        }
        let mut ev: Vec<f64> = (0..n).map(|i| m[(i, i)]).collect();
        ev.sort_by(|a, b| b.total_cmp(a));
        ev
    }

    #[test]
    fn diagonal_input() {
        let m = Mat::from_rows(2, 2, &[3.0, 0.0, 0.0, 1.0]).unwrap();
        let svd = svd_thin(&m).unwrap();
        assert!((svd.sigma[0] - 3.0).abs() < 1e-14);
        assert!((svd.sigma[1] - 1.0).abs() < 1e-14);
        assert!(rel_diff(reconstruct(&svd).data(), m.data()) < 1e-14);
    }

    #[test]
    fn zero_matrix() {
        let m = Mat::zeros(4, 2);
        let svd = svd_thin(&m).unwrap();
        assert_eq!(svd.sigma, vec![0.0, 0.0]);
    }

    #[test]
    fn singular_values_match_eigenvalue_oracle() {
        let mut rng = SplitMix64::new(101);
        let m = Mat::from_fn(10, 6, |_, _| rng.standard_normal());
        let svd = svd_thin(&m).unwrap();
        let gram = m.transpose().matmul(&m);
        let ev = jacobi_eigenvalues(&gram);
        for (sv, lambda) in svd.sigma.iter().zip(&ev) {
            assert!((sv * sv - lambda).abs() <= 1e-10 * ev[0].max(1.0));
        }
    }

    #[test]
    fn random_reconstruction_and_orthogonality() {
        let mut rng = SplitMix64::new(102);
        for &(m, n) in &[(5usize, 5usize), (12, 7), (40, 40), (60, 31)] {
            let a = Mat::from_fn(m, n, |_, _| rng.standard_normal());
            let svd = svd_thin(&a).unwrap();
            assert!(
                rel_diff(reconstruct(&svd).data(), a.data()) <= 1e-12,
                "reconstruction failed at {m}x{n}"
            );
            assert!(orthonormality_defect(&svd.u) <= 1e-10);
            assert!(orthonormality_defect(&svd.v) <= 1e-10);
            for w in svd.sigma.windows(2) {
                assert!(w[0] >= w[1]);
            }
        }
    }

    #[test]
    fn rank_deficient_input() {
        let mut rng = SplitMix64::new(103);
        // Outer product: rank 1.
        let u: Vec<f64> = (0..9).map(|_| rng.standard_normal()).collect();
        let w: Vec<f64> = (0..4).map(|_| rng.standard_normal()).collect();
        let a = Mat::from_fn(9, 4, |i, j| u[i] * w[j]);
        let svd = svd_thin(&a).unwrap();
        assert!(rel_diff(reconstruct(&svd).data(), a.data()) <= 1e-12);
        for &s in &svd.sigma[1..] {
            assert!(s <= 1e-12 * svd.sigma[0]);
        }
    }

    #[test]
    fn invariant_under_orthogonal_factors() {
        let mut rng = SplitMix64::new(104);
        let a = Mat::from_fn(9, 5, |_, _| rng.standard_normal());
        let svd_a = svd_thin(&a).unwrap();
        // Random orthogonal factors from QR of random matrices.
        let (ql, _) = crate::linalg::qr::qr_reduced(&Mat::from_fn(9, 9, |_, _| rng.standard_normal())).unwrap();
        let (qr, _) = crate::linalg::qr::qr_reduced(&Mat::from_fn(5, 5, |_, _| rng.standard_normal())).unwrap();
        let b = ql.matmul(&a).matmul(&qr);
        let svd_b = svd_thin(&b).unwrap();
        for (x, y) in svd_a.sigma.iter().zip(&svd_b.sigma) {
            assert!((x - y).abs() <= 1e-10 * svd_a.sigma[0].max(1.0));
        }
    }
}
