//! Dense real matrix/vector arithmetic with QR and SVD factorizations.

pub mod mat;
pub mod qr;
pub mod solve;
pub mod svd;

pub use mat::{LinalgError, Mat};
pub use qr::qr_reduced;
pub use solve::{cholesky, cholesky_solve, solve_lls, solve_spd, solve_upper_triangular};
pub use svd::{svd_thin, SvdThin};
