//! Spectral filtering and parameter learning for linear ill-posed problems.
//!
//! Reconstructions of `A x ≈ b` with an ill-conditioned forward operator `A`
//! are computed as spectrally filtered solutions. Two decompositions drive
//! the filtering:
//!
//! - the generalized SVD of a matrix pair `{A, L}` for general-form Tikhonov
//!   regularization (one penalty term, arbitrary regularization matrix), and
//! - a frequency transform (DFT for periodic boundaries, DCT for reflexive
//!   ones) that simultaneously diagonalizes `A` and a bank of regularization
//!   stencils for the multi-parameter problem.
//!
//! Regularization parameters come either from classic per-problem rules
//! (discrepancy principle, GCV) or from training data by minimizing the
//! average reconstruction error over a set of `(b, x_true)` pairs, with the
//! error measured by a squared 2-norm, a p-norm, or a Huber function.
//!
//! The crate is `no_std` (it allocates but performs no IO); file formats and
//! the command-line front end live in the companion `tikreg` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod filter;
pub mod gsvd;
pub mod learn;
pub mod linalg;
pub mod operators;
pub mod problems;
pub mod rng;
mod search;
pub mod select;
pub mod transform;

pub use linalg::mat::{LinalgError, Mat};
