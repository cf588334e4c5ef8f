//! utlab-core: a numerical and combinatorial laboratory for quadratic forms
//! in unitary operators.
//!
//! The crate computes minimal (spatial) tensor norms of sums Σ aᵢ ⊗ b̄ᵢ via
//! their action on Hilbert-Schmidt space, checks the sharp 2√(n−1) and
//! 2√(2n−1) spectral constants against exact free-group walk counts, and
//! builds the quaternionic SU(2) generator towers that attain the bound.
//!
//! Modules:
//! - [`linalg`]: dense complex matrices, Haar sampling, matrix-free power
//!   iteration, Hermitian eigensolving.
//! - [`tensor`]: the superoperator t ↦ Σ aᵢ t bᵢ†, norm solvers, PSD trace
//!   ascent, and moment inequalities.
//! - [`words`]: exact big-integer combinatorics of reduced words and tree
//!   walks, with growth-rate estimators.
//! - [`lps`]: integer-quaternion generator families, SU(2) irreducible
//!   representation matrices, and per-block norm experiments.

pub mod error;
pub mod linalg;
pub mod lps;
pub mod tensor;
pub mod words;

pub use error::{Error, Result};
