//! Complex dense linear algebra substrate: matrices, Hilbert-Schmidt space,
//! Haar sampling, Hermitian eigensolving, and the matrix-free power solver.

pub mod eigen;
pub mod family;
pub mod haar;
pub mod hs;
pub mod matrix;
pub mod power;
pub mod rng;

pub use eigen::{dense_operator_norm, hermitian_eigen, min_eigenvalue, psd_part, HermitianEigen};
pub use family::{UnitaryFamily, UNITARITY_TOL};
pub use haar::{haar_unitary, haar_unitary_rng};
pub use hs::{hs_inner, HSMatrix};
pub use matrix::ComplexMatrix;
pub use power::{top_singular_value, PowerOpts, SingularReport};
pub use rng::stream_rng;
