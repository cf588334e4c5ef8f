//! Matrices viewed as vectors of Hilbert-Schmidt space.
//!
//! An `HSMatrix` is an element of S₂(K,H): an ordinary matrix carrying a
//! cached Hilbert-Schmidt norm. Square in the S₂(H) case; rectangular
//! elements appear when the two legs of a quadratic form live in different
//! dimensions.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::matrix::ComplexMatrix;

#[derive(Debug, Clone)]
pub struct HSMatrix {
    mat: ComplexMatrix,
    hs_norm: f64,
}

impl HSMatrix {
    pub fn new(mat: ComplexMatrix) -> Self {
        let hs_norm = mat.hs_norm();
        Self { mat, hs_norm }
    }

    /// Identity direction I/√N, the extremal vector of the square case.
    pub fn normalized_identity(dim: usize) -> Self {
        let m = ComplexMatrix::identity(dim).scale(Complex64::new(1.0 / (dim as f64).sqrt(), 0.0));
        Self::new(m)
    }

    pub fn mat(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn into_mat(self) -> ComplexMatrix {
        self.mat
    }

    pub fn hs_norm(&self) -> f64 {
        self.hs_norm
    }

    /// Checks the cached-norm invariant (norm² within 1e−12 relative of the
    /// entrywise sum). Intended for tests and debugging.
    pub fn verify_cache(&self) -> bool {
        let actual = self.mat.hs_norm();
        let scale = actual.max(self.hs_norm).max(f64::MIN_POSITIVE);
        ((actual * actual) - (self.hs_norm * self.hs_norm)).abs() <= 1e-12 * scale * scale
    }

    /// Rescales to unit Hilbert-Schmidt norm.
    pub fn normalized(&self) -> Result<HSMatrix> {
        if self.hs_norm == 0.0 {
            return Err(Error::InvalidArgument(
                "cannot normalize the zero matrix".into(),
            ));
        }
        let m = self.mat.scale(Complex64::new(1.0 / self.hs_norm, 0.0));
        Ok(HSMatrix::new(m))
    }
}

impl From<ComplexMatrix> for HSMatrix {
    fn from(mat: ComplexMatrix) -> Self {
        HSMatrix::new(mat)
    }
}

/// Hilbert-Schmidt inner product ⟨a, b⟩ = tr(b†·a), conjugate-linear in `b`.
pub fn hs_inner(a: &HSMatrix, b: &HSMatrix) -> Result<Complex64> {
    if (a.mat.rows(), a.mat.cols()) != (b.mat.rows(), b.mat.cols()) {
        return Err(Error::InvalidArgument(format!(
            "hs_inner dimension mismatch: {}x{} vs {}x{}",
            a.mat.rows(),
            a.mat.cols(),
            b.mat.rows(),
            b.mat.cols()
        )));
    }
    Ok(a.mat.frobenius_inner(&b.mat))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_pairing_is_dimension() {
        let id2 = HSMatrix::new(ComplexMatrix::identity(2));
        let v = hs_inner(&id2, &id2).unwrap();
        assert!((v - Complex64::new(2.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn self_pairing_is_norm_squared() {
        let a = HSMatrix::new(ComplexMatrix::from_fn(3, 3, |r, c| {
            Complex64::new(r as f64 - 1.0, 0.3 * c as f64)
        }));
        let v = hs_inner(&a, &a).unwrap();
        assert!(v.im.abs() < 1e-13);
        assert!(v.re >= 0.0);
        assert!((v.re - a.hs_norm() * a.hs_norm()).abs() < 1e-12);
    }

    #[test]
    fn matches_entrywise_summation_oracle() {
        // direct Σ a(i,j)·conj(b(i,j)) computed independently of frobenius_inner
        let a = ComplexMatrix::from_fn(3, 3, |r, c| Complex64::new(0.1 * r as f64, c as f64));
        let b = ComplexMatrix::from_fn(3, 3, |r, c| Complex64::new(c as f64 - 0.5, -(r as f64)));
        let mut oracle = Complex64::new(0.0, 0.0);
        for i in 0..3 {
            for j in 0..3 {
                oracle += a[(i, j)] * b[(i, j)].conj();
            }
        }
        let got = hs_inner(&HSMatrix::new(a), &HSMatrix::new(b)).unwrap();
        assert!((got - oracle).norm() < 1e-13);
    }

    #[test]
    fn conjugate_symmetry() {
        let a = HSMatrix::new(ComplexMatrix::from_fn(2, 2, |r, c| {
            Complex64::new(r as f64, c as f64 + 0.5)
        }));
        let b = HSMatrix::new(ComplexMatrix::from_fn(2, 2, |r, c| {
            Complex64::new(1.0 - c as f64, 2.0 * r as f64)
        }));
        let ab = hs_inner(&a, &b).unwrap();
        let ba = hs_inner(&b, &a).unwrap();
        assert!((ab - ba.conj()).norm() < 1e-13);
    }

    #[test]
    fn mismatched_dims_rejected() {
        let a = HSMatrix::new(ComplexMatrix::identity(2));
        let b = HSMatrix::new(ComplexMatrix::identity(3));
        assert!(hs_inner(&a, &b).is_err());
    }

    #[test]
    fn cache_invariant_holds() {
        let a = HSMatrix::new(ComplexMatrix::from_fn(4, 2, |r, c| {
            Complex64::new(r as f64 * 1e3, c as f64 * 1e-3)
        }));
        assert!(a.verify_cache());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_matrix(n: usize) -> impl Strategy<Value = ComplexMatrix> {
            prop::collection::vec((-10.0f64..10.0, -10.0f64..10.0), n * n).prop_map(move |v| {
                ComplexMatrix::new(
                    n,
                    n,
                    v.into_iter()
                        .map(|(re, im)| Complex64::new(re, im))
                        .collect(),
                )
                .unwrap()
            })
        }

        proptest! {
            #[test]
            fn conjugate_symmetric_and_cauchy_schwarz(a in arb_matrix(3), b in arb_matrix(3)) {
                let (ha, hb) = (HSMatrix::new(a), HSMatrix::new(b));
                let ab = hs_inner(&ha, &hb).unwrap();
                let ba = hs_inner(&hb, &ha).unwrap();
                prop_assert!((ab - ba.conj()).norm() <= 1e-10);
                prop_assert!(ab.norm() <= ha.hs_norm() * hb.hs_norm() * (1.0 + 1e-12) + 1e-12);
            }

            #[test]
            fn positive_definite(a in arb_matrix(2)) {
                let ha = HSMatrix::new(a);
                let aa = hs_inner(&ha, &ha).unwrap();
                prop_assert!(aa.im.abs() <= 1e-12 * (1.0 + aa.re.abs()));
                prop_assert!(aa.re >= 0.0);
            }
        }
    }
}
