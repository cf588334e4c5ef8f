//! Dense reference path for the superoperator, used by the test suites.
//!
//! Materializes Σ aᵢ ⊗ conj(bᵢ) as an explicit matrix on row-major
//! vectorized S₂ and takes its norm through the dense Hermitian eigensolver.
//! This route shares no code with the matrix-free power iteration, which is
//! exactly why it is kept: the two must agree. Capped at superoperators of
//! side 64 (N ≤ 8 in the square case) — production sizes stay matrix-free.

use crate::error::{Error, Result};
use crate::linalg::eigen::dense_operator_norm;
use crate::linalg::ComplexMatrix;
use crate::tensor::form::QuadraticForm;

/// Hard cap on the side of a materialized superoperator.
pub const DENSE_SIDE_CAP: usize = 64;

/// The dense matrix of t ↦ Σ aᵢ t bᵢ† on row-major vec(t): rows indexed by
/// (i, i'), columns by (j, j'), entry Σ_k a_k(i,j)·conj(b_k(i',j')).
pub fn materialize_superop(form: &QuadraticForm) -> Result<ComplexMatrix> {
    let side = form.left_dim() * form.right_dim();
    if side > DENSE_SIDE_CAP {
        return Err(Error::TooLarge(format!(
            "dense superoperator side {side} exceeds the cap {DENSE_SIDE_CAP}"
        )));
    }
    let mut acc = ComplexMatrix::zeros(side, side);
    for (a, b) in form.left().iter().zip(form.right()) {
        acc = acc.add(&a.kron(&b.conj()));
    }
    Ok(acc)
}

/// Dense-route operator norm of the quadratic form.
pub fn dense_form_norm(form: &QuadraticForm) -> Result<f64> {
    dense_operator_norm(&materialize_superop(form)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{ComplexMatrix, UnitaryFamily};
    use num_complex::Complex64;

    #[test]
    fn diag_family_norm_by_hand() {
        // aᵢ ∈ {I, diag(1,−1)}: Σ aᵢ⊗āᵢ = diag(2,0,0,2), norm 2
        let d = ComplexMatrix::new(
            2,
            2,
            vec![
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(-1.0, 0.0),
            ],
        )
        .unwrap();
        let fam = UnitaryFamily::new(vec![ComplexMatrix::identity(2), d]).unwrap();
        let form = QuadraticForm::conjugate_pair(&fam);
        let k = materialize_superop(&form).unwrap();
        for (idx, expect) in [(0usize, 2.0), (5, 0.0), (10, 0.0), (15, 2.0)] {
            assert!((k[(idx / 4, idx % 4)].re - expect).abs() < 1e-14);
        }
        assert!((dense_form_norm(&form).unwrap() - 2.0).abs() < 1e-10);
    }

    #[test]
    fn cap_is_enforced() {
        let fam = UnitaryFamily::new(vec![ComplexMatrix::identity(9)]).unwrap();
        let form = QuadraticForm::conjugate_pair(&fam);
        assert!(matches!(
            materialize_superop(&form),
            Err(Error::TooLarge(_))
        ));
    }
}
