//! Haar-distributed unitary matrices.
//!
//! Sampling recipe: draw a complex Ginibre matrix, take its Householder QR
//! factorization, then multiply column j of Q by the conjugate phase of
//! R(j,j). The phase step matters: the raw Q of a Householder QR carries a
//! diagonal-phase convention that is not translation invariant, and skipping
//! the correction biases the distribution.

use num_complex::Complex64;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::matrix::ComplexMatrix;
use crate::linalg::rng::{ginibre, stream_rng};

/// Householder QR of a square matrix; returns (Q, R) with Q unitary and R
/// upper triangular.
pub(crate) fn householder_qr(a: &ComplexMatrix) -> (ComplexMatrix, ComplexMatrix) {
    assert!(a.is_square());
    let n = a.rows();
    let mut r = a.clone();
    let mut q = ComplexMatrix::identity(n);

    for k in 0..n.saturating_sub(1) {
        // Householder vector for column k, rows k..n.
        let mut v: Vec<Complex64> = (k..n).map(|i| r[(i, k)]).collect();
        let normx = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if normx == 0.0 {
            continue;
        }
        let phase = if v[0].norm() > 0.0 {
            v[0] / v[0].norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        let alpha = -phase * normx;
        v[0] -= alpha;
        let vnorm2 = v.iter().map(|z| z.norm_sqr()).sum::<f64>();
        if vnorm2 == 0.0 {
            continue;
        }
        let beta = 2.0 / vnorm2;

        // R ← H·R on rows k..
        for j in k..n {
            let mut s = Complex64::new(0.0, 0.0);
            for i in k..n {
                s += v[i - k].conj() * r[(i, j)];
            }
            s *= beta;
            for i in k..n {
                let upd = s * v[i - k];
                r[(i, j)] -= upd;
            }
        }
        // Q ← Q·H on columns k..
        for i in 0..n {
            let mut s = Complex64::new(0.0, 0.0);
            for j in k..n {
                s += q[(i, j)] * v[j - k];
            }
            s *= beta;
            for j in k..n {
                let upd = s * v[j - k].conj();
                q[(i, j)] -= upd;
            }
        }
    }
    // Zero the strictly-lower part, which now only holds roundoff.
    for i in 1..n {
        for j in 0..i {
            r[(i, j)] = Complex64::new(0.0, 0.0);
        }
    }
    (q, r)
}

/// Haar sample drawn from an explicit generator state.
pub fn haar_unitary_rng(dim: usize, rng: &mut ChaCha8Rng) -> Result<ComplexMatrix> {
    if dim == 0 {
        return Err(Error::InvalidArgument(
            "haar_unitary requires dim >= 1".into(),
        ));
    }
    let z = ginibre(dim, dim, rng);
    if dim == 1 {
        // QR of a scalar: U is the (corrected) phase.
        let z0 = z[(0, 0)];
        let m = if z0.norm() == 0.0 {
            ComplexMatrix::identity(1)
        } else {
            ComplexMatrix::new(1, 1, vec![(z0 / z0.norm()).conj()])?
        };
        return Ok(m);
    }
    let (mut q, r) = householder_qr(&z);
    for j in 0..dim {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 {
            d / d.norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        let corr = phase.conj();
        for i in 0..dim {
            q[(i, j)] *= corr;
        }
    }
    Ok(q)
}

/// Haar-distributed `dim`×`dim` unitary; deterministic in `seed`.
pub fn haar_unitary(dim: usize, seed: u64) -> Result<ComplexMatrix> {
    let mut rng = stream_rng(seed, 0);
    haar_unitary_rng(dim, &mut rng)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rng::stream_rng;

    #[test]
    fn dim_zero_is_invalid() {
        assert!(haar_unitary(0, 1).is_err());
    }

    #[test]
    fn scalar_case_has_unit_modulus() {
        for seed in [0u64, 1, 99, u64::MAX] {
            let u = haar_unitary(1, seed).unwrap();
            assert!((u[(0, 0)].norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn samples_are_unitary() {
        let u = haar_unitary(4, 7).unwrap();
        assert!(u.unitarity_defect() <= 1e-10);
        let u = haar_unitary(16, 3).unwrap();
        assert!(u.unitarity_defect() <= 1e-10);
    }

    #[test]
    fn identical_seeds_are_bitwise_identical() {
        let a = haar_unitary(5, 42).unwrap();
        let b = haar_unitary(5, 42).unwrap();
        assert_eq!(a.entries(), b.entries());
        let c = haar_unitary(5, 43).unwrap();
        assert_ne!(a.entries(), c.entries());
    }

    #[test]
    fn qr_reconstructs_and_triangularizes() {
        let mut rng = stream_rng(5, 0);
        let z = ginibre(6, 6, &mut rng);
        let (q, r) = householder_qr(&z);
        assert!(q.unitarity_defect() < 1e-12);
        assert!(q.mul(&r).max_abs_diff(&z) < 1e-12);
        for i in 1..6 {
            for j in 0..i {
                assert_eq!(r[(i, j)].norm(), 0.0);
            }
        }
    }

    // Left-invariance moment check: E|tr U|² = 1 for Haar on U(N). The
    // 2000-sample window [0.85, 1.15] is ~6.7 standard deviations wide
    // (|tr U|² is approximately Exp(1) for N ≥ 2).
    #[test]
    fn trace_moment_matches_haar_expectation() {
        let mut rng = stream_rng(2024, 0);
        let samples = 2000;
        let mut acc = 0.0;
        for _ in 0..samples {
            let u = haar_unitary_rng(3, &mut rng).unwrap();
            acc += u.trace().norm_sqr();
        }
        let mean = acc / samples as f64;
        assert!(
            (0.85..=1.15).contains(&mean),
            "mean |tr U|^2 = {mean}, expected within [0.85, 1.15]"
        );
    }
}
