//! Hermitian eigendecomposition by cyclic Jacobi rotations.
//!
//! Used for PSD projections, dense operator norms of small matrices, and as
//! the dense half of oracle cross-checks. Quadratically convergent and
//! unconditionally stable for Hermitian input; dimensions in this crate stay
//! small enough (≤ a few hundred) that Jacobi is entirely adequate.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::matrix::ComplexMatrix;

/// Eigenvalues (ascending) and a unitary matrix of eigenvectors in columns.
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Eigendecomposition of a Hermitian matrix. The input is symmetrized
/// (a + a†)/2 first; callers must not rely on that to fix grossly
/// non-Hermitian input.
pub fn hermitian_eigen(a: &ComplexMatrix) -> Result<HermitianEigen> {
    if !a.is_square() {
        return Err(Error::InvalidArgument(
            "hermitian_eigen requires a square matrix".into(),
        ));
    }
    let n = a.rows();
    let herm_defect = a.sub(&a.dagger()).hs_norm();
    let scale = a.hs_norm().max(1.0);
    if herm_defect > 1e-8 * scale {
        return Err(Error::InvalidArgument(format!(
            "matrix is not Hermitian: defect {herm_defect:.3e}"
        )));
    }
    let mut m = a.add(&a.dagger()).scale(Complex64::new(0.5, 0.0));
    let mut v = ComplexMatrix::identity(n);

    let tol = 1e-14 * scale;
    for _sweep in 0..60 {
        if off_diagonal_norm(&m) <= tol {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[(p, q)];
                if apq.norm() <= tol / (n as f64) {
                    continue;
                }
                let app = m[(p, p)].re;
                let aqq = m[(q, q)].re;
                let u = apq / apq.norm();
                let tau = (aqq - app) / (2.0 * apq.norm());
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                // Unitary plane rotation J: J[p][p]=c, J[p][q]=s,
                // J[q][p]=−s·conj(u), J[q][q]=c·conj(u). Updates m ← J†·m·J.
                let ucon = u.conj();
                // m ← m·J (columns p, q)
                for i in 0..n {
                    let mip = m[(i, p)];
                    let miq = m[(i, q)];
                    m[(i, p)] = mip * c - miq * ucon * s;
                    m[(i, q)] = mip * s + miq * ucon * c;
                }
                // m ← J†·m (rows p, q)
                for j in 0..n {
                    let mpj = m[(p, j)];
                    let mqj = m[(q, j)];
                    m[(p, j)] = mpj * c - mqj * u * s;
                    m[(q, j)] = mpj * s + mqj * u * c;
                }
                // Clean the rotated pair to keep Hermitian structure exact.
                m[(p, q)] = Complex64::new(0.0, 0.0);
                m[(q, p)] = Complex64::new(0.0, 0.0);
                m[(p, p)] = Complex64::new(m[(p, p)].re, 0.0);
                m[(q, q)] = Complex64::new(m[(q, q)].re, 0.0);
                // v ← v·J
                for i in 0..n {
                    let vip = v[(i, p)];
                    let viq = v[(i, q)];
                    v[(i, p)] = vip * c - viq * ucon * s;
                    v[(i, q)] = vip * s + viq * ucon * c;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| m[(i, i)].re).collect();
    order.sort_by(|&i, &j| diag[i].partial_cmp(&diag[j]).unwrap());
    let values: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |r, c| v[(r, order[c])]);
    Ok(HermitianEigen { values, vectors })
}

/// Operator (spectral) norm of a dense matrix: √λ_max(a†a).
pub fn dense_operator_norm(a: &ComplexMatrix) -> Result<f64> {
    let gram = a.dagger().mul(a);
    let eig = hermitian_eigen(&gram)?;
    let top = eig.values.last().copied().unwrap_or(0.0).max(0.0);
    Ok(top.sqrt())
}

/// Projects a Hermitian matrix onto the PSD cone: eigendecompose and clamp
/// negative eigenvalues to zero.
pub fn psd_part(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    let eig = hermitian_eigen(a)?;
    let n = a.rows();
    let mut out = ComplexMatrix::zeros(n, n);
    for (k, &lambda) in eig.values.iter().enumerate() {
        if lambda <= 0.0 {
            continue;
        }
        for i in 0..n {
            let vik = eig.vectors[(i, k)];
            for j in 0..n {
                out[(i, j)] += vik * eig.vectors[(j, k)].conj() * lambda;
            }
        }
    }
    Ok(out)
}

/// Smallest eigenvalue of a Hermitian matrix, for PSD validation.
pub fn min_eigenvalue(a: &ComplexMatrix) -> Result<f64> {
    Ok(hermitian_eigen(a)?.values.first().copied().unwrap_or(0.0))
}
