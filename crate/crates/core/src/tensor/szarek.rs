//! Moment lower bounds for the superoperator, against exact walk counts.
//!
//! Expanding ⟨(T*T)^m t, t⟩ for T = Σ uᵢ ⊗ ūᵢ gives a sum of traces
//! tr(u^α t u^{α*} t) over alternating words u^α, each nonnegative for PSD
//! t. The words that cancel formally contribute tr(t²) = 1 each, so the
//! whole moment dominates the number of formally cancelling index patterns —
//! an exact integer from the walk DP. Taking 2m-th roots drives the chain
//! toward the norm itself.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::linalg::eigen::min_eigenvalue;
use crate::linalg::rng::{ginibre, stream_rng};
use crate::linalg::{HSMatrix, UnitaryFamily};
use crate::tensor::form::QuadraticForm;
use crate::words::lattice::count_identity_patterns;

#[derive(Debug, Clone)]
pub struct SzarekMoment {
    /// ⟨(T*T)^m t, t⟩ computed by 2m alternating superoperator applications.
    pub lhs: f64,
    /// Exact count of formally cancelling patterns, card(I′).
    pub count: BigUint,
}

/// Validates that t is PSD with unit HS norm.
fn check_psd_unit(t: &HSMatrix) -> Result<()> {
    let mat = t.mat();
    if !mat.is_square() {
        return Err(Error::InvalidArgument("t must be square".into()));
    }
    if (t.hs_norm() - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidArgument(format!(
            "t must have unit HS norm, got {}",
            t.hs_norm()
        )));
    }
    let herm_defect = mat.sub(&mat.dagger()).hs_norm();
    if herm_defect > 1e-9 {
        return Err(Error::InvalidArgument(format!(
            "t must be Hermitian, defect {herm_defect:.3e}"
        )));
    }
    let min_eig = min_eigenvalue(mat)?;
    if min_eig < -1e-9 {
        return Err(Error::InvalidArgument(format!(
            "t must be PSD, smallest eigenvalue {min_eig:.3e}"
        )));
    }
    Ok(())
}

/// The moment ⟨(T*T)^m t, t⟩ together with the exact pattern count it must
/// dominate. Errors if t is not PSD of unit norm, or if the domination
/// contract fails beyond 1e−9 slack.
pub fn szarek_moment(u: &UnitaryFamily, t: &HSMatrix, m: usize) -> Result<SzarekMoment> {
    if m == 0 {
        return Err(Error::InvalidArgument("szarek_moment needs m >= 1".into()));
    }
    check_psd_unit(t)?;
    if t.mat().rows() != u.dim() {
        return Err(Error::InvalidArgument(format!(
            "t is {}x{}, family dimension is {}",
            t.mat().rows(),
            t.mat().cols(),
            u.dim()
        )));
    }
    let form = QuadraticForm::conjugate_pair(u);
    let mut x = t.mat().clone();
    for _ in 0..m {
        x = form.adjoint_apply_raw(&form.apply_raw(&x));
    }
    let lhs = x.frobenius_inner(t.mat()).re;

    let count = count_identity_patterns(u.n() as u64, m)?;
    let count_f = count.to_f64().unwrap_or(f64::INFINITY);
    if lhs < count_f * (1.0 - 1e-9) - 1e-9 {
        return Err(Error::ContractViolation(format!(
            "moment {lhs} fails to dominate exact count {count_f}"
        )));
    }
    Ok(SzarekMoment { lhs, count })
}

/// Random PSD matrix of unit HS norm (Gram matrix of a Ginibre sample),
/// deterministic in (seed, stream).
pub fn random_psd_unit(dim: usize, seed: u64, stream: u64) -> Result<HSMatrix> {
    if dim == 0 {
        return Err(Error::InvalidArgument("dim must be >= 1".into()));
    }
    let mut rng = stream_rng(seed, stream);
    let g = ginibre(dim, dim, &mut rng);
    let gram = g.mul(&g.dagger());
    let norm = gram.hs_norm();
    Ok(HSMatrix::new(
        gram.scale(num_complex::Complex64::new(1.0 / norm, 0.0)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ComplexMatrix;

    #[test]
    fn identity_start_first_moment() {
        // T(I) = n·I forces ⟨T*T(I/√N), I/√N⟩ = n²  ≥ count = n
        for n in 1..=4usize {
            let u = UnitaryFamily::haar(n, 3, 2, 0).unwrap();
            let t = HSMatrix::normalized_identity(3);
            let r = szarek_moment(&u, &t, 1).unwrap();
            assert!(((n * n) as f64 - r.lhs).abs() < 1e-9, "n={n}: {}", r.lhs);
            assert_eq!(r.count.to_u64(), Some(n as u64));
        }
    }

    #[test]
    fn single_unitary_is_exactly_one() {
        // T*T is the identity map for one unitary
        let u = UnitaryFamily::haar(1, 4, 8, 0).unwrap();
        for m in 1..=4 {
            let t = random_psd_unit(4, 3, m as u64).unwrap();
            let r = szarek_moment(&u, &t, m).unwrap();
            assert!((r.lhs - 1.0).abs() < 1e-10, "m={m}: {}", r.lhs);
            assert_eq!(r.count.to_u64(), Some(1));
        }
    }

    #[test]
    fn haar_pair_dominates_six() {
        let u = UnitaryFamily::haar(2, 3, 9, 0).unwrap();
        let t = random_psd_unit(3, 4, 0).unwrap();
        let r = szarek_moment(&u, &t, 2).unwrap();
        assert_eq!(r.count.to_u64(), Some(6));
        assert!(r.lhs >= 6.0 - 1e-9, "lhs {}", r.lhs);
    }

    #[test]
    fn chain_is_nondecreasing_in_m() {
        // ⟨M^m t,t⟩^{1/m} is nondecreasing for PSD M and unit t, so the
        // 2m-th root of the moment climbs toward the norm.
        let u = UnitaryFamily::haar(3, 4, 13, 0).unwrap();
        let t = random_psd_unit(4, 14, 0).unwrap();
        let mut prev = 0.0f64;
        for m in 1..=4 {
            let r = szarek_moment(&u, &t, m).unwrap();
            let root = r.lhs.powf(1.0 / (2.0 * m as f64));
            assert!(root >= prev - 1e-9, "m={m}: {root} < {prev}");
            prev = root;
        }
    }

    #[test]
    fn rejects_non_psd_input() {
        let u = UnitaryFamily::haar(2, 2, 1, 0).unwrap();
        let mut m = ComplexMatrix::zeros(2, 2);
        m[(0, 0)] = num_complex::Complex64::new(1.0, 0.0);
        m[(1, 1)] = num_complex::Complex64::new(-1.0, 0.0);
        let t = HSMatrix::new(m.scale(num_complex::Complex64::new(
            1.0 / std::f64::consts::SQRT_2,
            0.0,
        )));
        assert!(matches!(
            szarek_moment(&u, &t, 1),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn rejects_unnormalized_input() {
        let u = UnitaryFamily::haar(2, 2, 1, 0).unwrap();
        let t = HSMatrix::new(ComplexMatrix::identity(2));
        assert!(szarek_moment(&u, &t, 1).is_err());
    }
}
