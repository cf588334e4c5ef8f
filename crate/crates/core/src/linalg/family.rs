//! Ordered tuples of unitary matrices of a common dimension.

use crate::error::{Error, Result};
use crate::linalg::haar::haar_unitary;
use crate::linalg::matrix::ComplexMatrix;
use crate::linalg::rng::stream_rng;
use rand::Rng;

/// Default relative unitarity tolerance: defect ≤ 1e−10·√N at construction.
pub const UNITARITY_TOL: f64 = 1e-10;

/// An n-tuple (u₁, …, u_n) of N×N unitary matrices.
#[derive(Debug, Clone)]
pub struct UnitaryFamily {
    dim: usize,
    members: Vec<ComplexMatrix>,
}

impl UnitaryFamily {
    /// Validates squareness, a common dimension, and unitarity within
    /// `UNITARITY_TOL`·√N in Hilbert-Schmidt norm.
    pub fn new(members: Vec<ComplexMatrix>) -> Result<Self> {
        Self::with_tolerance(members, UNITARITY_TOL)
    }

    /// Same as [`UnitaryFamily::new`] with a caller-chosen relative tolerance.
    pub fn with_tolerance(members: Vec<ComplexMatrix>, tol: f64) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::InvalidArgument(
                "a unitary family needs at least one member".into(),
            ));
        }
        let dim = members[0].rows();
        if dim == 0 {
            return Err(Error::InvalidArgument("dimension must be >= 1".into()));
        }
        let allowed = tol * (dim as f64).sqrt();
        for (idx, m) in members.iter().enumerate() {
            if !m.is_square() || m.rows() != dim {
                return Err(Error::InvalidArgument(format!(
                    "member {idx} is {}x{}, expected {dim}x{dim}",
                    m.rows(),
                    m.cols()
                )));
            }
            let defect = m.unitarity_defect();
            if defect > allowed {
                return Err(Error::InvalidArgument(format!(
                    "member {idx} is not unitary: defect {defect:.3e} > {allowed:.3e}"
                )));
            }
        }
        Ok(Self { dim, members })
    }

    /// n independent Haar samples. Member i is drawn from a per-member seed
    /// produced by the trial stream `stream_rng(seed, stream)`, so a family
    /// is reproducible from `(seed, stream)` alone.
    pub fn haar(n: usize, dim: usize, seed: u64, stream: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("need n >= 1 members".into()));
        }
        let mut trial_rng = stream_rng(seed, stream);
        let mut members = Vec::with_capacity(n);
        for _ in 0..n {
            let member_seed: u64 = trial_rng.gen();
            members.push(haar_unitary(dim, member_seed)?);
        }
        Self::new(members)
    }

    /// Haar family closed under adjoints: k Haar samples together with their
    /// adjoints, 2k members in total.
    pub fn haar_adjoint_closed(k: usize, dim: usize, seed: u64, stream: u64) -> Result<Self> {
        let base = Self::haar(k, dim, seed, stream)?;
        let mut members = Vec::with_capacity(2 * k);
        for m in base.members {
            members.push(m.dagger());
            members.push(m);
        }
        Self::new(members)
    }

    pub fn n(&self) -> usize {
        self.members.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn members(&self) -> &[ComplexMatrix] {
        &self.members
    }

    pub fn member(&self, i: usize) -> &ComplexMatrix {
        &self.members[i]
    }

    /// Whether for every member u the adjoint u† is also a member (within
    /// entrywise tolerance).
    pub fn is_adjoint_closed(&self, tol: f64) -> bool {
        self.members.iter().all(|u| {
            let ud = u.dagger();
            self.members.iter().any(|v| ud.max_abs_diff(v) <= tol)
        })
    }

    /// Largest unitarity defect over the members, relative to √N.
    pub fn worst_defect(&self) -> f64 {
        self.members
            .iter()
            .map(|m| m.unitarity_defect())
            .fold(0.0, f64::max)
            / (self.dim as f64).sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn haar_families_validate() {
        let fam = UnitaryFamily::haar(3, 4, 11, 0).unwrap();
        assert_eq!(fam.n(), 3);
        assert_eq!(fam.dim(), 4);
        assert!(fam.worst_defect() <= UNITARITY_TOL);
    }

    #[test]
    fn members_within_a_family_differ() {
        let fam = UnitaryFamily::haar(2, 3, 5, 0).unwrap();
        assert!(fam.member(0).max_abs_diff(fam.member(1)) > 1e-3);
    }

    #[test]
    fn streams_give_distinct_families() {
        let a = UnitaryFamily::haar(2, 3, 5, 0).unwrap();
        let b = UnitaryFamily::haar(2, 3, 5, 1).unwrap();
        assert!(a.member(0).max_abs_diff(b.member(0)) > 1e-3);
        let a2 = UnitaryFamily::haar(2, 3, 5, 0).unwrap();
        assert_eq!(a.member(0).entries(), a2.member(0).entries());
    }

    #[test]
    fn rejects_non_unitary_members() {
        let bad = ComplexMatrix::identity(2).scale(Complex64::new(0.9, 0.0));
        assert!(UnitaryFamily::new(vec![bad]).is_err());
    }

    #[test]
    fn adjoint_closed_construction() {
        let fam = UnitaryFamily::haar_adjoint_closed(2, 3, 7, 0).unwrap();
        assert_eq!(fam.n(), 4);
        assert!(fam.is_adjoint_closed(1e-12));
        let open = UnitaryFamily::haar(3, 3, 7, 0).unwrap();
        assert!(!open.is_adjoint_closed(1e-6));
    }

    #[test]
    fn degenerate_dimension_one() {
        let fam = UnitaryFamily::haar(2, 1, 3, 0).unwrap();
        assert_eq!(fam.dim(), 1);
        for m in fam.members() {
            assert!((m[(0, 0)].norm() - 1.0).abs() < 1e-12);
        }
    }
}
