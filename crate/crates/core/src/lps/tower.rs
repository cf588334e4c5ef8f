//! Representation towers: one generator family pushed through every
//! irreducible block up to a degree cutoff.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::linalg::eigen::dense_operator_norm;
use crate::linalg::power::PowerOpts;
use crate::linalg::{ComplexMatrix, UnitaryFamily};
use crate::lps::irrep::irrep_matrix;
use crate::lps::quaternion::{lps_quaternions, IntegerQuaternion};
use crate::lps::su2::{quaternion_to_su2, SU2Element};
use crate::tensor::form::QuadraticForm;
use crate::tensor::norm::{min_tensor_norm, NormReport};

/// Unitarity tolerance for representation blocks.
const BLOCK_TOL: f64 = 1e-9;

/// Generators in SU(2) together with their images in every irreducible
/// block of degree 0..=cutoff.
#[derive(Debug, Clone)]
pub struct RepresentationTower {
    prime: u64,
    quaternions: Vec<IntegerQuaternion>,
    generators: Vec<SU2Element>,
    blocks: Vec<UnitaryFamily>,
}

impl RepresentationTower {
    /// Builds the norm-p quaternion tower with blocks for m = 0..=cutoff.
    pub fn lps(p: u64, degree_cutoff: usize) -> Result<Self> {
        let quaternions = lps_quaternions(p)?;
        let generators: Vec<SU2Element> = quaternions
            .iter()
            .map(|q| quaternion_to_su2(q, p))
            .collect::<Result<_>>()?;
        let blocks = build_blocks(&generators, degree_cutoff)?;
        Ok(Self {
            prime: p,
            quaternions,
            generators,
            blocks,
        })
    }

    /// A tower over arbitrary SU(2) generators (no quaternion data).
    pub fn from_generators(generators: Vec<SU2Element>, degree_cutoff: usize) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidArgument("need at least one generator".into()));
        }
        let blocks = build_blocks(&generators, degree_cutoff)?;
        Ok(Self {
            prime: 0,
            quaternions: Vec::new(),
            generators,
            blocks,
        })
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn n(&self) -> usize {
        self.generators.len()
    }

    pub fn degree_cutoff(&self) -> usize {
        self.blocks.len() - 1
    }

    pub fn quaternions(&self) -> &[IntegerQuaternion] {
        &self.quaternions
    }

    pub fn generators(&self) -> &[SU2Element] {
        &self.generators
    }

    /// The family (π_m(ω₁), …, π_m(ω_n)).
    pub fn block(&self, m: usize) -> Result<&UnitaryFamily> {
        self.blocks.get(m).ok_or_else(|| {
            Error::InvalidArgument(format!(
                "degree {m} exceeds the tower cutoff {}",
                self.degree_cutoff()
            ))
        })
    }

    /// ‖Σᵢ π_m(ωᵢ)‖ for one block. With `strict` set, the constants block
    /// m = 0 is refused — it sits outside the space orthogonal to constants
    /// and its norm is trivially n.
    pub fn rho_block_norm(&self, m: usize, strict: bool) -> Result<f64> {
        if m == 0 && strict {
            return Err(Error::InvalidArgument(
                "m = 0 is the constants block; excluded in strict mode".into(),
            ));
        }
        let fam = self.block(m)?;
        let mut sum = ComplexMatrix::zeros(fam.dim(), fam.dim());
        for member in fam.members() {
            sum = sum.add(member);
        }
        dense_operator_norm(&sum)
    }

    /// Largest block norm over m in [1, cutoff], with its argmax degree.
    pub fn max_block_norm(&self) -> Result<(f64, usize)> {
        let mut best = (f64::NEG_INFINITY, 0);
        for m in 1..=self.degree_cutoff() {
            let v = self.rho_block_norm(m, true)?;
            if v > best.0 {
                best = (v, m);
            }
        }
        Ok(best)
    }

    /// ‖Σᵢ π_m(ωᵢ) ⊗ conj(π_{m'}(ωᵢ))‖ by the matrix-free solver. Equal
    /// degrees are allowed (the diagonal case of the cross-term family).
    pub fn cross_tensor_norm(
        &self,
        m: usize,
        m_prime: usize,
        opts: &PowerOpts,
    ) -> Result<NormReport> {
        let left = self.block(m)?.members().to_vec();
        let right = self.block(m_prime)?.members().to_vec();
        min_tensor_norm(&QuadraticForm::new(left, right)?, opts)
    }

    /// Whether the generator list is closed under inverses.
    pub fn is_inverse_closed(&self, tol: f64) -> bool {
        self.generators.iter().all(|g| {
            let inv = g.inverse();
            self.generators
                .iter()
                .any(|h| inv.mat().max_abs_diff(h.mat()) <= tol)
        })
    }

    /// JSON export: exact integer quaternions, reals at 17 significant
    /// digits, stable field order.
    pub fn to_json(&self) -> String {
        let mut s = String::new();
        s.push_str("{\n  \"prime\": ");
        let _ = write!(s, "{}", self.prime);
        let _ = write!(s, ",\n  \"n\": {}", self.n());
        let _ = write!(s, ",\n  \"degree_cutoff\": {}", self.degree_cutoff());
        s.push_str(",\n  \"quaternions\": [");
        for (i, q) in self.quaternions.iter().enumerate() {
            if i > 0 {
                s.push_str(", ");
            }
            let _ = write!(s, "[{}, {}, {}, {}]", q.a, q.b, q.c, q.d);
        }
        s.push_str("],\n  \"generators\": [");
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                s.push_str(", ");
            }
            push_matrix_json(&mut s, g.mat());
        }
        s.push_str("],\n  \"blocks\": [");
        for (m, fam) in self.blocks.iter().enumerate() {
            if m > 0 {
                s.push_str(", ");
            }
            let _ = write!(s, "{{\"degree\": {m}, \"members\": [");
            for (i, mat) in fam.members().iter().enumerate() {
                if i > 0 {
                    s.push_str(", ");
                }
                push_matrix_json(&mut s, mat);
            }
            s.push_str("]}");
        }
        s.push_str("]\n}\n");
        s
    }
}

fn build_blocks(generators: &[SU2Element], cutoff: usize) -> Result<Vec<UnitaryFamily>> {
    (0..=cutoff)
        .map(|m| {
            let members: Vec<ComplexMatrix> = generators
                .iter()
                .map(|g| irrep_matrix(g, m).into_matrix())
                .collect();
            UnitaryFamily::with_tolerance(members, BLOCK_TOL)
        })
        .collect()
}

/// Matrix as nested JSON arrays of [re, im] pairs, 17 significant digits.
fn push_matrix_json(s: &mut String, m: &ComplexMatrix) {
    s.push('[');
    for r in 0..m.rows() {
        if r > 0 {
            s.push_str(", ");
        }
        s.push('[');
        for c in 0..m.cols() {
            if c > 0 {
                s.push_str(", ");
            }
            let z = m[(r, c)];
            let _ = write!(s, "[{:.16e}, {:.16e}]", z.re, z.im);
        }
        s.push(']');
    }
    s.push(']');
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tower_blocks_are_recomputable() {
        let tower = RepresentationTower::lps(5, 4).unwrap();
        assert_eq!(tower.n(), 6);
        for m in 0..=4 {
            let fam = tower.block(m).unwrap();
            assert_eq!(fam.dim(), m + 1);
            for (i, g) in tower.generators().iter().enumerate() {
                let fresh = irrep_matrix(g, m);
                assert!(fam.member(i).max_abs_diff(fresh.matrix()) < 1e-14);
            }
        }
    }

    #[test]
    fn generators_closed_under_inverses_and_blocks_self_adjoint() {
        let tower = RepresentationTower::lps(5, 12).unwrap();
        assert!(tower.is_inverse_closed(1e-12));
        for m in 0..=12 {
            let fam = tower.block(m).unwrap();
            let mut sum = ComplexMatrix::zeros(fam.dim(), fam.dim());
            for member in fam.members() {
                sum = sum.add(member);
            }
            let defect = sum.sub(&sum.dagger()).hs_norm();
            assert!(
                defect <= 1e-9,
                "m={m}: self-adjointness defect {defect:.2e}"
            );
        }
    }

    #[test]
    fn constants_block_norm_is_n() {
        let tower = RepresentationTower::lps(5, 2).unwrap();
        assert!(matches!(
            tower.rho_block_norm(0, true),
            Err(Error::InvalidArgument(_))
        ));
        let v = tower.rho_block_norm(0, false).unwrap();
        assert!((v - 6.0).abs() < 1e-12);
    }

    #[test]
    fn first_block_of_p5_by_hand() {
        // the six embedded generators sum to (6/√5)·I
        let tower = RepresentationTower::lps(5, 1).unwrap();
        let v = tower.rho_block_norm(1, true).unwrap();
        assert!((v - 6.0 / 5.0f64.sqrt()).abs() < 1e-10, "got {v}");
    }

    #[test]
    fn block_norms_respect_ramanujan_bound_small_range() {
        let tower = RepresentationTower::lps(5, 12).unwrap();
        let bound = 2.0 * 5.0f64.sqrt();
        for m in 1..=12 {
            let v = tower.rho_block_norm(m, true).unwrap();
            assert!(v <= bound + 1e-6, "m={m}: {v} > {bound}");
        }
    }

    #[test]
    fn cross_norm_with_trivial_equals_block_norm() {
        let tower = RepresentationTower::lps(5, 3).unwrap();
        let direct = tower.rho_block_norm(2, true).unwrap();
        let cross = tower
            .cross_tensor_norm(2, 0, &PowerOpts::default())
            .unwrap();
        assert!(
            (direct - cross.value).abs() < 1e-7,
            "block {direct} vs cross {}",
            cross.value
        );
    }

    #[test]
    fn json_export_shape() {
        let tower = RepresentationTower::lps(5, 1).unwrap();
        let json = tower.to_json();
        assert!(json.contains("\"prime\": 5"));
        assert!(json.contains("\"degree_cutoff\": 1"));
        assert!(json.contains("[1, -2, 0, 0]"));
        // 17 significant digits on reals
        assert!(json.contains("e0") || json.contains("e-"));
    }
}
