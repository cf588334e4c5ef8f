//! SU(2) elements, the quaternion embedding, and the double cover of SO(3).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::haar::haar_unitary_rng;
use crate::linalg::rng::stream_rng;
use crate::linalg::ComplexMatrix;
use crate::lps::quaternion::IntegerQuaternion;

/// A 2×2 unitary with determinant 1 (within 1e−10 of both).
#[derive(Debug, Clone)]
pub struct SU2Element {
    mat: ComplexMatrix,
}

impl SU2Element {
    pub fn new(mat: ComplexMatrix) -> Result<Self> {
        if mat.rows() != 2 || mat.cols() != 2 {
            return Err(Error::InvalidArgument("SU(2) elements are 2x2".into()));
        }
        let defect = mat.unitarity_defect();
        if defect > 1e-10 {
            return Err(Error::InvalidArgument(format!(
                "not unitary: defect {defect:.3e}"
            )));
        }
        let det = mat[(0, 0)] * mat[(1, 1)] - mat[(0, 1)] * mat[(1, 0)];
        if (det - Complex64::new(1.0, 0.0)).norm() > 1e-10 {
            return Err(Error::InvalidArgument(format!(
                "determinant {det} is not 1"
            )));
        }
        Ok(Self { mat })
    }

    pub fn identity() -> Self {
        Self {
            mat: ComplexMatrix::identity(2),
        }
    }

    pub fn mat(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn inverse(&self) -> Self {
        Self {
            mat: self.mat.dagger(),
        }
    }

    pub fn mul(&self, other: &SU2Element) -> Self {
        Self {
            mat: self.mat.mul(&other.mat),
        }
    }

    /// SU(2) traces are real: tr = 2·Re(g₀₀).
    pub fn trace(&self) -> f64 {
        self.mat.trace().re
    }

    /// Haar sample: a Haar U(2) matrix divided by a square root of its
    /// determinant. Either branch of the root yields Haar on SU(2).
    pub fn haar(seed: u64, stream: u64) -> Result<Self> {
        let mut rng = stream_rng(seed, stream);
        Self::haar_rng(&mut rng)
    }

    pub fn haar_rng(rng: &mut rand_chacha::ChaCha8Rng) -> Result<Self> {
        let u = haar_unitary_rng(2, rng)?;
        let det = u[(0, 0)] * u[(1, 1)] - u[(0, 1)] * u[(1, 0)];
        let half_phase = Complex64::from_polar(1.0, det.arg() / 2.0);
        Self::new(u.scale(half_phase.conj()))
    }
}

/// Embeds a norm-p integer quaternion as the SU(2) matrix
/// [[a+bi, c+di], [−c+di, a−bi]] / √p. Quaternion conjugation lands on the
/// matrix inverse.
pub fn quaternion_to_su2(q: &IntegerQuaternion, p: u64) -> Result<SU2Element> {
    if q.norm() != p as i64 {
        return Err(Error::InvalidArgument(format!(
            "quaternion norm {} does not match p = {p}",
            q.norm()
        )));
    }
    let s = 1.0 / (p as f64).sqrt();
    let (a, b, c, d) = (q.a as f64, q.b as f64, q.c as f64, q.d as f64);
    let mat = ComplexMatrix::new(
        2,
        2,
        vec![
            Complex64::new(a * s, b * s),
            Complex64::new(c * s, d * s),
            Complex64::new(-c * s, d * s),
            Complex64::new(a * s, -b * s),
        ],
    )?;
    SU2Element::new(mat)
}

const PAULI: [[[f64; 2]; 4]; 3] = {
    // σ_x, σ_y, σ_z as (re, im) pairs in row-major order
    [
        [[0.0, 0.0], [1.0, 0.0], [1.0, 0.0], [0.0, 0.0]],
        [[0.0, 0.0], [0.0, -1.0], [0.0, 1.0], [0.0, 0.0]],
        [[1.0, 0.0], [0.0, 0.0], [0.0, 0.0], [-1.0, 0.0]],
    ]
};

fn pauli(axis: usize) -> ComplexMatrix {
    let entries = PAULI[axis]
        .iter()
        .map(|&[re, im]| Complex64::new(re, im))
        .collect();
    ComplexMatrix::new(2, 2, entries).expect("static Pauli data")
}

/// The rotation induced by conjugation on the Pauli basis:
/// R(g)_{ab} = ½ tr(σ_a · g · σ_b · g†). Both g and −g map to the same
/// rotation; the result is orthogonal with determinant 1.
pub fn su2_to_so3(g: &SU2Element) -> ComplexMatrix {
    let gd = g.mat().dagger();
    let mut r = ComplexMatrix::zeros(3, 3);
    for a in 0..3 {
        let left = pauli(a).mul(g.mat());
        for b in 0..3 {
            let val = left.mul(&pauli(b)).mul(&gd).trace();
            r[(a, b)] = Complex64::new(0.5 * val.re, 0.0);
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lps::quaternion::lps_quaternions;

    fn det3(m: &ComplexMatrix) -> f64 {
        let e = |r: usize, c: usize| m[(r, c)].re;
        e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1))
            - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
            + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0))
    }

    #[test]
    fn unit_quaternion_embeds_to_identity() {
        let q = IntegerQuaternion::new(1, 0, 0, 0);
        let g = quaternion_to_su2(&q, 1).unwrap();
        assert!(g.mat().max_abs_diff(&ComplexMatrix::identity(2)) < 1e-15);
    }

    #[test]
    fn norm_mismatch_rejected() {
        let q = IntegerQuaternion::new(1, 2, 0, 0);
        assert!(quaternion_to_su2(&q, 13).is_err());
    }

    #[test]
    fn p5_trace_and_unitarity() {
        let g = quaternion_to_su2(&IntegerQuaternion::new(1, 2, 0, 0), 5).unwrap();
        assert!((g.trace() - 2.0 / 5.0f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn conjugate_quaternion_embeds_to_inverse() {
        for q in lps_quaternions(13).unwrap() {
            let g = quaternion_to_su2(&q, 13).unwrap();
            let ginv = quaternion_to_su2(&q.conjugate(), 13).unwrap();
            let prod = g.mat().mul(ginv.mat());
            assert!(prod.max_abs_diff(&ComplexMatrix::identity(2)) < 1e-12);
        }
    }

    #[test]
    fn embedding_is_multiplicative_up_to_norm() {
        // E(q)·E(q') = E(q·q')/√(p·p)
        let qs = lps_quaternions(5).unwrap();
        let g0 = quaternion_to_su2(&qs[0], 5).unwrap();
        let g1 = quaternion_to_su2(&qs[2], 5).unwrap();
        let prod_q = qs[0].mul(&qs[2]);
        assert_eq!(prod_q.norm(), 25);
        let s = 1.0 / 5.0;
        let expect = ComplexMatrix::new(
            2,
            2,
            vec![
                Complex64::new(prod_q.a as f64 * s, prod_q.b as f64 * s),
                Complex64::new(prod_q.c as f64 * s, prod_q.d as f64 * s),
                Complex64::new(-prod_q.c as f64 * s, prod_q.d as f64 * s),
                Complex64::new(prod_q.a as f64 * s, -prod_q.b as f64 * s),
            ],
        )
        .unwrap();
        assert!(g0.mat().mul(g1.mat()).max_abs_diff(&expect) < 1e-12);
    }

    #[test]
    fn cover_kernel_and_identity() {
        let id = SU2Element::identity();
        let r = su2_to_so3(&id);
        assert!(r.max_abs_diff(&ComplexMatrix::identity(3)) < 1e-13);
        let neg =
            SU2Element::new(ComplexMatrix::identity(2).scale(Complex64::new(-1.0, 0.0))).unwrap();
        let rneg = su2_to_so3(&neg);
        assert!(rneg.max_abs_diff(&ComplexMatrix::identity(3)) < 1e-13);
    }

    #[test]
    fn rotation_is_special_orthogonal_homomorphism() {
        let g = SU2Element::haar(4, 0).unwrap();
        let h = SU2Element::haar(4, 1).unwrap();
        let rg = su2_to_so3(&g);
        let rh = su2_to_so3(&h);
        assert!(rg.unitarity_defect() < 1e-10);
        assert!((det3(&rg) - 1.0).abs() < 1e-10);
        let rgh = su2_to_so3(&g.mul(&h));
        assert!(rg.mul(&rh).max_abs_diff(&rgh) < 1e-11);
    }

    #[test]
    fn character_identity_on_random_elements() {
        // tr R(g) = |tr g|² − 1
        for stream in 0..6 {
            let g = SU2Element::haar(9, stream).unwrap();
            let r = su2_to_so3(&g);
            let lhs = r.trace().re;
            let tr = g.trace();
            assert!((lhs - (tr * tr - 1.0)).abs() < 1e-9);
        }
    }

    #[test]
    fn haar_su2_has_det_one() {
        for stream in 0..5 {
            let g = SU2Element::haar(100, stream).unwrap();
            let m = g.mat();
            let det = m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)];
            assert!((det - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        }
    }
}
