//! Irreducible SU(2) representation matrices on homogeneous polynomials.
//!
//! π_m acts on the degree-m homogeneous polynomials in two complex
//! variables by (π_m(g)f)(v) = f(gᵀv), written in the orthonormal monomial
//! basis e_k = z^{m−k} w^k / √((m−k)!·k!). The square-root binomial
//! normalization makes every π_m(g) exactly unitary (not merely similar to
//! unitary), and the transpose in the action keeps g ↦ π_m(g)
//! multiplicative with π₁(g) = g on the nose.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::lps::su2::SU2Element;

/// Representation matrix of one group element at a fixed degree.
#[derive(Debug, Clone)]
pub struct IrrepMatrix {
    degree: usize,
    matrix: ComplexMatrix,
}

impl IrrepMatrix {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.degree + 1
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }
}

/// Exact binomial coefficient as f64 (all values used here fit u64).
fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= (n - i) as u128;
        den *= (i + 1) as u128;
    }
    (num / den) as f64
}

/// Coefficients over z-degree of (x·z + y·w)^e.
fn binomial_expand(x: Complex64, y: Complex64, e: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); e + 1];
    let mut xp = vec![Complex64::new(1.0, 0.0); e + 1];
    let mut yp = vec![Complex64::new(1.0, 0.0); e + 1];
    for i in 1..=e {
        xp[i] = xp[i - 1] * x;
        yp[i] = yp[i - 1] * y;
    }
    for (r, slot) in out.iter_mut().enumerate() {
        *slot = xp[r] * yp[e - r] * binomial(e, r);
    }
    out
}

/// π_m(g): the (m+1)×(m+1) unitary matrix of g on degree-m homogeneous
/// polynomials. Degree 0 is the trivial representation; degree 1 is g
/// itself.
pub fn irrep_matrix(g: &SU2Element, m: usize) -> IrrepMatrix {
    let gm = g.mat();
    let (g00, g01, g10, g11) = (gm[(0, 0)], gm[(0, 1)], gm[(1, 0)], gm[(1, 1)]);
    let mut matrix = ComplexMatrix::zeros(m + 1, m + 1);
    for k in 0..=m {
        // (z')^{m−k}·(w')^k with z' = g00·z + g10·w and w' = g01·z + g11·w
        let za = binomial_expand(g00, g10, m - k);
        let wb = binomial_expand(g01, g11, k);
        let mut coeff = vec![Complex64::new(0.0, 0.0); m + 1];
        for (r, a) in za.iter().enumerate() {
            for (s, b) in wb.iter().enumerate() {
                coeff[r + s] += a * b;
            }
        }
        let ck = binomial(m, k);
        for j in 0..=m {
            // monomial z^{m−j} w^j picks coefficient index m−j
            let scale = (ck / binomial(m, j)).sqrt();
            matrix[(j, k)] = coeff[m - j] * scale;
        }
    }
    IrrepMatrix { degree: m, matrix }
}

/// Character χ_m(g) = tr π_m(g).
pub fn character(g: &SU2Element, m: usize) -> Complex64 {
    irrep_matrix(g, m).matrix.trace()
}

/// Closed-form character at rotation angle θ (eigenphases e^{±iθ}):
/// sin((m+1)θ)/sin(θ), continued through θ ∈ {0, π}.
pub fn character_closed_form(m: usize, theta: f64) -> f64 {
    let s = theta.sin();
    if s.abs() < 1e-9 {
        // θ near a multiple of π: χ = (m+1)·cos(mθ) at the limit
        return (m as f64 + 1.0) * (m as f64 * theta).cos();
    }
    ((m as f64 + 1.0) * theta).sin() / s
}

/// Max residual of the product rule χ_m·conj(χ_{m'}) = Σ_{k} χ_k (k from
/// |m−m'| to m+m' in steps of 2) over Haar samples.
pub fn clebsch_gordan_check(m: usize, m_prime: usize, samples: usize, seed: u64) -> Result<f64> {
    if samples == 0 {
        return Err(Error::InvalidArgument("need at least one sample".into()));
    }
    let mut worst: f64 = 0.0;
    for trial in 0..samples {
        let g = SU2Element::haar(seed, trial as u64)?;
        let lhs = character(&g, m) * character(&g, m_prime).conj();
        let lo = m.abs_diff(m_prime);
        let hi = m + m_prime;
        let mut rhs = Complex64::new(0.0, 0.0);
        let mut k = lo;
        while k <= hi {
            rhs += character(&g, k);
            k += 2;
        }
        worst = worst.max((lhs - rhs).norm());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rng::stream_rng;

    fn diag_su2(theta: f64) -> SU2Element {
        let m = ComplexMatrix::new(
            2,
            2,
            vec![
                Complex64::from_polar(1.0, theta),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::from_polar(1.0, -theta),
            ],
        )
        .unwrap();
        SU2Element::new(m).unwrap()
    }

    #[test]
    fn degree_zero_is_trivial() {
        let g = SU2Element::haar(3, 0).unwrap();
        let rep = irrep_matrix(&g, 0);
        assert_eq!(rep.dim(), 1);
        assert!((rep.matrix()[(0, 0)] - Complex64::new(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn degree_one_is_defining() {
        let g = SU2Element::haar(5, 0).unwrap();
        let rep = irrep_matrix(&g, 1);
        assert!(rep.matrix().max_abs_diff(g.mat()) < 1e-13);
    }

    #[test]
    fn diagonal_characters_match_closed_form() {
        for m in 0..=20 {
            for &theta in &[0.3, 1.1, 2.9, 0.0001] {
                let chi = character(&diag_su2(theta), m);
                let expect = character_closed_form(m, theta);
                assert!(chi.im.abs() < 1e-9, "m={m} θ={theta}");
                assert!(
                    (chi.re - expect).abs() < 1e-9,
                    "m={m} θ={theta}: {} vs {expect}",
                    chi.re
                );
            }
        }
    }

    #[test]
    fn representation_matrices_are_unitary() {
        for stream in 0..3 {
            let g = SU2Element::haar(7, stream).unwrap();
            for m in 0..=20 {
                let rep = irrep_matrix(&g, m);
                let defect = rep.matrix().unitarity_defect();
                assert!(defect <= 1e-9, "m={m}: defect {defect:.2e}");
            }
        }
    }

    #[test]
    fn multiplicativity_over_random_pairs() {
        let mut rng = stream_rng(2, 0);
        for m in 0..=20 {
            for _ in 0..20 {
                let g = SU2Element::haar_rng(&mut rng).unwrap();
                let h = SU2Element::haar_rng(&mut rng).unwrap();
                let lhs = irrep_matrix(&g.mul(&h), m);
                let rhs = irrep_matrix(&g, m)
                    .matrix()
                    .mul(irrep_matrix(&h, m).matrix());
                let resid = lhs.matrix().max_abs_diff(&rhs);
                assert!(resid <= 1e-8, "m={m}: residual {resid:.2e}");
            }
        }
    }

    #[test]
    fn tensor_with_trivial_is_identity_rule() {
        assert!(clebsch_gordan_check(0, 0, 25, 1).unwrap() <= 1e-10);
        assert!(clebsch_gordan_check(1, 0, 25, 2).unwrap() <= 1e-10);
    }

    #[test]
    fn one_times_one_splits_into_zero_and_two() {
        // χ₁·conj(χ₁) = 1 + χ₂, i.e. tr(g ⊗ conj(g)) = 1 + χ₂(g)
        let resid = clebsch_gordan_check(1, 1, 50, 3).unwrap();
        assert!(resid <= 1e-9, "residual {resid:.2e}");
    }

    #[test]
    fn mixed_degrees_obey_the_ladder() {
        let resid = clebsch_gordan_check(3, 2, 40, 4).unwrap();
        assert!(resid <= 1e-8, "residual {resid:.2e}");
        let resid = clebsch_gordan_check(5, 5, 30, 5).unwrap();
        assert!(resid <= 1e-8, "residual {resid:.2e}");
    }
}
