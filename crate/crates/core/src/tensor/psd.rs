//! Alternating ascent over the PSD trace form.
//!
//! The norm of Σ uᵢ ⊗ ūᵢ equals the supremum of tr(Σ uᵢ t uᵢ† · s) over
//! PSD unit-HS-norm t, s. For fixed t the inner maximizer is explicit — the
//! (projected) positive part of Σ uᵢ t uᵢ†, renormalized — so coordinate
//! ascent alternates the two sides. Every iterate value is itself a member
//! of the supremum and hence a valid lower bound on the norm. For families
//! closed under adjoints the supremum restricts to t = s and the ascent
//! becomes a cone-preserving power iteration.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::eigen::psd_part;
use crate::linalg::rng::{ginibre, stream_rng};
use crate::linalg::{ComplexMatrix, UnitaryFamily};
use crate::tensor::form::QuadraticForm;

#[derive(Debug, Clone)]
pub struct PsdAscentOpts {
    /// Stop when the relative improvement drops below this.
    pub rel_tol: f64,
    pub max_rounds: usize,
    pub seed: u64,
}

impl Default for PsdAscentOpts {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            max_rounds: 500,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone)]
pub struct PsdAscentReport {
    /// Best trace-form value reached; a lower bound on ‖Σ uᵢ ⊗ ūᵢ‖.
    pub value: f64,
    pub rounds: usize,
    pub converged: bool,
    /// Whether the ascent ran on the diagonal t = s.
    pub symmetric: bool,
}

/// Symmetrize, clamp negative eigenvalues, renormalize in HS norm. Falls
/// back to a random PSD start if the positive part vanished (which positive
/// inputs cannot produce, but roundoff might on garbage).
fn project_to_cone(a: &ComplexMatrix, rng: &mut rand_chacha::ChaCha8Rng) -> Result<ComplexMatrix> {
    let herm = a.add(&a.dagger()).scale(Complex64::new(0.5, 0.0));
    let pos = psd_part(&herm)?;
    let norm = pos.hs_norm();
    if norm > 1e-300 {
        return Ok(pos.scale(Complex64::new(1.0 / norm, 0.0)));
    }
    let dim = a.rows();
    let g = ginibre(dim, dim, rng);
    let fresh = g.mul(&g.dagger());
    let fresh_norm = fresh.hs_norm();
    Ok(fresh.scale(Complex64::new(1.0 / fresh_norm, 0.0)))
}

/// tr(Σ uᵢ t uᵢ† · s) for PSD t, s — real and nonnegative.
fn trace_form(form: &QuadraticForm, t: &ComplexMatrix, s: &ComplexMatrix) -> f64 {
    form.apply_raw(t).frobenius_inner(s).re
}

/// Maximizes the PSD trace form by alternating ascent from the identity
/// start t = s = I/√N.
pub fn psd_sup_form(u: &UnitaryFamily, opts: &PsdAscentOpts) -> Result<PsdAscentReport> {
    let dim = u.dim();
    let form = QuadraticForm::conjugate_pair(u);
    let symmetric = u.is_adjoint_closed(1e-10);
    let mut rng = stream_rng(opts.seed, 0);

    let start = ComplexMatrix::identity(dim).scale(Complex64::new(1.0 / (dim as f64).sqrt(), 0.0));
    let mut t = start.clone();
    let mut s = start;
    let mut value = trace_form(&form, &t, &s);
    let mut converged = false;
    let mut rounds = 0;

    for round in 1..=opts.max_rounds {
        rounds = round;
        if symmetric {
            // t = s: one cone-projected power step
            let image = form.apply_raw(&t);
            t = project_to_cone(&image, &mut rng)?;
            s = t.clone();
        } else {
            // fix t, maximize s; then fix s, maximize t
            s = project_to_cone(&form.apply_raw(&t), &mut rng)?;
            t = project_to_cone(&form.adjoint_apply_raw(&s), &mut rng)?;
        }
        let next = trace_form(&form, &t, &s);
        let improvement = next - value;
        let scale = next.abs().max(1.0);
        value = value.max(next);
        if improvement.abs() <= opts.rel_tol * scale {
            converged = true;
            break;
        }
    }

    if value < -1e-12 {
        return Err(Error::ContractViolation(format!(
            "PSD trace form came out negative: {value}"
        )));
    }
    Ok(PsdAscentReport {
        value,
        rounds,
        converged,
        symmetric,
    })
}
