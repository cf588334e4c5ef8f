//! Minimal tensor norms of quadratic forms via the matrix-free solver.

use crate::error::{Error, Result};
use crate::linalg::power::{top_singular_value, PowerOpts, SingularReport};
use crate::linalg::{ComplexMatrix, HSMatrix, UnitaryFamily};
use crate::tensor::form::QuadraticForm;

/// Relative unitarity tolerance used when an operation insists on unitary
/// input (defect ≤ tol·√N).
pub const INPUT_UNITARITY_TOL: f64 = 1e-8;

/// Result of a minimal-tensor-norm evaluation. `value` is certified from
/// below only: it can undershoot the true norm but not overshoot it.
#[derive(Debug, Clone)]
pub struct NormReport {
    pub value: f64,
    pub converged: bool,
    pub iterations: usize,
    pub witness: HSMatrix,
    /// Reference constant 2√(n−1): the sharp lower bound for unitary families.
    pub lower_bound_2sqrt: f64,
    /// Reference constant n: the triangle-inequality upper bound for
    /// unitary families.
    pub upper_bound_n: f64,
}

/// The sharp spectral constant 2√(n−1).
pub fn lower_bound_constant(n: usize) -> f64 {
    2.0 * ((n as f64) - 1.0).max(0.0).sqrt()
}

/// ‖Σ aᵢ ⊗ b̄ᵢ‖ in the minimal tensor norm: the largest singular value of
/// t ↦ Σ aᵢ t bᵢ† on S₂, found by restarted power iteration.
pub fn min_tensor_norm(form: &QuadraticForm, opts: &PowerOpts) -> Result<NormReport> {
    let n = form.n();
    let report: SingularReport = top_singular_value(
        |t: &ComplexMatrix| form.apply_raw(t),
        |t: &ComplexMatrix| form.adjoint_apply_raw(t),
        form.domain_shape(),
        opts,
    )?;
    let upper = n as f64;
    if form.is_unitary_pair(INPUT_UNITARITY_TOL) && report.value > upper + 1e-6 {
        return Err(Error::ContractViolation(format!(
            "norm estimate {} exceeds the triangle bound n = {upper}",
            report.value
        )));
    }
    Ok(NormReport {
        value: report.value,
        converged: report.converged,
        iterations: report.iterations,
        witness: report.witness,
        lower_bound_2sqrt: lower_bound_constant(n),
        upper_bound_n: upper,
    })
}

/// Convenience wrapper for the diagonal case Σ uᵢ ⊗ ūᵢ.
pub fn min_tensor_norm_conjugate(u: &UnitaryFamily, opts: &PowerOpts) -> Result<NormReport> {
    min_tensor_norm(&QuadraticForm::conjugate_pair(u), opts)
}

/// ‖Σ uᵢ ⊗ ūᵢ‖ − 2√(n−1): nonnegative (within solver slack) for every
/// unitary family. Rejects input whose unitarity defect exceeds
/// `INPUT_UNITARITY_TOL`·√N.
pub fn lower_bound_gap(u: &UnitaryFamily, opts: &PowerOpts) -> Result<f64> {
    lower_bound_gap_with_tolerance(u, opts, INPUT_UNITARITY_TOL)
}

/// [`lower_bound_gap`] with a caller-chosen relative unitarity tolerance.
pub fn lower_bound_gap_with_tolerance(
    u: &UnitaryFamily,
    opts: &PowerOpts,
    unitarity_tol: f64,
) -> Result<f64> {
    if u.worst_defect() > unitarity_tol {
        return Err(Error::InvalidArgument(format!(
            "family is not unitary within {unitarity_tol:.1e}·√N (defect {:.3e}·√N)",
            u.worst_defect()
        )));
    }
    let report = min_tensor_norm_conjugate(u, opts)?;
    Ok(report.value - report.lower_bound_2sqrt)
}

#[derive(Debug, Clone)]
pub struct HaagerupReport {
    /// ‖Σ aᵢ ⊗ b̄ᵢ‖, the mixed norm.
    pub mixed: f64,
    /// ‖Σ aᵢ ⊗ āᵢ‖ and ‖Σ bᵢ ⊗ b̄ᵢ‖, the diagonal norms.
    pub diag_a: f64,
    pub diag_b: f64,
    /// √(diag_a·diag_b) − mixed; ≥ 0 up to solver slack.
    pub slack: f64,
    pub converged: bool,
}

/// Slack in the cross-term bound
/// ‖Σ aᵢ ⊗ b̄ᵢ‖ ≤ ‖Σ aᵢ ⊗ āᵢ‖^{1/2}·‖Σ bᵢ ⊗ b̄ᵢ‖^{1/2},
/// evaluated with three solver runs.
pub fn haagerup_slack(
    a: &[ComplexMatrix],
    b: &[ComplexMatrix],
    opts: &PowerOpts,
) -> Result<HaagerupReport> {
    if a.len() != b.len() {
        return Err(Error::InvalidArgument(format!(
            "families must have equal counts, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    let mixed = min_tensor_norm(&QuadraticForm::new(a.to_vec(), b.to_vec())?, opts)?;
    let diag_a = min_tensor_norm(&QuadraticForm::new(a.to_vec(), a.to_vec())?, opts)?;
    let diag_b = min_tensor_norm(&QuadraticForm::new(b.to_vec(), b.to_vec())?, opts)?;
    let rhs = (diag_a.value * diag_b.value).sqrt();
    Ok(HaagerupReport {
        mixed: mixed.value,
        diag_a: diag_a.value,
        diag_b: diag_b.value,
        slack: rhs - mixed.value,
        converged: mixed.converged && diag_a.converged && diag_b.converged,
    })
}
