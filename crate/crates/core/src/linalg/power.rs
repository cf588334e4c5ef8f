//! Matrix-free largest-singular-value solver.
//!
//! Power iteration runs on the PSD composition adjoint∘apply — never on the
//! map itself, which need not be normal. Every Rayleigh quotient along the
//! way is a certified lower bound on the squared operator norm, so the
//! reported value can undershoot but never overshoot the truth.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::hs::HSMatrix;
use crate::linalg::matrix::ComplexMatrix;
use crate::linalg::rng::{ginibre, stream_rng};

/// Solver parameters. `tol` applies to the squared singular value; the
/// reported value is the square root of the converged PSD eigenvalue.
#[derive(Debug, Clone)]
pub struct PowerOpts {
    pub tol: f64,
    pub max_iter: usize,
    pub restarts: usize,
    pub seed: u64,
}

impl Default for PowerOpts {
    fn default() -> Self {
        Self {
            tol: 1e-9,
            max_iter: 5000,
            restarts: 3,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SingularReport {
    /// Best singular-value estimate found; a lower bound on the true norm.
    pub value: f64,
    /// Unit HS-norm vector attaining `value` as ‖apply(witness)‖₂.
    pub witness: HSMatrix,
    pub converged: bool,
    /// Total power-iteration steps summed over all starts.
    pub iterations: usize,
}

/// Reserved stream index for the adjointness probe, so trial streams
/// 0, 1, 2, … stay free for restarts.
const PROBE_STREAM: u64 = u64::MAX;

fn check_adjoint_pair<A, B>(
    apply: &A,
    adjoint_apply: &B,
    shape: (usize, usize),
    seed: u64,
) -> Result<()>
where
    A: Fn(&ComplexMatrix) -> ComplexMatrix,
    B: Fn(&ComplexMatrix) -> ComplexMatrix,
{
    let mut rng = stream_rng(seed, PROBE_STREAM);
    for probe in 0..10 {
        let x = ginibre(shape.0, shape.1, &mut rng);
        let y = ginibre(shape.0, shape.1, &mut rng);
        let lhs = apply(&x).frobenius_inner(&y);
        let rhs = x.frobenius_inner(&adjoint_apply(&y));
        let bound = 1e-8 * x.hs_norm() * y.hs_norm();
        if (lhs - rhs).norm() > bound {
            return Err(Error::ContractViolation(format!(
                "apply/adjoint_apply are not adjoint: probe {probe} residual {:.3e} > {bound:.3e}",
                (lhs - rhs).norm()
            )));
        }
    }
    Ok(())
}

/// One power-iteration run on the PSD map x ↦ adjoint(apply(x)). Returns the
/// final Rayleigh quotient (an eigenvalue estimate of the PSD composition),
/// the final unit iterate, the per-step estimates, and the convergence flag.
pub(crate) fn power_iterate_psd<A, B>(
    apply: &A,
    adjoint_apply: &B,
    start: &ComplexMatrix,
    tol: f64,
    max_iter: usize,
) -> (f64, ComplexMatrix, Vec<f64>, bool)
where
    A: Fn(&ComplexMatrix) -> ComplexMatrix,
    B: Fn(&ComplexMatrix) -> ComplexMatrix,
{
    let mut x = {
        let norm = start.hs_norm();
        assert!(norm > 0.0, "power iteration requires a nonzero start");
        start.scale(Complex64::new(1.0 / norm, 0.0))
    };
    let mut history = Vec::new();
    let mut last = f64::NEG_INFINITY;
    let mut converged = false;

    for _ in 0..max_iter {
        let y = adjoint_apply(&apply(&x));
        // x has unit norm, so the Rayleigh quotient is a plain inner product.
        let lambda = x.frobenius_inner(&y).re.max(0.0);
        history.push(lambda);
        let ynorm = y.hs_norm();
        if ynorm <= f64::MIN_POSITIVE {
            // The map annihilates x: zero is an exact eigenvalue here.
            converged = true;
            break;
        }
        if last > f64::NEG_INFINITY && (lambda - last).abs() < tol {
            x = y.scale(Complex64::new(1.0 / ynorm, 0.0));
            converged = true;
            break;
        }
        last = lambda;
        x = y.scale(Complex64::new(1.0 / ynorm, 0.0));
    }
    let lambda = history.last().copied().unwrap_or(0.0);
    (lambda, x, history, converged)
}

/// Largest singular value of a linear map on Hilbert-Schmidt space given
/// matrix-free `apply` and `adjoint_apply` callbacks.
///
/// Starts from the (truncated) identity direction plus `restarts` random
/// starts; keeps the largest Rayleigh-quotient root over all runs. The pair
/// is probed for adjointness on random vectors before any iteration.
pub fn top_singular_value<A, B>(
    apply: A,
    adjoint_apply: B,
    shape: (usize, usize),
    opts: &PowerOpts,
) -> Result<SingularReport>
where
    A: Fn(&ComplexMatrix) -> ComplexMatrix,
    B: Fn(&ComplexMatrix) -> ComplexMatrix,
{
    if shape.0 == 0 || shape.1 == 0 {
        return Err(Error::InvalidArgument("shape must be positive".into()));
    }
    check_adjoint_pair(&apply, &adjoint_apply, shape, opts.seed)?;

    let mut best_lambda = f64::NEG_INFINITY;
    let mut best_x: Option<ComplexMatrix> = None;
    let mut best_converged = false;
    let mut total_iters = 0usize;

    for trial in 0..=opts.restarts {
        let start = if trial == 0 {
            ComplexMatrix::truncated_identity(shape.0, shape.1)
        } else {
            let mut rng = stream_rng(opts.seed, trial as u64 - 1);
            ginibre(shape.0, shape.1, &mut rng)
        };
        let (lambda, x, history, converged) =
            power_iterate_psd(&apply, &adjoint_apply, &start, opts.tol, opts.max_iter);
        total_iters += history.len();
        if lambda > best_lambda {
            best_lambda = lambda;
            best_x = Some(x);
            best_converged = converged;
        }
    }

    let witness = HSMatrix::new(best_x.expect("at least one start ran"));
    Ok(SingularReport {
        value: best_lambda.max(0.0).sqrt(),
        witness,
        converged: best_converged,
        iterations: total_iters,
    })
}
