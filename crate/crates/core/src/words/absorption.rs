//! Trace-moment absorption check.
//!
//! For X = Σ λ(gᵢ) ⊗ ūᵢ the mixed moments (τ ⊗ tr/N)[(X*X)^m] do not depend
//! on the concrete unitaries uᵢ: only index tuples whose free word cancels
//! formally contribute, and for those the uᵢ-word is the identity no matter
//! what was substituted. The numerical moment must therefore equal the
//! exact identity-pattern count. This is the absorption phenomenon made
//! checkable at finite size.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, UnitaryFamily};
use crate::words::lattice::{count_identity_patterns, for_each_tuple};
use crate::words::letters::{reduce_word, Letter};

/// Enumeration cap: n^{2m} tuples.
const ABSORPTION_CAP: f64 = 1e6;

#[derive(Debug, Clone)]
pub struct AbsorptionMoment {
    /// Σ over identity-reducing tuples of tr(u-word)/N.
    pub moment: f64,
    /// Exact identity-pattern count the moment must reproduce.
    pub count: BigUint,
}

/// Evaluates the mixed trace moment of order m for the family `u` and
/// compares it against the exact walk count. Errors with `TooLarge` when
/// n^{2m} exceeds 10⁶, and with `ContractViolation` if the moment strays
/// from the count by more than 1e−8·count.
pub fn moment_absorption_check(u: &UnitaryFamily, m: usize) -> Result<AbsorptionMoment> {
    let n = u.n() as u64;
    if (n as f64).powi(2 * m as i32) > ABSORPTION_CAP {
        return Err(Error::TooLarge(format!(
            "absorption check over {n}^{} tuples exceeds the 1e6 cap",
            2 * m
        )));
    }
    let dim = u.dim();
    let daggers: Vec<ComplexMatrix> = u.members().iter().map(ComplexMatrix::dagger).collect();

    let mut moment = 0.0f64;
    let mut letters = vec![Letter::gen(1); 2 * m];
    for_each_tuple(n, 2 * m, |digits| {
        for (pos, &d) in digits.iter().enumerate() {
            let idx = d as u32 + 1;
            letters[pos] = if pos % 2 == 0 {
                Letter::inv(idx)
            } else {
                Letter::gen(idx)
            };
        }
        if !reduce_word(&letters).is_identity() {
            return;
        }
        // the word cancels formally: evaluate u*_{i1} u_{j1} u*_{i2} u_{j2} …
        let mut prod = ComplexMatrix::identity(dim);
        for (pos, &d) in digits.iter().enumerate() {
            let factor = if pos % 2 == 0 {
                &daggers[d as usize]
            } else {
                u.member(d as usize)
            };
            prod = prod.mul(factor);
        }
        moment += prod.trace().re / dim as f64;
    });

    let count = count_identity_patterns(n, m)?;
    let count_f = {
        use num_traits::ToPrimitive;
        count.to_f64().unwrap_or(f64::INFINITY)
    };
    if (moment - count_f).abs() > 1e-8 * count_f {
        return Err(Error::ContractViolation(format!(
            "absorption moment {moment} differs from exact count {count_f}"
        )));
    }
    Ok(AbsorptionMoment { moment, count })
}
