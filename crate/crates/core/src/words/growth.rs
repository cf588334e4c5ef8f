//! Growth-rate estimators for exact count sequences.
//!
//! For counts c_m ≈ C·R^m·poly(m), the consecutive ratio c_{m+1}/c_m and the
//! m-th root c_m^{1/m} both converge to R. Both are exposed; the ratio has
//! the much smaller constant in its O(log m / m) error and is the default.
//! The counts here grow like the square of a spectral norm per half-length
//! step, so callers take a square root to read off the norm itself.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// High-precision f64 quotient of two big integers.
fn big_ratio(num: &BigUint, den: &BigUint) -> f64 {
    let shift = num.bits().max(den.bits()).saturating_sub(64);
    let n = (num >> shift).to_f64().expect("shifted value fits in f64");
    let d = (den >> shift).to_f64().expect("shifted value fits in f64");
    n / d
}

/// Consecutive-ratio estimator: counts must be positive and come from
/// consecutive half-lengths; returns count[last]/count[last−1], a floating
/// approximation of the squared norm.
pub fn growth_estimate(counts: &[BigUint]) -> Result<f64> {
    if counts.len() < 2 {
        return Err(Error::InvalidArgument(
            "growth_estimate needs at least two consecutive counts".into(),
        ));
    }
    if counts.iter().any(Zero::is_zero) {
        return Err(Error::InvalidArgument(
            "growth_estimate cannot ratio zero counts".into(),
        ));
    }
    let last = &counts[counts.len() - 1];
    let prev = &counts[counts.len() - 2];
    Ok(big_ratio(last, prev))
}

/// m-th-root estimator: count^{1/m} via logarithms, again approximating the
/// squared norm when `count` sits at half-length `m`.
pub fn root_estimate(count: &BigUint, m: usize) -> Result<f64> {
    if m == 0 {
        return Err(Error::InvalidArgument("root_estimate needs m >= 1".into()));
    }
    if count.is_zero() {
        return Err(Error::InvalidArgument(
            "root_estimate needs a positive count".into(),
        ));
    }
    let shift = count.bits().saturating_sub(64);
    let head = (count >> shift).to_f64().expect("fits in f64");
    let ln = head.ln() + (shift as f64) * std::f64::consts::LN_2;
    Ok((ln / m as f64).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::lattice::{count_identity_patterns_upto, tree_return_counts_upto};

    #[test]
    fn constant_sequence_has_ratio_one() {
        let ones = count_identity_patterns_upto(1, 6).unwrap();
        assert_eq!(growth_estimate(&ones).unwrap(), 1.0);
        assert!((root_estimate(&ones[6], 6).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn needs_two_counts() {
        let one = count_identity_patterns_upto(2, 0).unwrap();
        assert!(growth_estimate(&one).is_err());
    }

    #[test]
    fn zero_counts_rejected() {
        let v = vec![BigUint::from(0u32), BigUint::from(1u32)];
        assert!(growth_estimate(&v).is_err());
    }

    #[test]
    fn ratio_precision_on_huge_counts() {
        // degree-2 counts are central binomials; the exact ratio at m is
        // (2m+1)(2m+2)/(m+1)², so precision is checkable at any size.
        let counts = tree_return_counts_upto(2, 300).unwrap();
        let got = growth_estimate(&counts).unwrap();
        let m = 299.0f64;
        let expect = (2.0 * m + 1.0) * (2.0 * m + 2.0) / ((m + 1.0) * (m + 1.0));
        assert!(
            (got - expect).abs() < 1e-12 * expect,
            "got {got}, expect {expect}"
        );
    }

    #[test]
    fn ratio_approaches_squared_spectral_constants() {
        // identity patterns: squared norm 4(n−1); rough window at m = 150
        for (n, target) in [(2u64, 4.0), (3, 8.0)] {
            let counts = count_identity_patterns_upto(n, 150).unwrap();
            let ratio = growth_estimate(&counts).unwrap();
            assert!(
                (ratio - target).abs() < 0.05 * target,
                "n={n}: ratio {ratio} vs {target}"
            );
        }
        // trees: squared norm 4(degree−1)
        let counts = tree_return_counts_upto(4, 150).unwrap();
        let ratio = growth_estimate(&counts).unwrap();
        assert!((ratio - 12.0).abs() < 0.05 * 12.0, "ratio {ratio}");
    }

    #[test]
    fn root_estimator_agrees_with_ratio_loosely() {
        let counts = count_identity_patterns_upto(3, 200).unwrap();
        let ratio = growth_estimate(&counts).unwrap();
        let root = root_estimate(&counts[200], 200).unwrap();
        // both target 8; the root converges more slowly
        assert!((ratio - 8.0).abs() < 0.1);
        assert!((root - 8.0).abs() < 0.5);
    }
}
