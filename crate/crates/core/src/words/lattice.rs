//! Exact walk counts on rooted trees, as a two-parameter lattice DP.
//!
//! Both counting problems in this module reduce to weighted nonnegative
//! walks on the half-line, where "depth" is distance from the tree root:
//!
//! - closed walks on the degree-d regular tree: d choices upward from the
//!   root, d−1 upward elsewhere, and one way back down;
//! - index tuples (i₁,j₁,…,i_m,j_m) ∈ [n]^{2m} whose alternating word
//!   g_{i₁}⁻¹ g_{j₁} ⋯ g_{i_m}⁻¹ g_{j_m} cancels to the identity.
//!
//! The second reduction is the nonobvious one. Track the reduced word as
//! letters arrive one at a time; its length ("depth") changes by ±1 per
//! letter, so depth parity always equals step parity. A letter appended at
//! step s carries a sign fixed by the parity of s (inverse letters at odd
//! steps, plain letters at even steps), hence the letter sitting at depth d
//! in the reduced word always has the sign fixed by the parity of d, and a
//! newly arriving letter always has the opposite sign to the current last
//! letter. Cancellation therefore only depends on the index: exactly one of
//! the n index choices cancels (down-step, weight 1) and the remaining n−1
//! extend (up-steps), except at depth 0 where nothing can cancel and all n
//! choices extend. Every index tuple corresponds to exactly one such
//! weighted walk and vice versa, so the weighted count of length-2m walks
//! from 0 to 0 equals the number of identity-reducing tuples. The
//! enumeration in [`brute_force_identity_patterns`] exists to defend this
//! reduction independently.
//!
//! All counts are exact big integers; they overflow u64 near m ≈ 30 already
//! for n = 2.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::words::letters::{reduce_word, Letter};

/// Weighted nonnegative walk lattice: `root_branching` upward choices from
/// depth 0, `deep_branching` from depth ≥ 1, and a single downward choice.
#[derive(Debug, Clone)]
pub struct WalkLattice {
    root_branching: u64,
    deep_branching: u64,
    /// table[s][d] = weighted walks of length s from depth 0 to depth d.
    table: Vec<Vec<BigUint>>,
}

impl WalkLattice {
    /// Runs the DP for `steps` steps, keeping the full (step, depth) table.
    pub fn run(root_branching: u64, deep_branching: u64, steps: usize) -> Self {
        let mut table = Vec::with_capacity(steps + 1);
        let mut row = vec![BigUint::zero(); steps + 2];
        row[0] = BigUint::one();
        table.push(row.clone());
        for _ in 0..steps {
            row = step_row(&row, root_branching, deep_branching);
            table.push(row.clone());
        }
        WalkLattice {
            root_branching,
            deep_branching,
            table,
        }
    }

    pub fn root_branching(&self) -> u64 {
        self.root_branching
    }

    pub fn deep_branching(&self) -> u64 {
        self.deep_branching
    }

    /// Weighted count of walks of length `step` ending at `depth`.
    pub fn count(&self, step: usize, depth: usize) -> &BigUint {
        static ZERO: std::sync::OnceLock<BigUint> = std::sync::OnceLock::new();
        self.table
            .get(step)
            .and_then(|row| row.get(depth))
            .unwrap_or_else(|| ZERO.get_or_init(BigUint::zero))
    }

    pub fn steps(&self) -> usize {
        self.table.len() - 1
    }
}

/// One DP transition; `row[d]` counts walks at the current step.
fn step_row(row: &[BigUint], root_branching: u64, deep_branching: u64) -> Vec<BigUint> {
    let len = row.len();
    let mut next = vec![BigUint::zero(); len];
    for d in 0..len {
        if row[d].is_zero() {
            continue;
        }
        // up-step from depth d
        let up = if d == 0 {
            root_branching
        } else {
            deep_branching
        };
        if up > 0 && d + 1 < len {
            next[d + 1] += &row[d] * up;
        }
        // down-step from depth d
        if d > 0 {
            next[d - 1] += &row[d];
        }
    }
    next
}

/// Depth-0 counts at even lengths 0, 2, …, 2·max_m, computed with two
/// rolling rows of length max_m+1 (O(m) space, O(m²) big-integer
/// operations). Depth is capped at max_m: a walk that climbs higher cannot
/// return to the root within the last recorded step, so dropping it changes
/// no output.
pub fn closed_walk_counts(root_branching: u64, deep_branching: u64, max_m: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::zero(); max_m + 1];
    row[0] = BigUint::one();
    let mut out = Vec::with_capacity(max_m + 1);
    out.push(BigUint::one());
    for s in 1..=(2 * max_m) {
        row = step_row(&row, root_branching, deep_branching);
        if s % 2 == 0 {
            out.push(row[0].clone());
        }
    }
    out
}

/// Number of index tuples (i₁,j₁,…,i_m,j_m) ∈ [n]^{2m} whose alternating
/// word g_{i₁}⁻¹ g_{j₁} ⋯ g_{i_m}⁻¹ g_{j_m} reduces to the identity.
pub fn count_identity_patterns(n: u64, m: usize) -> Result<BigUint> {
    Ok(count_identity_patterns_upto(n, m)?.pop().expect("nonempty"))
}

/// Identity-pattern counts for every half-length 0..=max_m from one DP run.
pub fn count_identity_patterns_upto(n: u64, max_m: usize) -> Result<Vec<BigUint>> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "count_identity_patterns requires n >= 1".into(),
        ));
    }
    Ok(closed_walk_counts(n, n - 1, max_m))
}

/// Closed walks of length 2m at the root of the degree-`degree` regular tree.
pub fn tree_return_count(degree: u64, m: usize) -> Result<BigUint> {
    Ok(tree_return_counts_upto(degree, m)?.pop().expect("nonempty"))
}

/// Tree return counts for every half-length 0..=max_m from one DP run.
pub fn tree_return_counts_upto(degree: u64, max_m: usize) -> Result<Vec<BigUint>> {
    if degree < 2 {
        return Err(Error::InvalidArgument(
            "tree_return_count requires degree >= 2".into(),
        ));
    }
    Ok(closed_walk_counts(degree, degree - 1, max_m))
}

/// Cap on exhaustive enumeration: n^{2m} tuples.
const BRUTE_FORCE_CAP: f64 = 1e7;

/// Visits every tuple in [n]^{2m} as a digit vector; `f` sees each tuple.
pub(crate) fn for_each_tuple<F: FnMut(&[u64])>(n: u64, len: usize, mut f: F) {
    let mut digits = vec![0u64; len];
    loop {
        f(&digits);
        let mut pos = len;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < n {
                break;
            }
            digits[pos] = 0;
        }
        if len == 0 {
            return;
        }
    }
}

/// Exhaustive oracle for [`count_identity_patterns`]: reduces the word of
/// every tuple in [n]^{2m}. Refuses instances beyond n^{2m} = 10⁷.
pub fn brute_force_identity_patterns(n: u64, m: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::InvalidArgument("need n >= 1".into()));
    }
    if (n as f64).powi(2 * m as i32) > BRUTE_FORCE_CAP {
        return Err(Error::TooLarge(format!(
            "brute force over {n}^{} tuples exceeds the 1e7 cap",
            2 * m
        )));
    }
    let mut count: u64 = 0;
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
        if reduce_word(&letters).is_identity() {
            count += 1;
        }
    });
    Ok(BigUint::from(count))
}
