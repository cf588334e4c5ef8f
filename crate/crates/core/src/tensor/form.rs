//! Quadratic forms Σ aᵢ ⊗ b̄ᵢ and their action on Hilbert-Schmidt space.
//!
//! The operator acts on t ∈ S₂ as t ↦ Σ aᵢ t bᵢ†; its adjoint with respect
//! to the HS inner product is t ↦ Σ aᵢ† t bᵢ. The operator norm of the
//! tensor sum equals the operator norm of this superoperator, which is what
//! the matrix-free solver evaluates without ever materializing anything of
//! size N²×N².

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, HSMatrix, UnitaryFamily};

/// Paired families (a₁…a_n), (b₁…b_n) defining Σ aᵢ ⊗ b̄ᵢ.
#[derive(Debug, Clone)]
pub struct QuadraticForm {
    left: Vec<ComplexMatrix>,
    right: Vec<ComplexMatrix>,
    left_dim: usize,
    right_dim: usize,
}

impl QuadraticForm {
    pub fn new(left: Vec<ComplexMatrix>, right: Vec<ComplexMatrix>) -> Result<Self> {
        if left.is_empty() || left.len() != right.len() {
            return Err(Error::InvalidArgument(format!(
                "families must be nonempty and of equal length, got {} and {}",
                left.len(),
                right.len()
            )));
        }
        let left_dim = left[0].rows();
        let right_dim = right[0].rows();
        for (side, dim, fam) in [("left", left_dim, &left), ("right", right_dim, &right)] {
            for (i, m) in fam.iter().enumerate() {
                if !m.is_square() || m.rows() != dim {
                    return Err(Error::InvalidArgument(format!(
                        "{side} member {i} is {}x{}, expected {dim}x{dim}",
                        m.rows(),
                        m.cols()
                    )));
                }
            }
        }
        Ok(Self {
            left,
            right,
            left_dim,
            right_dim,
        })
    }

    /// The diagonal form Σ uᵢ ⊗ ūᵢ of a single family.
    pub fn conjugate_pair(family: &UnitaryFamily) -> Self {
        let members = family.members().to_vec();
        Self {
            left: members.clone(),
            right: members,
            left_dim: family.dim(),
            right_dim: family.dim(),
        }
    }

    /// Mixed form Σ aᵢ ⊗ b̄ᵢ from two unitary families of equal count.
    pub fn mixed_pair(a: &UnitaryFamily, b: &UnitaryFamily) -> Result<Self> {
        Self::new(a.members().to_vec(), b.members().to_vec())
    }

    pub fn n(&self) -> usize {
        self.left.len()
    }

    pub fn left(&self) -> &[ComplexMatrix] {
        &self.left
    }

    pub fn right(&self) -> &[ComplexMatrix] {
        &self.right
    }

    pub fn left_dim(&self) -> usize {
        self.left_dim
    }

    pub fn right_dim(&self) -> usize {
        self.right_dim
    }

    /// Shape of the S₂(K,H) elements the form acts on.
    pub fn domain_shape(&self) -> (usize, usize) {
        (self.left_dim, self.right_dim)
    }

    /// Both families unitary within `tol`·√dim.
    pub fn is_unitary_pair(&self, tol: f64) -> bool {
        let ok = |fam: &[ComplexMatrix], dim: usize| {
            fam.iter()
                .all(|m| m.unitarity_defect() <= tol * (dim as f64).sqrt())
        };
        ok(&self.left, self.left_dim) && ok(&self.right, self.right_dim)
    }

    /// Swaps the two legs: Σ bᵢ ⊗ āᵢ.
    pub fn swapped(&self) -> Self {
        Self {
            left: self.right.clone(),
            right: self.left.clone(),
            left_dim: self.right_dim,
            right_dim: self.left_dim,
        }
    }

    pub(crate) fn shape_check(&self, t: &ComplexMatrix) -> Result<()> {
        if t.rows() != self.left_dim || t.cols() != self.right_dim {
            return Err(Error::InvalidArgument(format!(
                "t is {}x{}, the form acts on {}x{}",
                t.rows(),
                t.cols(),
                self.left_dim,
                self.right_dim
            )));
        }
        Ok(())
    }

    /// Σ aᵢ t bᵢ†, without the HSMatrix wrapper (hot path).
    pub(crate) fn apply_raw(&self, t: &ComplexMatrix) -> ComplexMatrix {
        let mut acc = ComplexMatrix::zeros(self.left_dim, self.right_dim);
        for (a, b) in self.left.iter().zip(&self.right) {
            let term = a.mul(t).mul(&b.dagger());
            acc = acc.add(&term);
        }
        acc
    }

    /// Σ aᵢ† t bᵢ, the HS-adjoint of [`QuadraticForm::apply_raw`].
    pub(crate) fn adjoint_apply_raw(&self, t: &ComplexMatrix) -> ComplexMatrix {
        let mut acc = ComplexMatrix::zeros(self.left_dim, self.right_dim);
        for (a, b) in self.left.iter().zip(&self.right) {
            let term = a.dagger().mul(t).mul(b);
            acc = acc.add(&term);
        }
        acc
    }
}

/// The superoperator action t ↦ Σ aᵢ t bᵢ† on an S₂ element.
pub fn superop_apply(form: &QuadraticForm, t: &HSMatrix) -> Result<HSMatrix> {
    form.shape_check(t.mat())?;
    Ok(HSMatrix::new(form.apply_raw(t.mat())))
}

/// The HS-adjoint action t ↦ Σ aᵢ† t bᵢ.
pub fn superop_adjoint_apply(form: &QuadraticForm, t: &HSMatrix) -> Result<HSMatrix> {
    form.shape_check(t.mat())?;
    Ok(HSMatrix::new(form.adjoint_apply_raw(t.mat())))
}
