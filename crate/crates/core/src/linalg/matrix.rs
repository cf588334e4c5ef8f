//! Dense complex matrices in row-major order.
//!
//! This is deliberately small: the rest of the crate only needs products,
//! adjoints, traces and Frobenius (Hilbert-Schmidt) inner products of
//! matrices whose dimension rarely exceeds a few dozen.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Dense complex matrix, entries stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Builds a matrix from row-major entries, validating the shape and
    /// rejecting non-finite values.
    pub fn new(rows: usize, cols: usize, entries: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidArgument(format!(
                "matrix dimensions must be positive, got {rows}x{cols}"
            )));
        }
        if entries.len() != rows * cols {
            return Err(Error::InvalidArgument(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                entries.len()
            )));
        }
        if entries
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::InvalidArgument(
                "matrix entries must be finite".into(),
            ));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "dimensions must be positive");
        Self {
            rows,
            cols,
            entries: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Rectangular truncation of the identity: 1 on the main diagonal.
    pub fn truncated_identity(rows: usize, cols: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows.min(cols) {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn<F>(rows: usize, cols: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> Complex64,
    {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn mul(&self, other: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(
            self.cols, other.rows,
            "matmul shape mismatch: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = ComplexMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let row = &other.entries[k * other.cols..(k + 1) * other.cols];
                let dst = &mut out.entries[i * other.cols..(i + 1) * other.cols];
                for (d, b) in dst.iter_mut().zip(row) {
                    *d += a * b;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn sub(&self, other: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn scale(&self, z: Complex64) -> ComplexMatrix {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * z).collect(),
        }
    }

    pub fn add_assign_scaled(&mut self, other: &ComplexMatrix, z: Complex64) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (d, s) in self.entries.iter_mut().zip(&other.entries) {
            *d += s * z;
        }
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn transpose(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)])
    }

    pub fn conj(&self) -> ComplexMatrix {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn trace(&self) -> Complex64 {
        assert!(self.is_square(), "trace requires a square matrix");
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    /// Frobenius / Hilbert-Schmidt norm.
    pub fn hs_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Frobenius inner product tr(other† · self) = Σ self(i,j)·conj(other(i,j)).
    pub fn frobenius_inner(&self, other: &ComplexMatrix) -> Complex64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a * b.conj())
            .sum()
    }

    /// ‖U·U† − I‖_HS, zero exactly when U is unitary.
    pub fn unitarity_defect(&self) -> f64 {
        assert!(self.is_square());
        let n = self.rows;
        let mut defect = 0.0;
        for i in 0..n {
            for j in 0..n {
                let mut s = Complex64::new(0.0, 0.0);
                for k in 0..n {
                    s += self[(i, k)] * self[(j, k)].conj();
                }
                if i == j {
                    s -= 1.0;
                }
                defect += s.norm_sqr();
            }
        }
        defect.sqrt()
    }

    /// Kronecker product; row (i,i') maps to index i·other.rows + i'.
    pub fn kron(&self, other: &ComplexMatrix) -> ComplexMatrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        ComplexMatrix::from_fn(rows, cols, |r, c| {
            let (i, ip) = (r / other.rows, r % other.rows);
            let (j, jp) = (c / other.cols, c % other.cols);
            self[(i, j)] * other[(ip, jp)]
        })
    }

    /// Max entrywise distance, for test assertions.
    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        debug_assert!(r < self.rows && c < self.cols);
        &self.entries[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.entries[r * self.cols + c]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn new_rejects_bad_shapes() {
        assert!(ComplexMatrix::new(0, 2, vec![]).is_err());
        assert!(ComplexMatrix::new(2, 2, vec![c(1.0, 0.0); 3]).is_err());
        assert!(ComplexMatrix::new(1, 1, vec![c(f64::NAN, 0.0)]).is_err());
    }

    #[test]
    fn product_against_hand_computation() {
        let a = ComplexMatrix::new(
            2,
            2,
            vec![c(1.0, 0.0), c(0.0, 1.0), c(2.0, 0.0), c(0.0, 0.0)],
        )
        .unwrap();
        let b = ComplexMatrix::new(
            2,
            2,
            vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, -1.0)],
        )
        .unwrap();
        let ab = a.mul(&b);
        // row 0: [i, 1 + i·(−i)] = [i, 1+1] ... entry (0,0)=1·0+i·1=i, (0,1)=1·1+i·(−i)=2
        assert!((ab[(0, 0)] - c(0.0, 1.0)).norm() < 1e-15);
        assert!((ab[(0, 1)] - c(2.0, 0.0)).norm() < 1e-15);
        assert!((ab[(1, 0)] - c(0.0, 0.0)).norm() < 1e-15);
        assert!((ab[(1, 1)] - c(2.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn dagger_reverses_products() {
        let a = ComplexMatrix::from_fn(2, 3, |r, c_| c(r as f64, c_ as f64 + 1.0));
        let b = ComplexMatrix::from_fn(3, 2, |r, c_| c(1.0 - r as f64, c_ as f64));
        let lhs = a.mul(&b).dagger();
        let rhs = b.dagger().mul(&a.dagger());
        assert!(lhs.max_abs_diff(&rhs) < 1e-14);
    }

    #[test]
    fn frobenius_inner_matches_trace_form() {
        let a = ComplexMatrix::from_fn(3, 3, |r, c_| c(r as f64 - 1.0, c_ as f64));
        let b = ComplexMatrix::from_fn(3, 3, |r, c_| c(c_ as f64, r as f64 * 0.5));
        let direct = a.frobenius_inner(&b);
        let via_trace = b.dagger().mul(&a).trace();
        assert!((direct - via_trace).norm() < 1e-13);
    }

    #[test]
    fn kron_shapes_and_values() {
        let a = ComplexMatrix::new(
            2,
            2,
            vec![c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0), c(4.0, 0.0)],
        )
        .unwrap();
        let b = ComplexMatrix::identity(2);
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (4, 4));
        assert!((k[(0, 0)] - c(1.0, 0.0)).norm() < 1e-15);
        assert!((k[(1, 1)] - c(1.0, 0.0)).norm() < 1e-15);
        assert!((k[(0, 2)] - c(2.0, 0.0)).norm() < 1e-15);
        assert!((k[(2, 0)] - c(3.0, 0.0)).norm() < 1e-15);
        assert!((k[(0, 1)]).norm() < 1e-15);
    }

    #[test]
    fn unitarity_defect_detects_non_unitary() {
        let u = ComplexMatrix::identity(3);
        assert!(u.unitarity_defect() < 1e-15);
        let half = u.scale(c(0.5, 0.0));
        assert!(half.unitarity_defect() > 0.5);
    }
}
