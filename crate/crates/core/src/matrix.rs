//! Dense Hermitian matrices with exact conjugate symmetry.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// A complex square matrix that equals its own conjugate transpose exactly:
/// constructors write each upper-triangle entry and its mirrored conjugate
/// from the same value, and diagonal imaginary parts are identically zero.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianMatrix {
    inner: DMatrix<Complex64>,
}

impl HermitianMatrix {
    /// Build from a generator called once per upper-triangle index pair
    /// `(i, j)` with `i <= j`. The imaginary part returned for a diagonal
    /// entry is discarded.
    pub fn from_upper<F>(order: usize, mut upper: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Complex64,
    {
        if order == 0 {
            return Err(Error::InvalidParameter("matrix order must be >= 1".into()));
        }
        let mut inner = DMatrix::<Complex64>::zeros(order, order);
        for i in 0..order {
            let d = upper(i, i);
            inner[(i, i)] = Complex64::new(d.re, 0.0);
            for j in (i + 1)..order {
                let v = upper(i, j);
                inner[(i, j)] = v;
                inner[(j, i)] = v.conj();
            }
        }
        Ok(HermitianMatrix { inner })
    }

    /// Diagonal matrix with the given real entries.
    pub fn from_real_diagonal(diag: &[f64]) -> Result<Self> {
        Self::from_upper(diag.len(), |i, j| {
            if i == j {
                Complex64::new(diag[i], 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    }

    pub fn order(&self) -> usize {
        self.inner.nrows()
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.inner[(i, j)]
    }

    /// Trace; real because the diagonal is real by construction.
    pub fn trace(&self) -> f64 {
        (0..self.order()).map(|i| self.inner[(i, i)].re).sum()
    }

    /// Sum of squared moduli of all entries, `Tr M^2` for Hermitian `M`.
    pub fn trace_of_square(&self) -> f64 {
        self.inner.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Entrywise sum; Hermitian symmetry is preserved exactly because
    /// conjugation commutes with IEEE addition.
    pub fn add(&self, other: &HermitianMatrix) -> Result<HermitianMatrix> {
        if self.order() != other.order() {
            return Err(Error::InvalidParameter(format!(
                "cannot add matrices of orders {} and {}",
                self.order(),
                other.order()
            )));
        }
        Ok(HermitianMatrix {
            inner: &self.inner + &other.inner,
        })
    }

    /// Add the real vector `diag` to the diagonal.
    pub fn add_real_diagonal(&self, diag: &[f64]) -> Result<HermitianMatrix> {
        if diag.len() != self.order() {
            return Err(Error::InvalidParameter(format!(
                "diagonal of length {} does not match order {}",
                diag.len(),
                self.order()
            )));
        }
        let mut out = self.clone();
        for (i, d) in diag.iter().enumerate() {
            out.inner[(i, i)].re += d;
        }
        Ok(out)
    }

    pub fn is_finite(&self) -> bool {
        self.inner
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Bit-exact Hermitian symmetry check, mostly for tests.
    pub fn is_hermitian_exact(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| {
            self.inner[(i, i)].im == 0.0
                && ((i + 1)..n).all(|j| {
                    let a = self.inner[(i, j)];
                    let b = self.inner[(j, i)];
                    a.re == b.re && a.im == -b.im
                })
        })
    }

    pub(crate) fn as_dmatrix(&self) -> &DMatrix<Complex64> {
        &self.inner
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_order_is_rejected() {
        assert!(HermitianMatrix::from_upper(0, |_, _| Complex64::new(1.0, 0.0)).is_err());
    }

    #[test]
    fn construction_mirrors_conjugates_and_strips_diagonal_imag() {
        let m = HermitianMatrix::from_upper(2, |i, j| {
            Complex64::new((i + j) as f64, 1.0) // deliberately non-zero imag on the diagonal
        })
        .unwrap();
        assert!(m.is_hermitian_exact());
        assert_eq!(m.entry(0, 0), Complex64::new(0.0, 0.0));
        assert_eq!(m.entry(0, 1), Complex64::new(1.0, 1.0));
        assert_eq!(m.entry(1, 0), Complex64::new(1.0, -1.0));
    }

    #[test]
    fn add_preserves_symmetry_and_checks_order() {
        let a = HermitianMatrix::from_real_diagonal(&[1.0, 2.0]).unwrap();
        let b = HermitianMatrix::from_upper(2, |_, _| Complex64::new(0.5, 0.25)).unwrap();
        let sum = a.add(&b).unwrap();
        assert!(sum.is_hermitian_exact());
        assert_eq!(sum.entry(0, 0).re, 1.5);
        let c = HermitianMatrix::from_real_diagonal(&[0.0; 3]).unwrap();
        assert!(a.add(&c).is_err());
    }

    #[test]
    fn trace_of_square_counts_offdiagonal_twice() {
        let m = HermitianMatrix::from_upper(2, |i, j| {
            if i == j {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 2.0)
            }
        })
        .unwrap();
        // Tr M^2 = 1 + 1 + 2 * |2i|^2 = 10.
        assert_eq!(m.trace_of_square(), 10.0);
        assert_eq!(m.trace(), 2.0);
    }

    #[test]
    fn finiteness_check() {
        let m = HermitianMatrix::from_upper(2, |i, j| {
            if (i, j) == (0, 1) {
                Complex64::new(f64::NAN, 0.0)
            } else {
                Complex64::new(1.0, 0.0)
            }
        })
        .unwrap();
        assert!(!m.is_finite());
    }
}
