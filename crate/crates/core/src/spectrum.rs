//! Eigenvalue spectra and filling-related helpers.

use crate::error::{Error, Result};

/// Eigenvalues of one Hermitian matrix, sorted ascending.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    /// Sorts the input; the solver's output order carries no information.
    pub fn from_unsorted(mut values: Vec<f64>) -> Result<Self> {
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("spectrum contains NaN or infinity".into()));
        }
        values.sort_by(|a, b| a.partial_cmp(b).expect("finite values compare"));
        Ok(Spectrum { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Largest modulus of an eigenvalue; 0 for an empty spectrum.
    pub fn spectral_radius(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Split into the lowest `n_f` levels (filled) and the remaining
    /// `len - n_f` (empty). Both halves stay ascending.
    pub fn split(&self, n_f: usize) -> Result<(&[f64], &[f64])> {
        if n_f > self.len() {
            return Err(Error::InvalidParameter(format!(
                "cannot fill {} of {} levels",
                n_f,
                self.len()
            )));
        }
        Ok(self.values.split_at(n_f))
    }

    /// Sample Fermi level: the midpoint between the highest filled and the
    /// lowest empty level. Needs at least one level on each side.
    pub fn fermi_midpoint(&self, n_f: usize) -> Result<f64> {
        if n_f == 0 || n_f >= self.len() {
            return Err(Error::InvalidParameter(format!(
                "fermi midpoint needs 1 <= n_f < n, got n_f = {} of n = {}",
                n_f,
                self.len()
            )));
        }
        Ok(0.5 * (self.values[n_f - 1] + self.values[n_f]))
    }
}
