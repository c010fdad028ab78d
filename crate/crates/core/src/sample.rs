//! Gaussian ensemble samplers.
//!
//! All samplers draw entries in a fixed order (diagonal first, then the
//! upper triangle row by row, real part before imaginary part), so a given
//! generator state always produces the same matrix. That draw order is part
//! of the reproducibility contract.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Distribution, Normal};

use crate::eigen::eigenvalues_hermitian;
use crate::error::{Error, Result};
use crate::matrix::HermitianMatrix;
use crate::params::EnsembleParams;
use crate::spectrum::Spectrum;

fn check_stiffness(name: &str, k: f64) -> Result<()> {
    if !k.is_finite() || k <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "{name} must be finite and > 0, got {k}"
        )));
    }
    Ok(())
}

/// Draw one Hermitian matrix with entry weight `exp(-k Tr M^2)`:
/// diagonal entries are real `N(0, 1/(2k))`, and the real and imaginary
/// parts of each off-diagonal entry are independent `N(0, 1/(4k))`.
pub fn sample_hermitian_gaussian<R: Rng + ?Sized>(
    order: usize,
    k: f64,
    rng: &mut R,
) -> Result<HermitianMatrix> {
    if order == 0 {
        return Err(Error::InvalidParameter("matrix order must be >= 1".into()));
    }
    check_stiffness("stiffness", k)?;
    let diag = Normal::new(0.0, (1.0 / (2.0 * k)).sqrt()).expect("valid sigma");
    let off = Normal::new(0.0, (1.0 / (4.0 * k)).sqrt()).expect("valid sigma");

    let mut diag_vals = Vec::with_capacity(order);
    for _ in 0..order {
        diag_vals.push(diag.sample(rng));
    }
    let mut upper = Vec::with_capacity(order * (order - 1) / 2);
    for _ in 0..order * (order - 1) / 2 {
        let re = off.sample(rng);
        let im = off.sample(rng);
        upper.push(Complex64::new(re, im));
    }

    let mut next_off = 0usize;
    HermitianMatrix::from_upper(order, |i, j| {
        if i == j {
            Complex64::new(diag_vals[i], 0.0)
        } else {
            let v = upper[next_off];
            next_off += 1;
            v
        }
    })
}

/// Draw one configuration of the coupled model: the quenched matrix
/// `M0 ~ exp(-omega_tilde Tr M0^2)`, the ground-state fluctuation
/// `X ~ exp(-omega Tr X^2)`, and their sum `M = M0 + X`.
///
/// Marginally `M` is Gaussian again, with the combined stiffness
/// `c = omega omega_tilde / (omega + omega_tilde)`.
pub fn sample_joint_ground<R: Rng + ?Sized>(
    params: &EnsembleParams,
    rng: &mut R,
) -> Result<(HermitianMatrix, HermitianMatrix)> {
    params.validate()?;
    let m0 = sample_hermitian_gaussian(params.n, params.omega_tilde, rng)?;
    let x = sample_hermitian_gaussian(params.n, params.omega, rng)?;
    let m = m0.add(&x)?;
    Ok((m0, m))
}

/// Given the quenched spectrum, draw the spectra of the two displaced
/// diagonal blocks of the fermion-dressed ground state.
///
/// The lowest `n_f` quenched levels seed the filled block and the rest the
/// empty block. Each block is the frozen diagonal plus an independent
/// stiffness-`omega` Hermitian fluctuation; the filled block is displaced by
/// `-s` and the empty one by `+s`, with `s = g / (2 omega^2)`.
pub fn sample_displaced_block_spectra<R: Rng + ?Sized>(
    params: &EnsembleParams,
    quenched: &Spectrum,
    rng: &mut R,
) -> Result<(Vec<f64>, Vec<f64>)> {
    params.validate()?;
    if quenched.len() != params.n {
        return Err(Error::InvalidParameter(format!(
            "quenched spectrum has {} levels, expected n = {}",
            quenched.len(),
            params.n
        )));
    }
    let shift = params.shift();
    let (filled_diag, empty_diag) = quenched.split(params.n_f)?;
    let filled = displaced_block(filled_diag, params.omega, -shift, rng)?;
    let empty = displaced_block(empty_diag, params.omega, shift, rng)?;
    Ok((filled, empty))
}

fn displaced_block<R: Rng + ?Sized>(
    diag: &[f64],
    omega: f64,
    shift: f64,
    rng: &mut R,
) -> Result<Vec<f64>> {
    if diag.is_empty() {
        return Ok(Vec::new());
    }
    let fluct = sample_hermitian_gaussian(diag.len(), omega, rng)?;
    let block = fluct.add_real_diagonal(diag)?;
    let levels = eigenvalues_hermitian(&block)?;
    Ok(levels.values().iter().map(|v| v + shift).collect())
}
