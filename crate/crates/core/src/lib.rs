//! Random-matrix model of the homolumo gap.
//!
//! A quenched Hermitian matrix (stiffness `omega_tilde`) plus a quantum
//! fluctuation (stiffness `omega`) is coupled to `N_f` fermions filling its
//! lowest levels. The crate provides the Gaussian samplers, the analytic
//! level densities (finite-N Hermite sum, Wigner semicircle, erfc-smeared
//! filled/empty densities around the Fermi level), and reproducible
//! parallel Monte Carlo experiments that compare the two.

pub mod analytic;
pub mod curve;
pub mod eigen;
pub mod error;
pub mod experiments;
pub mod matrix;
pub mod params;
pub mod rng;
pub mod sample;
pub mod spectrum;
pub mod stats;

pub use analytic::{
    delta_mu_theory, density_finite_n, density_occupied, density_semicircle, effective_stiffness,
    erfc, fermi_level, fermi_width, gap_prediction, semicircle_cdf, semicircle_quantile,
    support_radius, GapPrediction, OccupiedDensity, Rho0, Sector,
};
pub use curve::{histogram, l1_distance, DensityCurve, GridSpec, Histogram};
pub use eigen::eigenvalues_hermitian;
pub use error::{Error, Result};
pub use experiments::{
    run_density_experiment, run_fermi_fluctuation_experiment, run_gap_experiment,
    run_number_variance_experiment, run_prediction, ExperimentConfig, ExperimentReport,
    FermiEnsemble, NumberVarianceConfig, RunInfo,
};
pub use matrix::HermitianMatrix;
pub use params::{regime_check, regime_check_with, EnsembleParams, RegimeReport, RegimeThresholds};
pub use rng::RngStream;
pub use sample::{sample_displaced_block_spectra, sample_hermitian_gaussian, sample_joint_ground};
pub use spectrum::Spectrum;
pub use stats::{ks_critical, moments, two_sample_ks, MomentSummary};
