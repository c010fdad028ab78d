//! Monte Carlo experiments: reproducible parallel sampling, empirical
//! densities, and agreement statistics against the analytic curves.
//!
//! Every experiment draws sample `i` from its own RNG substream, collects
//! per-sample results in index order, and reduces them sequentially, so the
//! output is bitwise identical for any worker count at a fixed seed.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analytic::{
    delta_mu_theory, density_finite_n, density_semicircle, fermi_level, gap_prediction,
    semicircle_quantile, OccupiedDensity, Rho0, Sector,
};
use crate::curve::{histogram, l1_distance, DensityCurve, GridSpec};
use crate::eigen::eigenvalues_hermitian;
use crate::error::{Error, Result};
use crate::params::{regime_check, EnsembleParams, RegimeReport};
use crate::rng::RngStream;
use crate::sample::{
    sample_displaced_block_spectra, sample_hermitian_gaussian, sample_joint_ground,
};
use crate::stats::moments;

/// Bins of the default energy grid.
pub const DEFAULT_BINS: usize = 101;
/// Default fraction of the curve peak above which a bin counts as occupied
/// when locating the empirical gap edges.
pub const DEFAULT_EDGE_THRESHOLD: f64 = 0.01;

/// Which matrix the per-sample Fermi level is measured on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FermiEnsemble {
    /// The frozen matrix alone, stiffness `omega_tilde` (the definition of
    /// the per-sample Fermi level acts on the quenched spectrum).
    Quenched,
    /// The combined matrix at effective stiffness `c`, for comparison.
    Combined,
}

/// Full description of one Monte Carlo run.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub params: EnsembleParams,
    pub n_samples: usize,
    pub grid: GridSpec,
    pub seed: u64,
    /// Worker threads; `None` or `Some(0)` use all available cores. The
    /// output never depends on this.
    pub workers: Option<usize>,
    /// Base density of the analytic gap curves.
    pub rho0: Rho0,
    /// Peak fraction for the empirical gap-edge estimator.
    pub edge_threshold: f64,
    /// Spectrum the Fermi-fluctuation experiment measures on.
    pub fermi_ensemble: FermiEnsemble,
}

impl ExperimentConfig {
    /// Config with the default grid ([`Self::default_grid`] at
    /// [`DEFAULT_BINS`]) and default estimator settings.
    pub fn new(params: EnsembleParams, n_samples: usize, seed: u64) -> Result<Self> {
        let cfg = ExperimentConfig {
            params,
            n_samples,
            grid: Self::default_grid(&params, DEFAULT_BINS)?,
            seed,
            workers: None,
            rho0: Rho0::Semicircle,
            edge_threshold: DEFAULT_EDGE_THRESHOLD,
            fermi_ensemble: FermiEnsemble::Quenched,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Support padded by three quantum widths plus the block displacement:
    /// `[-(R + 3/sqrt(omega) + s), R + 3/sqrt(omega) + s]`.
    pub fn default_grid(params: &EnsembleParams, bins: usize) -> Result<GridSpec> {
        params.validate()?;
        let half = Self::required_half_span(params);
        GridSpec::new(-half, half, bins)
    }

    fn required_half_span(params: &EnsembleParams) -> f64 {
        params.support_radius() + 3.0 / params.omega.sqrt() + params.shift()
    }

    pub fn validate(&self) -> Result<()> {
        self.params.validate()?;
        if self.n_samples < 1 {
            return Err(Error::InvalidParameter("n_samples must be >= 1".into()));
        }
        if self.grid.bins < 10 {
            return Err(Error::InvalidParameter(format!(
                "experiment grid needs at least 10 bins, got {}",
                self.grid.bins
            )));
        }
        let half = Self::required_half_span(&self.params);
        if self.grid.min > -half || self.grid.max < half {
            return Err(Error::InvalidParameter(format!(
                "grid [{}, {}] must cover [-{half}, {half}] (support + 3 quantum widths + shift)",
                self.grid.min, self.grid.max
            )));
        }
        if !self.edge_threshold.is_finite()
            || self.edge_threshold <= 0.0
            || self.edge_threshold >= 1.0
        {
            return Err(Error::InvalidParameter(format!(
                "edge threshold must lie in (0, 1), got {}",
                self.edge_threshold
            )));
        }
        Ok(())
    }
}

/// Everything needed to replay a run, embedded in every report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunInfo {
    pub tool_version: String,
    pub params: EnsembleParams,
    pub n_samples: usize,
    pub seed: u64,
    pub grid: GridSpec,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho0: Option<Rho0>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge_threshold: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ensemble: Option<FermiEnsemble>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub interval: Option<(f64, f64)>,
    /// Wall-clock duration of the run. The only field that differs between
    /// replays of the same configuration.
    pub wall_time_seconds: f64,
    pub regime: RegimeReport,
}

impl RunInfo {
    fn new(cfg: &ExperimentConfig, wall_time_seconds: f64) -> Self {
        RunInfo {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            params: cfg.params,
            n_samples: cfg.n_samples,
            seed: cfg.seed,
            grid: cfg.grid,
            rho0: None,
            edge_threshold: None,
            ensemble: None,
            interval: None,
            wall_time_seconds,
            regime: regime_check(&cfg.params),
        }
    }
}

/// Outcome of one experiment: named curves on a shared grid, named scalar
/// statistics, non-fatal warnings, and the replay record.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub curves: Vec<(String, DensityCurve)>,
    pub scalars: BTreeMap<String, f64>,
    pub warnings: Vec<String>,
    pub run: RunInfo,
}

/// Map `f` over sample indices on a dedicated thread pool, preserving index
/// order regardless of the worker count.
fn run_samples<T, F>(n_samples: usize, workers: Option<usize>, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(usize) -> Result<T> + Sync,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.unwrap_or(0))
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    let results: Vec<Result<T>> = pool.install(|| (0..n_samples).into_par_iter().map(&f).collect());
    results.into_iter().collect()
}

fn overflow_warning(label: &str, overflow: u64) -> Option<String> {
    (overflow > 0).then(|| format!("{overflow} {label} values fell outside the grid"))
}

/// Sample the joint `(M0, M)` ground state, histogram all eigenvalues of
/// `M` with mass `n`, and compare against the exact and semicircle
/// densities at the effective stiffness.
///
/// Scalars: `l1_finite_n`, `l1_semicircle`, `overflow_count`,
/// `eigenvalues_total`. Curves: `rho_empirical`, `rho_finite_n`,
/// `rho_semicircle`.
pub fn run_density_experiment(cfg: &ExperimentConfig) -> Result<ExperimentReport> {
    cfg.validate()?;
    let t0 = Instant::now();
    let params = cfg.params;
    let seed = cfg.seed;

    let spectra: Vec<Vec<f64>> = run_samples(cfg.n_samples, cfg.workers, |i| {
        let mut rng = RngStream::new(seed, i as u64).rng();
        let (_m0, m) = sample_joint_ground(&params, &mut rng)?;
        Ok(eigenvalues_hermitian(&m)?.values().to_vec())
    })?;
    let mut all = Vec::with_capacity(cfg.n_samples * params.n);
    for s in &spectra {
        all.extend_from_slice(s);
    }

    let hist = histogram(&all, &cfg.grid, params.n as f64)?;
    let c = params.effective_stiffness();
    let finite = DensityCurve::from_fn(&cfg.grid, params.n as f64, |x| {
        density_finite_n(x, params.n, c)
    })?;
    let semi = DensityCurve::from_fn(&cfg.grid, params.n as f64, |x| {
        density_semicircle(x, params.n, c)
    })?;

    let mut scalars = BTreeMap::new();
    scalars.insert("l1_finite_n".into(), l1_distance(&hist.curve, &finite)?);
    scalars.insert("l1_semicircle".into(), l1_distance(&hist.curve, &semi)?);
    scalars.insert("overflow_count".into(), hist.overflow as f64);
    scalars.insert("eigenvalues_total".into(), all.len() as f64);

    let warnings = overflow_warning("eigenvalue", hist.overflow)
        .into_iter()
        .collect();

    Ok(ExperimentReport {
        curves: vec![
            ("rho_empirical".into(), hist.curve),
            ("rho_finite_n".into(), finite),
            ("rho_semicircle".into(), semi),
        ],
        scalars,
        warnings,
        run: RunInfo::new(cfg, t0.elapsed().as_secs_f64()),
    })
}

/// Index of the outermost (scanning from `from_top`) bin strictly above
/// `threshold * peak`; the returned abscissa is that bin's center.
fn edge_position(curve: &DensityCurve, threshold: f64, from_top: bool) -> Option<f64> {
    let peak = curve.values().iter().cloned().fold(0.0f64, f64::max);
    if peak <= 0.0 {
        return None;
    }
    let thr = threshold * peak;
    let idx = if from_top {
        curve.values().iter().rposition(|&v| v > thr)
    } else {
        curve.values().iter().position(|&v| v > thr)
    };
    idx.map(|i| curve.grid()[i])
}

/// Per sample: diagonalize the quenched matrix, split its spectrum at the
/// filling, draw the two displaced fluctuation blocks, and histogram the
/// filled (mass `n_f`) and empty (mass `n - n_f`) levels against the
/// erfc-smeared analytic curves.
///
/// Scalars: `l1_filled`, `l1_empty`, `gap_width_empirical`,
/// `gap_width_predicted`, `mu_f`, `omega_f`, `shift`, `filled_edge`,
/// `empty_edge`, `overflow_filled`, `overflow_empty`. Curves:
/// `filled_empirical`, `filled_analytic`, `empty_empirical`,
/// `empty_analytic`. Regime violations are reported as warnings, never
/// errors.
pub fn run_gap_experiment(cfg: &ExperimentConfig) -> Result<ExperimentReport> {
    cfg.validate()?;
    let params = cfg.params;
    if params.n_f == 0 || params.n_f == params.n {
        return Err(Error::InvalidParameter(format!(
            "gap experiment needs 1 <= n_f <= n-1, got n_f = {} at n = {}",
            params.n_f, params.n
        )));
    }
    let t0 = Instant::now();
    let seed = cfg.seed;

    let blocks: Vec<(Vec<f64>, Vec<f64>)> = run_samples(cfg.n_samples, cfg.workers, |i| {
        let mut rng = RngStream::new(seed, i as u64).rng();
        let m0 = sample_hermitian_gaussian(params.n, params.omega_tilde, &mut rng)?;
        let quenched = eigenvalues_hermitian(&m0)?;
        sample_displaced_block_spectra(&params, &quenched, &mut rng)
    })?;
    let mut filled_all = Vec::with_capacity(cfg.n_samples * params.n_f);
    let mut empty_all = Vec::with_capacity(cfg.n_samples * (params.n - params.n_f));
    for (f, e) in &blocks {
        filled_all.extend_from_slice(f);
        empty_all.extend_from_slice(e);
    }

    let hist_filled = histogram(&filled_all, &cfg.grid, params.n_f as f64)?;
    let hist_empty = histogram(&empty_all, &cfg.grid, (params.n - params.n_f) as f64)?;

    let occupied = OccupiedDensity::new(&params, cfg.rho0)?;
    let filled_analytic = DensityCurve::from_fn(&cfg.grid, params.n_f as f64, |x| {
        occupied.eval(x, Sector::Filled)
    })?;
    let empty_analytic = DensityCurve::from_fn(&cfg.grid, (params.n - params.n_f) as f64, |x| {
        occupied.eval(x, Sector::Empty)
    })?;

    let filled_edge = edge_position(&hist_filled.curve, cfg.edge_threshold, true);
    let empty_edge = edge_position(&hist_empty.curve, cfg.edge_threshold, false);

    let mut scalars = BTreeMap::new();
    scalars.insert(
        "l1_filled".into(),
        l1_distance(&hist_filled.curve, &filled_analytic)?,
    );
    scalars.insert(
        "l1_empty".into(),
        l1_distance(&hist_empty.curve, &empty_analytic)?,
    );
    scalars.insert("mu_f".into(), occupied.mu_f());
    scalars.insert("omega_f".into(), occupied.omega_f());
    scalars.insert("shift".into(), occupied.shift());
    scalars.insert("gap_width_predicted".into(), 2.0 * occupied.shift());
    if let Some(x) = filled_edge {
        scalars.insert("filled_edge".into(), x);
    }
    if let Some(x) = empty_edge {
        scalars.insert("empty_edge".into(), x);
    }
    if let (Some(f), Some(e)) = (filled_edge, empty_edge) {
        scalars.insert("gap_width_empirical".into(), e - f);
    }
    scalars.insert("overflow_filled".into(), hist_filled.overflow as f64);
    scalars.insert("overflow_empty".into(), hist_empty.overflow as f64);

    let regime = regime_check(&params);
    let mut warnings = Vec::new();
    if !regime.valid_push {
        warnings.push(format!(
            "fermion push is weak: g/omega^(3/2) = {:.4} below the displaced-block regime",
            regime.r3
        ));
    }
    if !regime.valid_offdiag {
        warnings.push(format!(
            "off-diagonal blocks are not negligible: omega^3/g^2 = {:.4}, sqrt(omega_tilde) omega/g = {:.4}",
            regime.r1, regime.r2
        ));
    }
    if !regime.quenched_dominant {
        warnings.push(format!(
            "quantum stiffness below quenched stiffness (omega = {} <= omega_tilde = {}): the frozen spectrum does not dominate",
            params.omega, params.omega_tilde
        ));
    }
    warnings.extend(overflow_warning("filled-level", hist_filled.overflow));
    warnings.extend(overflow_warning("empty-level", hist_empty.overflow));

    let mut run = RunInfo::new(cfg, t0.elapsed().as_secs_f64());
    run.rho0 = Some(cfg.rho0);
    run.edge_threshold = Some(cfg.edge_threshold);

    Ok(ExperimentReport {
        curves: vec![
            ("filled_empirical".into(), hist_filled.curve),
            ("filled_analytic".into(), filled_analytic),
            ("empty_empirical".into(), hist_empty.curve),
            ("empty_analytic".into(), empty_analytic),
        ],
        scalars,
        warnings,
        run,
    })
}

/// Sample the per-draw Fermi level (midpoint of the two levels straddling
/// the filling) on the quenched or combined spectrum and compare its
/// statistics with the predicted location and width.
///
/// Scalars: `mu_mean`, `mu_std`, `mu_skewness`, `mu_excess_kurtosis`,
/// `mu_f_predicted`, `delta_mu_predicted`, `overflow_count`. Curves:
/// `mu_empirical`, `mu_gaussian` on a grid of 8 predicted widths around the
/// predicted level (`grid.bins` bins).
pub fn run_fermi_fluctuation_experiment(cfg: &ExperimentConfig) -> Result<ExperimentReport> {
    cfg.validate()?;
    let params = cfg.params;
    if params.n_f == 0 || params.n_f == params.n {
        return Err(Error::InvalidParameter(format!(
            "fermi fluctuation experiment needs 1 <= n_f <= n-1, got n_f = {} at n = {}",
            params.n_f, params.n
        )));
    }
    let t0 = Instant::now();
    let seed = cfg.seed;
    let stiffness = match cfg.fermi_ensemble {
        FermiEnsemble::Quenched => params.omega_tilde,
        FermiEnsemble::Combined => params.effective_stiffness(),
    };

    let mus: Vec<f64> = run_samples(cfg.n_samples, cfg.workers, |i| {
        let mut rng = RngStream::new(seed, i as u64).rng();
        let m = sample_hermitian_gaussian(params.n, stiffness, &mut rng)?;
        eigenvalues_hermitian(&m)?.fermi_midpoint(params.n_f)
    })?;

    let summary = moments(&mus)?;
    let mu_pred = fermi_level(params.n, params.n_f, stiffness)?;
    let rho_mu = density_semicircle(mu_pred, params.n, stiffness)?;
    let delta_pred = delta_mu_theory(params.n, rho_mu)?;

    let mu_grid = GridSpec::new(
        mu_pred - 8.0 * delta_pred,
        mu_pred + 8.0 * delta_pred,
        cfg.grid.bins,
    )?;
    let hist = histogram(&mus, &mu_grid, 1.0)?;
    let gaussian = DensityCurve::from_fn(&mu_grid, 1.0, |x| {
        let z = (x - mu_pred) / delta_pred;
        Ok((-0.5 * z * z).exp() / (delta_pred * (2.0 * std::f64::consts::PI).sqrt()))
    })?;

    let mut scalars = BTreeMap::new();
    scalars.insert("mu_mean".into(), summary.mean);
    scalars.insert("mu_std".into(), summary.std_dev);
    scalars.insert("mu_skewness".into(), summary.skewness);
    scalars.insert("mu_excess_kurtosis".into(), summary.excess_kurtosis);
    scalars.insert("mu_f_predicted".into(), mu_pred);
    scalars.insert("delta_mu_predicted".into(), delta_pred);
    scalars.insert("overflow_count".into(), hist.overflow as f64);

    let warnings = overflow_warning("fermi-level", hist.overflow)
        .into_iter()
        .collect();

    let mut run = RunInfo::new(cfg, t0.elapsed().as_secs_f64());
    run.ensemble = Some(cfg.fermi_ensemble);
    run.grid = mu_grid;

    Ok(ExperimentReport {
        curves: vec![
            ("mu_empirical".into(), hist.curve),
            ("mu_gaussian".into(), gaussian),
        ],
        scalars,
        warnings,
        run,
    })
}

/// A number-variance run: a single frozen Gaussian ensemble and a fixed
/// energy window.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumberVarianceConfig {
    pub order: usize,
    pub stiffness: f64,
    /// Count window `[lo, hi]`; `None` selects the centered window holding
    /// half the levels on average.
    pub interval: Option<(f64, f64)>,
    pub n_samples: usize,
    pub seed: u64,
    pub workers: Option<usize>,
}

impl NumberVarianceConfig {
    pub fn validate(&self) -> Result<()> {
        if self.order < 2 {
            return Err(Error::InvalidParameter(
                "number variance needs order >= 2".into(),
            ));
        }
        if !self.stiffness.is_finite() || self.stiffness <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "stiffness must be finite and > 0, got {}",
                self.stiffness
            )));
        }
        if self.n_samples < 2 {
            return Err(Error::InvalidParameter(
                "count variance needs at least 2 samples".into(),
            ));
        }
        if let Some((lo, hi)) = self.interval {
            if !lo.is_finite() || !hi.is_finite() || lo >= hi {
                return Err(Error::InvalidParameter(format!(
                    "interval needs finite lo < hi, got [{lo}, {hi}]"
                )));
            }
        }
        Ok(())
    }

    /// The window actually counted: the configured one, or the centered
    /// window `[-a, a]` whose mean count is half the levels.
    pub fn resolved_interval(&self) -> Result<(f64, f64)> {
        self.validate()?;
        match self.interval {
            Some(iv) => Ok(iv),
            None => {
                let a = semicircle_quantile(self.order, self.stiffness, 0.75 * self.order as f64)?;
                Ok((-a, a))
            }
        }
    }
}

/// Count eigenvalues of frozen Gaussian draws inside the window and compare
/// the count variance across the ensemble with `ln(order) / pi^2`.
///
/// Scalars: `count_mean`, `count_variance`, `variance_predicted`,
/// `interval_lo`, `interval_hi`. Curve: `count_empirical`, the distribution
/// of counts on unit-width bins. A window reaching outside the support is a
/// warning, not an error (the prediction assumes a bulk window).
pub fn run_number_variance_experiment(cfg: &NumberVarianceConfig) -> Result<ExperimentReport> {
    cfg.validate()?;
    let t0 = Instant::now();
    let (lo, hi) = cfg.resolved_interval()?;
    let (order, stiffness, seed) = (cfg.order, cfg.stiffness, cfg.seed);

    let counts: Vec<f64> = run_samples(cfg.n_samples, cfg.workers, |i| {
        let mut rng = RngStream::new(seed, i as u64).rng();
        let m = sample_hermitian_gaussian(order, stiffness, &mut rng)?;
        let spectrum = eigenvalues_hermitian(&m)?;
        Ok(spectrum
            .values()
            .iter()
            .filter(|&&x| x >= lo && x <= hi)
            .count() as f64)
    })?;

    let summary = moments(&counts)?;
    let predicted = (order as f64).ln() / (std::f64::consts::PI * std::f64::consts::PI);

    // Distribution of integer counts on unit bins.
    let min = counts.iter().cloned().fold(f64::INFINITY, f64::min);
    let max = counts.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let count_grid = GridSpec::new(min - 0.5, max + 0.5, (max - min) as usize + 1)?;
    let hist = histogram(&counts, &count_grid, 1.0)?;

    let mut scalars = BTreeMap::new();
    scalars.insert("count_mean".into(), summary.mean);
    scalars.insert("count_variance".into(), summary.variance);
    scalars.insert("variance_predicted".into(), predicted);
    scalars.insert("interval_lo".into(), lo);
    scalars.insert("interval_hi".into(), hi);

    let mut warnings = Vec::new();
    let radius = (2.0 * order as f64 / stiffness).sqrt();
    if lo < -radius || hi > radius {
        warnings.push(format!(
            "window [{lo}, {hi}] reaches outside the spectral support [-{radius}, {radius}]; the bulk prediction does not apply"
        ));
    }

    // The manifest records the sampling stiffness as omega_tilde; omega and
    // g play no role in this experiment and are stored as inert defaults.
    let manifest_params = EnsembleParams {
        n: order,
        n_f: order / 2,
        omega: 1.0,
        omega_tilde: stiffness,
        g: 0.0,
    };
    let run = RunInfo {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        params: manifest_params,
        n_samples: cfg.n_samples,
        seed: cfg.seed,
        grid: count_grid,
        rho0: None,
        edge_threshold: None,
        ensemble: None,
        interval: Some((lo, hi)),
        wall_time_seconds: t0.elapsed().as_secs_f64(),
        regime: regime_check(&manifest_params),
    };

    Ok(ExperimentReport {
        curves: vec![("count_empirical".into(), hist.curve)],
        scalars,
        warnings,
        run,
    })
}

/// Analytic curves and gap prediction only, no sampling. The gap scalars
/// and sector curves are included whenever the filling is partial
/// (`1 <= n_f <= n-1`, `n >= 2`); the exact and semicircle densities are
/// always present.
///
/// Scalars: `effective_stiffness`, `support_radius`, `mu_f`, and with a
/// partial filling `omega_f`, `shift`, `gap_width_predicted`.
pub fn run_prediction(
    params: &EnsembleParams,
    grid: &GridSpec,
    rho0: Rho0,
) -> Result<ExperimentReport> {
    params.validate()?;
    if grid.bins < 10 {
        return Err(Error::InvalidParameter(format!(
            "prediction grid needs at least 10 bins, got {}",
            grid.bins
        )));
    }
    let t0 = Instant::now();
    let c = params.effective_stiffness();

    let mut curves = vec![
        (
            "rho_finite_n".to_string(),
            DensityCurve::from_fn(grid, params.n as f64, |x| density_finite_n(x, params.n, c))?,
        ),
        (
            "rho_semicircle".to_string(),
            DensityCurve::from_fn(grid, params.n as f64, |x| {
                density_semicircle(x, params.n, c)
            })?,
        ),
    ];

    let mut scalars = BTreeMap::new();
    scalars.insert("effective_stiffness".into(), c);
    scalars.insert("support_radius".into(), params.support_radius());
    scalars.insert("mu_f".into(), fermi_level(params.n, params.n_f, c)?);

    if params.n >= 2 && params.n_f >= 1 && params.n_f < params.n {
        let pred = gap_prediction(params)?;
        scalars.insert("omega_f".into(), pred.omega_f);
        scalars.insert("shift".into(), pred.shift);
        scalars.insert("gap_width_predicted".into(), pred.gap_width);
        let occupied = OccupiedDensity::new(params, rho0)?;
        curves.push((
            "filled_analytic".into(),
            DensityCurve::from_fn(grid, params.n_f as f64, |x| {
                occupied.eval(x, Sector::Filled)
            })?,
        ));
        curves.push((
            "empty_analytic".into(),
            DensityCurve::from_fn(grid, (params.n - params.n_f) as f64, |x| {
                occupied.eval(x, Sector::Empty)
            })?,
        ));
    }

    let cfg = ExperimentConfig {
        params: *params,
        n_samples: 1,
        grid: *grid,
        seed: 0,
        workers: None,
        rho0,
        edge_threshold: DEFAULT_EDGE_THRESHOLD,
        fermi_ensemble: FermiEnsemble::Quenched,
    };
    let mut run = RunInfo::new(&cfg, t0.elapsed().as_secs_f64());
    run.n_samples = 0;
    run.rho0 = Some(rho0);

    Ok(ExperimentReport {
        curves,
        scalars,
        warnings: Vec::new(),
        run,
    })
}
