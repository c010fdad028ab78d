//! Command-line surface and conversion into experiment configurations.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use rmt_core::experiments::DEFAULT_BINS;
use rmt_core::{
    EnsembleParams, ExperimentConfig, FermiEnsemble, GridSpec, NumberVarianceConfig, Rho0,
};

#[derive(Parser, Debug)]
#[command(
    name = "rmt",
    version,
    about = "Random-matrix homolumo gap: samplers, analytic densities, Monte Carlo experiments"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Sample the combined ensemble and compare with the analytic level densities
    Density(DensityArgs),
    /// Displaced filled/empty block experiment around the Fermi level
    Gap(GapArgs),
    /// Fluctuation statistics of the per-sample Fermi level
    FermiFluct(FermiArgs),
    /// Variance of the eigenvalue count in a fixed energy window
    NumberVariance(NumberVarianceArgs),
    /// Analytic curves and gap prediction only, no sampling
    Predict(PredictArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Density(_) => "density",
            Command::Gap(_) => "gap",
            Command::FermiFluct(_) => "fermi-fluct",
            Command::NumberVariance(_) => "number-variance",
            Command::Predict(_) => "predict",
        }
    }
}

#[derive(Args, Debug)]
pub struct ModelArgs {
    /// Matrix order N
    #[arg(long)]
    pub n: usize,
    /// Filled levels N_f (default: N/2)
    #[arg(long)]
    pub nf: Option<usize>,
    /// Quantum stiffness of the dynamical fluctuation
    #[arg(long, default_value_t = 1.0)]
    pub omega: f64,
    /// Quenched stiffness of the frozen matrix
    #[arg(long, default_value_t = 1.0)]
    pub omega_tilde: f64,
    /// Fermion coupling
    #[arg(long, default_value_t = 0.0)]
    pub g: f64,
}

impl ModelArgs {
    pub fn params(&self) -> rmt_core::Result<EnsembleParams> {
        EnsembleParams::new(
            self.n,
            self.nf.unwrap_or(self.n / 2),
            self.omega,
            self.omega_tilde,
            self.g,
        )
    }
}

#[derive(Args, Debug)]
pub struct SamplingArgs {
    /// Monte Carlo samples
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    /// Master seed; sample i draws from substream (seed, i)
    #[arg(long, env = "RMT_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Worker threads (0 = all cores); never affects the results
    #[arg(long)]
    pub workers: Option<usize>,
}

#[derive(Args, Debug)]
pub struct GridArgs {
    /// Histogram bins
    #[arg(long, default_value_t = DEFAULT_BINS)]
    pub bins: usize,
    /// Grid lower bound (default: -(R + 3/sqrt(omega) + shift))
    #[arg(long, allow_negative_numbers = true)]
    pub xmin: Option<f64>,
    /// Grid upper bound (default: R + 3/sqrt(omega) + shift)
    #[arg(long, allow_negative_numbers = true)]
    pub xmax: Option<f64>,
}

#[derive(Args, Debug)]
pub struct OutArgs {
    /// Output directory for curves.csv, scalars.json, manifest.json
    #[arg(long, default_value = "rmt-out")]
    pub out: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Rho0Arg {
    /// Wigner semicircle at the effective stiffness
    Semicircle,
    /// Exact finite-N Hermite-sum density
    FiniteN,
}

impl From<Rho0Arg> for Rho0 {
    fn from(a: Rho0Arg) -> Rho0 {
        match a {
            Rho0Arg::Semicircle => Rho0::Semicircle,
            Rho0Arg::FiniteN => Rho0::FiniteN,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EnsembleArg {
    /// The frozen matrix alone (stiffness omega-tilde)
    Quenched,
    /// The combined matrix (effective stiffness c)
    Combined,
}

impl From<EnsembleArg> for FermiEnsemble {
    fn from(a: EnsembleArg) -> FermiEnsemble {
        match a {
            EnsembleArg::Quenched => FermiEnsemble::Quenched,
            EnsembleArg::Combined => FermiEnsemble::Combined,
        }
    }
}

#[derive(Args, Debug)]
pub struct DensityArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[command(flatten)]
    pub sampling: SamplingArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Args, Debug)]
pub struct GapArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[command(flatten)]
    pub sampling: SamplingArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub out: OutArgs,
    /// Base density of the analytic filled/empty curves
    #[arg(long, value_enum, default_value_t = Rho0Arg::Semicircle)]
    pub rho0: Rho0Arg,
    /// Gap-edge detection threshold as a fraction of the curve peak
    #[arg(long, default_value_t = 0.01)]
    pub edge_threshold: f64,
}

#[derive(Args, Debug)]
pub struct FermiArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[command(flatten)]
    pub sampling: SamplingArgs,
    #[command(flatten)]
    pub out: OutArgs,
    /// Bins of the fermi-level histogram (its span is derived from the
    /// predicted fluctuation width)
    #[arg(long, default_value_t = DEFAULT_BINS)]
    pub bins: usize,
    /// Spectrum the per-sample Fermi level is measured on
    #[arg(long, value_enum, default_value_t = EnsembleArg::Quenched)]
    pub ensemble: EnsembleArg,
}

#[derive(Args, Debug)]
pub struct NumberVarianceArgs {
    /// Matrix order N
    #[arg(long)]
    pub n: usize,
    /// Stiffness of the sampled (frozen) ensemble
    #[arg(long, default_value_t = 1.0)]
    pub omega_tilde: f64,
    /// Window lower bound (default: centered window holding half the levels)
    #[arg(long, requires = "xmax", allow_negative_numbers = true)]
    pub xmin: Option<f64>,
    /// Window upper bound
    #[arg(long, requires = "xmin", allow_negative_numbers = true)]
    pub xmax: Option<f64>,
    #[command(flatten)]
    pub sampling: SamplingArgs,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Args, Debug)]
pub struct PredictArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub out: OutArgs,
    /// Base density of the analytic filled/empty curves
    #[arg(long, value_enum, default_value_t = Rho0Arg::Semicircle)]
    pub rho0: Rho0Arg,
}

/// Resolve the grid flags against the padded default span for `params`.
pub fn resolve_grid(params: &EnsembleParams, grid: &GridArgs) -> rmt_core::Result<GridSpec> {
    let default = ExperimentConfig::default_grid(params, grid.bins)?;
    GridSpec::new(
        grid.xmin.unwrap_or(default.min),
        grid.xmax.unwrap_or(default.max),
        grid.bins,
    )
}

pub fn density_config(a: &DensityArgs) -> rmt_core::Result<ExperimentConfig> {
    let params = a.model.params()?;
    let cfg = ExperimentConfig {
        params,
        n_samples: a.sampling.samples,
        grid: resolve_grid(&params, &a.grid)?,
        seed: a.sampling.seed,
        workers: a.sampling.workers,
        rho0: Rho0::Semicircle,
        edge_threshold: rmt_core::experiments::DEFAULT_EDGE_THRESHOLD,
        fermi_ensemble: FermiEnsemble::Quenched,
    };
    cfg.validate()?;
    Ok(cfg)
}

pub fn gap_config(a: &GapArgs) -> rmt_core::Result<ExperimentConfig> {
    let params = a.model.params()?;
    let cfg = ExperimentConfig {
        params,
        n_samples: a.sampling.samples,
        grid: resolve_grid(&params, &a.grid)?,
        seed: a.sampling.seed,
        workers: a.sampling.workers,
        rho0: a.rho0.into(),
        edge_threshold: a.edge_threshold,
        fermi_ensemble: FermiEnsemble::Quenched,
    };
    cfg.validate()?;
    Ok(cfg)
}

pub fn fermi_config(a: &FermiArgs) -> rmt_core::Result<ExperimentConfig> {
    let params = a.model.params()?;
    let cfg = ExperimentConfig {
        params,
        n_samples: a.sampling.samples,
        grid: ExperimentConfig::default_grid(&params, a.bins)?,
        seed: a.sampling.seed,
        workers: a.sampling.workers,
        rho0: Rho0::Semicircle,
        edge_threshold: rmt_core::experiments::DEFAULT_EDGE_THRESHOLD,
        fermi_ensemble: a.ensemble.into(),
    };
    cfg.validate()?;
    Ok(cfg)
}

pub fn number_variance_config(a: &NumberVarianceArgs) -> rmt_core::Result<NumberVarianceConfig> {
    let interval = match (a.xmin, a.xmax) {
        (Some(lo), Some(hi)) => Some((lo, hi)),
        _ => None, // clap's `requires` rules out the mixed cases
    };
    let cfg = NumberVarianceConfig {
        order: a.n,
        stiffness: a.omega_tilde,
        interval,
        n_samples: a.sampling.samples,
        seed: a.sampling.seed,
        workers: a.sampling.workers,
    };
    cfg.validate()?;
    Ok(cfg)
}
