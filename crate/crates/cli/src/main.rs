mod args;
mod report;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use rmt_core::{
    run_density_experiment, run_fermi_fluctuation_experiment, run_gap_experiment,
    run_number_variance_experiment, run_prediction, ExperimentReport,
};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            exit_code(&err)
        }
    }
}

/// Usage and domain errors exit 2, runtime failures (I/O, numerics) exit 1.
fn exit_code(err: &anyhow::Error) -> ExitCode {
    for cause in err.chain() {
        if let Some(core) = cause.downcast_ref::<rmt_core::Error>() {
            return match core {
                rmt_core::Error::InvalidParameter(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            };
        }
        if cause.downcast_ref::<std::io::Error>().is_some() {
            return ExitCode::from(1);
        }
    }
    ExitCode::from(1)
}

fn run(command: &Command) -> anyhow::Result<()> {
    let (report, out_dir) = match command {
        Command::Density(a) => {
            let cfg = args::density_config(a)?;
            (run_density_experiment(&cfg)?, &a.out.out)
        }
        Command::Gap(a) => {
            let cfg = args::gap_config(a)?;
            (run_gap_experiment(&cfg)?, &a.out.out)
        }
        Command::FermiFluct(a) => {
            let cfg = args::fermi_config(a)?;
            (run_fermi_fluctuation_experiment(&cfg)?, &a.out.out)
        }
        Command::NumberVariance(a) => {
            let cfg = args::number_variance_config(a)?;
            (run_number_variance_experiment(&cfg)?, &a.out.out)
        }
        Command::Predict(a) => {
            let params = a.model.params()?;
            let grid = args::resolve_grid(&params, &a.grid)?;
            (run_prediction(&params, &grid, a.rho0.into())?, &a.out.out)
        }
    };

    report::write_report(&report, command.name(), out_dir)?;
    print_summary(command.name(), &report, out_dir);
    Ok(())
}

fn print_summary(command: &str, report: &ExperimentReport, out_dir: &std::path::Path) {
    for warning in &report.warnings {
        eprintln!("warning: {warning}");
    }
    let run = &report.run;
    println!(
        "{command}: N={} N_f={} omega={} omega_tilde={} g={} samples={} seed={}",
        run.params.n,
        run.params.n_f,
        run.params.omega,
        run.params.omega_tilde,
        run.params.g,
        run.n_samples,
        run.seed,
    );
    for (name, value) in &report.scalars {
        println!("  {name} = {value:.6e}");
    }
    println!("wrote {}", out_dir.display());
}
