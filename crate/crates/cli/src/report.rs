//! Writes an experiment report to an output directory.
//!
//! Layout: `curves.csv` (all curves on the shared grid, full-precision),
//! `scalars.json`, and `manifest.json` holding everything needed to replay
//! the run.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use rmt_core::{ExperimentReport, RunInfo};

/// Replay record: the subcommand plus the full run description.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    #[serde(flatten)]
    pub run: RunInfo,
    pub warnings: Vec<String>,
}

fn curves_csv(report: &ExperimentReport) -> anyhow::Result<String> {
    let mut out = String::from("x");
    for (name, _) in &report.curves {
        out.push(',');
        out.push_str(name);
    }
    out.push('\n');

    let Some((_, first)) = report.curves.first() else {
        return Ok(out);
    };
    for (_, curve) in &report.curves[1..] {
        anyhow::ensure!(
            curve.grid() == first.grid(),
            "report curves disagree on the grid"
        );
    }
    for (i, x) in first.grid().iter().enumerate() {
        write!(out, "{x:.16e}")?;
        for (_, curve) in &report.curves {
            write!(out, ",{:.16e}", curve.values()[i])?;
        }
        out.push('\n');
    }
    Ok(out)
}

/// Write `curves.csv`, `scalars.json`, and `manifest.json` under `dir`.
pub fn write_report(report: &ExperimentReport, command: &str, dir: &Path) -> anyhow::Result<()> {
    let named = |e: std::io::Error| anyhow::Error::new(e).context(format!("{}", dir.display()));
    fs::create_dir_all(dir).map_err(named)?;

    fs::write(dir.join("curves.csv"), curves_csv(report)?).map_err(named)?;

    let mut scalars = serde_json::to_string_pretty(&report.scalars)?;
    scalars.push('\n');
    fs::write(dir.join("scalars.json"), scalars).map_err(named)?;

    let manifest = RunManifest {
        command: command.to_string(),
        run: report.run.clone(),
        warnings: report.warnings.clone(),
    };
    let mut manifest = serde_json::to_string_pretty(&manifest)?;
    manifest.push('\n');
    fs::write(dir.join("manifest.json"), manifest).map_err(named)?;

    Ok(())
}
