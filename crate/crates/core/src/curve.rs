//! Uniform grids, normalized histograms, and distances between curves.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Uniform histogram grid over `[min, max]` with `bins` cells.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub min: f64,
    pub max: f64,
    pub bins: usize,
}

impl GridSpec {
    pub fn new(min: f64, max: f64, bins: usize) -> Result<Self> {
        if !min.is_finite() || !max.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "grid bounds must be finite, got [{min}, {max}]"
            )));
        }
        if min >= max {
            return Err(Error::InvalidParameter(format!(
                "grid needs min < max, got [{min}, {max}]"
            )));
        }
        if bins < 1 {
            return Err(Error::InvalidParameter("grid needs at least 1 bin".into()));
        }
        Ok(GridSpec { min, max, bins })
    }

    pub fn bin_width(&self) -> f64 {
        (self.max - self.min) / self.bins as f64
    }

    /// Bin midpoints, the abscissas every curve is evaluated on.
    pub fn centers(&self) -> Vec<f64> {
        let w = self.bin_width();
        (0..self.bins)
            .map(|i| self.min + (i as f64 + 0.5) * w)
            .collect()
    }
}

/// A density sampled on a fixed ascending grid, tagged with the mass it is
/// normalized to.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityCurve {
    grid: Vec<f64>,
    values: Vec<f64>,
    mass: f64,
}

impl DensityCurve {
    pub fn new(grid: Vec<f64>, values: Vec<f64>, mass: f64) -> Result<Self> {
        if grid.len() != values.len() {
            return Err(Error::GridMismatch);
        }
        if grid.is_empty() {
            return Err(Error::InvalidParameter(
                "curve needs at least 1 grid point".into(),
            ));
        }
        if !mass.is_finite() || mass < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "curve mass must be finite and >= 0, got {mass}"
            )));
        }
        for w in grid.windows(2) {
            if !(w[0].is_finite() && w[1].is_finite() && w[0] < w[1]) {
                return Err(Error::InvalidParameter(
                    "grid must be finite and strictly ascending".into(),
                ));
            }
        }
        if let Some(v) = values.iter().find(|v| !v.is_finite() || **v < 0.0) {
            return Err(Error::NonFinite(format!("curve value {v}")));
        }
        Ok(DensityCurve { grid, values, mass })
    }

    /// Evaluate `f` at the centers of `grid`.
    pub fn from_fn(
        grid: &GridSpec,
        mass: f64,
        mut f: impl FnMut(f64) -> Result<f64>,
    ) -> Result<Self> {
        let xs = grid.centers();
        let mut values = Vec::with_capacity(xs.len());
        for &x in &xs {
            values.push(f(x)?);
        }
        DensityCurve::new(xs, values, mass)
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn len(&self) -> usize {
        self.grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grid.is_empty()
    }

    /// Trapezoid-rule integral over the grid span.
    pub fn trapezoid_mass(&self) -> f64 {
        let mut total = 0.0;
        for i in 1..self.grid.len() {
            total +=
                0.5 * (self.values[i] + self.values[i - 1]) * (self.grid[i] - self.grid[i - 1]);
        }
        total
    }
}

/// Histogram of `samples` normalized so the in-range bins integrate to
/// `mass`; values falling outside the grid (NaN included) are tallied in
/// `overflow` and excluded from the normalization basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Histogram {
    pub curve: DensityCurve,
    pub overflow: u64,
}

pub fn histogram(samples: &[f64], grid: &GridSpec, mass: f64) -> Result<Histogram> {
    if !mass.is_finite() || mass < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "histogram mass must be finite and >= 0, got {mass}"
        )));
    }
    let w = grid.bin_width();
    let mut counts = vec![0u64; grid.bins];
    let mut overflow = 0u64;
    for &v in samples {
        // NaN fails both comparisons and lands in overflow.
        if !(v >= grid.min && v <= grid.max) {
            overflow += 1;
            continue;
        }
        let idx = (((v - grid.min) / w) as usize).min(grid.bins - 1);
        counts[idx] += 1;
    }
    let in_range: u64 = counts.iter().sum();
    if in_range == 0 && mass > 0.0 {
        return Err(Error::EmptyHistogram);
    }
    let scale = if in_range == 0 {
        0.0
    } else {
        mass / (in_range as f64 * w)
    };
    let values: Vec<f64> = counts.iter().map(|&c| c as f64 * scale).collect();
    Ok(Histogram {
        curve: DensityCurve::new(grid.centers(), values, mass)?,
        overflow,
    })
}

/// Trapezoid-rule integral of `|a - b|`; the curves must share the grid
/// bit for bit.
pub fn l1_distance(a: &DensityCurve, b: &DensityCurve) -> Result<f64> {
    if a.grid != b.grid {
        return Err(Error::GridMismatch);
    }
    let mut total = 0.0;
    for i in 1..a.grid.len() {
        let d1 = (a.values[i] - b.values[i]).abs();
        let d0 = (a.values[i - 1] - b.values[i - 1]).abs();
        total += 0.5 * (d1 + d0) * (a.grid[i] - a.grid[i - 1]);
    }
    Ok(total)
}
