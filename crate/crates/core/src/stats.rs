//! Sample statistics for Monte Carlo output.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// First four sample moments. Variance uses the unbiased (n-1) estimator;
/// skewness and excess kurtosis are the standardized central-moment ratios
/// `m3 / m2^{3/2}` and `m4 / m2^2 - 3` with population central moments.
/// Constant data has zero variance and, by convention, zero skewness and
/// excess kurtosis.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MomentSummary {
    pub count: usize,
    pub mean: f64,
    pub variance: f64,
    pub std_dev: f64,
    pub skewness: f64,
    pub excess_kurtosis: f64,
}

pub fn moments(xs: &[f64]) -> Result<MomentSummary> {
    if xs.len() < 2 {
        return Err(Error::InvalidParameter(format!(
            "moments need at least 2 samples, got {}",
            xs.len()
        )));
    }
    if let Some(v) = xs.iter().find(|v| !v.is_finite()) {
        return Err(Error::NonFinite(format!("sample value {v}")));
    }
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let (mut m2, mut m3, mut m4) = (0.0, 0.0, 0.0);
    for &x in xs {
        let d = x - mean;
        let d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    let variance = m2 / (n - 1.0);
    m2 /= n;
    m3 /= n;
    m4 /= n;
    let (skewness, excess_kurtosis) = if m2 > 0.0 {
        (m3 / m2.powf(1.5), m4 / (m2 * m2) - 3.0)
    } else {
        (0.0, 0.0)
    };
    Ok(MomentSummary {
        count: xs.len(),
        mean,
        variance,
        std_dev: variance.sqrt(),
        skewness,
        excess_kurtosis,
    })
}

/// Two-sample Kolmogorov-Smirnov statistic: the largest gap between the
/// empirical CDFs, tie-safe.
pub fn two_sample_ks(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::InvalidParameter(
            "KS statistic needs non-empty samples on both sides".into(),
        ));
    }
    for &v in a.iter().chain(b.iter()) {
        if v.is_nan() {
            return Err(Error::NonFinite("sample value NaN".into()));
        }
    }
    let mut a: Vec<f64> = a.to_vec();
    let mut b: Vec<f64> = b.to_vec();
    a.sort_by(|x, y| x.partial_cmp(y).unwrap());
    b.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let (n, m) = (a.len() as f64, b.len() as f64);
    let (mut i, mut j) = (0usize, 0usize);
    let mut d = 0.0f64;
    while i < a.len() && j < b.len() {
        let v = a[i].min(b[j]);
        while i < a.len() && a[i] <= v {
            i += 1;
        }
        while j < b.len() && b[j] <= v {
            j += 1;
        }
        d = d.max((i as f64 / n - j as f64 / m).abs());
    }
    Ok(d.max((i as f64 / n - j as f64 / m).abs()))
}

/// Large-sample two-sided KS rejection threshold at significance `alpha`:
/// `c(alpha) sqrt((n + m) / (n m))` with `c = sqrt(-ln(alpha/2) / 2)`.
pub fn ks_critical(alpha: f64, n: usize, m: usize) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "significance must lie in (0, 1), got {alpha}"
        )));
    }
    if n == 0 || m == 0 {
        return Err(Error::InvalidParameter(
            "KS threshold needs non-empty samples".into(),
        ));
    }
    let c = (-(alpha / 2.0).ln() / 2.0).sqrt();
    Ok(c * ((n + m) as f64 / (n as f64 * m as f64)).sqrt())
}
