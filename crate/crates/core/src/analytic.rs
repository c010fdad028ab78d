//! Closed-form level densities and Fermi-level analytics.
//!
//! Everything here refers to the Gaussian unitary ensemble with entry weight
//! `exp(-c Tr M^2)`. Its exact mean level density is a sum of squared
//! orthonormal Hermite functions; for large order it approaches the Wigner
//! semicircle with edge `R = sqrt(2n/c)`. Filling the lowest `n_f` levels
//! with fermions displaces the filled and empty sectors apart and smears the
//! Fermi edge of each by an error function whose width is set by the
//! fluctuation of the sample Fermi level.

use std::f64::consts::{LN_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::EnsembleParams;

/// `c = omega omega_tilde / (omega + omega_tilde)`: stiffness of the sum of
/// independent Gaussian ensembles with stiffnesses `omega` and `omega_tilde`.
pub fn effective_stiffness(omega: f64, omega_tilde: f64) -> Result<f64> {
    for (name, v) in [("omega", omega), ("omega_tilde", omega_tilde)] {
        if !v.is_finite() || v <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "{name} must be finite and > 0, got {v}"
            )));
        }
    }
    Ok(crate::params::effective_stiffness_of(omega, omega_tilde))
}

fn check_order(n: usize) -> Result<()> {
    if n < 1 {
        return Err(Error::InvalidParameter("order n must be >= 1".into()));
    }
    Ok(())
}

fn check_stiffness(c: f64) -> Result<()> {
    if !c.is_finite() || c <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "stiffness must be finite and > 0, got {c}"
        )));
    }
    Ok(())
}

fn check_point(x: f64) -> Result<()> {
    if !x.is_finite() {
        return Err(Error::NonFinite(format!("evaluation point {x}")));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Complementary error function
// ---------------------------------------------------------------------------

/// Complementary error function `erfc(z) = 1 - erf(z)`.
///
/// Absolute error stays below 1e-13 on the real line: the body uses the
/// all-positive-terms series
/// `erf(z) = (2/sqrt(pi)) z e^{-z^2} sum_k (2z^2)^k / (2k+1)!!`
/// for `|z| < 2` and the Laplace continued fraction of `erfc` (modified
/// Lentz evaluation) for larger arguments, with `erfc(-z) = 2 - erfc(z)`.
pub fn erfc(z: f64) -> f64 {
    if z.is_nan() {
        return f64::NAN;
    }
    if z < 0.0 {
        return 2.0 - erfc(-z);
    }
    if z == 0.0 {
        return 1.0;
    }
    if z < 2.0 {
        1.0 - erf_series(z)
    } else {
        erfc_continued_fraction(z)
    }
}

fn erf_series(z: f64) -> f64 {
    let z2 = 2.0 * z * z;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..200u32 {
        term *= z2 / (2 * k + 1) as f64;
        sum += term;
        if term < sum * 1e-17 {
            break;
        }
    }
    (2.0 / PI.sqrt()) * z * (-z * z).exp() * sum
}

fn erfc_continued_fraction(z: f64) -> f64 {
    // erfc(z) sqrt(pi) e^{z^2} = 1 / (z + (1/2)/(z + (2/2)/(z + (3/2)/(z + ...))))
    let tiny = 1e-300;
    let mut f = z;
    let mut c = f;
    let mut d = 0.0;
    for k in 1..400u32 {
        let a = k as f64 / 2.0;
        d = z + a * d;
        if d == 0.0 {
            d = tiny;
        }
        c = z + a / c;
        if c == 0.0 {
            c = tiny;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            break;
        }
    }
    (-z * z).exp() / (PI.sqrt() * f)
}

// ---------------------------------------------------------------------------
// Level densities
// ---------------------------------------------------------------------------

/// Exact mean level density of the order-`n` ensemble at stiffness `c`:
/// `sqrt(c) * sum_{i=0}^{n-1} psi_i(sqrt(c) x)^2` with orthonormal Hermite
/// functions `psi_i`. Integrates to `n` over the real line.
///
/// The three-term recurrence
/// `psi_{i+1} = sqrt(2/(i+1)) y psi_i - sqrt(i/(i+1)) psi_{i-1}`
/// runs on numbers carried as `mantissa * 2^exponent`, so the evaluation
/// survives the range where `exp(-y^2/2)` underflows (|y| > 38) while the
/// high-order functions are still of order one. Safe for `n` up to 1024 and
/// beyond.
pub fn density_finite_n(x: f64, n: usize, c: f64) -> Result<f64> {
    check_order(n)?;
    check_stiffness(c)?;
    check_point(x)?;

    let y = c.sqrt() * x;
    let ln_psi0 = -0.5 * y * y - 0.25 * PI.ln();
    let mut exponent: i64 = (ln_psi0 / LN_2).floor() as i64;
    let mut cur = (ln_psi0 - exponent as f64 * LN_2).exp();
    let mut prev = 0.0f64;
    let mut sum = 0.0f64;

    const RESCALE_BITS: i64 = 256;
    let up = (2.0f64).powi(RESCALE_BITS as i32);
    let down = (2.0f64).powi(-(RESCALE_BITS as i32));

    for i in 0..n {
        let e2 = 2 * exponent;
        if e2 > -1080 {
            sum += cur * cur * pow2(e2);
        }
        if i + 1 < n {
            let fi = i as f64;
            let next = (2.0 / (fi + 1.0)).sqrt() * y * cur - (fi / (fi + 1.0)).sqrt() * prev;
            prev = cur;
            cur = next;
            let m = cur.abs().max(prev.abs());
            if m >= up {
                cur *= down;
                prev *= down;
                exponent += RESCALE_BITS;
            } else if m > 0.0 && m < down {
                cur *= up;
                prev *= up;
                exponent -= RESCALE_BITS;
            }
        }
    }
    Ok(c.sqrt() * sum)
}

fn pow2(e: i64) -> f64 {
    (2.0f64).powi(e.clamp(-1100, 1100) as i32)
}

/// Wigner semicircle density of the same ensemble,
/// `rho(x) = (c/pi) sqrt(2n/c - x^2)` on `|x| <= R = sqrt(2n/c)`, zero
/// outside. Integrates to `n`; the large-`n` limit of [`density_finite_n`].
pub fn density_semicircle(x: f64, n: usize, c: f64) -> Result<f64> {
    check_order(n)?;
    check_stiffness(c)?;
    check_point(x)?;
    let r2 = 2.0 * n as f64 / c;
    if x * x >= r2 {
        Ok(0.0)
    } else {
        Ok(c / PI * (r2 - x * x).sqrt())
    }
}

/// Semicircle support edge `R = sqrt(2n/c)`.
pub fn support_radius(n: usize, c: f64) -> Result<f64> {
    check_order(n)?;
    check_stiffness(c)?;
    Ok((2.0 * n as f64 / c).sqrt())
}

/// Cumulative semicircle level count
/// `N(x) = n (1/2 + (t sqrt(1-t^2) + asin t) / pi)` with `t = x/R` clamped
/// to `[-1, 1]`. Ranges from 0 at `-R` to `n` at `R`.
pub fn semicircle_cdf(x: f64, n: usize, c: f64) -> Result<f64> {
    check_order(n)?;
    check_stiffness(c)?;
    if x.is_nan() {
        return Err(Error::NonFinite("evaluation point NaN".into()));
    }
    let r = (2.0 * n as f64 / c).sqrt();
    let t = (x / r).clamp(-1.0, 1.0);
    Ok(n as f64 * (0.5 + (t * (1.0 - t * t).sqrt() + t.asin()) / PI))
}

/// Position `x` where the semicircle cumulative count reaches `mass`
/// (`0 <= mass <= n`), found by bisection to `|dx| <= 1e-12 R`.
pub fn semicircle_quantile(n: usize, c: f64, mass: f64) -> Result<f64> {
    check_order(n)?;
    check_stiffness(c)?;
    if !mass.is_finite() || mass < 0.0 || mass > n as f64 {
        return Err(Error::InvalidParameter(format!(
            "target mass {mass} outside [0, {n}]"
        )));
    }
    let r = (2.0 * n as f64 / c).sqrt();
    if mass == 0.0 {
        return Ok(-r);
    }
    if mass == n as f64 {
        return Ok(r);
    }
    let tol = 1e-12 * r;
    let (mut lo, mut hi) = (-r, r);
    // 64 halvings shrink the bracket by 2^-64, far below tol already.
    for _ in 0..128 {
        let mid = 0.5 * (lo + hi);
        let f = semicircle_cdf(mid, n, c)? - mass;
        if f == 0.0 {
            return Ok(mid);
        }
        if f < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= tol {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Fermi level of the large-`n` density: the energy below which the
/// semicircle holds exactly `n_f` levels. Returns `-R` for `n_f = 0` and
/// `+R` for `n_f = n`; at half filling it is 0 exactly.
pub fn fermi_level(n: usize, n_f: usize, c: f64) -> Result<f64> {
    if n_f > n {
        return Err(Error::InvalidParameter(format!(
            "filling n_f = {n_f} exceeds order n = {n}"
        )));
    }
    semicircle_quantile(n, c, n_f as f64)
}

/// Stiffness `omega_F = (pi rho(mu_F))^2 / ln n` of the erfc smearing of the
/// Fermi edge; equals `1 / (2 delta_mu^2)` for the fluctuation width
/// [`delta_mu_theory`]. Needs `n >= 2` and a positive density at the level.
pub fn fermi_width(n: usize, rho_at_mu: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidParameter(
            "fermi width needs n >= 2 (ln n must be positive)".into(),
        ));
    }
    if !rho_at_mu.is_finite() || rho_at_mu <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "density at the Fermi level must be finite and > 0, got {rho_at_mu}"
        )));
    }
    let p = PI * rho_at_mu;
    Ok(p * p / (n as f64).ln())
}

/// Predicted standard deviation of the sample Fermi level,
/// `delta_mu = sqrt(ln n) / (sqrt(2) pi rho(mu_F))`.
pub fn delta_mu_theory(n: usize, rho_at_mu: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidParameter(
            "fermi fluctuation width needs n >= 2".into(),
        ));
    }
    if !rho_at_mu.is_finite() || rho_at_mu <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "density at the Fermi level must be finite and > 0, got {rho_at_mu}"
        )));
    }
    Ok((n as f64).ln().sqrt() / (2.0f64.sqrt() * PI * rho_at_mu))
}

// ---------------------------------------------------------------------------
// Occupied / empty densities and the gap prediction
// ---------------------------------------------------------------------------

/// Which displaced sector of the spectrum to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sector {
    Filled,
    Empty,
}

/// Base density used inside [`OccupiedDensity`]: the smooth semicircle or
/// the exact finite-`n` Hermite sum (useful at small `n` where the exact
/// density shows visible oscillations).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rho0 {
    Semicircle,
    FiniteN,
}

/// Analytic density of the filled and empty sectors.
///
/// With displacement `s = g/(2 omega^2)`, Fermi level `mu_F`, and smearing
/// stiffness `omega_F`:
///
/// ```text
/// filled(x) = 1/2 erfc( sqrt(omega_F) (x + s - mu_F) ) rho0(x + s)
/// empty(x)  = 1/2 (1 + erf( sqrt(omega_F) (x - s - mu_F) )) rho0(x - s)
/// ```
///
/// Their sum integrates to `n` exactly; each factor is bounded by
/// `rho0` displaced by `-s` or `+s`.
#[derive(Clone, Copy, Debug)]
pub struct OccupiedDensity {
    n: usize,
    c: f64,
    shift: f64,
    mu_f: f64,
    omega_f: f64,
    rho0: Rho0,
}

impl OccupiedDensity {
    /// `omega_F` is always computed from the semicircle value of
    /// `rho(mu_F)` at the combined stiffness, regardless of `rho0`; the
    /// `rho0` choice only swaps the density factor.
    pub fn new(params: &EnsembleParams, rho0: Rho0) -> Result<Self> {
        params.validate()?;
        let c = params.effective_stiffness();
        let mu_f = fermi_level(params.n, params.n_f, c)?;
        let rho_mu = density_semicircle(mu_f, params.n, c)?;
        let omega_f = fermi_width(params.n, rho_mu)?;
        Ok(OccupiedDensity {
            n: params.n,
            c,
            shift: params.shift(),
            mu_f,
            omega_f,
            rho0,
        })
    }

    /// Override the smearing stiffness (e.g. a huge value recovers the
    /// sharp-cutoff limit `rho0 * theta(mu_F - x - s)`).
    pub fn with_fermi_width(mut self, omega_f: f64) -> Result<Self> {
        if !omega_f.is_finite() || omega_f <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "smearing stiffness must be finite and > 0, got {omega_f}"
            )));
        }
        self.omega_f = omega_f;
        Ok(self)
    }

    pub fn mu_f(&self) -> f64 {
        self.mu_f
    }

    pub fn omega_f(&self) -> f64 {
        self.omega_f
    }

    pub fn shift(&self) -> f64 {
        self.shift
    }

    fn rho0_at(&self, u: f64) -> Result<f64> {
        match self.rho0 {
            Rho0::Semicircle => density_semicircle(u, self.n, self.c),
            Rho0::FiniteN => density_finite_n(u, self.n, self.c),
        }
    }

    pub fn eval(&self, x: f64, sector: Sector) -> Result<f64> {
        check_point(x)?;
        let sq = self.omega_f.sqrt();
        match sector {
            Sector::Filled => {
                let u = x + self.shift;
                Ok(0.5 * erfc(sq * (u - self.mu_f)) * self.rho0_at(u)?)
            }
            Sector::Empty => {
                let u = x - self.shift;
                // (1 + erf(t))/2 = 1 - erfc(t)/2
                Ok((1.0 - 0.5 * erfc(sq * (u - self.mu_f))) * self.rho0_at(u)?)
            }
        }
    }
}

/// One-shot evaluation of the filled or empty density with the default
/// semicircle base density.
pub fn density_occupied(x: f64, params: &EnsembleParams, sector: Sector) -> Result<f64> {
    OccupiedDensity::new(params, Rho0::Semicircle)?.eval(x, sector)
}

/// Predicted location and size of the homolumo gap.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GapPrediction {
    /// Fermi level of the combined ensemble.
    pub mu_f: f64,
    /// Smearing stiffness of the Fermi edge.
    pub omega_f: f64,
    /// Displacement of each sector, `g / (2 omega^2)`.
    pub shift: f64,
    /// Predicted gap width `g / omega^2 = 2 shift`.
    pub gap_width: f64,
}

/// Gap prediction at the given couplings; needs `n >= 2` and a partial
/// filling (the edge density vanishes when every level is filled or empty).
pub fn gap_prediction(params: &EnsembleParams) -> Result<GapPrediction> {
    let occ = OccupiedDensity::new(params, Rho0::Semicircle)?;
    Ok(GapPrediction {
        mu_f: occ.mu_f(),
        omega_f: occ.omega_f(),
        shift: occ.shift(),
        gap_width: 2.0 * occ.shift(),
    })
}
