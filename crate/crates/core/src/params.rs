//! Model parameters and validity diagnostics.
//!
//! The ensemble couples a quenched Hermitian matrix `M0`, drawn with weight
//! `exp(-omega_tilde * Tr M0^2)`, to a quantum fluctuation `X` whose ground
//! state density is `exp(-omega * Tr X^2)`. `N_f` spinless fermions filling
//! the lowest levels push the filled block down and the empty block up by
//! `g / (2 omega^2)` each, opening a homolumo gap of width `g / omega^2`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Couplings of one ensemble: matrix order, filling, the two stiffnesses,
/// and the fermion coupling.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnsembleParams {
    /// Matrix order N.
    pub n: usize,
    /// Number of filled levels, `0 <= n_f <= n`.
    pub n_f: usize,
    /// Quantum stiffness omega of the dynamical fluctuation.
    pub omega: f64,
    /// Quenched stiffness omega-tilde of the frozen matrix.
    pub omega_tilde: f64,
    /// Fermion-matrix coupling, `g >= 0`.
    pub g: f64,
}

impl EnsembleParams {
    pub fn new(n: usize, n_f: usize, omega: f64, omega_tilde: f64, g: f64) -> Result<Self> {
        let params = EnsembleParams {
            n,
            n_f,
            omega,
            omega_tilde,
            g,
        };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 1 {
            return Err(Error::InvalidParameter(
                "matrix order n must be >= 1".into(),
            ));
        }
        if self.n_f > self.n {
            return Err(Error::InvalidParameter(format!(
                "filling n_f = {} exceeds matrix order n = {}",
                self.n_f, self.n
            )));
        }
        for (name, v) in [("omega", self.omega), ("omega_tilde", self.omega_tilde)] {
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be finite and > 0, got {v}"
                )));
            }
        }
        if !self.g.is_finite() || self.g < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "coupling g must be finite and >= 0, got {}",
                self.g
            )));
        }
        Ok(())
    }

    /// Combined stiffness `c = omega omega_tilde / (omega + omega_tilde)` of
    /// the marginal distribution of `M = M0 + X`.
    pub fn effective_stiffness(&self) -> f64 {
        effective_stiffness_of(self.omega, self.omega_tilde)
    }

    /// Displacement `s = g / (2 omega^2)` of each block; the gap width is `2s`.
    pub fn shift(&self) -> f64 {
        self.g / (2.0 * self.omega * self.omega)
    }

    /// Edge `R = sqrt(2 n / c)` of the semicircle support of the combined
    /// ensemble at stiffness `c`.
    pub fn support_radius(&self) -> f64 {
        (2.0 * self.n as f64 / self.effective_stiffness()).sqrt()
    }
}

/// `c = omega omega_tilde / (omega + omega_tilde)`, the stiffness of the sum
/// of two independent Gaussian ensembles.
pub fn effective_stiffness_of(omega: f64, omega_tilde: f64) -> f64 {
    omega * omega_tilde / (omega + omega_tilde)
}

/// Cutoffs used by [`regime_check`]. `push_min` bounds `g / omega^(3/2)` from
/// below; `small_max` bounds the two perturbative ratios from above.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegimeThresholds {
    pub push_min: f64,
    pub small_max: f64,
}

impl Default for RegimeThresholds {
    fn default() -> Self {
        RegimeThresholds {
            push_min: 5.0,
            small_max: 0.2,
        }
    }
}

/// Dimensionless ratios deciding whether the displaced-block picture of the
/// gap is trustworthy at the given couplings.
///
/// The ratios serialize as numbers when finite and as the strings "inf",
/// "-inf", "nan" otherwise, so a `g = 0` report survives a JSON round trip.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegimeReport {
    /// `omega^3 / g^2`: off-diagonal block mixing, small when valid.
    #[serde(with = "ratio_serde")]
    pub r1: f64,
    /// `sqrt(omega_tilde) omega / g`: quenched-over-coupling ratio, small when valid.
    #[serde(with = "ratio_serde")]
    pub r2: f64,
    /// `g / omega^(3/2)`: strength of the fermion push, large when valid.
    #[serde(with = "ratio_serde")]
    pub r3: f64,
    /// `r3 >= push_min`: the push dominates the quantum level spacing.
    pub valid_push: bool,
    /// `r1 <= small_max` and `r2 <= small_max`: off-diagonal blocks negligible.
    pub valid_offdiag: bool,
    /// `omega_tilde < omega`: the quenched spread dominates the level layout.
    pub quenched_dominant: bool,
}

/// Evaluate the validity ratios with default thresholds. `g = 0` yields
/// infinite `r1`, `r2` and all flags false; that is a report, not an error.
pub fn regime_check(params: &EnsembleParams) -> RegimeReport {
    regime_check_with(params, RegimeThresholds::default())
}

pub fn regime_check_with(params: &EnsembleParams, thresholds: RegimeThresholds) -> RegimeReport {
    let (omega, omega_tilde, g) = (params.omega, params.omega_tilde, params.g);
    let r1 = omega.powi(3) / (g * g);
    let r2 = omega_tilde.sqrt() * omega / g;
    let r3 = g / omega.powf(1.5);
    RegimeReport {
        r1,
        r2,
        r3,
        valid_push: r3 >= thresholds.push_min,
        valid_offdiag: r1 <= thresholds.small_max && r2 <= thresholds.small_max,
        quenched_dominant: omega_tilde < omega,
    }
}

mod ratio_serde {
    use serde::de::{self, Visitor};
    use serde::{Deserializer, Serializer};
    use std::fmt;

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_finite() {
            s.serialize_f64(*v)
        } else if v.is_nan() {
            s.serialize_str("nan")
        } else if *v > 0.0 {
            s.serialize_str("inf")
        } else {
            s.serialize_str("-inf")
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        struct RatioVisitor;
        impl<'de> Visitor<'de> for RatioVisitor {
            type Value = f64;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a number or one of \"inf\", \"-inf\", \"nan\"")
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> Result<f64, E> {
                Ok(v)
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<f64, E> {
                Ok(v as f64)
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<f64, E> {
                Ok(v as f64)
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<f64, E> {
                match v {
                    "inf" => Ok(f64::INFINITY),
                    "-inf" => Ok(f64::NEG_INFINITY),
                    "nan" => Ok(f64::NAN),
                    other => Err(E::custom(format!("unrecognized ratio value {other:?}"))),
                }
            }
        }
        d.deserialize_any(RatioVisitor)
    }
}
