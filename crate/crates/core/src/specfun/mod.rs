//! Special functions: gamma family, Pochhammer ratios, distance-series
//! coefficients and tails, Riemann/Hurwitz zeta, Ramanujan tau and `L(s, Δ)`.

mod gamma;
mod series;
mod tau;
mod zeta;

pub use gamma::{
    beta_regularized, cos_pi, gamma, ln_gamma_diff, log_gamma, pochhammer_ratio, recip_gamma,
    sin_pi, upper_incomplete_gamma,
};
pub(crate) use gamma::lgamma;
pub use series::{dist_coeff, moment_integral, tail_sum_all, tail_sum_even_weighted};
pub(crate) use series::richardson_tail_with_error;
pub use tau::{ramanujan_l, ramanujan_l_direct, ramanujan_tau};
pub use zeta::{hurwitz_zeta, riemann_zeta};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Coefficients of a zonal kernel `K(t) = sum_{m>=1} a_m t^m` with `a_m > 0`.
///
/// Constant terms are dropped: they cancel in every discrete-minus-continuous
/// deficit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CoefficientRule {
    /// `a_m = -(-α/2)_m / m!`, i.e. `K(t) = 1 - (1 - t)^(α/2)`.
    PowerLaw { alpha: f64 },
    /// `K(t) = 1/(1 + sqrt(1 - t)) - 1/2`, `a_m = (1/2)(1/2)_m/(2)_m`.
    InverseOnePlusSqrt,
    /// Finitely many coefficients `a_1, a_2, ...`.
    Explicit { coefficients: Vec<f64> },
}

impl CoefficientRule {
    pub fn power_law(alpha: f64) -> Result<Self> {
        if alpha > 0.0 && alpha <= 2.0 {
            Ok(Self::PowerLaw { alpha })
        } else {
            Err(Error::Domain(format!("alpha must lie in (0, 2], got {alpha}")))
        }
    }

    pub fn explicit(coefficients: Vec<f64>) -> Result<Self> {
        if coefficients.iter().any(|c| !(c.is_finite() && *c >= 0.0)) {
            return Err(Error::Domain(
                "explicit kernel coefficients must be finite and nonnegative".into(),
            ));
        }
        Ok(Self::Explicit { coefficients })
    }

    /// `a_m`; zero for `m = 0`.
    pub fn coefficient(&self, m: u64) -> f64 {
        if m == 0 {
            return 0.0;
        }
        match self {
            Self::PowerLaw { alpha } => dist_coeff(m, *alpha),
            Self::InverseOnePlusSqrt => {
                0.5 * pochhammer_ratio(0.5, 2.0, m).expect("positive denominator")
            }
            Self::Explicit { coefficients } => {
                coefficients.get(m as usize - 1).copied().unwrap_or(0.0)
            }
        }
    }

    /// First `len` coefficients `a_1..a_len` by a stable recurrence.
    pub fn coefficients(&self, len: usize) -> Vec<f64> {
        match self {
            Self::PowerLaw { alpha } => {
                let h = 0.5 * alpha;
                let mut a = h;
                (1..=len)
                    .map(|m| {
                        let cur = a;
                        a *= (m as f64 - h) / (m as f64 + 1.0);
                        cur
                    })
                    .collect()
            }
            Self::InverseOnePlusSqrt => {
                let mut a = 0.125;
                (1..=len)
                    .map(|m| {
                        let cur = a;
                        a *= (m as f64 + 0.5) / (m as f64 + 2.0);
                        cur
                    })
                    .collect()
            }
            Self::Explicit { coefficients } => (0..len)
                .map(|i| coefficients.get(i).copied().unwrap_or(0.0))
                .collect(),
        }
    }

    /// `K(t) = sum_{m>=1} a_m t^m` for `-1 <= t <= 1`.
    pub fn kernel(&self, t: f64) -> f64 {
        let t = t.clamp(-1.0, 1.0);
        match self {
            Self::PowerLaw { alpha } => 1.0 - (1.0 - t).powf(0.5 * alpha),
            Self::InverseOnePlusSqrt => 1.0 / (1.0 + (1.0 - t).sqrt()) - 0.5,
            Self::Explicit { coefficients } => {
                coefficients.iter().rev().fold(0.0, |acc, c| acc * t + c) * t
            }
        }
    }

    /// Exponent `q` with `a_m ~ c m^(-1-q)`; `None` for finite sequences.
    pub fn decay_exponent(&self) -> Option<f64> {
        match self {
            Self::PowerLaw { alpha } => Some(0.5 * alpha),
            Self::InverseOnePlusSqrt => Some(0.5),
            Self::Explicit { .. } => None,
        }
    }

    /// Number of nonzero coefficients, if finite.
    pub fn degree(&self) -> Option<usize> {
        match self {
            Self::Explicit { coefficients } => Some(coefficients.len()),
            Self::PowerLaw { alpha } if *alpha == 2.0 => Some(1),
            _ => None,
        }
    }
}
