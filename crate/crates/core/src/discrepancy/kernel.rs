//! Discrete-minus-continuous energies of general positive-coefficient zonal
//! kernels, and the moment-series reconstruction of the squared discrepancy.

use serde::{Deserialize, Serialize};

use super::energy::{dist2, dot, energy_integral, moment_sums, pair_sum};
use crate::constants::stolarsky_constant;
use crate::pointgen::PointConfiguration;
use crate::specfun::{
    dist_coeff, moment_integral, pochhammer_ratio, richardson_tail_with_error, tail_sum_all,
    tail_sum_even_weighted, CoefficientRule,
};
use crate::sum::Compensated;
use crate::{Error, Result};

/// Default series truncation.
pub const DEFAULT_TRUNCATION: usize = 10_000;
/// Error estimate above which the continuous kernel energy is rejected.
const TRUNCATION_LIMIT: f64 = 1e-6;
/// Directly summed even terms before the extrapolated tail.
const DIRECT_EVEN_TERMS: u64 = 64;

/// `K(x·y)` evaluated from the gap `1 - x·y = ‖x-y‖²/2` where that is more
/// accurate.
fn kernel_value(rule: &CoefficientRule, x: &[f64], y: &[f64]) -> f64 {
    match rule {
        CoefficientRule::PowerLaw { alpha } => 1.0 - (0.5 * dist2(x, y)).powf(0.5 * alpha),
        CoefficientRule::InverseOnePlusSqrt => 1.0 / (1.0 + (0.5 * dist2(x, y)).sqrt()) - 0.5,
        CoefficientRule::Explicit { .. } => rule.kernel(dot(x, y)),
    }
}

/// `∫∫ K(x·y) dσ dσ = Σ a_m ∫∫ (x·y)^m dσ dσ` on `S^d`.
pub fn kernel_continuous(rule: &CoefficientRule, d: usize) -> Result<f64> {
    match rule {
        CoefficientRule::PowerLaw { alpha } => {
            Ok(1.0 - 2f64.powf(-0.5 * alpha) * energy_integral(d, *alpha)?)
        }
        CoefficientRule::Explicit { coefficients } => {
            let mut acc = Compensated::new();
            for (i, a) in coefficients.iter().enumerate() {
                acc.add(a * moment_integral(d as u32, i as u64 + 1));
            }
            Ok(acc.value())
        }
        CoefficientRule::InverseOnePlusSqrt => {
            let term = |r: u64| {
                let m = 2 * r;
                let a = 0.5 * pochhammer_ratio(0.5, 2.0, m).expect("positive denominator");
                a * moment_integral(d as u32, m)
            };
            let mut acc = Compensated::new();
            for r in 1..=DIRECT_EVEN_TERMS {
                acc.add(term(r));
            }
            let q = rule.decay_exponent().unwrap_or(0.5) + 0.5 * d as f64;
            let (tail, err) = richardson_tail_with_error(DIRECT_EVEN_TERMS + 1, q, term);
            if err > TRUNCATION_LIMIT {
                return Err(Error::Truncation {
                    bound: err,
                    limit: TRUNCATION_LIMIT,
                });
            }
            acc.add(tail);
            Ok(acc.value())
        }
    }
}

/// `ΣΣ w_j w_k K(x_j·x_k) - ∫∫ K dσ dσ`, split into the first `truncation`
/// moment terms and the exact remainder.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KernelDeficit {
    pub value: f64,
    /// `Σ_{m <= M} a_m S(m)`.
    pub series: f64,
    /// `value - series = Σ_{m > M} a_m S(m)`.
    pub remainder: f64,
    pub truncation: usize,
}

pub fn kernel_deficit(
    config: &PointConfiguration,
    rule: &CoefficientRule,
    truncation: usize,
) -> Result<KernelDeficit> {
    let continuous = kernel_continuous(rule, config.dim())?;
    let discrete = pair_sum(config, |x, y| kernel_value(rule, x, y));
    let value = discrete - continuous;
    if value < -1e-10 {
        return Err(Error::Corruption(format!(
            "kernel deficit {value:e} is negative for a positive-coefficient kernel"
        )));
    }
    let series = if truncation == 0 {
        0.0
    } else {
        let s = moment_sums(config, truncation);
        let a = rule.coefficients(truncation);
        let mut acc = Compensated::new();
        for (am, sm) in a.iter().zip(&s[1..]) {
            acc.add(am * sm);
        }
        acc.value()
    };
    Ok(KernelDeficit {
        value: value.max(0.0),
        series,
        remainder: value - series,
        truncation,
    })
}

/// Moment-series reconstruction of the squared discrepancy:
/// `D² = √2 C_d Σ_m a_m S(m)` with `α = 1` coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesReconstruction {
    pub truncation: usize,
    /// `√2 C_d Σ_{m <= M} a_m S(m)`.
    pub partial: f64,
    /// Diagonal (`j = k`) and continuous parts of the tail `m > M`:
    /// `√2 C_d Σ_{m > M} a_m (Σ w_j² - ∫∫ (x·y)^m)`.
    pub diagonal_tail: f64,
    /// Squared discrepancy from the energy identity.
    pub target: f64,
}

impl SeriesReconstruction {
    pub fn partial_error(&self) -> f64 {
        (self.partial - self.target).abs()
    }

    pub fn corrected(&self) -> f64 {
        self.partial + self.diagonal_tail
    }

    pub fn corrected_error(&self) -> f64 {
        (self.corrected() - self.target).abs()
    }
}

/// `Σ_{m > M} a_m` for `α = 1`.
fn coefficient_tail(big_m: u64) -> Result<f64> {
    if big_m % 2 == 0 {
        Ok(dist_coeff(big_m + 1, 1.0) + tail_sum_all(big_m / 2 + 1, 1.0)?)
    } else {
        tail_sum_all(big_m.div_ceil(2), 1.0)
    }
}

pub fn series_reconstruction(
    config: &PointConfiguration,
    truncation: usize,
) -> Result<SeriesReconstruction> {
    if truncation == 0 {
        return Err(Error::Domain("truncation must be >= 1".into()));
    }
    let d = config.dim();
    let scale = 2f64.sqrt() * stolarsky_constant(d);
    let rule = CoefficientRule::PowerLaw { alpha: 1.0 };
    let s = moment_sums(config, truncation);
    let mut acc = Compensated::new();
    for (am, sm) in rule.coefficients(truncation).iter().zip(&s[1..]) {
        acc.add(am * sm);
    }
    let m = truncation as u64;
    let sum_w2: f64 = config.weights().iter().map(|w| w * w).sum();
    let tail = sum_w2 * coefficient_tail(m)? - tail_sum_even_weighted(m / 2 + 1, 1.0, d as u32)?;
    let target = stolarsky_constant(d) * super::energy_deficit(config, 1.0)?.deficit;
    Ok(SeriesReconstruction {
        truncation,
        partial: scale * acc.value(),
        diagonal_tail: scale * tail,
        target,
    })
}
