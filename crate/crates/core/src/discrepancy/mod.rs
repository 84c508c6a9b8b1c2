//! Spherical cap L2 discrepancy: Stolarsky's identity, the Monte Carlo
//! definitional estimator, moment deficits and the lower-bound ladder.

mod energy;
mod kernel;
mod moments;
mod montecarlo;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::constants::{c_asymptotic, c_uniform, stolarsky_constant};
use crate::pointgen::PointConfiguration;
use crate::{Error, Result, SeedSpec};

pub use energy::{
    centroid_norm, energy_deficit, energy_integral, frame_potential, moment_sum, moment_sums,
    pair_sum, pairwise_energy, EnergyDeficit,
};
pub use kernel::{
    kernel_continuous, kernel_deficit, series_reconstruction, KernelDeficit,
    SeriesReconstruction, DEFAULT_TRUNCATION,
};
pub use moments::{moment_table, moment_table_csv, MomentRow, Parity};
pub use montecarlo::{cap_measure, montecarlo_squared, McEstimate, MC_BATCH};

/// Radicands in `[-RADICAND_TOL, 0)` are rounding noise and clamp to 0.
pub const RADICAND_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Stolarsky,
    MonteCarlo,
}

/// Two-resolution convergence check for discretized measures.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ResolutionCheck {
    pub coarse: f64,
    pub fine: f64,
    pub relative_change: f64,
    pub converged: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscrepancyReport {
    pub value: f64,
    pub method: Method,
    /// Standard error of `value` (0 for Stolarsky).
    pub stderr: f64,
    pub n: usize,
    pub d: usize,
    /// Lower bounds by name; see [`beck_bound_ladder`].
    pub bounds: BTreeMap<String, f64>,
    /// Squared discrepancy and its standard error.
    pub squared: f64,
    pub squared_stderr: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub resolution_check: Option<ResolutionCheck>,
}

impl DiscrepancyReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub name: String,
    pub value: f64,
    /// Asymptotic only; not a bound for every finite `N`.
    pub advisory: bool,
}

/// Names of the ladder entries.
pub const BOUND_M1: &str = "m1";
pub const BOUND_M2: &str = "m2";
pub const BOUND_UNIFORM: &str = "uniform_cstar";
pub const BOUND_ASYMPTOTIC: &str = "asymptotic_c3star";

fn ladder(config: &PointConfiguration) -> Result<Vec<BoundEntry>> {
    let d = config.dim();
    let c = stolarsky_constant(d);
    let sqrt2 = std::f64::consts::SQRT_2;
    let m1 = (c / sqrt2).sqrt() * centroid_norm(config);
    let excess = (frame_potential(config) - 1.0 / (d as f64 + 1.0)).max(0.0);
    let m2 = (c / (4.0 * sqrt2) * excess).sqrt();
    let mut out = vec![
        BoundEntry {
            name: BOUND_M1.into(),
            value: m1,
            advisory: false,
        },
        BoundEntry {
            name: BOUND_M2.into(),
            value: m2,
            advisory: false,
        },
    ];
    // the N-dependent bounds concern N equally weighted points
    let n = config.len();
    if n >= 2 && config.is_uniform() {
        let rate = (n as f64).powf(-0.5 - 0.5 / d as f64);
        out.push(BoundEntry {
            name: BOUND_UNIFORM.into(),
            value: c_uniform(d)? * rate,
            advisory: false,
        });
        out.push(BoundEntry {
            name: BOUND_ASYMPTOTIC.into(),
            value: c_asymptotic(d)? * rate,
            advisory: true,
        });
    }
    Ok(out)
}

/// Lower bounds from the centroid, the frame potential, the explicit
/// constant `c_d^*` and the asymptotic constant `c_d^***` (advisory).
pub fn beck_bound_ladder(config: &PointConfiguration) -> Result<Vec<BoundEntry>> {
    if config.len() < 2 {
        return Err(Error::InvalidConfig("the bound ladder needs N >= 2".into()));
    }
    ladder(config)
}

fn bound_map(entries: Vec<BoundEntry>) -> BTreeMap<String, f64> {
    entries.into_iter().map(|e| (e.name, e.value)).collect()
}

/// `D = sqrt(C_d (∫∫‖x-y‖ - ΣΣ w_j w_k ‖x_j - x_k‖))`.
pub fn cap_discrepancy_stolarsky(config: &PointConfiguration) -> Result<DiscrepancyReport> {
    let d = config.dim();
    let def = energy_deficit(config, 1.0)?;
    let mut squared = stolarsky_constant(d) * def.deficit;
    if squared < 0.0 {
        if squared < -RADICAND_TOL {
            return Err(Error::Corruption(format!(
                "negative squared discrepancy {squared:e}"
            )));
        }
        squared = 0.0;
    }
    Ok(DiscrepancyReport {
        value: squared.sqrt(),
        method: Method::Stolarsky,
        stderr: 0.0,
        n: config.len(),
        d,
        bounds: bound_map(ladder(config)?),
        squared,
        squared_stderr: 0.0,
        samples: None,
        resolution_check: None,
    })
}

/// Monte Carlo estimate of the definitional cap integral; `stderr` of the
/// square root by the delta method.
pub fn cap_discrepancy_montecarlo(
    config: &PointConfiguration,
    samples: usize,
    seed: SeedSpec,
) -> Result<DiscrepancyReport> {
    let est = montecarlo_squared(config, samples, seed)?;
    let squared = est.mean.max(0.0);
    let value = squared.sqrt();
    let stderr = if value > 0.0 {
        est.stderr / (2.0 * value)
    } else {
        est.stderr.sqrt()
    };
    Ok(DiscrepancyReport {
        value,
        method: Method::MonteCarlo,
        stderr,
        n: config.len(),
        d: config.dim(),
        bounds: bound_map(ladder(config)?),
        squared,
        squared_stderr: est.stderr,
        samples: Some(samples),
        resolution_check: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pointgen::{cross_polytope, fibonacci_sphere, random_uniform};

    #[test]
    fn single_point_and_identity() {
        let one = PointConfiguration::new(2, vec![vec![0.0, 0.0, 1.0]]).unwrap();
        let r = cap_discrepancy_stolarsky(&one).unwrap();
        assert!((r.value - 1.0 / 3f64.sqrt()).abs() < 1e-15);
        assert_eq!(r.bounds.len(), 2);
        let c = fibonacci_sphere(89).unwrap();
        let r = cap_discrepancy_stolarsky(&c).unwrap();
        let def = energy_deficit(&c, 1.0).unwrap();
        assert!((r.value.powi(2) / (0.25 * def.deficit) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn ladder_values() {
        let pole = PointConfiguration::new(2, vec![vec![0.0, 0.0, 1.0]; 5]).unwrap();
        let l = beck_bound_ladder(&pole).unwrap();
        assert!((l[0].value - (0.25 / 2f64.sqrt()).sqrt()).abs() < 1e-15);
        let c = fibonacci_sphere(100).unwrap();
        let l = beck_bound_ladder(&c).unwrap();
        let u = l.iter().find(|e| e.name == BOUND_UNIFORM).unwrap();
        assert!((u.value - 0.1959291678902056 * 100f64.powf(-0.75)).abs() < 1e-16);
        let x = beck_bound_ladder(&cross_polytope(2).unwrap()).unwrap();
        assert!(x[0].value < 1e-15 && x[1].value < 1e-15);
        assert!(beck_bound_ladder(&PointConfiguration::new(2, vec![vec![1.0, 0.0, 0.0]]).unwrap()).is_err());
        let f = fibonacci_sphere(377).unwrap();
        let r = cap_discrepancy_stolarsky(&f).unwrap();
        for e in beck_bound_ladder(&f).unwrap().iter().filter(|e| !e.advisory) {
            assert!(e.value <= r.value, "{}", e.name);
        }
    }

    #[test]
    fn montecarlo_agrees_with_stolarsky() {
        let c = fibonacci_sphere(100).unwrap();
        let s = cap_discrepancy_stolarsky(&c).unwrap();
        let m = cap_discrepancy_montecarlo(&c, 200_000, SeedSpec::new(17)).unwrap();
        assert!((m.squared - s.squared).abs() <= 4.0 * m.squared_stderr);
        assert!(m.stderr > 0.0);
    }

    #[test]
    fn report_json_keys() {
        let c = random_uniform(2, 10, SeedSpec::new(1)).unwrap();
        let v: serde_json::Value =
            serde_json::from_str(&cap_discrepancy_stolarsky(&c).unwrap().to_json()).unwrap();
        for key in ["value", "method", "stderr", "n", "d", "bounds"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["method"], "stolarsky");
    }
}
