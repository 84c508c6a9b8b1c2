//! Cap discrepancy of normalized arc-length measures on curves in `S^2`, and
//! its scaling with curve length.

use serde::{Deserialize, Serialize};

use crate::discrepancy::{cap_discrepancy_stolarsky, DiscrepancyReport, ResolutionCheck};
use crate::pointgen::{curve_points, CurveKind, CurveSpec};
use crate::{Error, Result};

/// Relative change under resolution doubling accepted as converged.
pub const CONVERGENCE_TOL: f64 = 1e-3;

/// Discrepancy of the curve's arc-length measure at `spec.resolution`, with
/// the value at twice the resolution reported as a convergence check.
pub fn curve_discrepancy(spec: &CurveSpec) -> Result<DiscrepancyReport> {
    let d = 2;
    let mut report = cap_discrepancy_stolarsky(&curve_points(spec, d)?)?;
    let fine = cap_discrepancy_stolarsky(&curve_points(&spec.refined(2.0), d)?)?.value;
    let relative_change = ((fine - report.value) / fine).abs();
    report.resolution_check = Some(ResolutionCheck {
        coarse: report.value,
        fine,
        relative_change,
        converged: relative_change < CONVERGENCE_TOL,
    });
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveStudy {
    pub lengths: Vec<f64>,
    pub discrepancies: Vec<f64>,
    /// Least-squares slope of `ln D` against `ln ℓ`.
    pub fitted_exponent: f64,
    /// `-(d+1) / (2(d-1))`.
    pub reference_exponent: f64,
    /// `D ℓ^((d+1)/(2(d-1)))`, bounded below if the lower bound is sharp.
    pub scaled: Vec<f64>,
    /// Resolution-doubling change per length.
    pub relative_changes: Vec<f64>,
}

impl CurveStudy {
    pub fn converged(&self) -> bool {
        self.relative_changes.iter().all(|c| *c < CONVERGENCE_TOL)
    }

    pub fn is_decreasing(&self) -> bool {
        self.discrepancies.windows(2).all(|w| w[1] < w[0])
    }

    /// CSV with header `length,discrepancy,scaled,relative_change`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("length,discrepancy,scaled,relative_change\n");
        for i in 0..self.lengths.len() {
            out.push_str(&format!(
                "{:.16e},{:.16e},{:.16e},{:.16e}\n",
                self.lengths[i], self.discrepancies[i], self.scaled[i], self.relative_changes[i]
            ));
        }
        out
    }
}

/// Least-squares slope of `y` against `x`.
fn slope(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|a| (a - mx) * (a - mx)).sum();
    sxy / sxx
}

/// Spiral discrepancies over ascending lengths (each at least `2π`) with a
/// power-law fit.
pub fn curve_scaling_study(lengths: &[f64], resolution: f64) -> Result<CurveStudy> {
    if lengths.len() < 2 {
        return Err(Error::InvalidCurve("need at least two lengths".into()));
    }
    if lengths.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidCurve("lengths must be strictly increasing".into()));
    }
    let d = 2.0;
    let reference_exponent = -(d + 1.0) / (2.0 * (d - 1.0));
    let mut discrepancies = Vec::with_capacity(lengths.len());
    let mut relative_changes = Vec::with_capacity(lengths.len());
    for &l in lengths {
        let r = curve_discrepancy(&CurveSpec {
            kind: CurveKind::Spiral,
            target_length: l,
            resolution,
        })?;
        discrepancies.push(r.value);
        relative_changes.push(r.resolution_check.map_or(f64::NAN, |c| c.relative_change));
    }
    let lx: Vec<f64> = lengths.iter().map(|l| l.ln()).collect();
    let ly: Vec<f64> = discrepancies.iter().map(|v| v.ln()).collect();
    let scaled = lengths
        .iter()
        .zip(&discrepancies)
        .map(|(l, v)| v * l.powf(-reference_exponent))
        .collect();
    Ok(CurveStudy {
        lengths: lengths.to_vec(),
        fitted_exponent: slope(&lx, &ly),
        discrepancies,
        reference_exponent,
        scaled,
        relative_changes,
    })
}
