//! Weighted pair sums, energy integrals and moment deficits.

use serde::{Deserialize, Serialize};

use crate::pointgen::PointConfiguration;
use crate::specfun::{lgamma, moment_integral};
use crate::sum::{blocked_sum, blocked_sum_vec, Compensated};
use crate::{Error, Result};

#[inline]
pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[inline]
pub(crate) fn dist2(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// `ΣΣ w_j w_k f(x_j, x_k)` over all ordered pairs, for symmetric `f`.
/// Deterministic regardless of the thread count.
pub fn pair_sum<F>(config: &PointConfiguration, f: F) -> f64
where
    F: Fn(&[f64], &[f64]) -> f64 + Sync,
{
    let n = config.len();
    let w = config.weights();
    blocked_sum(n, |start, end| {
        let mut acc = Compensated::new();
        for j in start..end {
            let xj = config.point(j);
            let mut row = Compensated::new();
            row.add(0.5 * w[j] * f(xj, xj));
            for k in j + 1..n {
                row.add(w[k] * f(xj, config.point(k)));
            }
            acc.add(2.0 * w[j] * row.value());
        }
        acc.value()
    })
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha <= 2.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("alpha must lie in (0, 2], got {alpha}")))
    }
}

/// `ΣΣ w_j w_k ‖x_j - x_k‖^α`, diagonal included.
pub fn pairwise_energy(config: &PointConfiguration, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    let h = 0.5 * alpha;
    Ok(if alpha == 1.0 {
        pair_sum(config, |x, y| dist2(x, y).sqrt())
    } else {
        pair_sum(config, |x, y| dist2(x, y).powf(h))
    })
}

/// `∫∫ ‖x - y‖^α dσ dσ` on `S^d`:
/// `2^(α+d-1) Γ((d+1)/2) Γ((d+α)/2) / (√π Γ(d + α/2))`.
pub fn energy_integral(d: usize, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if d < 2 {
        return Err(Error::Domain(format!("sphere dimension must be >= 2, got {d}")));
    }
    let df = d as f64;
    let ln = (alpha + df - 1.0) * std::f64::consts::LN_2 + lgamma(0.5 * (df + 1.0))
        + lgamma(0.5 * (df + alpha))
        - 0.5 * std::f64::consts::PI.ln()
        - lgamma(df + 0.5 * alpha);
    Ok(ln.exp())
}

/// Continuous minus discrete Riesz `α`-energy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyDeficit {
    pub alpha: f64,
    pub continuous: f64,
    pub discrete: f64,
    pub deficit: f64,
}

pub fn energy_deficit(config: &PointConfiguration, alpha: f64) -> Result<EnergyDeficit> {
    let continuous = energy_integral(config.dim(), alpha)?;
    let discrete = pairwise_energy(config, alpha)?;
    Ok(EnergyDeficit {
        alpha,
        continuous,
        discrete,
        deficit: continuous - discrete,
    })
}

/// `S(m) = ΣΣ w_j w_k (x_j·x_k)^m - ∫∫ (x·y)^m dσ dσ`.
pub fn moment_sum(config: &PointConfiguration, m: u64) -> f64 {
    let raw = if m <= i32::MAX as u64 {
        pair_sum(config, |x, y| dot(x, y).powi(m as i32))
    } else {
        pair_sum(config, |x, y| dot(x, y).powf(m as f64))
    };
    raw - moment_integral(config.dim() as u32, m)
}

/// `[S(0), S(1), ..., S(m_max)]` in one pass over the pairs.
pub fn moment_sums(config: &PointConfiguration, m_max: usize) -> Vec<f64> {
    let raw = raw_moments(config, m_max);
    let d = config.dim() as u32;
    raw.iter()
        .enumerate()
        .map(|(m, r)| r - moment_integral(d, m as u64))
        .collect()
}

/// `ΣΣ w_j w_k (x_j·x_k)^m` for `m = 0..=m_max`.
pub(crate) fn raw_moments(config: &PointConfiguration, m_max: usize) -> Vec<f64> {
    let n = config.len();
    let w = config.weights();
    let len = m_max + 1;
    blocked_sum_vec(n, len, |start, end| {
        let mut acc = vec![Compensated::new(); len];
        for j in start..end {
            let xj = config.point(j);
            for k in j..n {
                let t = dot(xj, config.point(k));
                let c = if k == j { w[j] * w[j] } else { 2.0 * w[j] * w[k] };
                let mut p = c;
                for a in acc.iter_mut() {
                    a.add(p);
                    p *= t;
                }
            }
        }
        acc.iter().map(Compensated::value).collect()
    })
}

/// `‖Σ w_j x_j‖`.
pub fn centroid_norm(config: &PointConfiguration) -> f64 {
    let k = config.dim() + 1;
    let mut c = vec![Compensated::new(); k];
    for (p, w) in config.points().zip(config.weights()) {
        for (ci, xi) in c.iter_mut().zip(p) {
            ci.add(w * xi);
        }
    }
    c.iter().map(|v| v.value() * v.value()).sum::<f64>().sqrt()
}

/// `ΣΣ w_j w_k (x_j·x_k)²`, computed as the squared Frobenius norm of the
/// frame operator `Σ w_j x_j x_jᵀ`.
pub fn frame_potential(config: &PointConfiguration) -> f64 {
    let k = config.dim() + 1;
    let mut f = vec![Compensated::new(); k * k];
    for (p, w) in config.points().zip(config.weights()) {
        for a in 0..k {
            for b in a..k {
                f[a * k + b].add(w * p[a] * p[b]);
            }
        }
    }
    let mut total = Compensated::new();
    for a in 0..k {
        for b in a..k {
            let v = f[a * k + b].value();
            total.add(if a == b { v * v } else { 2.0 * v * v });
        }
    }
    total.value()
}
