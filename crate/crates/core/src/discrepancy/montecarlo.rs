//! Monte Carlo estimate of the definitional cap discrepancy integral.

use rand::Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;

use super::energy::dot;
use crate::pointgen::PointConfiguration;
use crate::specfun::beta_regularized;
use crate::sum::{pairwise_sum, Compensated};
use crate::{Error, Result, SeedSpec};

/// Samples per substream batch.
pub const MC_BATCH: usize = 4096;

/// Normalized surface measure of the cap `{y : x·y >= t}` on `S^d`:
/// `I_{(1-t)/2}(d/2, d/2)`.
pub fn cap_measure(d: usize, t: f64) -> f64 {
    if t <= -1.0 {
        return 1.0;
    }
    if t >= 1.0 {
        return 0.0;
    }
    match d {
        2 => 0.5 * (1.0 - t),
        3 => {
            let theta = t.acos();
            (theta - t * (1.0 - t * t).sqrt()) / std::f64::consts::PI
        }
        _ => {
            let h = 0.5 * d as f64;
            beta_regularized(h, h, 0.5 * (1.0 - t))
        }
    }
}

/// Mean and standard error of `Y = 2 (empirical cap mass - σ(cap))²` with
/// `x` uniform on `S^d` and `t` uniform on `[-1, 1]`; `E[Y]` is the squared
/// discrepancy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub mean: f64,
    pub stderr: f64,
    pub samples: usize,
}

pub fn montecarlo_squared(
    config: &PointConfiguration,
    samples: usize,
    seed: SeedSpec,
) -> Result<McEstimate> {
    if samples < 1000 {
        return Err(Error::Domain(format!("need at least 1000 samples, got {samples}")));
    }
    let d = config.dim();
    let w = config.weights();
    let batches = samples.div_ceil(MC_BATCH);
    let partial: Vec<(f64, f64)> = (0..batches)
        .into_par_iter()
        .map(|b| {
            let count = MC_BATCH.min(samples - b * MC_BATCH);
            let mut rng = seed.rng(b as u64);
            let mut x = vec![0.0; d + 1];
            let (mut s1, mut s2) = (Compensated::new(), Compensated::new());
            for _ in 0..count {
                loop {
                    for v in x.iter_mut() {
                        *v = StandardNormal.sample(&mut rng);
                    }
                    let norm = dot(&x, &x).sqrt();
                    if norm > 1e-150 {
                        x.iter_mut().for_each(|v| *v /= norm);
                        break;
                    }
                }
                let t: f64 = rng.random_range(-1.0..=1.0);
                let mut mass = Compensated::new();
                for (p, wj) in config.points().zip(w) {
                    if dot(&x, p) >= t {
                        mass.add(*wj);
                    }
                }
                let diff = mass.value() - cap_measure(d, t);
                let y = 2.0 * diff * diff;
                s1.add(y);
                s2.add(y * y);
            }
            (s1.value(), s2.value())
        })
        .collect();
    let n = samples as f64;
    let sum1 = pairwise_sum(&partial.iter().map(|p| p.0).collect::<Vec<_>>());
    let sum2 = pairwise_sum(&partial.iter().map(|p| p.1).collect::<Vec<_>>());
    let mean = sum1 / n;
    let var = ((sum2 - n * mean * mean) / (n - 1.0)).max(0.0);
    Ok(McEstimate {
        mean,
        stderr: (var / n).sqrt(),
        samples,
    })
}
