//! Point configurations on `S^d` and their generators.

mod curve;
mod io;

use std::f64::consts::PI;

use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::{Error, Result, SeedSpec};

pub use curve::{curve_points, spiral_length, CurveKind, CurveSpec};
pub use io::{read_config, read_config_file, write_config, write_config_file};

/// Unit-norm tolerance for stored points.
pub const NORM_TOL: f64 = 1e-12;

/// `N` unit vectors in `R^(d+1)` with positive weights summing to 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointConfiguration {
    d: usize,
    /// Row-major `N x (d+1)`.
    coords: Vec<f64>,
    weights: Vec<f64>,
    uniform: bool,
}

impl PointConfiguration {
    /// Uniformly weighted configuration; every row must have norm 1.
    pub fn new(d: usize, rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = rows.len();
        let w = if n == 0 { Vec::new() } else { vec![1.0 / n as f64; n] };
        Self::build(d, rows, w, true)
    }

    /// Weighted configuration (probability measure with finite support).
    pub fn with_weights(d: usize, rows: Vec<Vec<f64>>, weights: Vec<f64>) -> Result<Self> {
        Self::build(d, rows, weights, false)
    }

    fn build(d: usize, rows: Vec<Vec<f64>>, weights: Vec<f64>, uniform: bool) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidConfig(format!("sphere dimension must be >= 2, got {d}")));
        }
        if rows.is_empty() {
            return Err(Error::InvalidConfig("configuration has no points".into()));
        }
        if weights.len() != rows.len() {
            return Err(Error::InvalidConfig(format!(
                "{} weights for {} points",
                weights.len(),
                rows.len()
            )));
        }
        let mut coords = Vec::with_capacity(rows.len() * (d + 1));
        for (i, r) in rows.iter().enumerate() {
            if r.len() != d + 1 {
                return Err(Error::InvalidConfig(format!(
                    "point {i} has {} coordinates, expected {}",
                    r.len(),
                    d + 1
                )));
            }
            let norm = r.iter().map(|x| x * x).sum::<f64>().sqrt();
            if !((norm - 1.0).abs() <= NORM_TOL) {
                return Err(Error::InvalidConfig(format!(
                    "point {i} has norm {norm}, expected 1"
                )));
            }
            coords.extend_from_slice(r);
        }
        if weights.iter().any(|w| !(*w > 0.0 && w.is_finite())) {
            return Err(Error::InvalidConfig("weights must be positive".into()));
        }
        let total = crate::sum::compensated_sum(weights.iter().copied());
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidConfig(format!("weights sum to {total}, expected 1")));
        }
        Ok(Self {
            d,
            coords,
            weights,
            uniform,
        })
    }

    /// Normalizes each row and uses uniform weights.
    pub fn normalized(d: usize, rows: Vec<Vec<f64>>) -> Result<Self> {
        let rows = rows
            .into_iter()
            .map(|r| {
                let n = r.iter().map(|x| x * x).sum::<f64>().sqrt();
                r.into_iter().map(|x| x / n).collect()
            })
            .collect();
        Self::new(d, rows)
    }

    /// Sphere dimension `d` (points live in `R^(d+1)`).
    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn point(&self, i: usize) -> &[f64] {
        let k = self.d + 1;
        &self.coords[i * k..(i + 1) * k]
    }

    pub fn points(&self) -> impl Iterator<Item = &[f64]> {
        self.coords.chunks_exact(self.d + 1)
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// True when built with uniform weights `1/N`.
    pub fn is_uniform(&self) -> bool {
        self.uniform
    }

    /// Same points with uniform weights.
    pub fn with_uniform_weights(&self) -> Self {
        let n = self.len();
        Self {
            d: self.d,
            coords: self.coords.clone(),
            weights: vec![1.0 / n as f64; n],
            uniform: true,
        }
    }
}

/// `N` i.i.d. uniform points on `S^d` from normalized Gaussian vectors.
pub fn random_uniform(d: usize, n: usize, seed: SeedSpec) -> Result<PointConfiguration> {
    if n == 0 {
        return Err(Error::InvalidConfig("N must be >= 1".into()));
    }
    let mut rng = seed.rng(0);
    let rows = (0..n)
        .map(|_| loop {
            let v: Vec<f64> = (0..=d).map(|_| StandardNormal.sample(&mut rng)).collect();
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm > 1e-150 {
                break v.into_iter().map(|x| x / norm).collect::<Vec<f64>>();
            }
        })
        .collect();
    PointConfiguration::new(d, rows)
}

/// Azimuth rule used by [`fibonacci_sphere`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FibonacciVariant {
    /// `N = F_n`: azimuth `2π {k F_(n-1) / F_n}`.
    Lattice,
    /// Any other `N`: golden-angle azimuth `2π {k / φ}`.
    GoldenAngle,
}

/// Index `n` with `F_n = N` (`F_1 = F_2 = 1`), if `N` is a Fibonacci number.
fn fibonacci_index(n: usize) -> Option<(u64, u64)> {
    let (mut prev, mut cur) = (1u64, 1u64);
    while (cur as usize) < n {
        let next = prev + cur;
        prev = cur;
        cur = next;
    }
    (cur as usize == n).then_some((prev, cur))
}

/// Which azimuth rule [`fibonacci_sphere`] uses for `N` points.
pub fn fibonacci_variant(n: usize) -> FibonacciVariant {
    if n >= 5 && fibonacci_index(n).is_some() {
        FibonacciVariant::Lattice
    } else {
        FibonacciVariant::GoldenAngle
    }
}

/// Spherical Fibonacci points on `S^2`: the Fibonacci lattice of the unit
/// square mapped by the Lambert cylindrical equal-area projection, heights
/// `z_k = 1 - (2k+1)/N`.
pub fn fibonacci_sphere(n: usize) -> Result<PointConfiguration> {
    if n < 2 {
        return Err(Error::InvalidConfig("fibonacci_sphere needs N >= 2".into()));
    }
    let variant = fibonacci_variant(n);
    let golden = 0.5 * (1.0 + 5f64.sqrt());
    let rows = (0..n)
        .map(|k| {
            let z = 1.0 - (2 * k + 1) as f64 / n as f64;
            let frac = match variant {
                FibonacciVariant::Lattice => {
                    let (prev, cur) = fibonacci_index(n).unwrap();
                    ((k as u64 * prev) % cur) as f64 / cur as f64
                }
                FibonacciVariant::GoldenAngle => (k as f64 / golden).fract(),
            };
            let phi = 2.0 * PI * frac;
            let r = (1.0 - z * z).sqrt();
            vec![r * phi.cos(), r * phi.sin(), z]
        })
        .collect();
    PointConfiguration::normalized(2, rows)
}

/// The `2(d+1)` points `±e_i`.
pub fn cross_polytope(d: usize) -> Result<PointConfiguration> {
    let k = d + 1;
    let rows = (0..2 * k)
        .map(|i| {
            let mut v = vec![0.0; k];
            v[i % k] = if i < k { 1.0 } else { -1.0 };
            v
        })
        .collect();
    PointConfiguration::new(d, rows)
}

/// The `d+2` vertices of a regular simplex inscribed in `S^d`.
pub fn simplex_vertices(d: usize) -> Result<PointConfiguration> {
    let m = d + 2;
    // coordinates of e_i - (1/m) 1 in the Helmert basis of {sum x = 0}
    let rows = (0..m)
        .map(|i| {
            (1..m)
                .map(|k| {
                    let norm = ((k * (k + 1)) as f64).sqrt();
                    if i < k {
                        1.0 / norm
                    } else if i == k {
                        -(k as f64) / norm
                    } else {
                        0.0
                    }
                })
                .collect()
        })
        .collect();
    PointConfiguration::normalized(d, rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dot(a: &[f64], b: &[f64]) -> f64 {
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    }

    #[test]
    fn random_is_reproducible() {
        let a = random_uniform(2, 1000, SeedSpec::new(7)).unwrap();
        let b = random_uniform(2, 1000, SeedSpec::new(7)).unwrap();
        let c = random_uniform(2, 1000, SeedSpec::new(8)).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn random_moments() {
        let n = 1000;
        let c = random_uniform(2, n, SeedSpec::new(1)).unwrap();
        let (mut m1, mut m2) = (0.0, 0.0);
        for x in c.points() {
            for y in c.points() {
                let t = dot(x, y);
                m1 += t;
                m2 += t * t;
            }
        }
        let pairs = (n * n) as f64;
        m1 /= pairs;
        m2 /= pairs;
        // m1 = |centroid|^2 has mean 1/N; m2 has mean 1/3 + (2/3)/N
        assert!(m1 < 10.0 / n as f64);
        assert!((m2 - 1.0 / 3.0).abs() < 0.01);
    }

    #[test]
    fn random_z_coordinate_is_uniform() {
        let n = 100_000;
        let c = random_uniform(2, n, SeedSpec::new(3)).unwrap();
        let mut z: Vec<f64> = c.points().map(|p| p[2]).collect();
        z.sort_by(f64::total_cmp);
        let ks = z
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let f = 0.5 * (v + 1.0);
                (f - i as f64 / n as f64).abs().max(((i + 1) as f64 / n as f64 - f).abs())
            })
            .fold(0.0, f64::max);
        assert!(ks < 1.63 / (n as f64).sqrt(), "KS = {ks}");
    }

    #[test]
    fn fibonacci_points() {
        assert_eq!(fibonacci_variant(377), FibonacciVariant::Lattice);
        assert_eq!(fibonacci_variant(100), FibonacciVariant::GoldenAngle);
        let c = fibonacci_sphere(377).unwrap();
        assert_eq!(c.len(), 377);
        let n = c.len();
        let mut min_dist = f64::INFINITY;
        for i in 0..n {
            for j in i + 1..n {
                let d2 = 2.0 - 2.0 * dot(c.point(i), c.point(j));
                min_dist = min_dist.min(d2.sqrt());
            }
        }
        assert!(min_dist * (n as f64).sqrt() > 0.5, "separation {}", min_dist * (n as f64).sqrt());
        let centroid: Vec<f64> = (0..3).map(|k| c.points().map(|p| p[k]).sum::<f64>() / n as f64).collect();
        assert!(dot(&centroid, &centroid).sqrt() < 5.0 / n as f64);
    }

    #[test]
    fn fibonacci_cap_occupancy() {
        // caps of area 4π/N: 1 - t = 2/N
        let c = fibonacci_sphere(377).unwrap();
        let t = 1.0 - 2.0 / 377.0;
        for x in c.points() {
            let inside = c.points().filter(|y| dot(x, y) >= t).count();
            assert!(inside <= 4);
        }
    }

    #[test]
    fn cross_polytope_and_simplex() {
        let c = cross_polytope(2).unwrap();
        assert_eq!(c.len(), 6);
        for d in 2..7 {
            let s = simplex_vertices(d).unwrap();
            assert_eq!(s.len(), d + 2);
            for i in 0..s.len() {
                for j in 0..s.len() {
                    let expected = if i == j { 1.0 } else { -1.0 / (d as f64 + 1.0) };
                    assert!((dot(s.point(i), s.point(j)) - expected).abs() < 1e-14);
                }
            }
            let centroid: Vec<f64> =
                (0..=d).map(|k| s.points().map(|p| p[k]).sum::<f64>()).collect();
            assert!(dot(&centroid, &centroid).sqrt() < 1e-12);
        }
    }

    #[test]
    fn invariants_are_enforced() {
        assert!(PointConfiguration::new(2, vec![vec![1.0, 0.0, 0.1]]).is_err());
        assert!(PointConfiguration::new(2, vec![vec![1.0, 0.0]]).is_err());
        assert!(PointConfiguration::new(1, vec![vec![1.0, 0.0]]).is_err());
        assert!(PointConfiguration::with_weights(
            2,
            vec![vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0]],
            vec![0.5, 0.6]
        )
        .is_err());
        assert!(PointConfiguration::with_weights(
            2,
            vec![vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0]],
            vec![1.0, 0.0]
        )
        .is_err());
    }
}
