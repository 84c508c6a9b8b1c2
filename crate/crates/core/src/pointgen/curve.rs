//! Polyline discretizations of curves on `S^2` carrying normalized arc length.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::PointConfiguration;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveKind {
    /// The equator, length `2π`.
    GreatCircle,
    /// Pole-to-pole spiral `z = cos θ`, azimuth `ω θ`, `0 <= θ <= π`; arc
    /// length is nearly uniform in `z`.
    Spiral,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurveSpec {
    pub kind: CurveKind,
    /// Arc length (ignored for the great circle).
    pub target_length: f64,
    /// Polyline segments per unit length.
    pub resolution: f64,
}

/// Minimum number of segments per full turn.
const MIN_SEGMENTS_PER_TURN: f64 = 8.0;
/// Quadrature nodes for the spiral arc-length integral.
const ARC_NODES: usize = 20_000;

impl CurveSpec {
    pub const DEFAULT_RESOLUTION: f64 = 64.0;

    pub fn great_circle(resolution: f64) -> Self {
        Self {
            kind: CurveKind::GreatCircle,
            target_length: 2.0 * PI,
            resolution,
        }
    }

    pub fn spiral(target_length: f64, resolution: f64) -> Self {
        Self {
            kind: CurveKind::Spiral,
            target_length,
            resolution,
        }
    }

    /// Curve length actually used.
    pub fn length(&self) -> f64 {
        match self.kind {
            CurveKind::GreatCircle => 2.0 * PI,
            CurveKind::Spiral => self.target_length,
        }
    }

    /// Same curve at `factor` times the resolution.
    pub fn refined(&self, factor: f64) -> Self {
        Self {
            resolution: self.resolution * factor,
            ..*self
        }
    }
}

/// Arc length of the spiral with azimuth rate `ω`:
/// `∫_0^π sqrt(1 + ω² sin²θ) dθ` (composite Simpson).
pub fn spiral_length(omega: f64) -> f64 {
    let n = ARC_NODES;
    let h = PI / n as f64;
    let f = |t: f64| {
        let s = t.sin();
        (1.0 + omega * omega * s * s).sqrt()
    };
    let mut acc = f(0.0) + f(PI);
    for i in 1..n {
        acc += if i % 2 == 1 { 4.0 } else { 2.0 } * f(i as f64 * h);
    }
    acc * h / 3.0
}

fn spiral_omega(length: f64) -> f64 {
    // L(ω) >= 2ω
    let (mut lo, mut hi) = (0.0, 0.5 * length);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if spiral_length(mid) < length {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-14 * hi {
            break;
        }
    }
    0.5 * (lo + hi)
}

fn spiral_point(omega: f64, theta: f64) -> [f64; 3] {
    let z = theta.cos();
    let r = theta.sin();
    let phi = omega * theta;
    [r * phi.cos(), r * phi.sin(), z]
}

fn chord(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

/// Vertices of the discretized curve on `S^d` (the curve lies in the first
/// three coordinates), weighted by half the adjacent segment lengths and
/// normalized to total mass 1.
pub fn curve_points(spec: &CurveSpec, d: usize) -> Result<PointConfiguration> {
    if !(spec.resolution > 0.0 && spec.resolution.is_finite()) {
        return Err(Error::InvalidCurve("resolution must be positive".into()));
    }
    let length = spec.length();
    let segments = (spec.resolution * length).ceil() as usize;
    let verts: Vec<[f64; 3]> = match spec.kind {
        CurveKind::GreatCircle => {
            if (segments as f64) < MIN_SEGMENTS_PER_TURN {
                return Err(Error::InvalidCurve(format!(
                    "{segments} segments per turn, need at least {MIN_SEGMENTS_PER_TURN}"
                )));
            }
            (0..segments)
                .map(|k| {
                    let a = 2.0 * PI * k as f64 / segments as f64;
                    [a.cos(), a.sin(), 0.0]
                })
                .collect()
        }
        CurveKind::Spiral => {
            if !(length >= 2.0 * PI) {
                return Err(Error::InvalidCurve(format!(
                    "spiral length must be at least 2π, got {length}"
                )));
            }
            let omega = spiral_omega(length);
            let turns = 0.5 * omega;
            if (segments as f64) < MIN_SEGMENTS_PER_TURN * turns.max(1.0) {
                return Err(Error::InvalidCurve(format!(
                    "{segments} segments for {turns:.2} turns, need at least {MIN_SEGMENTS_PER_TURN} per turn"
                )));
            }
            spiral_vertices(omega, segments)
        }
    };
    let closed = spec.kind == CurveKind::GreatCircle;
    let n = verts.len();
    let seg = |i: usize| chord(&verts[i], &verts[(i + 1) % n]);
    let mut weights = vec![0.0; n];
    let nseg = if closed { n } else { n - 1 };
    for i in 0..nseg {
        let l = 0.5 * seg(i);
        weights[i] += l;
        weights[(i + 1) % n] += l;
    }
    let total: f64 = weights.iter().sum();
    if (total - length).abs() > 1e-3 * length {
        return Err(Error::InvalidCurve(format!(
            "polyline length {total} deviates from {length} by more than 0.1%"
        )));
    }
    let rows = verts
        .iter()
        .map(|v| {
            let mut r = vec![0.0; d + 1];
            r[..3].copy_from_slice(v);
            r
        })
        .collect();
    let weights = weights.into_iter().map(|w| w / total).collect();
    if d < 2 {
        return Err(Error::InvalidConfig("curves need d >= 2".into()));
    }
    PointConfiguration::with_weights(d, rows, weights)
}

/// `segments + 1` vertices at equal arc length along the spiral.
fn spiral_vertices(omega: f64, segments: usize) -> Vec<[f64; 3]> {
    let m = ARC_NODES.max(16 * segments);
    let h = PI / m as f64;
    let speed = |t: f64| {
        let s = t.sin();
        (1.0 + omega * omega * s * s).sqrt()
    };
    // cumulative arc length by Simpson on each cell
    let mut cum = Vec::with_capacity(m + 1);
    cum.push(0.0);
    let mut acc = 0.0;
    for i in 0..m {
        let a = i as f64 * h;
        acc += h / 6.0 * (speed(a) + 4.0 * speed(a + 0.5 * h) + speed(a + h));
        cum.push(acc);
    }
    let total = acc;
    (0..=segments)
        .map(|j| {
            let target = total * j as f64 / segments as f64;
            let idx = cum.partition_point(|&c| c < target).clamp(1, m);
            let (c0, c1) = (cum[idx - 1], cum[idx]);
            let frac = if c1 > c0 { (target - c0) / (c1 - c0) } else { 0.0 };
            let theta = ((idx - 1) as f64 + frac) * h;
            spiral_point(omega, theta.min(PI))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn great_circle_weights_and_mean_chord() {
        let c = curve_points(&CurveSpec::great_circle(64.0), 2).unwrap();
        let n = c.len();
        assert!((c.weights().iter().sum::<f64>() - 1.0).abs() < 1e-14);
        let mut mean = 0.0;
        for (i, x) in c.points().enumerate() {
            for (j, y) in c.points().enumerate() {
                let d: f64 = x.iter().zip(y).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt();
                mean += c.weights()[i] * c.weights()[j] * d;
            }
        }
        // equally spaced points: (2/n) cot(π/(2n))
        let exact = 2.0 / n as f64 / (PI / (2.0 * n as f64)).tan();
        assert!((mean - exact).abs() < 1e-12);
        assert!((mean - 4.0 / PI).abs() < 1e-4);
    }

    #[test]
    fn spiral_length_hits_target() {
        for target in [2.0 * PI, 4.0 * PI, 16.0 * PI] {
            let omega = spiral_omega(target);
            assert!((spiral_length(omega) - target).abs() < 1e-9 * target);
            let c = curve_points(&CurveSpec::spiral(target, 32.0), 2).unwrap();
            // polyline length from consecutive chords
            let pts: Vec<&[f64]> = c.points().collect();
            let poly: f64 = pts
                .windows(2)
                .map(|w| w[0].iter().zip(w[1]).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt())
                .sum();
            assert!((poly - target).abs() < 1e-3 * target);
        }
    }

    #[test]
    fn coarse_resolution_is_rejected() {
        assert!(curve_points(&CurveSpec::great_circle(1.0), 2).is_err());
        assert!(curve_points(&CurveSpec::spiral(32.0 * PI, 0.05), 2).is_err());
        assert!(curve_points(&CurveSpec::spiral(PI, 16.0), 2).is_err());
    }

    #[test]
    fn curve_embeds_in_higher_spheres() {
        let c = curve_points(&CurveSpec::great_circle(8.0), 4).unwrap();
        assert_eq!(c.dim(), 4);
        assert!(c.points().all(|p| p[3] == 0.0 && p[4] == 0.0));
    }
}
