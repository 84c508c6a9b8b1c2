//! Fincke-Pohst enumeration of short lattice vectors.

use std::collections::BTreeMap;

use super::linalg::cholesky_upper;

/// Integer quadratic form `x^T G x` scaled by `scale` gives the squared norm.
#[derive(Debug, Clone)]
pub(crate) struct QuadraticForm {
    pub gram_int: Vec<Vec<i64>>,
    pub scale: f64,
}

impl QuadraticForm {
    pub fn dim(&self) -> usize {
        self.gram_int.len()
    }

    pub fn int_norm(&self, x: &[i64]) -> i64 {
        let g = &self.gram_int;
        let mut s: i128 = 0;
        for i in 0..x.len() {
            if x[i] == 0 {
                continue;
            }
            let mut row: i128 = 0;
            for j in 0..x.len() {
                row += g[i][j] as i128 * x[j] as i128;
            }
            s += x[i] as i128 * row;
        }
        s as i64
    }

    /// Visits one representative of every `±x` pair with `0 < |x|^2 <= bound`,
    /// passing the vector and its exact integer norm.
    pub fn for_each_half(&self, bound: f64, mut visit: impl FnMut(&[i64], i64)) {
        let n = self.dim();
        let g: Vec<Vec<f64>> = self
            .gram_int
            .iter()
            .map(|r| r.iter().map(|&v| v as f64 * self.scale).collect())
            .collect();
        let r = cholesky_upper(&g);
        let qdiag: Vec<f64> = (0..n).map(|i| r[i][i] * r[i][i]).collect();
        let qoff: Vec<Vec<f64>> = (0..n)
            .map(|i| (0..n).map(|j| if j > i { r[i][j] / r[i][i] } else { 0.0 }).collect())
            .collect();
        let int_bound = (bound / self.scale * (1.0 + 1e-12)).floor() as i64;
        let slack = 1e-9 * bound.max(1.0);
        let mut x = vec![0i64; n];
        let mut ctx = Ctx {
            qdiag: &qdiag,
            qoff: &qoff,
            slack,
        };
        let mut wrapped = |v: &[i64]| {
            let q = self.int_norm(v);
            if q > 0 && q <= int_bound {
                visit(v, q);
            }
        };
        ctx.level(n - 1, &mut x, bound, true, &mut wrapped);
    }

    /// Shell counts `int_norm -> number of vectors` (both signs) within `bound`.
    pub fn shells(&self, bound: f64) -> BTreeMap<i64, u64> {
        let mut shells = BTreeMap::new();
        self.for_each_half(bound, |_, q| *shells.entry(q).or_insert(0u64) += 2);
        shells
    }
}

struct Ctx<'a> {
    qdiag: &'a [f64],
    qoff: &'a [Vec<f64>],
    slack: f64,
}

impl Ctx<'_> {
    fn level(
        &mut self,
        i: usize,
        x: &mut [i64],
        budget: f64,
        zero_above: bool,
        visit: &mut impl FnMut(&[i64]),
    ) {
        let n = x.len();
        let mut c = 0.0;
        for j in i + 1..n {
            c -= self.qoff[i][j] * x[j] as f64;
        }
        let rad = ((budget + self.slack).max(0.0) / self.qdiag[i]).sqrt();
        let mut lo = (c - rad).ceil() as i64;
        let hi = (c + rad).floor() as i64;
        if zero_above {
            lo = lo.max(0);
        }
        for xi in lo..=hi {
            let d = xi as f64 - c;
            let rem = budget - self.qdiag[i] * d * d;
            if rem < -self.slack {
                continue;
            }
            x[i] = xi;
            let still_zero = zero_above && xi == 0;
            if i == 0 {
                if !still_zero {
                    visit(x);
                }
            } else {
                self.level(i - 1, x, rem, still_zero, visit);
            }
        }
        x[i] = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_lattice_shells() {
        let f = QuadraticForm {
            gram_int: vec![vec![1, 0], vec![0, 1]],
            scale: 1.0,
        };
        let s = f.shells(5.0);
        // r_2(n): 4, 4, 0, 4, 8
        assert_eq!(s.get(&1), Some(&4));
        assert_eq!(s.get(&2), Some(&4));
        assert_eq!(s.get(&3), None);
        assert_eq!(s.get(&4), Some(&4));
        assert_eq!(s.get(&5), Some(&8));
    }

    #[test]
    fn cubic_lattice_counts_match_brute_force() {
        let f = QuadraticForm {
            gram_int: vec![vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 2]],
            scale: 1.0,
        };
        let s = f.shells(20.0);
        let mut brute = BTreeMap::new();
        for a in -10i64..=10 {
            for b in -10i64..=10 {
                for c in -10i64..=10 {
                    let q = f.int_norm(&[a, b, c]);
                    if q > 0 && q <= 20 {
                        *brute.entry(q).or_insert(0u64) += 1;
                    }
                }
            }
        }
        assert_eq!(s, brute);
    }
}
