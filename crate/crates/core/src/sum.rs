//! Compensated and deterministic summation.
//!
//! All series and pair sums in the crate go through these helpers. Parallel
//! reductions use a fixed block decomposition and a fixed pairwise reduction
//! tree, so the result is bit-identical for any number of worker threads.

use rayon::prelude::*;

/// Rows per block in the pairwise sums.
pub const BLOCK_ROWS: usize = 256;

/// Neumaier (improved Kahan) accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct Compensated {
    sum: f64,
    comp: f64,
}

impl Compensated {
    pub const fn new() -> Self {
        Compensated { sum: 0.0, comp: 0.0 }
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl std::iter::FromIterator<f64> for Compensated {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = Compensated::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// Compensated sum of an iterator.
pub fn compensated_sum<I: IntoIterator<Item = f64>>(iter: I) -> f64 {
    iter.into_iter().collect::<Compensated>().value()
}

/// Pairwise (cascade) reduction with a fixed tree shape.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    match values.len() {
        0 => 0.0,
        1 => values[0],
        2 => values[0] + values[1],
        n => {
            let mid = n / 2;
            pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
        }
    }
}

/// Evaluates `block(start, end)` for every row block of `0..n` in parallel and
/// reduces the block results in fixed order.
pub fn blocked_sum<F>(n: usize, block: F) -> f64
where
    F: Fn(usize, usize) -> f64 + Sync,
{
    let partials: Vec<f64> = (0..n.div_ceil(BLOCK_ROWS))
        .into_par_iter()
        .map(|b| {
            let start = b * BLOCK_ROWS;
            block(start, (start + BLOCK_ROWS).min(n))
        })
        .collect();
    pairwise_sum(&partials)
}

/// Vector-valued variant of [`blocked_sum`]: each block returns a vector of
/// length `len`, reduced elementwise in fixed order.
pub fn blocked_sum_vec<F>(n: usize, len: usize, block: F) -> Vec<f64>
where
    F: Fn(usize, usize) -> Vec<f64> + Sync,
{
    let partials: Vec<Vec<f64>> = (0..n.div_ceil(BLOCK_ROWS))
        .into_par_iter()
        .map(|b| {
            let start = b * BLOCK_ROWS;
            block(start, (start + BLOCK_ROWS).min(n))
        })
        .collect();
    let mut column = vec![0.0; partials.len()];
    (0..len)
        .map(|i| {
            for (c, p) in column.iter_mut().zip(&partials) {
                *c = p[i];
            }
            pairwise_sum(&column)
        })
        .collect()
}
