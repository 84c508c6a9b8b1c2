//! Distance-series coefficients, sphere moment integrals and tail sums.

use super::gamma::{ln_gamma_diff, lgamma, pochhammer_ratio, recip_gamma};
use crate::sum::Compensated;
use crate::{Error, Result};

/// Taylor coefficient `a_m = -(-α/2)_m / m!` of `1 - (1 - t)^(α/2)`;
/// `a_0 = -1` and `a_m > 0` for `m >= 1` when `0 < α < 2`.
///
/// At `α = 2` all coefficients beyond `m = 1` vanish (degenerate case).
pub fn dist_coeff(m: u64, alpha: f64) -> f64 {
    -pochhammer_ratio(-0.5 * alpha, 1.0, m).expect("denominator (1)_m never vanishes")
}

/// `∫∫ (x·y)^m dσ(x) dσ(y)` over `S^d`: zero for odd `m`,
/// `(1/2)_r / ((d+1)/2)_r` for `m = 2r`.
pub fn moment_integral(d: u32, m: u64) -> f64 {
    if m % 2 == 1 {
        return 0.0;
    }
    pochhammer_ratio(0.5, 0.5 * (d as f64 + 1.0), m / 2).expect("positive denominator")
}

/// `sum_{m >= 2M} a_m = Γ(2M - α/2) / (Γ(1 - α/2) Γ(2M))`.
pub fn tail_sum_all(big_m: u64, alpha: f64) -> Result<f64> {
    if big_m == 0 {
        return Err(Error::Domain("tail_sum_all requires M >= 1".into()));
    }
    check_alpha(alpha)?;
    let x = 2.0 * big_m as f64;
    Ok(recip_gamma(1.0 - 0.5 * alpha) * ln_gamma_diff(x, -0.5 * alpha, 0.0).exp())
}

/// `sum_{r >= M} a_{2r} (1/2)_r / ((d+1)/2)_r`.
///
/// The terms decay like `r^(-1-(d+α)/2)`; the sum is evaluated from partial
/// sums at geometrically spaced cut-offs with Richardson elimination of the
/// tail's asymptotic powers.
pub fn tail_sum_even_weighted(big_m: u64, alpha: f64, d: u32) -> Result<f64> {
    if big_m == 0 {
        return Err(Error::Domain("tail_sum_even_weighted requires M >= 1".into()));
    }
    check_alpha(alpha)?;
    let q = 0.5 * (d as f64 + alpha);
    Ok(richardson_tail(big_m, q, |r| even_weighted_term(r, alpha, d)))
}

/// `a_{2r} (1/2)_r / ((d+1)/2)_r` for `r >= 1` (log-space, no recurrence drift).
pub(crate) fn even_weighted_term(r: u64, alpha: f64, d: u32) -> f64 {
    let h = 0.5 * alpha;
    let b = 0.5 * (d as f64 + 1.0);
    let rf = r as f64;
    // a_{2r} = (α/2)/Γ(1-α/2) Γ(2r-α/2)/Γ(2r+1)
    let ln_a = ln_gamma_diff(2.0 * rf, -h, 1.0);
    let ln_mom = ln_gamma_diff(rf, 0.5, b) + lgamma(b) - lgamma(0.5);
    h * recip_gamma(1.0 - h) * (ln_a + ln_mom).exp()
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha < 2.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("alpha must lie in (0, 2), got {alpha}")))
    }
}

/// Richardson levels; cut-offs are `R_j = (start + 256) 2^j`.
const RICHARDSON_LEVELS: usize = 8;
const RICHARDSON_OFFSET: u64 = 256;

/// `sum_{r >= start} term(r)` for terms with an asymptotic expansion in
/// `r^(-1-q-k)`, `k = 0, 1, ...`, so that the tail beyond `R` expands in
/// `R^(-q-k)`.
pub(crate) fn richardson_tail(start: u64, q: f64, term: impl Fn(u64) -> f64) -> f64 {
    richardson_tail_with_error(start, q, term).0
}

/// As [`richardson_tail`], also returning the size of the last elimination
/// step as an error estimate.
pub(crate) fn richardson_tail_with_error(
    start: u64,
    q: f64,
    term: impl Fn(u64) -> f64,
) -> (f64, f64) {
    let mut partial = Vec::with_capacity(RICHARDSON_LEVELS);
    let mut acc = Compensated::new();
    let mut r = start;
    let mut cut = start + RICHARDSON_OFFSET;
    for _ in 0..RICHARDSON_LEVELS {
        while r < cut {
            acc.add(term(r));
            r += 1;
        }
        partial.push(acc.value());
        cut *= 2;
    }
    let mut col = partial;
    let mut err = f64::INFINITY;
    for k in 0..RICHARDSON_LEVELS - 1 {
        let f = 2f64.powf(q + k as f64);
        let next: Vec<f64> = col
            .windows(2)
            .map(|w| (f * w[1] - w[0]) / (f - 1.0))
            .collect();
        err = (next[next.len() - 1] - col[col.len() - 1]).abs();
        col = next;
    }
    (col[0], err)
}
