//! Riemann and Hurwitz zeta functions on the real line.

use std::f64::consts::PI;

use super::gamma::{cos_pi, lgamma, sin_pi, BERNOULLI_EVEN};
use crate::sum::Compensated;
use crate::{Error, Result};

/// Euler-Maclaurin shift: terms `k < EM_SHIFT` are summed directly.
const EM_SHIFT: u32 = 15;
/// Number of Bernoulli correction terms.
const EM_ORDER: usize = 10;
/// At and below this `s` the reflection formulas replace Euler-Maclaurin.
const REFLECT_BELOW: f64 = -2.0;

/// `ζ(s)` for real `s != 1`.
pub fn riemann_zeta(s: f64) -> Result<f64> {
    if s == 1.0 {
        return Err(Error::Pole { s });
    }
    if s.is_nan() {
        return Err(Error::Domain("riemann_zeta: NaN argument".into()));
    }
    if s <= REFLECT_BELOW {
        // ζ(s) = 2 (2π)^(s-1) sin(πs/2) Γ(1-s) ζ(1-s)
        let sin = sin_pi(0.5 * s);
        if sin == 0.0 {
            return Ok(0.0);
        }
        let mag = ((s - 1.0) * (2.0 * PI).ln() + lgamma(1.0 - s)).exp();
        return Ok(2.0 * mag * sin * euler_maclaurin(1.0 - s, 1.0));
    }
    Ok(euler_maclaurin(s, 1.0))
}

/// `ζ(s, a) = sum_{k>=0} (k + a)^(-s)` for real `s != 1`, `0 < a <= 1`.
///
/// For `s < -2` and rational `a = h/k` with `k <= 24` Hurwitz's formula
/// expresses the value through `ζ(1 - s, n/k)`, avoiding the cancellation
/// of the direct Euler-Maclaurin form.
pub fn hurwitz_zeta(s: f64, a: f64) -> Result<f64> {
    if s == 1.0 {
        return Err(Error::Pole { s });
    }
    if !(a > 0.0 && a <= 1.0) || s.is_nan() {
        return Err(Error::Domain(format!(
            "hurwitz_zeta requires 0 < a <= 1, got a = {a}"
        )));
    }
    if a == 1.0 {
        return riemann_zeta(s);
    }
    if s < REFLECT_BELOW {
        if let Some((h, k)) = small_rational(a) {
            return Ok(hurwitz_reflected(s, h, k));
        }
    }
    Ok(euler_maclaurin(s, a))
}

fn small_rational(a: f64) -> Option<(u32, u32)> {
    (1..=24u32).find_map(|k| {
        let h = (a * k as f64).round();
        ((a * k as f64 - h).abs() < 1e-14 * k as f64).then_some((h as u32, k))
    })
}

/// `ζ(1-σ, h/k) = 2Γ(σ)/(2πk)^σ sum_{n=1}^k cos(πσ/2 - 2πnh/k) ζ(σ, n/k)`.
fn hurwitz_reflected(s: f64, h: u32, k: u32) -> f64 {
    let sigma = 1.0 - s;
    let kf = k as f64;
    let mut acc = Compensated::new();
    for n in 1..=k {
        // reduce nh/k modulo 1 exactly in integers
        let frac = ((n * h) % k) as f64 / kf;
        let c = cos_pi(0.5 * sigma - 2.0 * frac);
        acc.add(c * euler_maclaurin(sigma, n as f64 / kf));
    }
    let front = 2.0 * (lgamma(sigma) - sigma * (2.0 * PI * kf).ln()).exp();
    front * acc.value()
}

/// Euler-Maclaurin evaluation of `ζ(s, a)`, `a > 0`.
pub(crate) fn euler_maclaurin(s: f64, a: f64) -> f64 {
    let mut acc = Compensated::new();
    for k in 0..EM_SHIFT {
        acc.add((k as f64 + a).powf(-s));
    }
    let x = EM_SHIFT as f64 + a;
    let xs = x.powf(-s);
    acc.add(x * xs / (s - 1.0));
    acc.add(0.5 * xs);
    // sum_j B_2j / (2j)! * s (s+1) ... (s+2j-2) x^(-s-2j+1)
    let inv_x2 = 1.0 / (x * x);
    let mut factor = s * xs / x; // (s)_1 x^(-s-1)
    let mut fact = 2.0; // (2j)!
    for j in 1..=EM_ORDER {
        let term = BERNOULLI_EVEN[j - 1] / fact * factor;
        acc.add(term);
        let m = (2 * j) as f64;
        factor *= (s + m - 1.0) * (s + m) * inv_x2;
        fact *= (m + 1.0) * (m + 2.0);
    }
    acc.value()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_abs(v: f64, r: f64, tol: f64) {
        assert!((v - r).abs() < tol, "{v} vs {r}");
    }

    #[test]
    fn riemann_classical_values() {
        assert_abs(riemann_zeta(2.0).unwrap(), PI * PI / 6.0, 1e-14);
        assert_eq!(riemann_zeta(0.0).unwrap(), -0.5);
        assert_abs(riemann_zeta(-1.0).unwrap(), -1.0 / 12.0, 1e-14);
        assert_abs(riemann_zeta(-2.0).unwrap(), 0.0, 1e-14);
        assert_eq!(riemann_zeta(-4.0).unwrap(), 0.0);
        assert_abs(riemann_zeta(-3.0).unwrap(), 1.0 / 120.0, 1e-14);
        assert!(matches!(riemann_zeta(1.0), Err(Error::Pole { .. })));
    }

    // Reference values from 40-digit multiprecision evaluation.
    #[test]
    fn riemann_reference_values() {
        let cases = [
            (-0.5, -0.207_886_224_977_354_566_017_3),
            (-1.5, -0.025_485_201_889_833_035_949_54),
            (-3.5, 0.004_441_011_335_479_431_958_535),
            (-11.5, 0.020_396_978_715_942_792_055_55),
            (0.5, -1.460_354_508_809_586_812_889),
            (6.0, 1.017_343_061_984_449_139_715),
            (30.0, 1.000_000_000_931_327_432_420),
        ];
        for (s, r) in cases {
            assert_abs(riemann_zeta(s).unwrap(), r, 1e-12);
        }
    }

    #[test]
    fn riemann_large_negative_relative() {
        let r = -30_854_533.472_396_763_609_56;
        let v = riemann_zeta(-29.5).unwrap();
        assert!(((v - r) / r).abs() < 1e-13);
    }

    #[test]
    fn hurwitz_reference_values() {
        let cases = [
            (-0.5, 1.0 / 3.0, 0.092_446_282_869_868_944_288_17),
            (-0.5, 2.0 / 3.0, -0.004_583_225_844_005_140_211_588),
            (2.5, 0.3, 21.069_239_202_247_723_026_96),
            (-1.5, 0.3, -0.008_185_560_485_835_974_502_499),
            (0.5, 0.7, -1.010_536_559_935_124_520_526),
        ];
        for (s, a, r) in cases {
            assert_abs(hurwitz_zeta(s, a).unwrap(), r, 1e-12);
        }
    }

    #[test]
    fn hurwitz_bernoulli_polynomial_values() {
        // ζ(-n, a) = -B_{n+1}(a)/(n+1)
        assert_abs(hurwitz_zeta(-2.0, 0.5).unwrap(), 0.0, 1e-13);
        // B_2(a) = a^2 - a + 1/6
        let a: f64 = 1.0 / 3.0;
        assert_abs(hurwitz_zeta(-1.0, a).unwrap(), -(a * a - a + 1.0 / 6.0) / 2.0, 1e-13);
        // B_4(a) = a^4 - 2a^3 + a^2 - 1/30, via the reflected branch
        let b4 = a.powi(4) - 2.0 * a.powi(3) + a * a - 1.0 / 30.0;
        assert_abs(hurwitz_zeta(-3.0, a).unwrap(), -b4 / 4.0, 1e-13);
        let b6 = a.powi(6) - 3.0 * a.powi(5) + 2.5 * a.powi(4) - 0.5 * a * a + 1.0 / 42.0;
        assert_abs(hurwitz_zeta(-5.0, a).unwrap(), -b6 / 6.0, 1e-13);
    }

    #[test]
    fn hurwitz_difference_matches_direct_sum() {
        let v = hurwitz_zeta(2.0, 1.0 / 3.0).unwrap() - hurwitz_zeta(2.0, 2.0 / 3.0).unwrap();
        // direct sum with an Euler-Maclaurin tail estimate of the difference
        let n = 200_000u32;
        let mut acc = Compensated::new();
        for k in 0..n {
            let k = k as f64;
            acc.add((k + 1.0 / 3.0).powi(-2) - (k + 2.0 / 3.0).powi(-2));
        }
        // tail of f(k) = (k+1/3)^-2 - (k+2/3)^-2 ~ (2/3) k^-3
        let x = n as f64;
        let tail = 1.0 / (x + 1.0 / 3.0 - 0.5) - 1.0 / (x + 2.0 / 3.0 - 0.5);
        assert_abs(v, acc.value() + tail, 1e-12);
    }

    #[test]
    fn hurwitz_at_one_is_riemann() {
        for s in [-3.0, -0.5, 0.5, 2.0, 6.0] {
            assert_abs(
                hurwitz_zeta(s, 1.0).unwrap(),
                euler_maclaurin(s, 1.0),
                1e-12,
            );
            assert_abs(hurwitz_zeta(s, 1.0).unwrap(), riemann_zeta(s).unwrap(), 1e-12);
        }
    }

    #[test]
    fn hurwitz_reflection_agrees_with_euler_maclaurin_near_switch() {
        for s in [-2.5, -3.5, -4.25] {
            let r = hurwitz_reflected(s, 1, 3);
            let em = euler_maclaurin(s, 1.0 / 3.0);
            assert!((r - em).abs() < 1e-11, "s = {s}: {r} vs {em}");
        }
    }

    #[test]
    fn hurwitz_rejects_bad_parameter() {
        assert!(hurwitz_zeta(2.0, 0.0).is_err());
        assert!(hurwitz_zeta(2.0, 1.5).is_err());
        assert!(matches!(hurwitz_zeta(1.0, 0.5), Err(Error::Pole { .. })));
    }
}
