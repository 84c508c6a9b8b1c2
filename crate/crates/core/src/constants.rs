//! Named constants: `C_d`, `c_d^*`, `c_d^***`, `c_{α,d}^asymp` and the
//! lattice-based conjectured constants, plus the comparison table and the
//! α-grid behind the α-energy comparison plot.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::lattice::{epstein_zeta_closed, LatticeName, LatticeSpec};
use crate::specfun::{lgamma, recip_gamma};
use crate::{Error, Result};

fn check_dim(d: usize) -> Result<()> {
    if d >= 2 {
        Ok(())
    } else {
        Err(Error::Domain(format!("sphere dimension must be >= 2, got {d}")))
    }
}

/// `C_d = Γ((d+1)/2) / (d √π Γ(d/2))`.
pub fn stolarsky_constant(d: usize) -> f64 {
    let df = d as f64;
    (lgamma(0.5 * (df + 1.0)) - lgamma(0.5 * df)).exp() / (df * PI.sqrt())
}

/// Surface area `ω_d = 2π^((d+1)/2) / Γ((d+1)/2)` of `S^d`.
pub fn sphere_area(d: usize) -> f64 {
    let h = 0.5 * (d as f64 + 1.0);
    2.0 * (h * PI.ln() - lgamma(h)).exp()
}

/// `2Γ(1/2)/Γ((d+1)/2)`, the `(d+1)`-ball volume ratio factor shared by the
/// asymptotic constants.
fn ball_factor(d: usize) -> f64 {
    2.0 * PI.sqrt() * (-lgamma(0.5 * (d as f64 + 1.0))).exp()
}

/// Explicit constant `c_d^*` valid for all `N >= 2`.
pub fn c_uniform(d: usize) -> Result<f64> {
    check_dim(d)?;
    let df = d as f64;
    let ratio = (lgamma(1.5) - lgamma(0.5 * (df + 3.0))).exp();
    let v = stolarsky_constant(d) / (2.0 * PI.sqrt()) / (1.0 + 1.0 / df) * ratio.powf(1.0 / df);
    Ok(v.sqrt())
}

/// Asymptotic constant `c_d^***` (liminf as `N → ∞`).
pub fn c_asymptotic(d: usize) -> Result<f64> {
    check_dim(d)?;
    let df = d as f64;
    let v = stolarsky_constant(d) / PI.sqrt() / (1.0 + 1.0 / df) * ball_factor(d).powf(1.0 / df);
    Ok(v.sqrt())
}

/// `c_{α,d}^asymp = 1/Γ(1-α/2) · 1/(1+α/d) · (2Γ(1/2)/Γ((d+1)/2))^(α/d)`.
pub fn c_alpha_asymptotic(alpha: f64, d: usize) -> Result<f64> {
    check_dim(d)?;
    if !(0.0..2.0).contains(&alpha) {
        return Err(Error::Domain(format!("alpha must lie in [0, 2), got {alpha}")));
    }
    let df = d as f64;
    Ok(recip_gamma(1.0 - 0.5 * alpha) / (1.0 + alpha / df) * ball_factor(d).powf(alpha / df))
}

/// `c_d^conj = sqrt(C_d ω_d^(1/d) (-|Λ|^(-1/d) ζ_Λ(-1/2)))`.
pub fn c_conjectured(lattice: &LatticeSpec) -> Result<f64> {
    let d = lattice.dim;
    Ok((stolarsky_constant(d) * c_alpha_conjectured(1.0, lattice)?).sqrt())
}

/// `c_{α,d}^conj = ω_d^(α/d) (-|Λ|^(-α/d) ζ_Λ(-α/2))`.
pub fn c_alpha_conjectured(alpha: f64, lattice: &LatticeSpec) -> Result<f64> {
    if !(0.0..2.0).contains(&alpha) {
        return Err(Error::Domain(format!("alpha must lie in [0, 2), got {alpha}")));
    }
    if alpha == 0.0 {
        return Ok(1.0);
    }
    let d = lattice.dim as f64;
    let zeta = epstein_zeta_closed(lattice, -0.5 * alpha)?;
    let cov = lattice.closed_form_covolume();
    Ok(sphere_area(lattice.dim).powf(alpha / d) * (-cov.powf(-alpha / d) * zeta))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstantsRow {
    pub d: usize,
    pub lattice: LatticeName,
    pub c_conj: f64,
    pub c_star3: f64,
    /// `c_conj - c_star3`.
    pub diff: f64,
    /// `(c_conj - c_star3) / c_conj`.
    pub rel_error: f64,
    /// `diff` truncated to three decimals, as printed in the table.
    pub diff_printed: f64,
    /// Relative error in percent, rounded to the nearest integer.
    pub rel_error_percent: u32,
}

/// Conjectured vs asymptotic constants for `d = 2, 4, 8, 24`.
pub fn table1() -> Result<Vec<ConstantsRow>> {
    LatticeName::ALL
        .iter()
        .map(|&name| {
            let lattice = LatticeSpec::new(name);
            let d = lattice.dim;
            let c_conj = c_conjectured(&lattice)?;
            let c_star3 = c_asymptotic(d)?;
            let diff = c_conj - c_star3;
            let rel_error = diff / c_conj;
            Ok(ConstantsRow {
                d,
                lattice: name,
                c_conj,
                c_star3,
                diff,
                rel_error,
                diff_printed: (diff * 1000.0).trunc() / 1000.0,
                rel_error_percent: (100.0 * rel_error).round() as u32,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlphaRow {
    pub alpha: f64,
    pub d: usize,
    pub c_conj: f64,
    pub c_asymp: f64,
    /// `(c_conj - c_asymp) / c_conj`.
    pub rel_error: f64,
}

/// `(α, c_{α,d}^conj, c_{α,d}^asymp, relative error)` on an α grid.
pub fn alpha_grid(lattice: &LatticeSpec, alphas: &[f64]) -> Result<Vec<AlphaRow>> {
    alphas
        .iter()
        .map(|&alpha| {
            let c_conj = c_alpha_conjectured(alpha, lattice)?;
            let c_asymp = c_alpha_asymptotic(alpha, lattice.dim)?;
            Ok(AlphaRow {
                alpha,
                d: lattice.dim,
                c_conj,
                c_asymp,
                rel_error: (c_conj - c_asymp) / c_conj,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn stolarsky_constants() {
        assert!(close(stolarsky_constant(2), 0.25, 1e-16));
        assert!(close(stolarsky_constant(3), 2.0 / (3.0 * PI), 1e-16));
        for d in 2..=50 {
            assert!(stolarsky_constant(d) > stolarsky_constant(d + 1));
        }
        assert!(close(sphere_area(2), 4.0 * PI, 1e-14));
        assert!(close(sphere_area(3), 2.0 * PI * PI, 1e-14));
    }

    #[test]
    fn explicit_constants() {
        let c2 = c_uniform(2).unwrap();
        assert!(close(c2, 0.1959291678902056, 1e-15));
        assert!(close(c2 * c2, 1.0 / (6.0 * (6.0 * PI).sqrt()), 1e-16));
        assert!(close(c_asymptotic(2).unwrap(), 1.0 / (3.0 * PI.sqrt()).sqrt(), 1e-15));
        assert!(close(c_asymptotic(4).unwrap(), 0.3288548512164972, 1e-14));
        assert!(close(c_asymptotic(8).unwrap(), 0.2431072174822736, 1e-14));
        assert!(close(c_asymptotic(24).unwrap(), 0.1451892677457039, 1e-14));
        // radical form for d = 4
        let radical = 3f64.powf(0.375) / (2f64.powf(0.625) * 5f64.sqrt() * PI.powf(0.25));
        assert!(close(c_asymptotic(4).unwrap(), radical, 1e-14));
        assert!(c_uniform(1).is_err());
    }

    #[test]
    fn alpha_asymptotic_identities() {
        assert!(close(c_alpha_asymptotic(1.0, 2).unwrap(), 4.0 / (3.0 * PI.sqrt()), 1e-15));
        for d in 2..=30 {
            let lhs = c_asymptotic(d).unwrap().powi(2);
            let rhs = stolarsky_constant(d) * c_alpha_asymptotic(1.0, d).unwrap();
            assert!(close(lhs, rhs, 1e-14));
        }
        assert!(close(c_alpha_asymptotic(1e-12, 8).unwrap(), 1.0, 1e-10));
        assert!(c_alpha_asymptotic(1.999999, 2).unwrap() < 1e-5);
    }

    #[test]
    fn conjectured_constants() {
        let expected = [
            (LatticeName::A2, 0.4467972835040832),
            (LatticeName::D4, 0.3426606934243682),
            (LatticeName::E8, 0.2558385395385698),
            (LatticeName::Leech, 0.1557897704986152),
        ];
        for (name, value) in expected {
            let c = c_conjectured(&LatticeSpec::new(name)).unwrap();
            assert!(close(c, value, 1e-10), "{name}: {c}");
        }
        let a2 = LatticeSpec::a2();
        let lhs = c_alpha_conjectured(1.0, &a2).unwrap();
        assert!(close(lhs, c_conjectured(&a2).unwrap().powi(2) / 0.25, 1e-14));
    }

    #[test]
    fn chain_ordering_and_table() {
        let rows = table1().unwrap();
        let percents: Vec<u32> = rows.iter().map(|r| r.rel_error_percent).collect();
        assert_eq!(percents, vec![3, 4, 5, 7]);
        for r in &rows {
            assert!(c_uniform(r.d).unwrap() < r.c_star3 && r.c_star3 < r.c_conj);
            assert!(r.rel_error > 0.0 && r.rel_error < 0.10);
            assert!(r.diff_printed >= 0.010 && r.diff_printed <= 0.013);
        }
    }

    #[test]
    fn alpha_grid_comparison() {
        let alphas: Vec<f64> = (1..20).map(|k| 0.1 * k as f64).collect();
        for name in LatticeName::ALL {
            let rows = alpha_grid(&LatticeSpec::new(name), &alphas).unwrap();
            for r in &rows {
                assert!(r.c_conj > r.c_asymp, "{name} α = {}", r.alpha);
            }
        }
        let leech = LatticeSpec::new(LatticeName::Leech);
        let near_two = alpha_grid(&leech, &[1.999]).unwrap()[0].rel_error;
        assert!((near_two - 0.25).abs() < 0.01, "{near_two}");
        let zero = alpha_grid(&LatticeSpec::a2(), &[0.0]).unwrap()[0].clone();
        assert_eq!((zero.c_conj, zero.c_asymp), (1.0, 1.0));
    }
}
