//! Epstein zeta from the theta-function splitting, summing over the lattice
//! and its dual. Valid for every real `s` and independent of the closed forms.

use std::f64::consts::PI;

use super::enumerate::QuadraticForm;
use super::{LatticeName, LatticeSpec};
use crate::specfun::{recip_gamma, upper_incomplete_gamma};
use crate::sum::Compensated;
use crate::{Error, Result};

/// Terms with `π |x|^2` beyond this are below `e^-40`.
const CUTOFF: f64 = 40.0;

/// `ζ_Λ(s)` in the lattice's own normalization from
/// `π^-s Γ(s) ζ_Λ(s) = sum_x Γ(s, π|x|²)(π|x|²)^-s
///   + V^-1 sum_k Γ(d/2-s, π|k|²)(π|k|²)^(s-d/2) + 1/(V(s-d/2)) - 1/s`,
/// with `x` over nonzero lattice vectors and `k` over nonzero dual vectors.
///
/// Not available for the Leech lattice (its shells grow too fast).
pub fn epstein_zeta_theta(lattice: &LatticeSpec, s: f64) -> Result<f64> {
    if lattice.name == LatticeName::Leech {
        return Err(Error::Domain(
            "theta splitting is not supported for the Leech lattice".into(),
        ));
    }
    let h = lattice.dim as f64 / 2.0;
    if s == h {
        return Err(Error::Pole { s });
    }
    if s == 0.0 {
        return Ok(-1.0);
    }
    let v = lattice.covolume;
    let mut acc = Compensated::new();
    acc.add(incomplete_sum(&lattice.form, s));
    acc.add(incomplete_sum(&lattice.dual_form(), h - s) / v);
    acc.add(1.0 / (v * (s - h)));
    acc.add(-1.0 / s);
    Ok(PI.powf(s) * recip_gamma(s) * acc.value())
}

/// `sum_{x != 0} Γ(a, π|x|²) (π|x|²)^-a` over shells.
fn incomplete_sum(form: &QuadraticForm, a: f64) -> f64 {
    let shells = form.shells(CUTOFF / PI);
    let mut acc = Compensated::new();
    for (&q, &count) in shells.iter().rev() {
        let x = PI * q as f64 * form.scale;
        acc.add(count as f64 * upper_incomplete_gamma(a, x) * (-a * x.ln()).exp());
    }
    acc.value()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{epstein_zeta_closed, rescale_to_unit_covolume};

    #[test]
    fn theta_matches_closed_forms_everywhere() {
        for name in [LatticeName::A2, LatticeName::D4, LatticeName::E8] {
            let l = LatticeSpec::new(name);
            for s in [-1.7, -0.5, 0.3, 1.5, 2.5, 3.0, 6.0] {
                if s == l.dim as f64 / 2.0 {
                    continue;
                }
                let mut t = epstein_zeta_theta(&l, s).unwrap();
                if name == LatticeName::D4 {
                    t = rescale_to_unit_covolume(t, s, l.covolume, l.dim);
                }
                let c = epstein_zeta_closed(&l, s).unwrap();
                assert!((t - c).abs() < 1e-11 * c.abs().max(1.0), "{name} s={s}: {t} vs {c}");
            }
        }
    }

    #[test]
    fn theta_special_points() {
        let e8 = LatticeSpec::e8();
        assert_eq!(epstein_zeta_theta(&e8, 0.0).unwrap(), -1.0);
        assert!(epstein_zeta_theta(&e8, -1.0).unwrap().abs() < 1e-15);
        assert!(epstein_zeta_theta(&e8, 4.0).is_err());
    }
}
