//! Moment-deficit profiles `S(m)` with the `N^(3/2) a_m S(m)` scaling.

use serde::{Deserialize, Serialize};

use super::energy::moment_sums;
use crate::pointgen::PointConfiguration;
use crate::specfun::CoefficientRule;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MomentRow {
    pub m: usize,
    pub parity: Parity,
    /// `S(m)`.
    pub s: f64,
    /// `N^(3/2) a_m S(m)` with the `α = 1` coefficients.
    pub scaled: f64,
    /// `m / N`.
    pub m_over_n: f64,
}

/// Rows for `m = 1..=m_max`.
pub fn moment_table(config: &PointConfiguration, m_max: usize) -> Vec<MomentRow> {
    let n = config.len() as f64;
    let s = moment_sums(config, m_max);
    let a = CoefficientRule::PowerLaw { alpha: 1.0 }.coefficients(m_max);
    (1..=m_max)
        .map(|m| MomentRow {
            m,
            parity: if m % 2 == 0 { Parity::Even } else { Parity::Odd },
            s: s[m],
            scaled: n.powf(1.5) * a[m - 1] * s[m],
            m_over_n: m as f64 / n,
        })
        .collect()
}

/// CSV with header `m,parity,S,scaled,m_over_N`; 17 significant digits.
pub fn moment_table_csv(rows: &[MomentRow]) -> String {
    let mut out = String::from("m,parity,S,scaled,m_over_N\n");
    for r in rows {
        let parity = match r.parity {
            Parity::Even => "even",
            Parity::Odd => "odd",
        };
        out.push_str(&format!(
            "{},{},{:.16e},{:.16e},{:.16e}\n",
            r.m, parity, r.s, r.scaled, r.m_over_n
        ));
    }
    out
}
