//! Spherical cap L2 discrepancy of point sets and probability measures on the
//! sphere `S^d`, computed through Stolarsky's invariance principle, together
//! with the special functions, lattice Epstein zeta functions and named
//! constants that enter the explicit lower bounds.
//!
//! Modules:
//!
//! * [`specfun`] - log-gamma, Pochhammer ratios, distance-series coefficients,
//!   moment integrals, tail sums, Riemann/Hurwitz zeta, Ramanujan tau.
//! * [`lattice`] - A2, D4, E8 and Leech lattices, their Epstein zeta functions
//!   and shell enumeration.
//! * [`pointgen`] - point configurations, generators and the text file format.
//! * [`discrepancy`] - energies, Stolarsky and Monte Carlo discrepancy, moment
//!   deficits and the lower-bound ladder.
//! * [`curves`] - discrepancy of normalized arc-length measures on curves.
//! * [`constants`] - `C_d`, `c_d^*`, `c_d^***`, conjectured lattice constants
//!   and the comparison table.

pub mod constants;
pub mod curves;
pub mod discrepancy;
mod error;
pub mod lattice;
pub mod pointgen;
mod seed;
pub mod specfun;
pub mod sum;

pub use error::{Error, Result};
pub use seed::SeedSpec;

pub mod prelude {
    pub use crate::constants::{
        c_alpha_asymptotic, c_alpha_conjectured, c_asymptotic, c_conjectured, c_uniform,
        stolarsky_constant, table1, ConstantsRow,
    };
    pub use crate::curves::{curve_discrepancy, curve_scaling_study, CurveStudy};
    pub use crate::discrepancy::{
        beck_bound_ladder, cap_discrepancy_montecarlo, cap_discrepancy_stolarsky, centroid_norm,
        energy_deficit, energy_integral, frame_potential, kernel_deficit, moment_sum,
        moment_sums, pairwise_energy, DiscrepancyReport, EnergyDeficit, Method,
    };
    pub use crate::lattice::{epstein_zeta_closed, epstein_zeta_direct, LatticeName, LatticeSpec};
    pub use crate::pointgen::{
        cross_polytope, curve_points, fibonacci_sphere, random_uniform, simplex_vertices,
        CurveKind, CurveSpec, PointConfiguration,
    };
    pub use crate::specfun::CoefficientRule;
    pub use crate::{Error, Result, SeedSpec};
}
