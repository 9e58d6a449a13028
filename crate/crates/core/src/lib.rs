//! Sharp Bohr radii for six subclasses of normalized harmonic mappings
//! `f = h + conj(g)` on the unit disk.
//!
//! For each class the Bohr inequality
//!
//! ```text
//! |z| + Σ_{n≥2} (|aₙ| + |bₙ|)|z|ⁿ ≤ d(f(0), ∂f(𝔻))
//! ```
//!
//! holds exactly for `|z| ≤ r_f`, where `r_f` is the unique root in `[0, 1)`
//! of `H(r) = B(r) − d*`. The crate is split into:
//!
//! - [`series`]: power series and alternating constants with error bounds,
//! - [`classes`]: coefficient bounds, distance constants, Bohr sums, growth
//!   envelopes and extremal functions of each class,
//! - [`solver`]: the Bohr equation and its root,
//! - [`verify`]: independent numerical checks against the extremals,
//! - [`suite`]: the named verification suite run by `bohr verify`,
//! - [`cli`]: the `bohr` command-line front end.
//!
//! ```
//! use bohr_core::{solve_radius, ClassSpec, SolverConfig};
//!
//! let res = solve_radius(ClassSpec::PhAlpha { alpha: 0.0 }, &SolverConfig::default()).unwrap();
//! assert!((res.radius - 0.285194).abs() < 1e-6);
//! ```

pub mod classes;
pub mod cli;
pub mod error;
pub mod series;
pub mod solver;
pub mod suite;
pub mod verify;

pub use classes::{ClassSpec, ClassTag, ExtremalFunction, GrowthEnvelope};
pub use error::{BohrError, Result};
pub use series::{CoefficientRule, Coefficients, SeriesValue};
pub use solver::{
    build_equation, closed_form_radius, jacobian_functional, jacobian_radius, solve_radius, BohrEquation, Method,
    RadiusResult, SolverConfig, Strategy,
};
