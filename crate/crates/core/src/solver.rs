//! Root finding for the Bohr equations `H(r) = B(r) − d* = 0`.
//!
//! Every `H` is strictly increasing on `(0, 1)` with `H′ ≥ 1`, so bisection
//! on `[0, 1 − 1e−9]` cannot miss the root. Newton steps are only used to
//! polish inside the final bracket.

use std::fmt;

use crate::classes::ClassSpec;
use crate::error::{BohrError, Result};
use crate::series::SeriesValue;

/// Right end of the bisection bracket.
pub const BRACKET_HI: f64 = 1.0 - 1e-9;

const NEWTON_STEPS: usize = 4;

/// How [`solve_radius`] may reach the root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Use a closed-form radius when the class has one.
    #[default]
    Auto,
    /// Always run bisection with Newton polish.
    Bisection,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    /// Target bracket width.
    pub tol: f64,
    /// Tolerance passed to every series evaluation.
    pub series_tol: f64,
    pub max_iter: usize,
    pub strategy: Strategy,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            tol: 1e-12,
            series_tol: 1e-13,
            max_iter: 200,
            strategy: Strategy::Auto,
        }
    }
}

impl SolverConfig {
    pub fn bisection() -> Self {
        SolverConfig {
            strategy: Strategy::Bisection,
            ..SolverConfig::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(BohrError::domain(format!("tol must be > 0, got {}", self.tol)));
        }
        if !(self.series_tol.is_finite() && self.series_tol > 0.0) {
            return Err(BohrError::domain(format!(
                "series_tol must be > 0, got {}",
                self.series_tol
            )));
        }
        if self.max_iter == 0 {
            return Err(BohrError::domain("max_iter must be >= 1"));
        }
        Ok(())
    }
}

/// How a radius was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ClosedForm,
    BisectionNewton,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::ClosedForm => "CLOSED_FORM",
            Method::BisectionNewton => "BISECTION_NEWTON",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusResult {
    pub radius: f64,
    /// `|H(radius)|`.
    pub residual: f64,
    /// Error bound of the series evaluations behind `residual`.
    pub series_error: f64,
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    pub iterations: usize,
    pub method: Method,
}

/// `H(r) = B(r) − d*` for one class.
#[derive(Debug, Clone, Copy)]
pub struct BohrEquation {
    spec: ClassSpec,
    d_star: SeriesValue,
    series_tol: f64,
}

impl BohrEquation {
    pub fn spec(&self) -> ClassSpec {
        self.spec
    }

    pub fn d_star(&self) -> SeriesValue {
        self.d_star
    }

    pub fn value(&self, r: f64) -> Result<SeriesValue> {
        let b = self.spec.bohr_sum(r, self.series_tol)?;
        Ok(SeriesValue::new(
            b.value - self.d_star.value,
            b.error_bound + self.d_star.error_bound,
        ))
    }

    pub fn derivative(&self, r: f64) -> Result<SeriesValue> {
        self.spec.bohr_sum_derivative(r, self.series_tol)
    }

    /// A lower bound on `H(r)`, valid up to `r = 1 − 1e−9`.
    pub fn lower_bound(&self, r: f64) -> Result<f64> {
        Ok(self.spec.bohr_sum_lower_bound(r)? - self.d_star.value - self.d_star.error_bound)
    }
}

/// Builds `H` for a validated class.
pub fn build_equation(spec: ClassSpec, cfg: &SolverConfig) -> Result<BohrEquation> {
    spec.validate()?;
    cfg.validate()?;
    let d_star = spec.distance_bound(cfg.series_tol)?;
    Ok(BohrEquation {
        spec,
        d_star,
        series_tol: cfg.series_tol,
    })
}

/// Closed-form radius for `G̃⁰_H(β)` and `T_{B⁰_H(M)}`.
///
/// Both are the positive roots of quadratics, `(1−2β)r² + (1+β)r − β = 0`
/// and `Mr² + 2r + (M−2) = 0`, written in the cancellation-free form
/// `−2c / (b + √(b² − 4ac))`.
pub fn closed_form_radius(spec: &ClassSpec) -> Option<f64> {
    match *spec {
        ClassSpec::GtBeta { beta } => {
            let disc = 1.0 + 6.0 * beta - 7.0 * beta * beta;
            Some(2.0 * beta / (1.0 + beta + disc.sqrt()))
        }
        ClassSpec::TbM { m } => Some(tb_radius(m)),
        _ => None,
    }
}

fn tb_radius(m: f64) -> f64 {
    let disc = 1.0 + 2.0 * m - m * m;
    (2.0 - m) / (1.0 + disc.sqrt())
}

fn check_jacobian_m(m: f64) -> Result<()> {
    if m.is_finite() && m > 0.0 && m < 2.0 {
        Ok(())
    } else {
        Err(BohrError::validation(format!("M must lie in (0, 2) (got {m})")))
    }
}

/// Radius for `|f(z)| + √|J_f(z)|·|z| + Σ(|aₙ| + |bₙ|)|z|ⁿ ≤ d*`, the positive
/// root of `4Mr² + 4r + (M − 2) = 0`. Exactly half the `T_{B⁰_H(M)}` radius.
pub fn jacobian_radius(m: f64) -> Result<f64> {
    check_jacobian_m(m)?;
    Ok(tb_radius(m) / 2.0)
}

/// Majorant `2Mr² + 2r` of the Jacobian functional on `|z| = r`.
pub fn jacobian_functional(m: f64, r: f64) -> Result<f64> {
    check_jacobian_m(m)?;
    if !(0.0..1.0).contains(&r) {
        return Err(BohrError::domain(format!("r = {r} outside [0, 1)")));
    }
    Ok(2.0 * m * r * r + 2.0 * r)
}

/// Finds the unique root of `H` in `[0, 1)`.
pub fn solve_radius(spec: ClassSpec, cfg: &SolverConfig) -> Result<RadiusResult> {
    let eq = build_equation(spec, cfg)?;

    if cfg.strategy == Strategy::Auto {
        if let Some(r) = closed_form_radius(&spec) {
            let h = eq.value(r)?;
            return Ok(RadiusResult {
                radius: r,
                residual: h.value.abs(),
                series_error: h.error_bound,
                bracket_lo: r,
                bracket_hi: r,
                iterations: 0,
                method: Method::ClosedForm,
            });
        }
    }

    let h0 = eq.value(0.0)?;
    if h0.value >= 0.0 {
        // d* = 0: the Bohr inequality holds only at the origin
        return Ok(RadiusResult {
            radius: 0.0,
            residual: h0.value.abs(),
            series_error: h0.error_bound,
            bracket_lo: 0.0,
            bracket_hi: 0.0,
            iterations: 0,
            method: Method::ClosedForm,
        });
    }

    let h_hi = eq.lower_bound(BRACKET_HI)?;
    if h_hi <= 0.0 {
        return Err(BohrError::NoSignChange {
            lo: 0.0,
            hi: BRACKET_HI,
            h_lo: h0.value,
            h_hi,
        });
    }

    let (mut lo, mut hi) = (0.0, BRACKET_HI);
    let mut iterations = 0;
    while hi - lo > cfg.tol {
        if iterations >= cfg.max_iter {
            return Err(BohrError::MaxIterations {
                iterations,
                width: hi - lo,
            });
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        iterations += 1;
        let h = eq.value(mid)?;
        if h.value < 0.0 {
            lo = mid;
        } else if h.value > 0.0 {
            hi = mid;
        } else {
            lo = mid;
            hi = mid;
        }
    }

    let mut x = 0.5 * (lo + hi);
    let mut hx = eq.value(x)?;
    for _ in 0..NEWTON_STEPS {
        if hx.value == 0.0 {
            break;
        }
        let slope = eq.derivative(x)?.value;
        let candidate = x - hx.value / slope;
        if !(lo..=hi).contains(&candidate) {
            break;
        }
        let hc = eq.value(candidate)?;
        if hc.value.abs() >= hx.value.abs() {
            break;
        }
        x = candidate;
        hx = hc;
    }

    Ok(RadiusResult {
        radius: x,
        residual: hx.value.abs(),
        series_error: hx.error_bound,
        bracket_lo: lo,
        bracket_hi: hi,
        iterations,
        method: Method::BisectionNewton,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::LN_2;

    #[test]
    fn equations_at_zero() {
        let cfg = SolverConfig::default();
        let eq = build_equation(ClassSpec::PhAlpha { alpha: 0.0 }, &cfg).unwrap();
        assert!((eq.value(0.0).unwrap().value + (2.0 * LN_2 - 1.0)).abs() < 1e-15);
        let eq = build_equation(ClassSpec::TbM { m: 1.0 }, &cfg).unwrap();
        for r in [0.0, 0.2, 0.7] {
            assert!((eq.value(r).unwrap().value - (r + 0.5 * r * r - 0.5)).abs() < 1e-15);
        }
        // H = 0 ⇔ 0.5r² + 1.25r − 0.25 = 0 for β = 0.25
        let eq = build_equation(ClassSpec::GtBeta { beta: 0.25 }, &cfg).unwrap();
        let r = closed_form_radius(&ClassSpec::GtBeta { beta: 0.25 }).unwrap();
        assert!((0.5 * r * r + 1.25 * r - 0.25).abs() < 1e-15);
        assert!(eq.value(r).unwrap().value.abs() < 1e-15);
    }

    #[test]
    fn invalid_specs_are_rejected() {
        let cfg = SolverConfig::default();
        assert!(matches!(
            solve_radius(ClassSpec::PhM { m: 1.3 }, &cfg),
            Err(BohrError::Validation(_))
        ));
        let bad = SolverConfig { tol: 0.0, ..cfg };
        assert!(solve_radius(ClassSpec::PhAlpha { alpha: 0.0 }, &bad).is_err());
    }

    #[test]
    fn ph_alpha_zero() {
        let res = solve_radius(ClassSpec::PhAlpha { alpha: 0.0 }, &SolverConfig::default()).unwrap();
        assert!((res.radius - 0.285_194).abs() < 1e-6);
        assert!((res.radius - 0.285_194_087_637_222_2).abs() < 1e-12);
        assert_eq!(res.method, Method::BisectionNewton);
        assert!(res.residual <= 1e-12);
        assert!(res.bracket_lo <= res.radius && res.radius <= res.bracket_hi);
        assert!(res.bracket_hi - res.bracket_lo <= 1e-12);
    }

    #[test]
    fn degenerate_beta_zero() {
        for cfg in [SolverConfig::default(), SolverConfig::bisection()] {
            let res = solve_radius(ClassSpec::GtBeta { beta: 0.0 }, &cfg).unwrap();
            assert_eq!(res.radius, 0.0);
            assert_eq!(res.method, Method::ClosedForm);
        }
    }

    #[test]
    fn ph_m_half() {
        // root of 2r + (1 − r)ln(1 − r) = 2 − ln 4, frozen from a 30-digit solve
        let res = solve_radius(ClassSpec::PhM { m: 0.5 }, &SolverConfig::default()).unwrap();
        assert!((res.radius - 0.476_211_217_637_550_8).abs() < 1e-12);
    }

    #[test]
    fn closed_forms() {
        let g = closed_form_radius(&ClassSpec::GtBeta { beta: 0.25 }).unwrap();
        assert!((g - (-1.25 + 2.0625f64.sqrt())).abs() < 1e-15);
        assert!((g - 0.186_140_661_634_507_2).abs() < 1e-15);
        let t = closed_form_radius(&ClassSpec::TbM { m: 1.0 }).unwrap();
        assert!((t - (2f64.sqrt() - 1.0)).abs() < 1e-15);
        assert_eq!(closed_form_radius(&ClassSpec::GtBeta { beta: 0.0 }), Some(0.0));
        assert_eq!(closed_form_radius(&ClassSpec::PhAlpha { alpha: 0.0 }), None);
    }

    #[test]
    fn jacobian() {
        let r = jacobian_radius(1.0).unwrap();
        assert!((r - (2f64.sqrt() - 1.0) / 2.0).abs() < 1e-15);
        assert!((4.0 * r * r + 4.0 * r - 1.0).abs() < 1e-15);
        assert!(jacobian_radius(2.0 - 1e-12).unwrap() < 1e-6);
        assert!(jacobian_radius(2.0).is_err());
        assert_eq!(jacobian_functional(1.0, 0.0).unwrap(), 0.0);
        assert!((jacobian_functional(1.0, r).unwrap() - 0.5).abs() < 1e-15);
        assert!((jacobian_functional(0.5, 0.1).unwrap() - 0.21).abs() < 1e-15);
        assert!(jacobian_functional(1.0, 1.0).is_err());
    }
}
