//! Independent checks of radii, distance constants and growth envelopes.
//!
//! Nothing here reuses the closed forms of [`crate::classes`] to judge them:
//! extremal functions are evaluated as truncated complex power series, the
//! boundary distance is estimated by the minimum modulus on a circle close
//! to the unit circle, and the Bohr inequality is scanned on a grid.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::classes::{ClassSpec, ExtremalFunction};
use crate::error::{BohrError, Result};
use crate::solver::{self, SolverConfig};

/// Default circle radius for [`distance_oracle`].
pub const ORACLE_RHO: f64 = 0.999;
/// Default number of sample points on the circle.
pub const ORACLE_GRID: usize = 720;
/// Default truncation order of the extremal.
pub const ORACLE_TERMS: usize = 100_000;

/// Sharpness tolerance for classes whose Bohr sum needs a series engine.
pub const SHARPNESS_TOL_SERIES: f64 = 1e-9;
/// Sharpness tolerance for classes with rational or polynomial Bohr sums.
pub const SHARPNESS_TOL_CLOSED: f64 = 1e-12;

/// `|f(z)|` for a truncated extremal, with the truncation bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremalValue {
    pub modulus: f64,
    pub truncation_bound: f64,
}

/// Evaluates `|h(z) + conj(g(z))|` by Horner's rule.
pub fn evaluate_extremal(f: &ExtremalFunction, z: Complex64) -> Result<ExtremalValue> {
    let rho = z.norm();
    if rho.is_nan() || rho >= 1.0 {
        return Err(BohrError::domain(format!("|z| = {rho} must be < 1")));
    }
    let horner = |coeffs: &[f64], lowest: i32| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc * z.powi(lowest)
    };
    let h = horner(f.analytic(), 1);
    let value = if f.co_analytic().iter().all(|&b| b == 0.0) {
        h
    } else {
        h + horner(f.co_analytic(), 2).conj()
    };
    let n = f.truncation() as i32;
    let truncation_bound = f.tail_coefficient() * rho.powi(n + 1) / (1.0 - rho);
    Ok(ExtremalValue {
        modulus: value.norm(),
        truncation_bound,
    })
}

/// Minimum of `|f(z)|` over a uniform grid on `|z| = rho`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleEstimate {
    pub value: f64,
    pub truncation_n: usize,
    pub grid_size: usize,
    pub rho: f64,
    /// Argument in `[0, 2π)` where the minimum was found.
    pub theta_min: f64,
    pub truncation_bound: f64,
}

/// Estimates `d(f(0), ∂f(𝔻))` for the class extremal.
pub fn distance_oracle(spec: &ClassSpec, rho: f64, grid: usize, n_terms: usize) -> Result<OracleEstimate> {
    if !(rho > 0.0 && rho < 1.0) {
        return Err(BohrError::domain(format!("rho = {rho} outside (0, 1)")));
    }
    if grid < 8 {
        return Err(BohrError::domain(format!("grid = {grid} below 8")));
    }
    let f = spec.extremal_coefficients(n_terms)?;
    let step = std::f64::consts::TAU / grid as f64;
    let values = (0..grid)
        .into_par_iter()
        .map(|j| evaluate_extremal(&f, Complex64::from_polar(rho, step * j as f64)))
        .collect::<Result<Vec<_>>>()?;
    // first minimum in grid order keeps the result independent of scheduling
    let (j_min, best) =
        values.iter().enumerate().fold(
            (0, values[0]),
            |acc, (j, v)| if v.modulus < acc.1.modulus { (j, *v) } else { acc },
        );
    Ok(OracleEstimate {
        value: best.modulus,
        truncation_n: f.truncation(),
        grid_size: grid,
        rho,
        theta_min: step * j_min as f64,
        truncation_bound: best.truncation_bound,
    })
}

/// Tolerance used by the sharpness suite for a class.
pub fn sharpness_tolerance(spec: &ClassSpec) -> f64 {
    match spec {
        ClassSpec::GtBeta { .. } | ClassSpec::TbM { .. } => SHARPNESS_TOL_CLOSED,
        _ => SHARPNESS_TOL_SERIES,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SharpnessReport {
    pub spec: ClassSpec,
    pub radius: f64,
    pub bohr_sum: f64,
    pub d_star: f64,
    /// `|B(r_f) − d*|`
    pub gap: f64,
    pub tol: f64,
    pub passed: bool,
}

/// Checks that the Bohr sum exhausts the distance bound exactly at `r_f`.
pub fn sharpness_check(spec: &ClassSpec, tol: f64) -> Result<SharpnessReport> {
    let cfg = SolverConfig::default();
    let res = solver::solve_radius(*spec, &cfg)?;
    let b = spec.bohr_sum(res.radius, cfg.series_tol)?;
    let d = spec.distance_bound(cfg.series_tol)?;
    let gap = (b.value - d.value).abs();
    Ok(SharpnessReport {
        spec: *spec,
        radius: res.radius,
        bohr_sum: b.value,
        d_star: d.value,
        gap,
        tol,
        passed: gap <= tol,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanPoint {
    pub r: f64,
    pub bohr_sum: f64,
    pub d_star: f64,
    pub satisfied: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanReport {
    pub spec: ClassSpec,
    pub grid: Vec<ScanPoint>,
    pub first_violation: Option<f64>,
    pub radius: f64,
    pub step: f64,
    /// First violation lies in `(r_f − ε, r_f + step]`, or no violation
    /// occurs and the grid ends below `r_f + step`.
    pub consistent: bool,
}

/// Slack allowed in `B(r) ≤ d*` on top of the series error bounds.
pub const SCAN_SLACK: f64 = 1e-12;

/// Evaluates the Bohr inequality on `r = i·r_max/steps`, `i = 0..=steps`.
pub fn bohr_scan(spec: &ClassSpec, r_max: f64, steps: usize) -> Result<ScanReport> {
    if !(r_max > 0.0 && r_max < 1.0) {
        return Err(BohrError::domain(format!("r_max = {r_max} outside (0, 1)")));
    }
    if steps == 0 {
        return Err(BohrError::domain("steps must be >= 1"));
    }
    let cfg = SolverConfig::default();
    let radius = solver::solve_radius(*spec, &cfg)?.radius;
    let d = spec.distance_bound(cfg.series_tol)?;
    let step = r_max / steps as f64;
    let grid = (0..=steps)
        .into_par_iter()
        .map(|i| {
            let r = if i == steps { r_max } else { step * i as f64 };
            let b = spec.bohr_sum(r, cfg.series_tol)?;
            let slack = SCAN_SLACK + b.error_bound + d.error_bound;
            Ok(ScanPoint {
                r,
                bohr_sum: b.value,
                d_star: d.value,
                satisfied: b.value <= d.value + slack,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let first_violation = grid.iter().find(|p| !p.satisfied).map(|p| p.r);
    let eps = 1e-9;
    let consistent = match first_violation {
        Some(v) => v > radius - eps && v <= radius + step + eps,
        None => r_max < radius + step + eps,
    } && grid
        .iter()
        .all(|p| p.satisfied == (p.r <= radius + eps) || (p.r - radius).abs() <= eps);
    Ok(ScanReport {
        spec: *spec,
        grid,
        first_violation,
        radius,
        step,
        consistent,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnvelopePoint {
    pub r: f64,
    pub lower: f64,
    pub upper: f64,
    /// `|f(r·e^{iθ*})|` at the lower touch point.
    pub at_lower_touch: f64,
    /// `|f(r)|`.
    pub at_upper_touch: f64,
    /// Smallest and largest `|f|` over the whole sampled circle.
    pub circle_min: f64,
    pub circle_max: f64,
    pub slack: f64,
    pub contained: bool,
    pub sharp: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EnvelopeReport {
    pub spec: ClassSpec,
    pub points: Vec<EnvelopePoint>,
    pub passed: bool,
}

const ENVELOPE_ANGLES: usize = 64;

/// Checks that the truncated extremal stays inside the growth envelope on
/// `|z| = r` and touches it at `z = r` (upper) and at the lower touch angle.
pub fn envelope_check(spec: &ClassSpec, samples: &[f64], n_terms: usize, tol: f64) -> Result<EnvelopeReport> {
    let f = spec.extremal_coefficients(n_terms)?;
    let theta_low = spec.lower_touch_angle();
    let mut points = Vec::with_capacity(samples.len());
    for &r in samples {
        if !(r > 0.0 && r < 1.0) {
            return Err(BohrError::domain(format!("sample r = {r} outside (0, 1)")));
        }
        let env = spec.growth_envelope(r, 1e-14)?;
        let low = evaluate_extremal(&f, Complex64::from_polar(r, theta_low))?;
        let up = evaluate_extremal(&f, Complex64::new(r, 0.0))?;
        let (mut circle_min, mut circle_max) = (f64::INFINITY, 0.0f64);
        for j in 0..ENVELOPE_ANGLES {
            let theta = std::f64::consts::TAU * j as f64 / ENVELOPE_ANGLES as f64;
            let v = evaluate_extremal(&f, Complex64::from_polar(r, theta))?.modulus;
            circle_min = circle_min.min(v);
            circle_max = circle_max.max(v);
        }
        let slack = up.truncation_bound + env.error_bound + 1e-14;
        let contained = env.lower <= circle_min.min(low.modulus) + slack
            && circle_max.max(up.modulus) <= env.upper + slack
            && env.lower <= env.upper;
        let sharp = (env.lower - low.modulus).abs() <= tol + slack && (env.upper - up.modulus).abs() <= tol + slack;
        points.push(EnvelopePoint {
            r,
            lower: env.lower,
            upper: env.upper,
            at_lower_touch: low.modulus,
            at_upper_touch: up.modulus,
            circle_min,
            circle_max,
            slack,
            contained,
            sharp,
        });
    }
    let passed = points.iter().all(|p| p.contained && p.sharp);
    Ok(EnvelopeReport {
        spec: *spec,
        points,
        passed,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobianReport {
    pub m: f64,
    pub r: f64,
    /// Largest value of the functional over the sampled circle.
    pub functional_max: f64,
    /// `2Mr² + 2r`
    pub majorant: f64,
    pub passed: bool,
}

/// Evaluates `|f(z)| + (1 + M|z|)|z| + Σ cₙ|z|ⁿ` for the `T_{B⁰_H(M)}`
/// extremal on `|z| = r` and compares it with the majorant `2Mr² + 2r`.
/// The maximum is attained at `z = r`, where the two agree.
pub fn jacobian_containment(m: f64, r: f64) -> Result<JacobianReport> {
    let majorant = solver::jacobian_functional(m, r)?;
    let spec = ClassSpec::TbM { m };
    let f = spec.extremal_coefficients(2)?;
    let coeff_sum = 0.5 * m * r * r;
    let mut functional_max = 0.0f64;
    for j in 0..ENVELOPE_ANGLES {
        let theta = std::f64::consts::TAU * j as f64 / ENVELOPE_ANGLES as f64;
        let fz = evaluate_extremal(&f, Complex64::from_polar(r, theta))?;
        let jac_sqrt = (1.0 + m * r).abs();
        functional_max = functional_max.max(fz.modulus + jac_sqrt * r + coeff_sum);
    }
    let slack = 1e-14;
    Ok(JacobianReport {
        m,
        r,
        functional_max,
        majorant,
        passed: functional_max <= majorant + slack && (majorant - functional_max).abs() <= slack,
    })
}
