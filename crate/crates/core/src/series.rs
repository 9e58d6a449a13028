//! Power series and alternating constant series with explicit error bounds.
//!
//! Every infinite sum that shows up in a Bohr equation or a growth envelope
//! is one of a handful of coefficient families. Positive power series are
//! truncated with a geometric tail bound, alternating constants are
//! accelerated with the Cohen–Rodriguez Villegas–Zagier transform, and the
//! logarithmic families have elementary closed forms.
//!
//! All functions here are pure.

use crate::error::{BohrError, Result};

/// Hard cap on the number of terms a truncated power series may use.
pub const MAX_SERIES_TERMS: usize = 5_000_000;

/// Hard cap on the length of the alternating-series acceleration.
pub const MAX_ACCELERATION_TERMS: usize = 120;

/// Largest `r` accepted by the generic summation routines.
pub const R_MAX: f64 = 1.0 - 1e-9;

/// A numeric value paired with an absolute error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: f64,
    pub error_bound: f64,
}

impl SeriesValue {
    pub fn exact(value: f64) -> Self {
        SeriesValue {
            value,
            error_bound: 0.0,
        }
    }

    pub fn new(value: f64, error_bound: f64) -> Self {
        debug_assert!(error_bound >= 0.0);
        SeriesValue { value, error_bound }
    }

    /// `a * self + b` with the bound scaled accordingly.
    pub fn affine(self, a: f64, b: f64) -> Self {
        SeriesValue {
            value: a * self.value + b,
            error_bound: a.abs() * self.error_bound,
        }
    }

    /// True when `other` lies within the bound of `self`.
    pub fn contains(&self, other: f64) -> bool {
        (self.value - other).abs() <= self.error_bound
    }
}

/// The coefficient families used by the six classes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Coefficients {
    /// `scale / n`
    Harmonic { scale: f64 },
    /// `scale / n²`
    InverseSquare { scale: f64 },
    /// `2 / (αn² + n(1 − α))`
    MixedQuadratic { alpha: f64 },
    /// `2 / (1 + (n − 1)α)`
    ShiftedLinear { alpha: f64 },
    /// `scale / (n(n − 1))`
    Telescoping { scale: f64 },
    /// `1 / (1 + n·k·α)`
    Lacunary { k: u32, alpha: f64 },
    /// `value`
    Constant { value: f64 },
}

/// A positive, nonincreasing coefficient sequence `n ↦ cₙ` for `n ≥ start`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoefficientRule {
    family: Coefficients,
    start: u64,
}

impl CoefficientRule {
    /// Builds a rule, rejecting parameters for which the family is not
    /// positive and nonincreasing from `start` on.
    pub fn new(family: Coefficients, start: u64) -> Result<Self> {
        use Coefficients::*;
        if start == 0 {
            return Err(BohrError::domain("coefficient rules start at n >= 1"));
        }
        let positive = |x: f64, name: &str| {
            if x.is_finite() && x > 0.0 {
                Ok(())
            } else {
                Err(BohrError::domain(format!(
                    "{name} must be positive and finite, got {x}"
                )))
            }
        };
        let nonneg = |x: f64, name: &str| {
            if x.is_finite() && x >= 0.0 {
                Ok(())
            } else {
                Err(BohrError::domain(format!("{name} must be >= 0 and finite, got {x}")))
            }
        };
        match family {
            Harmonic { scale } | InverseSquare { scale } => positive(scale, "scale")?,
            Telescoping { scale } => {
                positive(scale, "scale")?;
                if start < 2 {
                    return Err(BohrError::domain("scale/(n(n-1)) needs start >= 2"));
                }
            }
            MixedQuadratic { alpha } | ShiftedLinear { alpha } => nonneg(alpha, "alpha")?,
            Lacunary { k, alpha } => {
                nonneg(alpha, "alpha")?;
                if k == 0 {
                    return Err(BohrError::domain("lacunary stride k must be >= 1"));
                }
            }
            Constant { value } => positive(value, "value")?,
        }
        Ok(CoefficientRule { family, start })
    }

    pub fn family(&self) -> Coefficients {
        self.family
    }

    pub fn start(&self) -> u64 {
        self.start
    }

    /// `cₙ`; callers must pass `n >= start`.
    pub fn coefficient(&self, n: u64) -> f64 {
        use Coefficients::*;
        let x = n as f64;
        match self.family {
            Harmonic { scale } => scale / x,
            InverseSquare { scale } => scale / (x * x),
            MixedQuadratic { alpha } => 2.0 / (x * (alpha * x + (1.0 - alpha))),
            ShiftedLinear { alpha } => 2.0 / (1.0 + (x - 1.0) * alpha),
            Telescoping { scale } => scale / (x * (x - 1.0)),
            Lacunary { k, alpha } => 1.0 / (1.0 + x * f64::from(k) * alpha),
            Constant { value } => value,
        }
    }

    /// Whether `cₙ → 0`.
    pub fn vanishes(&self) -> bool {
        use Coefficients::*;
        match self.family {
            Harmonic { .. } | InverseSquare { .. } | MixedQuadratic { .. } | Telescoping { .. } => true,
            ShiftedLinear { alpha } | Lacunary { alpha, .. } => alpha > 0.0,
            Constant { .. } => false,
        }
    }
}

fn check_radius(r: f64, closed_upper: bool) -> Result<()> {
    let ok = if closed_upper {
        (0.0..=1.0).contains(&r)
    } else {
        (0.0..1.0).contains(&r)
    };
    if ok {
        Ok(())
    } else if closed_upper {
        Err(BohrError::domain(format!("r = {r} outside [0, 1]")))
    } else {
        Err(BohrError::domain(format!("r = {r} outside [0, 1)")))
    }
}

fn check_tol(tol: f64) -> Result<()> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(BohrError::domain(format!("tolerance must be positive, got {tol}")))
    }
}

/// Neumaier-compensated accumulator.
#[derive(Default)]
struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn total(&self) -> f64 {
        self.sum + self.carry
    }
}

/// `Σ_{n ≥ n₀} cₙ rⁿ` truncated once the geometric tail bound
/// `c_{N+1} r^{N+1} / (1 − r)` drops below the tolerance.
pub fn sum_power_series(rule: &CoefficientRule, r: f64, tol: f64) -> Result<SeriesValue> {
    check_radius(r, false)?;
    check_tol(tol)?;
    if r > R_MAX {
        return Err(BohrError::domain(format!("r = {r} above 1 - 1e-9")));
    }
    if r == 0.0 {
        return Ok(SeriesValue::exact(0.0));
    }
    let eps = f64::EPSILON;
    let inv_gap = 1.0 / (1.0 - r);
    let mut acc = CompensatedSum::default();
    // Running bound on the error of each term c_n r^n (r^n built by repeated products).
    let mut term_err = 0.0;
    let mut n = rule.start();
    let mut power = r.powi(n as i32);
    let mut terms = 0usize;
    loop {
        let term = rule.coefficient(n) * power;
        acc.add(term);
        terms += 1;
        term_err += term * (terms as f64 + 3.0) * eps;
        let tail = rule.coefficient(n + 1) * power * r * inv_gap;
        let bound = tail + term_err + 2.0 * eps * acc.total().abs();
        if tail <= 0.5 * tol || power == 0.0 {
            if bound > tol {
                return Err(BohrError::Convergence {
                    requested: tol,
                    achieved: bound,
                    terms,
                });
            }
            return Ok(SeriesValue::new(acc.total(), bound));
        }
        if terms >= MAX_SERIES_TERMS {
            return Err(BohrError::Convergence {
                requested: tol,
                achieved: bound,
                terms,
            });
        }
        n += 1;
        power *= r;
    }
}

/// Sum of the first `terms` terms of `Σ cₙ rⁿ`. Every term is positive, so
/// this is a lower bound on the full series.
pub fn partial_power_sum(rule: &CoefficientRule, r: f64, terms: usize) -> f64 {
    let mut acc = CompensatedSum::default();
    let mut power = r.powi(rule.start() as i32);
    for n in (rule.start()..).take(terms) {
        acc.add(rule.coefficient(n) * power);
        power *= r;
        if power == 0.0 {
            break;
        }
    }
    acc.total()
}

/// `Σ_{n ≥ n₀} n cₙ r^{n−1}`, the termwise derivative of [`sum_power_series`].
///
/// Consecutive terms have ratio at most `(n+1)/n · r`, which bounds the tail
/// geometrically once that ratio is below one.
pub fn sum_derivative_series(rule: &CoefficientRule, r: f64, tol: f64) -> Result<SeriesValue> {
    check_radius(r, false)?;
    check_tol(tol)?;
    if r > R_MAX {
        return Err(BohrError::domain(format!("r = {r} above 1 - 1e-9")));
    }
    let eps = f64::EPSILON;
    let mut acc = CompensatedSum::default();
    let mut term_err = 0.0;
    let mut n = rule.start();
    let mut power = if n == 1 { 1.0 } else { r.powi(n as i32 - 1) };
    let mut terms = 0usize;
    loop {
        let term = n as f64 * rule.coefficient(n) * power;
        acc.add(term);
        terms += 1;
        term_err += term * (terms as f64 + 3.0) * eps;
        let next = (n + 1) as f64 * rule.coefficient(n + 1) * power * r;
        let ratio = (n + 2) as f64 / (n + 1) as f64 * r;
        if ratio < 1.0 {
            let tail = next / (1.0 - ratio);
            let bound = tail + term_err + 2.0 * eps * acc.total().abs();
            if tail <= 0.5 * tol || next == 0.0 {
                if bound > tol {
                    return Err(BohrError::Convergence {
                        requested: tol,
                        achieved: bound,
                        terms,
                    });
                }
                return Ok(SeriesValue::new(acc.total(), bound));
            }
        }
        if terms >= MAX_SERIES_TERMS {
            return Err(BohrError::Convergence {
                requested: tol,
                achieved: f64::INFINITY,
                terms,
            });
        }
        n += 1;
        power *= r;
    }
}

/// `Σ_{n ≥ n₀} (−1)^{n−1} cₙ rⁿ` for `0 ≤ r ≤ 1`.
///
/// For `r < 1` the terms decrease in modulus, so the first omitted term bounds
/// the error; `r = 1` is delegated to [`alt_constant`].
pub fn sum_alternating_power_series(rule: &CoefficientRule, r: f64, tol: f64) -> Result<SeriesValue> {
    check_radius(r, true)?;
    check_tol(tol)?;
    if r == 1.0 {
        return alt_constant(rule, tol);
    }
    if r == 0.0 {
        return Ok(SeriesValue::exact(0.0));
    }
    let eps = f64::EPSILON;
    let mut acc = CompensatedSum::default();
    let mut term_err = 0.0;
    let mut n = rule.start();
    let mut power = r.powi(n as i32);
    let mut terms = 0usize;
    loop {
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        let term = rule.coefficient(n) * power;
        acc.add(sign * term);
        terms += 1;
        term_err += term * (terms as f64 + 3.0) * eps;
        let next = rule.coefficient(n + 1) * power * r;
        let bound = next + term_err + 2.0 * eps * acc.total().abs();
        if next <= 0.5 * tol {
            if bound > tol {
                return Err(BohrError::Convergence {
                    requested: tol,
                    achieved: bound,
                    terms,
                });
            }
            return Ok(SeriesValue::new(acc.total(), bound));
        }
        if terms >= MAX_SERIES_TERMS {
            return Err(BohrError::Convergence {
                requested: tol,
                achieved: bound,
                terms,
            });
        }
        n += 1;
        power *= r;
    }
}

/// `Σ_{n≥2} rⁿ/n = −ln(1 − r) − r`.
pub fn log_tail(r: f64) -> Result<f64> {
    check_radius(r, false)?;
    Ok(-(-r).ln_1p() - r)
}

/// `Σ_{n≥2} (−1)^{n−1} rⁿ/n = ln(1 + r) − r`; equals `ln 2 − 1` at `r = 1`.
pub fn alt_log_tail(r: f64) -> Result<f64> {
    check_radius(r, true)?;
    Ok(r.ln_1p() - r)
}

/// `Σ_{n≥2} rⁿ/(n(n−1)) = r + (1 − r) ln(1 − r)`; equals 1 at `r = 1`.
pub fn nn1_tail(r: f64) -> Result<f64> {
    check_radius(r, true)?;
    if r == 1.0 {
        return Ok(1.0);
    }
    Ok(r + (1.0 - r) * (-r).ln_1p())
}

/// `Σ_{n≥2} (−1)^{n−1} rⁿ/(n(n−1)) = r − (1 + r) ln(1 + r)`; equals
/// `1 − ln 4` at `r = 1`.
pub fn alt_nn1_tail(r: f64) -> Result<f64> {
    check_radius(r, true)?;
    Ok(r - (1.0 + r) * r.ln_1p())
}

/// Convergence factor of the acceleration: the error after `n` steps is at
/// most `2 a₀ / ACCEL_RATE^n`.
const ACCEL_RATE: f64 = 5.828_427_124_746_19; // 3 + √8

/// Cohen–Rodriguez Villegas–Zagier acceleration of `Σ_{j≥0} (−1)^j a_j`.
///
/// Returns the estimate and the accumulated rounding bound. When `a_j` is a
/// moment sequence `∫₀¹ x^j dμ` (true of every family in [`Coefficients`]
/// that vanishes), the truncation error is at most `2 a₀ / (3+√8)^n`.
fn accelerate(terms: &[f64]) -> (f64, f64) {
    let n = terms.len();
    let nf = n as f64;
    let mut d = (3.0 + 8f64.sqrt()).powi(n as i32);
    d = 0.5 * (d + 1.0 / d);
    let mut b = -1.0;
    let mut c = -d;
    let mut s = 0.0;
    let mut abs_sum = 0.0;
    for (k, a) in terms.iter().enumerate() {
        let kf = k as f64;
        c = b - c;
        s += c * a;
        abs_sum += (c * a).abs();
        b = (kf + nf) * (kf - nf) * b / ((kf + 0.5) * (kf + 1.0));
    }
    (s / d, 4.0 * nf * f64::EPSILON * abs_sum / d)
}

/// `Σ_{n ≥ n₀} (−1)^{n−1} cₙ` for a rule whose terms decrease to zero.
///
/// The sign follows the parity of `n`, so a rule starting at `n₀ = 2` has a
/// negative leading term. Conditionally convergent rules (`cₙ ~ 1/n`) are
/// handled by the acceleration and need a few dozen coefficient evaluations.
pub fn alt_constant(rule: &CoefficientRule, tol: f64) -> Result<SeriesValue> {
    check_tol(tol)?;
    if !rule.vanishes() {
        return Err(BohrError::Precondition(format!(
            "terms of {:?} do not decrease to zero",
            rule.family()
        )));
    }
    let a0 = rule.coefficient(rule.start());
    let mut steps = ((4.0 * a0 / tol).ln() / ACCEL_RATE.ln()).ceil().max(1.0) as usize;
    steps += 1;
    if steps > MAX_ACCELERATION_TERMS {
        return Err(BohrError::Convergence {
            requested: tol,
            achieved: 2.0 * a0 / ACCEL_RATE.powi(MAX_ACCELERATION_TERMS as i32),
            terms: MAX_ACCELERATION_TERMS,
        });
    }
    let terms: Vec<f64> = (0..=steps as u64).map(|j| rule.coefficient(rule.start() + j)).collect();
    if let Some(j) = terms.windows(2).position(|w| !(w[0] > 0.0 && w[1] <= w[0])) {
        return Err(BohrError::Precondition(format!(
            "terms must be positive and nonincreasing; fails at n = {}",
            rule.start() + j as u64
        )));
    }
    let (s, rounding) = accelerate(&terms[..steps]);
    let truncation = 2.0 * a0 / ACCEL_RATE.powi(steps as i32);
    let bound = truncation + rounding;
    if bound > tol {
        return Err(BohrError::Convergence {
            requested: tol,
            achieved: bound,
            terms: steps,
        });
    }
    let sign = if rule.start() % 2 == 1 { 1.0 } else { -1.0 };
    Ok(SeriesValue::new(sign * s, bound))
}

/// `Σ_{n≥1} (−1)ⁿ / (1 + nkα)`.
///
/// Evaluated with the same acceleration as [`alt_constant`]; an integral
/// representation `−∫₀¹ t^{kα}/(1 + t^{kα}) dt` gives the same value and is
/// used as an oracle in the tests.
pub fn g_alt_constant(k: u32, alpha: f64, tol: f64) -> Result<SeriesValue> {
    if k == 0 {
        return Err(BohrError::domain("k must be >= 1"));
    }
    if !(alpha.is_finite() && alpha > 0.0) {
        return Err(BohrError::domain(format!("alpha must be > 0, got {alpha}")));
    }
    let rule = CoefficientRule::new(Coefficients::Lacunary { k, alpha }, 1)?;
    alt_constant(&rule, tol).map(|s| s.affine(-1.0, 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{LN_2, PI};

    fn rule(f: Coefficients, start: u64) -> CoefficientRule {
        CoefficientRule::new(f, start).unwrap()
    }

    // Direct summation, independent of the truncation logic above.
    fn direct(rule: &CoefficientRule, r: f64, terms: u64) -> f64 {
        (0..terms)
            .rev()
            .map(|j| {
                let n = rule.start() + j;
                rule.coefficient(n) * r.powi(n as i32)
            })
            .sum()
    }

    #[test]
    fn power_series_at_zero_is_empty() {
        let s = sum_power_series(&rule(Coefficients::Harmonic { scale: 2.0 }, 2), 0.0, 1e-12).unwrap();
        assert_eq!(s, SeriesValue::exact(0.0));
    }

    #[test]
    fn harmonic_power_series() {
        let rl = rule(Coefficients::Harmonic { scale: 2.0 }, 2);
        let s = sum_power_series(&rl, 0.5, 1e-12).unwrap();
        let closed = 2.0 * (-(0.5f64.ln()) - 0.5);
        assert!(s.error_bound <= 1e-12);
        assert!((s.value - closed).abs() <= s.error_bound + 1e-15);
        assert!((s.value - direct(&rl, 0.5, 200)).abs() <= s.error_bound + 1e-15);
        assert!((s.value - 0.386_294_361_119_890_6).abs() < 1e-12);
    }

    #[test]
    fn telescoping_power_series() {
        let rl = rule(Coefficients::Telescoping { scale: 2.0 }, 2);
        let s = sum_power_series(&rl, 0.5, 1e-12).unwrap();
        let closed = 2.0 * (0.5 + 0.5 * 0.5f64.ln());
        assert!((s.value - closed).abs() <= s.error_bound + 1e-15);
        assert!((s.value - direct(&rl, 0.5, 200)).abs() <= s.error_bound + 1e-15);
        assert!((closed - 0.306_852_819_440_054_7).abs() < 1e-12);
    }

    #[test]
    fn power_series_domain_errors() {
        let rl = rule(Coefficients::Harmonic { scale: 2.0 }, 2);
        assert!(matches!(sum_power_series(&rl, 1.0, 1e-12), Err(BohrError::Domain(_))));
        assert!(matches!(sum_power_series(&rl, -0.1, 1e-12), Err(BohrError::Domain(_))));
        assert!(matches!(sum_power_series(&rl, 0.5, 0.0), Err(BohrError::Domain(_))));
    }

    #[test]
    fn power_series_reports_unreachable_tolerance() {
        let rl = rule(Coefficients::Harmonic { scale: 2.0 }, 2);
        let err = sum_power_series(&rl, R_MAX, 1e-13).unwrap_err();
        assert!(matches!(err, BohrError::Convergence { .. }));
    }

    #[test]
    fn closed_form_tails() {
        assert_eq!(log_tail(0.0).unwrap(), 0.0);
        assert!((log_tail(0.5).unwrap() - 0.193_147_180_559_945_3).abs() < 1e-15);
        assert!((log_tail(0.285194).unwrap() - 0.050_551).abs() < 1e-6);
        assert!(log_tail(1.0).is_err());

        assert_eq!(alt_log_tail(0.0).unwrap(), 0.0);
        assert!((alt_log_tail(1.0).unwrap() - (LN_2 - 1.0)).abs() < 1e-15);
        assert!((alt_log_tail(0.5).unwrap() - (-0.094_534_891_891_835_6)).abs() < 1e-15);

        assert_eq!(nn1_tail(0.0).unwrap(), 0.0);
        assert_eq!(nn1_tail(1.0).unwrap(), 1.0);
        assert!((alt_nn1_tail(1.0).unwrap() - (1.0 - 4f64.ln())).abs() < 1e-15);
        assert!(nn1_tail(1.5).is_err());
    }

    #[test]
    fn closed_forms_match_partial_sums() {
        let families = [
            (Coefficients::Harmonic { scale: 1.0 }, 2u64),
            (Coefficients::Telescoping { scale: 1.0 }, 2),
        ];
        for r in [0.1f64, 0.5, 0.9] {
            for &n_terms in &[10u64, 100, 1000] {
                for (idx, &(fam, start)) in families.iter().enumerate() {
                    let rl = rule(fam, start);
                    let last = start + n_terms - 1;
                    let omitted = rl.coefficient(last + 1) * r.powi((last + 1) as i32);
                    let partial = direct(&rl, r, n_terms);
                    let closed = if idx == 0 { log_tail(r) } else { nn1_tail(r) }.unwrap();
                    assert!((closed - partial).abs() <= omitted / (1.0 - r) + 1e-15);
                    // alternating variants: first omitted term bounds the error
                    let alt_partial: f64 = (0..n_terms)
                        .map(|j| {
                            let n = start + j;
                            let s = if n % 2 == 1 { 1.0 } else { -1.0 };
                            s * rl.coefficient(n) * r.powi(n as i32)
                        })
                        .sum();
                    let alt_closed = if idx == 0 { alt_log_tail(r) } else { alt_nn1_tail(r) }.unwrap();
                    assert!((alt_closed - alt_partial).abs() <= omitted / (1.0 - r) + 1e-15);
                }
            }
        }
    }

    #[test]
    fn alternating_constants() {
        let s = alt_constant(&rule(Coefficients::Harmonic { scale: 2.0 }, 2), 1e-12).unwrap();
        assert!((s.value - 2.0 * (LN_2 - 1.0)).abs() <= s.error_bound + 1e-15);
        assert!((s.value + 0.613_705_638_880_109_4).abs() < 1e-12);

        let s = alt_constant(&rule(Coefficients::InverseSquare { scale: 2.0 }, 2), 1e-12).unwrap();
        assert!((s.value - 2.0 * (PI * PI / 12.0 - 1.0)).abs() <= s.error_bound + 1e-15);

        let s = alt_constant(&rule(Coefficients::Telescoping { scale: 2.0 }, 2), 1e-12).unwrap();
        assert!((s.value - 2.0 * (1.0 - 4f64.ln())).abs() <= s.error_bound + 1e-15);
        assert!((s.value + 0.772_588_722_239_781).abs() < 1e-12);
    }

    #[test]
    fn alternating_constant_preconditions() {
        let constant = rule(Coefficients::Constant { value: 1.0 }, 2);
        assert!(matches!(
            alt_constant(&constant, 1e-12),
            Err(BohrError::Precondition(_))
        ));
        let flat = rule(Coefficients::ShiftedLinear { alpha: 0.0 }, 2);
        assert!(matches!(alt_constant(&flat, 1e-12), Err(BohrError::Precondition(_))));
    }

    #[test]
    fn alternating_constant_is_cheap_for_slow_rules() {
        let rl = rule(Coefficients::Lacunary { k: 1, alpha: 1e-3 }, 1);
        let s = alt_constant(&rl, 1e-12).unwrap();
        assert!(s.error_bound <= 1e-12);
    }

    #[test]
    fn g_constants() {
        let s = g_alt_constant(1, 1.0, 1e-13).unwrap();
        assert!((s.value - (LN_2 - 1.0)).abs() <= s.error_bound + 1e-15);
        let s = g_alt_constant(2, 1.0, 1e-13).unwrap();
        assert!((s.value - (PI / 4.0 - 1.0)).abs() <= s.error_bound + 1e-15);
        let s = g_alt_constant(1, 1e12, 1e-13).unwrap();
        assert!(s.value.abs() < 1e-12);
        assert!(g_alt_constant(1, 0.0, 1e-12).is_err());
        assert!(g_alt_constant(0, 1.0, 1e-12).is_err());
    }

    #[test]
    fn alternating_power_series_matches_closed_form() {
        let rl = rule(Coefficients::Harmonic { scale: 1.0 }, 2);
        for &r in &[0.0, 0.3, 0.9, 1.0] {
            let s = sum_alternating_power_series(&rl, r, 1e-13).unwrap();
            assert!((s.value - alt_log_tail(r).unwrap()).abs() <= s.error_bound + 1e-15);
        }
    }

    #[test]
    fn derivative_series_matches_closed_form() {
        // d/dr Σ 2rⁿ/n = 2r/(1−r)
        let rl = rule(Coefficients::Harmonic { scale: 2.0 }, 2);
        for &r in &[0.1, 0.5, 0.9] {
            let d = sum_derivative_series(&rl, r, 1e-12).unwrap();
            assert!((d.value - 2.0 * r / (1.0 - r)).abs() <= d.error_bound + 1e-14);
        }
    }

    #[test]
    fn rule_validation() {
        assert!(CoefficientRule::new(Coefficients::Telescoping { scale: 1.0 }, 1).is_err());
        assert!(CoefficientRule::new(Coefficients::Harmonic { scale: -1.0 }, 2).is_err());
        assert!(CoefficientRule::new(Coefficients::Harmonic { scale: 1.0 }, 0).is_err());
        assert!(CoefficientRule::new(Coefficients::Lacunary { k: 0, alpha: 1.0 }, 1).is_err());
        assert!(CoefficientRule::new(Coefficients::MixedQuadratic { alpha: f64::NAN }, 2).is_err());
    }
}
