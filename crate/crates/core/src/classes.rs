//! The six harmonic-mapping classes as data.
//!
//! Each class contributes a parameter domain, a sharp bound `cₙ` on
//! `|aₙ| + |bₙ|`, the lower bound `d*` on the distance from `f(0)` to the
//! boundary of `f(𝔻)`, a Bohr sum `r + Σ cₙ rⁿ`, a growth envelope for
//! `|f(z)|`, and the coefficients of the extremal function that makes all
//! of these sharp.

use std::f64::consts::{LN_2, PI};
use std::fmt;

use crate::error::{BohrError, Result};
use crate::series::{self, CoefficientRule, Coefficients, SeriesValue};

/// Upper end of the admissible `M` range for [`ClassSpec::PhM`]:
/// `1 / (2(ln 4 − 1))`.
pub fn ph_m_upper_bound() -> f64 {
    1.0 / (2.0 * (4f64.ln() - 1.0))
}

/// Which class a [`ClassSpec`] belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassTag {
    PhAlpha,
    GtBeta,
    WhAlpha,
    GhKAlpha,
    TbM,
    PhM,
}

impl ClassTag {
    pub const ALL: [ClassTag; 6] = [
        ClassTag::PhAlpha,
        ClassTag::GtBeta,
        ClassTag::WhAlpha,
        ClassTag::GhKAlpha,
        ClassTag::TbM,
        ClassTag::PhM,
    ];

    /// Command-line spelling.
    pub fn name(self) -> &'static str {
        match self {
            ClassTag::PhAlpha => "ph-alpha",
            ClassTag::GtBeta => "gt-beta",
            ClassTag::WhAlpha => "wh-alpha",
            ClassTag::GhKAlpha => "gh-k-alpha",
            ClassTag::TbM => "tb-m",
            ClassTag::PhM => "ph-m",
        }
    }

    pub fn from_name(name: &str) -> Option<ClassTag> {
        ClassTag::ALL.into_iter().find(|t| t.name() == name)
    }

    /// Standard parameter grid used by the verification suite.
    pub fn standard_grid(self) -> Vec<ClassSpec> {
        let steps = |lo: f64, step: f64, count: usize| -> Vec<f64> {
            (0..count).map(|i| round12(lo + step * i as f64)).collect()
        };
        match self {
            ClassTag::PhAlpha => steps(0.0, 0.1, 10)
                .into_iter()
                .map(|alpha| ClassSpec::PhAlpha { alpha })
                .collect(),
            ClassTag::GtBeta => steps(0.0, 0.05, 10)
                .into_iter()
                .map(|beta| ClassSpec::GtBeta { beta })
                .collect(),
            ClassTag::WhAlpha => steps(0.0, 0.25, 5)
                .into_iter()
                .map(|alpha| ClassSpec::WhAlpha { alpha })
                .collect(),
            ClassTag::GhKAlpha => {
                let mut out = Vec::new();
                for k in 1..=3 {
                    for alpha in [0.5, 1.0, 2.0, 4.0] {
                        out.push(ClassSpec::GhKAlpha { k, alpha });
                    }
                }
                out
            }
            ClassTag::TbM => steps(0.1, 0.1, 19).into_iter().map(|m| ClassSpec::TbM { m }).collect(),
            ClassTag::PhM => [0.1, 0.3, 0.5, 0.7, 0.9, 1.1, 1.29]
                .into_iter()
                .map(|m| ClassSpec::PhM { m })
                .collect(),
        }
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Largest error bound [`ClassSpec::distance_bound`] accepts in place of an
/// unattainable tolerance.
pub const DISTANCE_TOL_FLOOR_CAP: f64 = 1e-11;

/// Rounds to 12 significant digits so that grid points like `3 × 0.1` print
/// and compare as `0.3`.
pub fn round12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

/// A class together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClassSpec {
    /// `P⁰_H(α)`: `Re(h′ − α) > |g′|`, `0 ≤ α < 1`.
    PhAlpha { alpha: f64 },
    /// `G̃⁰_H(β)`: `Re(h/z) − β > |g/z|`, `0 ≤ β < 1/2`.
    GtBeta { beta: f64 },
    /// `W⁰_H(α)`: `Re(h′ + αzh″) > |g′ + αzg″|`, `0 ≤ α ≤ 1`.
    WhAlpha { alpha: f64 },
    /// `Gᵏ_H(α)`: k-fold vanishing at the origin, `k ≥ 1`, `α > 0`.
    GhKAlpha { k: u32, alpha: f64 },
    /// `T_{B⁰_H(M)}`: `Σ n(n−1)(|aₙ| + |bₙ|) ≤ M`, `0 < M < 2`.
    TbM { m: f64 },
    /// `P⁰_H(M)`: `Re(zh″) > −M + |zg″|`, `0 < M < 1/(2(ln 4 − 1))`.
    PhM { m: f64 },
}

/// Sharp bounds on `|f(z)|` at `|z| = r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthEnvelope {
    pub lower: f64,
    pub upper: f64,
    /// Absolute error bound shared by both ends.
    pub error_bound: f64,
}

/// Truncated coefficient table of an extremal function `h + conj(g)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtremalFunction {
    analytic: Vec<f64>,
    co_analytic: Vec<f64>,
    tail_coefficient: f64,
}

impl ExtremalFunction {
    /// `analytic[0] = a₁ = 1`, `co_analytic[0] = b₂`. `tail_coefficient`
    /// bounds every omitted `|aₙ| + |bₙ|`, `n > N`.
    pub fn new(analytic: Vec<f64>, co_analytic: Vec<f64>, tail_coefficient: f64) -> Result<Self> {
        if analytic.is_empty() {
            return Err(BohrError::domain("extremal needs at least a₁"));
        }
        if co_analytic.len() + 1 != analytic.len() {
            return Err(BohrError::domain("co-analytic table must cover b₂..b_N"));
        }
        if tail_coefficient.is_nan() || tail_coefficient < 0.0 {
            return Err(BohrError::domain("tail coefficient must be >= 0"));
        }
        Ok(ExtremalFunction {
            analytic,
            co_analytic,
            tail_coefficient,
        })
    }

    /// Truncation order `N`.
    pub fn truncation(&self) -> usize {
        self.analytic.len()
    }

    /// `a₁, …, a_N`.
    pub fn analytic(&self) -> &[f64] {
        &self.analytic
    }

    /// `b₂, …, b_N`.
    pub fn co_analytic(&self) -> &[f64] {
        &self.co_analytic
    }

    pub fn tail_coefficient(&self) -> f64 {
        self.tail_coefficient
    }
}

fn in_range(x: f64, ok: bool, msg: &str) -> Result<()> {
    if x.is_finite() && ok {
        Ok(())
    } else {
        Err(BohrError::validation(format!("{msg} (got {x})")))
    }
}

impl ClassSpec {
    pub fn tag(&self) -> ClassTag {
        match self {
            ClassSpec::PhAlpha { .. } => ClassTag::PhAlpha,
            ClassSpec::GtBeta { .. } => ClassTag::GtBeta,
            ClassSpec::WhAlpha { .. } => ClassTag::WhAlpha,
            ClassSpec::GhKAlpha { .. } => ClassTag::GhKAlpha,
            ClassSpec::TbM { .. } => ClassTag::TbM,
            ClassSpec::PhM { .. } => ClassTag::PhM,
        }
    }

    /// `(name, value)` pairs of the parameters, in a fixed order.
    pub fn params(&self) -> Vec<(&'static str, f64)> {
        match *self {
            ClassSpec::PhAlpha { alpha } | ClassSpec::WhAlpha { alpha } => vec![("alpha", alpha)],
            ClassSpec::GtBeta { beta } => vec![("beta", beta)],
            ClassSpec::GhKAlpha { k, alpha } => vec![("k", f64::from(k)), ("alpha", alpha)],
            ClassSpec::TbM { m } | ClassSpec::PhM { m } => vec![("m", m)],
        }
    }

    /// Checks the parameters against the class's admissible domain.
    pub fn validate(&self) -> Result<()> {
        match *self {
            ClassSpec::PhAlpha { alpha } => {
                in_range(alpha, alpha >= 0.0, "α must be >= 0")?;
                in_range(alpha, alpha < 1.0, "α must be < 1")
            }
            ClassSpec::GtBeta { beta } => {
                in_range(beta, beta >= 0.0, "β must be >= 0")?;
                in_range(beta, beta < 0.5, "β must be < 1/2")
            }
            ClassSpec::WhAlpha { alpha } => {
                in_range(alpha, alpha >= 0.0, "α must be >= 0")?;
                in_range(alpha, alpha <= 1.0, "α must be <= 1")
            }
            ClassSpec::GhKAlpha { k, alpha } => {
                if k < 1 {
                    return Err(BohrError::validation("k must be >= 1 (got 0)"));
                }
                in_range(alpha, alpha > 0.0, "α must be > 0")
            }
            ClassSpec::TbM { m } => {
                in_range(m, m > 0.0, "M must be > 0")?;
                in_range(m, m < 2.0, "M must be < 2")
            }
            ClassSpec::PhM { m } => {
                in_range(m, m > 0.0, "M must be > 0")?;
                in_range(m, m < ph_m_upper_bound(), "M must be < 1/(2(ln 4 - 1)) ≈ 1.294350")
            }
        }
    }

    /// First index of the coefficient sums: `k + 1` for `Gᵏ_H(α)`, else 2.
    pub fn start_index(&self) -> u64 {
        match *self {
            ClassSpec::GhKAlpha { k, .. } => u64::from(k) + 1,
            _ => 2,
        }
    }

    /// Sharp bound `cₙ` on `|aₙ| + |bₙ|` as it enters the Bohr sum.
    ///
    /// For `T_{B⁰_H(M)}` the budget `Σ(|aₙ| + |bₙ|) ≤ M/2` is concentrated
    /// at `n = 2`, so `c₂ = M/2` and every later `cₙ` is zero.
    pub fn coefficient_bound(&self, n: u64) -> Result<f64> {
        if n < self.start_index() {
            return Err(BohrError::domain(format!(
                "n = {n} below start index {}",
                self.start_index()
            )));
        }
        let x = n as f64;
        Ok(match *self {
            ClassSpec::PhAlpha { alpha } => 2.0 * (1.0 - alpha) / x,
            ClassSpec::GtBeta { beta } => 2.0 * (1.0 - beta),
            ClassSpec::WhAlpha { alpha } => 2.0 / (alpha * x * x + x * (1.0 - alpha)),
            ClassSpec::GhKAlpha { alpha, .. } => 2.0 / (1.0 + (x - 1.0) * alpha),
            ClassSpec::TbM { m } => {
                if n == 2 {
                    m / 2.0
                } else {
                    0.0
                }
            }
            ClassSpec::PhM { m } => 2.0 * m / (x * (x - 1.0)),
        })
    }

    /// The coefficient sequence of the Bohr sum as a series-engine rule.
    /// `None` for `T_{B⁰_H(M)}`, whose Bohr sum is a polynomial.
    pub fn bohr_rule(&self) -> Option<CoefficientRule> {
        let (family, start) = match *self {
            ClassSpec::PhAlpha { alpha } => (
                Coefficients::Harmonic {
                    scale: 2.0 * (1.0 - alpha),
                },
                2,
            ),
            ClassSpec::GtBeta { beta } => (
                Coefficients::Constant {
                    value: 2.0 * (1.0 - beta),
                },
                2,
            ),
            ClassSpec::WhAlpha { alpha } => (Coefficients::MixedQuadratic { alpha }, 2),
            ClassSpec::GhKAlpha { k, alpha } => (Coefficients::ShiftedLinear { alpha }, u64::from(k) + 1),
            ClassSpec::TbM { .. } => return None,
            ClassSpec::PhM { m } => (Coefficients::Telescoping { scale: 2.0 * m }, 2),
        };
        CoefficientRule::new(family, start).ok()
    }

    /// `d*`, the lower bound on `d(f(0), ∂f(𝔻))` that the extremal attains.
    ///
    /// For the two series constants a `tol` below the rounding floor of the
    /// acceleration (which grows like `log n / α`) is relaxed to that floor,
    /// provided it is under [`DISTANCE_TOL_FLOOR_CAP`]; the returned error
    /// bound is always the honest one.
    pub fn distance_bound(&self, tol: f64) -> Result<SeriesValue> {
        match self.distance_bound_strict(tol) {
            Err(BohrError::Convergence { achieved, .. }) if achieved <= DISTANCE_TOL_FLOOR_CAP => {
                self.distance_bound_strict(2.0 * achieved)
            }
            other => other,
        }
    }

    fn distance_bound_strict(&self, tol: f64) -> Result<SeriesValue> {
        self.validate()?;
        match *self {
            ClassSpec::PhAlpha { alpha } => Ok(SeriesValue::exact(1.0 + 2.0 * (1.0 - alpha) * (LN_2 - 1.0))),
            ClassSpec::GtBeta { beta } => Ok(SeriesValue::exact(beta)),
            ClassSpec::WhAlpha { alpha } => {
                let rule = CoefficientRule::new(Coefficients::MixedQuadratic { alpha }, 2)?;
                Ok(series::alt_constant(&rule, tol)?.affine(1.0, 1.0))
            }
            ClassSpec::GhKAlpha { k, alpha } => Ok(series::g_alt_constant(k, alpha, 0.5 * tol)?.affine(2.0, 1.0)),
            ClassSpec::TbM { m } => Ok(SeriesValue::exact(1.0 - m / 2.0)),
            ClassSpec::PhM { m } => Ok(SeriesValue::exact(1.0 + 2.0 * m * (1.0 - 4f64.ln()))),
        }
    }

    /// Bohr sum `B(r) = r + Σ cₙ rⁿ`.
    pub fn bohr_sum(&self, r: f64, tol: f64) -> Result<SeriesValue> {
        self.validate()?;
        if !(0.0..1.0).contains(&r) {
            return Err(BohrError::domain(format!("r = {r} outside [0, 1)")));
        }
        match *self {
            ClassSpec::PhAlpha { alpha } => Ok(SeriesValue::exact(r + 2.0 * (1.0 - alpha) * series::log_tail(r)?)),
            ClassSpec::GtBeta { beta } => Ok(SeriesValue::exact(r + 2.0 * (1.0 - beta) * r * r / (1.0 - r))),
            ClassSpec::TbM { m } => Ok(SeriesValue::exact(r + 0.5 * m * r * r)),
            ClassSpec::PhM { m } => Ok(SeriesValue::exact(r + 2.0 * m * series::nn1_tail(r)?)),
            ClassSpec::WhAlpha { .. } | ClassSpec::GhKAlpha { .. } => {
                let rule = self.bohr_rule().expect("series classes carry a rule");
                Ok(series::sum_power_series(&rule, r, tol)?.affine(1.0, r))
            }
        }
    }

    /// A cheap lower bound on `B(r)`, usable arbitrarily close to `r = 1`.
    pub fn bohr_sum_lower_bound(&self, r: f64) -> Result<f64> {
        match *self {
            ClassSpec::WhAlpha { .. } | ClassSpec::GhKAlpha { .. } => {
                let rule = self.bohr_rule().expect("series classes carry a rule");
                Ok(r + series::partial_power_sum(&rule, r, 1_000_000))
            }
            _ => self.bohr_sum(r, 1e-12).map(|s| s.value - s.error_bound),
        }
    }

    /// `B′(r)`, from a closed form where one exists.
    pub fn bohr_sum_derivative(&self, r: f64, tol: f64) -> Result<SeriesValue> {
        if !(0.0..1.0).contains(&r) {
            return Err(BohrError::domain(format!("r = {r} outside [0, 1)")));
        }
        match *self {
            ClassSpec::PhAlpha { alpha } => Ok(SeriesValue::exact(1.0 + 2.0 * (1.0 - alpha) * r / (1.0 - r))),
            ClassSpec::GtBeta { beta } => Ok(SeriesValue::exact(
                1.0 + 2.0 * (1.0 - beta) * r * (2.0 - r) / ((1.0 - r) * (1.0 - r)),
            )),
            ClassSpec::TbM { m } => Ok(SeriesValue::exact(1.0 + m * r)),
            ClassSpec::PhM { m } => Ok(SeriesValue::exact(1.0 - 2.0 * m * (-r).ln_1p())),
            ClassSpec::WhAlpha { .. } | ClassSpec::GhKAlpha { .. } => {
                let rule = self.bohr_rule().expect("series classes carry a rule");
                Ok(series::sum_derivative_series(&rule, r, tol)?.affine(1.0, 1.0))
            }
        }
    }

    /// Lower and upper growth bounds on `|f(z)|` at `|z| = r`.
    pub fn growth_envelope(&self, r: f64, tol: f64) -> Result<GrowthEnvelope> {
        self.validate()?;
        if !(0.0..1.0).contains(&r) {
            return Err(BohrError::domain(format!("r = {r} outside [0, 1)")));
        }
        let exact = |lower: f64, upper: f64| GrowthEnvelope {
            lower,
            upper,
            error_bound: 0.0,
        };
        Ok(match *self {
            ClassSpec::PhAlpha { alpha } => {
                let s = 2.0 * (1.0 - alpha);
                exact(r + s * series::alt_log_tail(r)?, r + s * series::log_tail(r)?)
            }
            ClassSpec::GtBeta { beta } => exact(
                beta * r + (1.0 - beta) * r * (1.0 - r) / (1.0 + r),
                beta * r + (1.0 - beta) * r * (1.0 + r) / (1.0 - r),
            ),
            ClassSpec::WhAlpha { alpha } => {
                let rule = CoefficientRule::new(Coefficients::MixedQuadratic { alpha }, 2)?;
                let up = series::sum_power_series(&rule, r, tol)?;
                let lo = series::sum_alternating_power_series(&rule, r, tol)?;
                GrowthEnvelope {
                    lower: r + lo.value,
                    upper: r + up.value,
                    error_bound: lo.error_bound.max(up.error_bound),
                }
            }
            ClassSpec::GhKAlpha { k, alpha } => {
                // r + 2r Σ_{n≥1} (±1)ⁿ xⁿ/(1 + nkα) with x = rᵏ
                let rule = CoefficientRule::new(Coefficients::Lacunary { k, alpha }, 1)?;
                let x = r.powi(k as i32);
                let up = series::sum_power_series(&rule, x, tol)?;
                let lo = series::sum_alternating_power_series(&rule, x, tol)?;
                GrowthEnvelope {
                    lower: r - 2.0 * r * lo.value,
                    upper: r + 2.0 * r * up.value,
                    error_bound: 2.0 * r * lo.error_bound.max(up.error_bound),
                }
            }
            ClassSpec::TbM { m } => exact(r - 0.5 * m * r * r, r + 0.5 * m * r * r),
            ClassSpec::PhM { m } => exact(
                r + 2.0 * m * series::alt_nn1_tail(r)?,
                r + 2.0 * m * series::nn1_tail(r)?,
            ),
        })
    }

    /// Argument of the point on `|z| = r` where the extremal attains the
    /// lower growth bound: `π` for every class except `Gᵏ_H(α)`, whose
    /// extremal is `k`-fold symmetric and touches at `π/k`.
    pub fn lower_touch_angle(&self) -> f64 {
        match *self {
            ClassSpec::GhKAlpha { k, .. } => PI / f64::from(k),
            _ => PI,
        }
    }

    /// Coefficients of the sharp extremal truncated at `N`; `bₙ = 0`.
    ///
    /// For `Gᵏ_H(α)` only the powers `nk + 1` are present; every other class
    /// has `aₙ = cₙ`.
    pub fn extremal_coefficients(&self, n_max: usize) -> Result<ExtremalFunction> {
        self.validate()?;
        if (n_max as u64) < self.start_index() {
            return Err(BohrError::domain(format!(
                "truncation N = {n_max} below start index {}",
                self.start_index()
            )));
        }
        let mut analytic = Vec::with_capacity(n_max);
        analytic.push(1.0);
        for n in 2..=n_max as u64 {
            let a = match *self {
                ClassSpec::GhKAlpha { k, .. } if (n - 1) % u64::from(k) != 0 => 0.0,
                _ => self.coefficient_bound(n)?,
            };
            analytic.push(a);
        }
        let tail = self.coefficient_bound(n_max as u64 + 1)?;
        ExtremalFunction::new(analytic, vec![0.0; n_max - 1], tail)
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag())?;
        for (name, value) in self.params() {
            write!(f, " {name}={value}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(ClassSpec::PhAlpha { alpha: 0.5 }.validate().is_ok());
        let err = ClassSpec::GtBeta { beta: 0.5 }.validate().unwrap_err();
        assert!(err.to_string().contains("β must be < 1/2"));
        assert!(ClassSpec::PhM { m: 1.3 }.validate().is_err());
        assert!(ClassSpec::PhM { m: 1.29 }.validate().is_ok());
        assert!(ClassSpec::TbM { m: 2.0 }.validate().is_err());
        assert!(ClassSpec::TbM { m: 0.0 }.validate().is_err());
        assert!(ClassSpec::WhAlpha { alpha: 1.0 }.validate().is_ok());
        assert!(ClassSpec::WhAlpha { alpha: 1.01 }.validate().is_err());
        assert!(ClassSpec::GhKAlpha { k: 0, alpha: 1.0 }.validate().is_err());
        assert!(ClassSpec::GhKAlpha { k: 1, alpha: 0.0 }.validate().is_err());
        assert!(ClassSpec::PhAlpha { alpha: f64::NAN }.validate().is_err());
        assert!((ph_m_upper_bound() - 1.294_349_724_781_045).abs() < 1e-12);
    }

    #[test]
    fn coefficient_bounds() {
        assert_eq!(ClassSpec::PhAlpha { alpha: 0.0 }.coefficient_bound(2).unwrap(), 1.0);
        assert!((ClassSpec::WhAlpha { alpha: 1.0 }.coefficient_bound(3).unwrap() - 2.0 / 9.0).abs() < 1e-16);
        assert!((ClassSpec::PhM { m: 1.0 }.coefficient_bound(4).unwrap() - 1.0 / 6.0).abs() < 1e-16);
        assert!(ClassSpec::PhAlpha { alpha: 0.0 }.coefficient_bound(1).is_err());
        assert!(ClassSpec::GhKAlpha { k: 3, alpha: 1.0 }.coefficient_bound(3).is_err());
    }

    #[test]
    fn distance_bounds() {
        let d = ClassSpec::PhAlpha { alpha: 0.0 }.distance_bound(1e-13).unwrap();
        assert!((d.value - (2.0 * LN_2 - 1.0)).abs() < 1e-15);
        assert_eq!(
            ClassSpec::GtBeta { beta: 0.25 }.distance_bound(1e-13).unwrap().value,
            0.25
        );
        assert_eq!(ClassSpec::TbM { m: 1.0 }.distance_bound(1e-13).unwrap().value, 0.5);
        // WH at α = 0 reduces to the PH constant
        let w = ClassSpec::WhAlpha { alpha: 0.0 }.distance_bound(1e-13).unwrap();
        assert!((w.value - d.value).abs() <= w.error_bound + 1e-15);
    }

    #[test]
    fn bohr_sums() {
        assert_eq!(
            ClassSpec::GtBeta { beta: 0.25 }.bohr_sum(0.0, 1e-13).unwrap().value,
            0.0
        );
        let g = ClassSpec::GtBeta { beta: 0.25 }.bohr_sum(0.1, 1e-13).unwrap().value;
        assert!((g - (0.1 + 1.5 * 0.01 / 0.9)).abs() < 1e-15);
        assert!((g - 0.116_666_666_666_666_7).abs() < 1e-15);
        let t = ClassSpec::TbM { m: 1.0 }.bohr_sum(0.4, 1e-13).unwrap().value;
        assert!((t - 0.48).abs() < 1e-15);
        assert!(ClassSpec::TbM { m: 1.0 }.bohr_sum(1.0, 1e-13).is_err());
    }

    #[test]
    fn envelopes() {
        let e = ClassSpec::PhAlpha { alpha: 0.0 }.growth_envelope(0.5, 1e-13).unwrap();
        assert!((e.lower - (0.5 + 2.0 * (1.5f64.ln() - 0.5))).abs() < 1e-15);
        assert!((e.lower - 0.310_930_216_216_328_8).abs() < 1e-12);
        assert!((e.upper - 0.886_294_361_119_890_6).abs() < 1e-12);
        let t = ClassSpec::TbM { m: 1.0 }.growth_envelope(0.5, 1e-13).unwrap();
        assert_eq!((t.lower, t.upper), (0.375, 0.625));
        for tag in ClassTag::ALL {
            for spec in tag.standard_grid() {
                let z = spec.growth_envelope(0.0, 1e-13).unwrap();
                assert_eq!((z.lower, z.upper), (0.0, 0.0));
            }
        }
    }

    #[test]
    fn extremal_tables() {
        let f = ClassSpec::PhAlpha { alpha: 0.5 }.extremal_coefficients(3).unwrap();
        assert_eq!(f.analytic(), &[1.0, 0.5, 1.0 / 3.0]);
        assert_eq!(f.co_analytic(), &[0.0, 0.0]);
        let g = ClassSpec::GhKAlpha { k: 2, alpha: 1.0 }
            .extremal_coefficients(5)
            .unwrap();
        assert_eq!(g.analytic(), &[1.0, 0.0, 2.0 / 3.0, 0.0, 2.0 / 5.0]);
        let t = ClassSpec::TbM { m: 1.0 }.extremal_coefficients(2).unwrap();
        assert_eq!(t.analytic(), &[1.0, 0.5]);
        assert_eq!(t.tail_coefficient(), 0.0);
        assert!(ClassSpec::GhKAlpha { k: 3, alpha: 1.0 }
            .extremal_coefficients(3)
            .is_err());
    }

    #[test]
    fn tags_round_trip() {
        for tag in ClassTag::ALL {
            assert_eq!(ClassTag::from_name(tag.name()), Some(tag));
            for spec in tag.standard_grid() {
                assert!(spec.validate().is_ok(), "{spec}");
                assert_eq!(spec.tag(), tag);
            }
        }
        assert_eq!(ClassTag::from_name("nope"), None);
    }

    #[test]
    fn rounding_grid_points() {
        assert_eq!(round12(0.1 * 3.0), 0.3);
        assert_eq!(round12(0.0), 0.0);
    }
}
