//! The verification suite behind `bohr verify`.
//!
//! Checks are grouped; a group can be selected with `--only` and the
//! class-specific checks can be restricted with `--class`. Every check
//! produces one [`CheckResult`]; a check that errors counts as failed.

use std::f64::consts::{LN_2, PI};

use crate::classes::{ph_m_upper_bound, ClassSpec, ClassTag};
use crate::error::Result;
use crate::series::{self, CoefficientRule, Coefficients};
use crate::solver::{self, SolverConfig, BRACKET_HI};
use crate::verify;

/// Radius reported for `W⁰_H` (`α = 1`) in the literature.
pub const PUBLISHED_WH_ALPHA_ONE_RADIUS: f64 = 0.583_877_65;

/// Radius reported for `P⁰_H(α)` at `α = 0`.
pub const PUBLISHED_PH_ALPHA_ZERO_RADIUS: f64 = 0.285_194;

pub const GROUPS: [&str; 11] = [
    "series",
    "bohr-sum",
    "closed-form",
    "jacobian",
    "cross-class",
    "monotonicity",
    "sharpness",
    "envelope",
    "distance",
    "scan",
    "domain",
];

/// Group name of the `W⁰_H` radius comparison, also accepted by `--only`.
pub const PUBLISHED_GROUP: &str = "published";

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub group: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(group: &'static str, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CheckResult {
            group,
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }

    fn from_result(group: &'static str, name: impl Into<String>, r: Result<(bool, String)>) -> Self {
        match r {
            Ok((passed, detail)) => CheckResult::new(group, name, passed, detail),
            Err(e) => CheckResult::new(group, name, false, format!("error: {e}")),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct SuiteFilter {
    pub class: Option<ClassTag>,
    pub only: Option<Vec<String>>,
}

impl SuiteFilter {
    fn wants_group(&self, group: &str) -> bool {
        self.only.as_ref().is_none_or(|only| only.iter().any(|g| g == group))
    }

    fn wants_class(&self, tag: ClassTag) -> bool {
        self.class.is_none_or(|c| c == tag)
    }

    fn classes(&self) -> Vec<ClassTag> {
        ClassTag::ALL.into_iter().filter(|&t| self.wants_class(t)).collect()
    }
}

/// Names accepted by `--only`.
pub fn known_group(name: &str) -> bool {
    name == PUBLISHED_GROUP || GROUPS.contains(&name)
}

/// Runs every selected check in a fixed order.
pub fn run_suite(filter: &SuiteFilter) -> Vec<CheckResult> {
    type Group = fn(&SuiteFilter) -> Vec<CheckResult>;
    let groups: [(&str, Group); 12] = [
        ("series", series_checks),
        ("bohr-sum", bohr_sum_checks),
        ("closed-form", closed_form_checks),
        ("jacobian", jacobian_checks),
        ("cross-class", cross_class_checks),
        ("monotonicity", monotonicity_checks),
        ("sharpness", sharpness_checks),
        ("envelope", envelope_checks),
        ("distance", distance_checks),
        ("scan", scan_checks),
        ("domain", domain_checks),
        (PUBLISHED_GROUP, published_checks),
    ];
    groups
        .iter()
        .filter(|(name, _)| filter.wants_group(name))
        .flat_map(|(_, run)| run(filter))
        .collect()
}

// Direct summation from the far end; the reference for absolutely
// convergent alternating constants.
fn direct_alternating(rule: &CoefficientRule, terms: u64) -> f64 {
    (0..terms)
        .rev()
        .map(|j| {
            let n = rule.start() + j;
            let s = if n % 2 == 1 { 1.0 } else { -1.0 };
            s * rule.coefficient(n)
        })
        .sum()
}

fn series_checks(filter: &SuiteFilter) -> Vec<CheckResult> {
    const G: &str = "series";
    if filter.class.is_some() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let absolutely_convergent = [
        ("2/n^2", Coefficients::InverseSquare { scale: 2.0 }, 2),
        ("2/(n(n-1))", Coefficients::Telescoping { scale: 2.0 }, 2),
        ("2/(0.5n^2+0.5n)", Coefficients::MixedQuadratic { alpha: 0.5 }, 2),
        ("2/n^2 (alpha=1)", Coefficients::MixedQuadratic { alpha: 1.0 }, 2),
    ];
    for (label, fam, start) in absolutely_convergent {
        out.push(CheckResult::from_result(
            G,
            format!("alt-constant vs 1e6-term sum {label}"),
            (|| {
                let rule = CoefficientRule::new(fam, start)?;
                let acc = series::alt_constant(&rule, 1e-12)?;
                let direct = direct_alternating(&rule, 1_000_000);
                // remainder of the direct sum is below its first omitted term
                let direct_err = rule.coefficient(start + 1_000_000);
                let diff = (acc.value - direct).abs();
                Ok((
                    diff <= 1e-10 && diff <= acc.error_bound + direct_err + 1e-15,
                    format!("accelerated={:.15} direct={:.15} diff={diff:.2e}", acc.value, direct),
                ))
            })(),
        ));
    }
    let exact = [
        ("2/n", Coefficients::Harmonic { scale: 2.0 }, 2.0 * (LN_2 - 1.0)),
        (
            "2/n^2",
            Coefficients::InverseSquare { scale: 2.0 },
            2.0 * (PI * PI / 12.0 - 1.0),
        ),
        (
            "2/(n(n-1))",
            Coefficients::Telescoping { scale: 2.0 },
            2.0 * (1.0 - 4f64.ln()),
        ),
    ];
    for (label, fam, expected) in exact {
        out.push(CheckResult::from_result(
            G,
            format!("alt-constant closed form {label}"),
            (|| {
                let s = series::alt_constant(&CoefficientRule::new(fam, 2)?, 1e-12)?;
                let diff = (s.value - expected).abs();
                Ok((
                    diff <= 1e-10,
                    format!("value={:.15} expected={expected:.15} diff={diff:.2e}", s.value),
                ))
            })(),
        ));
    }
    for (k, alpha, expected) in [(1, 1.0, LN_2 - 1.0), (2, 1.0, PI / 4.0 - 1.0)] {
        out.push(CheckResult::from_result(
            G,
            format!("g-constant k={k} alpha={alpha}"),
            (|| {
                let s = series::g_alt_constant(k, alpha, 1e-12)?;
                let diff = (s.value - expected).abs();
                Ok((diff <= 1e-10, format!("value={:.15} diff={diff:.2e}", s.value)))
            })(),
        ));
    }
    out.push(CheckResult::from_result(
        G,
        "g-constant increases with alpha",
        (|| {
            let mut ok = true;
            for k in 1..=3 {
                let mut prev = f64::NEG_INFINITY;
                for alpha in [0.5, 1.0, 2.0, 4.0] {
                    let v = series::g_alt_constant(k, alpha, 1e-13)?.value;
                    ok &= v > prev && v < 0.0;
                    prev = v;
                }
            }
            Ok((ok, "k in {1,2,3}, alpha in {0.5,1,2,4}".to_string()))
        })(),
    ));
    out
}

/// Bohr sum from the generic engine, or a finite sum for the polynomial class.
fn generic_bohr_sum(spec: &ClassSpec, r: f64, tol: f64) -> Result<(f64, f64)> {
    match spec.bohr_rule() {
        Some(rule) => {
            let s = series::sum_power_series(&rule, r, tol)?;
            Ok((r + s.value, s.error_bound))
        }
        None => Ok((r + spec.coefficient_bound(2)? * r * r, 0.0)),
    }
}

fn bohr_sum_checks(filter: &SuiteFilter) -> Vec<CheckResult> {
    const G: &str = "bohr-sum";
    let mut out = Vec::new();
    for tag in filter.classes() {
        if matches!(tag, ClassTag::WhAlpha | ClassTag::GhKAlpha) {
            continue;
        }
        for spec in tag.standard_grid() {
            out.push(CheckResult::from_result(
                G,
                format!("generic vs closed form {spec}"),
                (|| {
                    let mut worst = 0.0f64;
                    for r in [0.05, 0.1, 0.2, 0.3, 0.5, 0.7, 0.9] {
                        let closed = spec.bohr_sum(r, 1e-13)?.value;
                        let (generic, _) = generic_bohr_sum(&spec, r, 1e-13)?;
                        worst = worst.max((closed - generic).abs());
                    }
                    Ok((worst <= 1e-12, format!("max diff={worst:.2e}")))
                })(),
            ));
        }
    }
    out
}

fn closed_form_checks(filter: &SuiteFilter) -> Vec<CheckResult> {
    const G: &str = "closed-form";
    let mut out = Vec::new();
    let bisect = SolverConfig::bisection();
    for tag in [ClassTag::GtBeta, ClassTag::TbM] {
        if !filter.wants_class(tag) {
            continue;
        }
        for spec in tag.standard_grid() {
            out.push(CheckResult::from_result(
                G,
                format!("closed form vs bisection {spec}"),
                (|| {
                    let closed = solver::closed_form_radius(&spec).expect("class has a closed form");
                    let numeric = solver::solve_radius(spec, &bisect)?.radius;
                    let diff = (closed - numeric).abs();
                    Ok((
                        diff <= 1e-10,
                        format!("closed={closed:.15} bisection={numeric:.15} diff={diff:.2e}"),
                    ))
                })(),
            ));
        }
    }
    if filter.wants_class(ClassTag::GtBeta) {
        let r = solver::closed_form_radius(&ClassSpec::GtBeta { beta: 0.0 });
        out.push(CheckResult::new(
            G,
            "gt-beta beta=0 radius is 0",
            r == Some(0.0),
            format!("{r:?}"),
        ));
    }
    if filter.wants_class(ClassTag::TbM) {
        for spec in ClassTag::TbM.standard_grid() {
            let ClassSpec::TbM { m } = spec else { unreachable!() };
            let r = solver::closed_form_radius(&spec).expect("closed form");
            let residual = (m * r * r + 2.0 * r + (m - 2.0)).abs();
            out.push(CheckResult::new(
                G,
                format!("tb-m quadratic residual m={m}"),
                residual <= 1e-12,
                format!("r={r:.15} residual={residual:.2e}"),
            ));
        }
        let r = solver::closed_form_radius(&ClassSpec::TbM { m: 1.0 }).expect("closed form");
        let diff = (r - (2f64.sqrt() - 1.0)).abs();
        out.push(CheckResult::new(
            G,
            "tb-m m=1 radius is sqrt(2)-1",
            diff <= 1e-12,
            format!("diff={diff:.2e}"),
        ));
    }
    out
}

fn jacobian_checks(filter: &SuiteFilter) -> Vec<CheckResult> {
    const G: &str = "jacobian";
    if !filter.wants_class(ClassTag::TbM) {
        return Vec::new();
    }
    let mut out = Vec::new();
    for spec in ClassTag::TbM.standard_grid() {
        let ClassSpec::TbM { m } = spec else { unreachable!() };
        out.push(CheckResult::from_result(
            G,
            format!("half of tb-m radius m={m}"),
            (|| {
                let j = solver::jacobian_radius(m)?;
                let half = solver::closed_form_radius(&spec).expect("closed form") / 2.0;
                let residual = (4.0 * m * j * j + 4.0 * j + (m - 2.0)).abs();
                let diff = (j - half).abs();
                Ok((
                    diff <= 1e-15 && residual <= 1e-12,
                    format!("r={j:.15} diff={diff:.1e} quadratic residual={residual:.1e}"),
                ))
            })(),
        ));
        out.push(CheckResult::from_result(
            G,
            format!("functional majorant m={m}"),
            (|| {
                let j = solver::jacobian_radius(m)?;
                let mut ok = true;
                for r in [0.25 * j, 0.5 * j, j] {
                    let rep = verify::jacobian_containment(m, r)?;
                    ok &= rep.passed && rep.majorant <= 1.0 - m / 2.0 + 1e-15;
                }
                let at_root = solver::jacobian_functional(m, j)?;
                let gap = (at_root - (1.0 - m / 2.0)).abs();
                Ok((
                    ok && gap <= 1e-14,
                    format!("2Mr^2+2r at root minus (1-M/2) = {gap:.1e}"),
                ))
            })(),
        ));
    }
    out
}

fn cross_class_checks(filter: &SuiteFilter) -> Vec<CheckResult> {
    const G: &str = "cross-class";
    let involved = [ClassTag::PhAlpha, ClassTag::WhAlpha, ClassTag::GhKAlpha];
    if !involved.iter().any(|&t| filter.wants_class(t)) {
        return Vec::new();
    }
    let cfg = SolverConfig::default();
    let ph = ClassSpec::PhAlpha { alpha: 0.0 };
    let wh = ClassSpec::WhAlpha { alpha: 0.0 };
    let gh = ClassSpec::GhKAlpha { k: 1, alpha: 1.0 };
    let mut out = Vec::new();
    out.push(CheckResult::from_result(
        G,
        "radii of ph-alpha(0), wh-alpha(0), gh-k-alpha(1,1)",
        (|| {
            let a = solver::solve_radius(ph, &cfg)?.radius;
            let b = solver::solve_radius(wh, &cfg)?.radius;
            let c = solver::solve_radius(gh, &cfg)?.radius;
            let spread = (a - b).abs().max((a - c).abs());
            Ok((spread <= 1e-9, format!("{a:.15} {b:.15} {c:.15} spread={spread:.1e}")))
        })(),
    ));
    out.push(CheckResult::from_result(
        G,
        "coefficient bounds reduce to 2/n",
        (|| {
            let mut ok = true;
            for n in 2..=60 {
                let base = ph.coefficient_bound(n)?;
                ok &= (wh.coefficient_bound(n)? - base).abs() <= 1e-16;
                ok &= (gh.coefficient_bound(n)? - base).abs() <= 1e-16;
                ok &= (base - 2.0 / n as f64).abs() <= 1e-16;
            }
            Ok((ok, "n = 2..60".to_string()))
        })(),
    ));
    out
}

// Sign of H(r) without summing the whole series when a short partial sum
// already exceeds d*.
fn sign_of_h(spec: &ClassSpec, eq: &solver::BohrEquation, r: f64) -> Result<f64> {
    if let Some(rule) = spec.bohr_rule() {
        let quick = r + series::partial_power_sum(&rule, r, 64) - eq.d_star().value - eq.d_star().error_bound;
        if quick > 0.0 {
            return Ok(1.0);
        }
    }
    let h = eq.value(r)?.value;
    Ok(if h > 0.0 {
        1.0
    } else if h < 0.0 {
        -1.0
    } else {
        0.0
    })
}

fn monotonicity_checks(filter: &SuiteFilter) -> Vec<CheckResult> {
    const G: &str = "monotonicity";
    let cfg = SolverConfig::default();
    let mut out = Vec::new();
    for tag in filter.classes() {
        for spec in tag.standard_grid() {
            out.push(CheckResult::from_result(
                G,
                format!("H strictly increasing {spec}"),
                (|| {
                    let eq = solver::build_equation(spec, &cfg)?;
                    let mut prev: Option<crate::series::SeriesValue> = None;
                    let mut ok = true;
                    for i in 1..=100 {
                        let r = 0.95 * i as f64 / 100.0;
                        let h = eq.value(r)?;
                        if let Some(p) = prev {
                            ok &= h.value - p.value > h.error_bound + p.error_bound;
                        }
                        prev = Some(h);
                    }
                    Ok((ok, "100 points on (0, 0.95]".to_string()))
                })(),
            ));
            out.push(CheckResult::from_result(
                G,
                format!("single sign change {spec}"),
                (|| {
                    let eq = solver::build_equation(spec, &cfg)?;
                    let mut changes = 0;
                    let mut prev = sign_of_h(&spec, &eq, 0.0)?;
                    for i in 1..=1000 {
                        let r = BRACKET_HI * i as f64 / 1000.0;
                        let s = sign_of_h(&spec, &eq, r)?;
                        if s != prev && s > 0.0 {
                            changes += 1;
                        }
                        prev = s;
                    }
                    Ok((
                        changes == 1 && prev > 0.0,
                        format!("{changes} sign change(s) on 1000 points"),
                    ))
                })(),
            ));
        }
    }
    let sweeps: [(ClassTag, Vec<ClassSpec>, bool); 3] = [
        (
            ClassTag::PhAlpha,
            [0.0, 0.2, 0.4, 0.6, 0.8]
                .map(|alpha| ClassSpec::PhAlpha { alpha })
                .to_vec(),
            true,
        ),
        (ClassTag::TbM, ClassTag::TbM.standard_grid(), false),
        (ClassTag::PhM, ClassTag::PhM.standard_grid(), false),
    ];
    for (tag, specs, increasing) in sweeps {
        if !filter.wants_class(tag) {
            continue;
        }
        let dir = if increasing { "nondecreasing" } else { "nonincreasing" };
        out.push(CheckResult::from_result(
            G,
            format!("{tag} radius {dir} in parameter"),
            (|| {
                let radii = specs
                    .iter()
                    .map(|s| solver::solve_radius(*s, &cfg).map(|r| r.radius))
                    .collect::<Result<Vec<_>>>()?;
                let ok = radii
                    .windows(2)
                    .all(|w| if increasing { w[1] >= w[0] } else { w[1] <= w[0] });
                let shown: Vec<String> = radii.iter().map(|r| format!("{r:.6}")).collect();
                Ok((ok, shown.join(" ")))
            })(),
        ));
    }
    out
}

fn sharpness_checks(filter: &SuiteFilter) -> Vec<CheckResult> {
    const G: &str = "sharpness";
    let mut out = Vec::new();
    for tag in filter.classes() {
        for spec in tag.standard_grid() {
            let tol = verify::sharpness_tolerance(&spec);
            out.push(CheckResult::from_result(
                G,
                format!("B(r_f) = d* {spec}"),
                (|| {
                    let rep = verify::sharpness_check(&spec, tol)?;
                    Ok((
                        rep.passed,
                        format!(
                            "r_f={:.12} d*={:.12} gap={:.1e} tol={tol:.0e}",
                            rep.radius, rep.d_star, rep.gap
                        ),
                    ))
                })(),
            ));
        }
    }
    out
}

fn envelope_checks(filter: &SuiteFilter) -> Vec<CheckResult> {
    const G: &str = "envelope";
    let mut out = Vec::new();
    for tag in filter.classes() {
        for spec in tag.standard_grid() {
            out.push(CheckResult::from_result(
                G,
                format!("extremal touches envelope {spec}"),
                (|| {
                    let rep = verify::envelope_check(&spec, &[0.1, 0.3, 0.5, 0.7], 4000, 1e-10)?;
                    let worst = rep
                        .points
                        .iter()
                        .map(|p| {
                            (p.lower - p.at_lower_touch)
                                .abs()
                                .max((p.upper - p.at_upper_touch).abs())
                        })
                        .fold(0.0f64, f64::max);
                    Ok((rep.passed, format!("max touch gap={worst:.1e}")))
                })(),
            ));
        }
    }
    out
}

/// One extremal per class for the circle-minimum oracle.
pub fn distance_representatives() -> [ClassSpec; 6] {
    [
        ClassSpec::PhAlpha { alpha: 0.3 },
        ClassSpec::GtBeta { beta: 0.25 },
        ClassSpec::WhAlpha { alpha: 1.0 },
        ClassSpec::GhKAlpha { k: 2, alpha: 1.0 },
        ClassSpec::TbM { m: 1.0 },
        ClassSpec::PhM { m: 1.0 },
    ]
}

/// True when `theta` is an odd multiple of `π/k`, i.e. a rotation of the
/// lower touch point of a `k`-fold symmetric extremal.
fn is_touch_angle(spec: &ClassSpec, theta: f64, grid: usize) -> bool {
    let base = spec.lower_touch_angle();
    let q = theta / base;
    let nearest_odd = 2.0 * ((q - 1.0) / 2.0).round() + 1.0;
    (theta - nearest_odd * base).abs() <= 0.5 * std::f64::consts::TAU / grid as f64
}

fn distance_checks(filter: &SuiteFilter) -> Vec<CheckResult> {
    const G: &str = "distance";
    let mut out = Vec::new();
    if filter.wants_class(ClassTag::PhAlpha) {
        out.push(CheckResult::from_result(
            G,
            "ph-alpha alpha=0.3 oracle improves with rho",
            (|| {
                let spec = ClassSpec::PhAlpha { alpha: 0.3 };
                let d = spec.distance_bound(1e-13)?.value;
                let mut errs = Vec::new();
                for rho in [0.9, 0.99, 0.999] {
                    let est = verify::distance_oracle(&spec, rho, verify::ORACLE_GRID, verify::ORACLE_TERMS)?;
                    errs.push((est.value - d).abs());
                }
                let ok = errs.windows(2).all(|w| w[1] < w[0]) && errs[2] <= 5e-3;
                Ok((
                    ok,
                    format!("|oracle - d*| = {:.2e}, {:.2e}, {:.2e}", errs[0], errs[1], errs[2]),
                ))
            })(),
        ));
    }
    for spec in distance_representatives() {
        if !filter.wants_class(spec.tag()) {
            continue;
        }
        out.push(CheckResult::from_result(
            G,
            format!("circle minimum near d* {spec}"),
            (|| {
                let d = spec.distance_bound(1e-13)?.value;
                let est =
                    verify::distance_oracle(&spec, verify::ORACLE_RHO, verify::ORACLE_GRID, verify::ORACLE_TERMS)?;
                let err = (est.value - d).abs();
                let touch = is_touch_angle(&spec, est.theta_min, est.grid_size);
                Ok((
                    err <= 5e-3 && touch,
                    format!(
                        "oracle={:.6} d*={d:.6} err={err:.1e} argmin={:.4} (touch angle {:.4})",
                        est.value,
                        est.theta_min,
                        spec.lower_touch_angle()
                    ),
                ))
            })(),
        ));
    }
    out
}

fn scan_checks(filter: &SuiteFilter) -> Vec<CheckResult> {
    const G: &str = "scan";
    let cases = [
        (ClassSpec::PhAlpha { alpha: 0.0 }, 0.5, 500),
        (ClassSpec::GtBeta { beta: 0.0 }, 0.3, 30),
        (ClassSpec::GtBeta { beta: 0.25 }, 0.5, 500),
        (ClassSpec::WhAlpha { alpha: 1.0 }, 0.9, 900),
        (ClassSpec::GhKAlpha { k: 2, alpha: 1.0 }, 0.9, 900),
        (ClassSpec::TbM { m: 1.9 }, 0.2, 2000),
        (ClassSpec::PhM { m: 0.5 }, 0.9, 900),
    ];
    let mut out = Vec::new();
    for (spec, r_max, steps) in cases {
        if !filter.wants_class(spec.tag()) {
            continue;
        }
        out.push(CheckResult::from_result(
            G,
            format!("Bohr inequality fails just past r_f {spec}"),
            (|| {
                let rep = verify::bohr_scan(&spec, r_max, steps)?;
                Ok((
                    rep.consistent,
                    format!(
                        "r_f={:.6} first violation={:?} step={}",
                        rep.radius, rep.first_violation, rep.step
                    ),
                ))
            })(),
        ));
    }
    out
}

fn domain_checks(filter: &SuiteFilter) -> Vec<CheckResult> {
    const G: &str = "domain";
    let mut out = Vec::new();
    if filter.wants_class(ClassTag::PhM) {
        let bound = ph_m_upper_bound();
        for (m, accept) in [
            (0.5, true),
            (1.29, true),
            (bound - 1e-9, true),
            (bound, false),
            (1.3, false),
            (0.0, false),
        ] {
            let ok = ClassSpec::PhM { m }.validate().is_ok();
            out.push(CheckResult::new(
                G,
                format!("ph-m m={m} {}", if accept { "accepted" } else { "rejected" }),
                ok == accept,
                format!("bound 1/(2(ln4-1)) = {bound:.12}"),
            ));
        }
    }
    let others = [
        (ClassSpec::PhAlpha { alpha: 1.0 }, "α must be < 1"),
        (ClassSpec::GtBeta { beta: 0.5 }, "β must be < 1/2"),
        (ClassSpec::WhAlpha { alpha: 1.5 }, "α must be <= 1"),
        (ClassSpec::GhKAlpha { k: 1, alpha: 0.0 }, "α must be > 0"),
        (ClassSpec::TbM { m: 2.0 }, "M must be < 2"),
    ];
    for (spec, msg) in others {
        if !filter.wants_class(spec.tag()) {
            continue;
        }
        let err = spec.validate().err().map(|e| e.to_string()).unwrap_or_default();
        out.push(CheckResult::new(G, format!("{spec} rejected"), err.contains(msg), err));
    }
    out
}

fn published_checks(filter: &SuiteFilter) -> Vec<CheckResult> {
    const G: &str = PUBLISHED_GROUP;
    let mut out = Vec::new();
    if filter.wants_class(ClassTag::PhAlpha) {
        out.push(CheckResult::from_result(
            G,
            "ph-alpha alpha=0 radius",
            (|| {
                let res = solver::solve_radius(ClassSpec::PhAlpha { alpha: 0.0 }, &SolverConfig::default())?;
                let diff = (res.radius - PUBLISHED_PH_ALPHA_ZERO_RADIUS).abs();
                Ok((
                    diff <= 1e-4 && res.residual <= 1e-10,
                    format!(
                        "computed={:.10} published={PUBLISHED_PH_ALPHA_ZERO_RADIUS} residual={:.1e}",
                        res.radius, res.residual
                    ),
                ))
            })(),
        ));
    }
    if filter.wants_class(ClassTag::WhAlpha) {
        out.push(CheckResult::from_result(G, "wh-alpha alpha=1 root of its Bohr equation", (|| {
            let spec = ClassSpec::WhAlpha { alpha: 1.0 };
            let res = solver::solve_radius(spec, &SolverConfig::default())?;
            let agrees = (res.radius - PUBLISHED_WH_ALPHA_ONE_RADIUS).abs() <= 1e-6;
            let check = wh_alpha_one_residual_by_dilog(res.radius);
            Ok((
                res.residual <= 1e-10 && check <= 1e-10,
                format!(
                    "computed={:.10} published={PUBLISHED_WH_ALPHA_ONE_RADIUS} {} residual={:.1e} dilog residual={check:.1e}",
                    res.radius,
                    if agrees { "AGREES" } else { "DISAGREES" },
                    res.residual
                ),
            ))
        })()));
    }
    out
}

/// `|r + 2(Li₂(r) − r) − (π²/6 − 1)|`, the `α = 1` equation written with the
/// dilogarithm. `Li₂` comes from its Taylor series after the reflection
/// `Li₂(r) = π²/6 − ln r·ln(1−r) − Li₂(1−r)` when `r > 1/2`.
pub fn wh_alpha_one_residual_by_dilog(r: f64) -> f64 {
    fn taylor(x: f64) -> f64 {
        let mut sum = 0.0;
        let mut p = x;
        let mut n = 1.0;
        while p / (n * n) > 1e-18 {
            sum += p / (n * n);
            p *= x;
            n += 1.0;
        }
        sum
    }
    let li2 = if r <= 0.5 {
        taylor(r)
    } else {
        PI * PI / 6.0 - r.ln() * (1.0 - r).ln() - taylor(1.0 - r)
    };
    (r + 2.0 * (li2 - r) - (PI * PI / 6.0 - 1.0)).abs()
}
