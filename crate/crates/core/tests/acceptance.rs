//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::f64::consts::LN_2;
use std::time::{Duration, Instant};

use bohr_core::classes::ph_m_upper_bound;
use bohr_core::suite::{self, SuiteFilter, PUBLISHED_WH_ALPHA_ONE_RADIUS};
use bohr_core::verify;
use bohr_core::{closed_form_radius, jacobian_radius, solve_radius, ClassSpec, ClassTag, SolverConfig};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn radius(spec: ClassSpec) -> Result<bohr_core::RadiusResult, String> {
    solve_radius(spec, &SolverConfig::default()).map_err(|e| e.to_string())
}

fn bisection_radius(spec: ClassSpec) -> Result<f64, String> {
    solve_radius(spec, &SolverConfig::bisection())
        .map(|r| r.radius)
        .map_err(|e| e.to_string())
}

fn c1_ph_alpha_zero() -> Outcome {
    let start = Instant::now();
    let res = radius(ClassSpec::PhAlpha { alpha: 0.0 })?;
    let elapsed = start.elapsed();
    ensure(
        (res.radius - 0.285194).abs() <= 1e-4 && res.residual <= 1e-10 && elapsed < Duration::from_secs(1),
        format!("r={:.12} residual={:.1e} time={elapsed:?}", res.radius, res.residual),
    )
}

fn c2_wh_alpha_zero() -> Outcome {
    let a = radius(ClassSpec::PhAlpha { alpha: 0.0 })?.radius;
    let b = radius(ClassSpec::WhAlpha { alpha: 0.0 })?.radius;
    ensure(
        (a - b).abs() <= 1e-9,
        format!("ph={a:.15} wh={b:.15} diff={:.1e}", (a - b).abs()),
    )
}

fn c3_gh_one_one() -> Outcome {
    let a = radius(ClassSpec::PhAlpha { alpha: 0.0 })?.radius;
    let b = radius(ClassSpec::GhKAlpha { k: 1, alpha: 1.0 })?.radius;
    ensure(
        (a - b).abs() <= 1e-9,
        format!("ph={a:.15} gh={b:.15} diff={:.1e}", (a - b).abs()),
    )
}

fn c4_gt_beta() -> Outcome {
    let mut worst = 0.0f64;
    for i in 0..10 {
        let spec = ClassSpec::GtBeta {
            beta: f64::from(i) * 0.05,
        };
        let closed = closed_form_radius(&spec).ok_or("no closed form")?;
        worst = worst.max((closed - bisection_radius(spec)?).abs());
    }
    let zero = closed_form_radius(&ClassSpec::GtBeta { beta: 0.0 });
    ensure(
        worst <= 1e-10 && zero == Some(0.0),
        format!("max |closed - bisection|={worst:.1e}, beta=0 radius={zero:?}"),
    )
}

fn c5_tb_m() -> Outcome {
    let mut worst = 0.0f64;
    for i in 1..=19 {
        let m = f64::from(i) / 10.0;
        let r = closed_form_radius(&ClassSpec::TbM { m }).ok_or("no closed form")?;
        worst = worst.max((m * r * r + 2.0 * r + (m - 2.0)).abs());
    }
    let r1 = closed_form_radius(&ClassSpec::TbM { m: 1.0 }).ok_or("no closed form")?;
    let d1 = (r1 - (2f64.sqrt() - 1.0)).abs();
    ensure(
        worst <= 1e-12 && d1 <= 1e-12,
        format!("max residual={worst:.1e}, |r(1) - (sqrt2-1)|={d1:.1e}"),
    )
}

fn c6_jacobian() -> Outcome {
    let mut worst = 0.0f64;
    for i in 1..=19 {
        let m = f64::from(i) / 10.0;
        let j = jacobian_radius(m).map_err(|e| e.to_string())?;
        let half = closed_form_radius(&ClassSpec::TbM { m }).ok_or("no closed form")? / 2.0;
        worst = worst.max((j - half).abs());
    }
    ensure(worst <= 1e-15, format!("max diff={worst:.1e} over M=0.1..1.9"))
}

fn c7_sharpness() -> Outcome {
    let mut worst = (0.0f64, String::new());
    let mut count = 0;
    for tag in ClassTag::ALL {
        for spec in tag.standard_grid() {
            let rep = verify::sharpness_check(&spec, 1e-9).map_err(|e| format!("{spec}: {e}"))?;
            count += 1;
            if rep.gap >= worst.0 {
                worst = (rep.gap, spec.to_string());
            }
        }
    }
    ensure(
        worst.0 <= 1e-9,
        format!("{count} specs, max gap={:.1e} ({})", worst.0, worst.1),
    )
}

fn c8_distance_oracle() -> Outcome {
    let start = Instant::now();
    let spec = ClassSpec::PhAlpha { alpha: 0.3 };
    let d = 1.0 + 1.4 * (LN_2 - 1.0);
    let mut errs = Vec::new();
    for rho in [0.9, 0.99, 0.999] {
        let est = verify::distance_oracle(&spec, rho, 720, 100_000).map_err(|e| e.to_string())?;
        errs.push((est.value - d).abs());
    }
    let elapsed = start.elapsed();
    ensure(
        errs[2] <= 5e-3 && errs.windows(2).all(|w| w[1] < w[0]) && elapsed < Duration::from_secs(30),
        format!(
            "|min - d*| = {:.2e}, {:.2e}, {:.2e}; time={elapsed:?}",
            errs[0], errs[1], errs[2]
        ),
    )
}

fn c9_wh_alpha_one() -> Outcome {
    let res = radius(ClassSpec::WhAlpha { alpha: 1.0 })?;
    let dilog = suite::wh_alpha_one_residual_by_dilog(res.radius);
    let agrees = (res.radius - PUBLISHED_WH_ALPHA_ONE_RADIUS).abs() <= 1e-6;
    ensure(
        res.residual <= 1e-10 && dilog <= 1e-10,
        format!(
            "computed root={:.10} published={PUBLISHED_WH_ALPHA_ONE_RADIUS} -> {}; residual={:.1e} (dilog form {dilog:.1e})",
            res.radius,
            if agrees { "AGREES" } else { "DISAGREES" },
            res.residual
        ),
    )
}

fn c10_ph_m_domain() -> Outcome {
    let bound = ph_m_upper_bound();
    let accepted = |m: f64| ClassSpec::PhM { m }.validate().is_ok();
    let boundary_ok = accepted(1.29) && accepted(bound - 1e-12) && !accepted(bound) && !accepted(bound + 1e-12);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = bohr_core::cli::run(["bohr", "radius", "--class", "ph-m", "--m", "1.3"], &mut out, &mut err);
    let message = String::from_utf8_lossy(&err).trim().to_string();
    ensure(
        boundary_ok && code == 2 && out.is_empty() && message.contains("1.294350"),
        format!("bound={bound:.12}; M=1.3 -> exit {code}: {message}"),
    )
}

fn c11_property_suites() -> Outcome {
    let start = Instant::now();
    let results = suite::run_suite(&SuiteFilter::default());
    let elapsed = start.elapsed();
    let failed: Vec<String> = results
        .iter()
        .filter(|r| !r.passed)
        .map(|r| format!("[{}] {}", r.group, r.name))
        .collect();
    let groups = ["monotonicity", "bohr-sum", "series"];
    let covered = groups.iter().all(|g| results.iter().any(|r| r.group == *g));
    ensure(
        failed.is_empty() && covered && elapsed < Duration::from_secs(120),
        format!(
            "{} checks, {} failed {:?}; time={elapsed:?}",
            results.len(),
            failed.len(),
            failed
        ),
    )
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("1 ph-alpha alpha=0 radius", c1_ph_alpha_zero),
        ("2 wh-alpha alpha=0 equals ph-alpha alpha=0", c2_wh_alpha_zero),
        ("3 gh-k-alpha k=1 alpha=1 equals ph-alpha alpha=0", c3_gh_one_one),
        ("4 gt-beta closed form vs bisection", c4_gt_beta),
        ("5 tb-m quadratic", c5_tb_m),
        ("6 jacobian radius is half", c6_jacobian),
        ("7 sharpness on standard grids", c7_sharpness),
        ("8 distance oracle", c8_distance_oracle),
        ("9 wh-alpha alpha=1 equation residual", c9_wh_alpha_one),
        ("10 ph-m domain", c10_ph_m_domain),
        ("11 property suites and full verify", c11_property_suites),
    ];
    let mut failures = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failures += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    println!("{} criteria, {failures} failed", criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
