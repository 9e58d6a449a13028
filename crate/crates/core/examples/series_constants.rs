// Alternating constants and closed-form tails from the series engine.
//
// Run with `cargo run --example series_constants`.

use bohr_core::series::{self, CoefficientRule, Coefficients};

/// `(label, value, error bound)` for each constant.
pub fn run_example() -> bohr_core::Result<Vec<(String, f64, f64)>> {
    let mut rows = Vec::new();
    let harmonic = CoefficientRule::new(Coefficients::Harmonic { scale: 2.0 }, 2)?;
    let s = series::alt_constant(&harmonic, 1e-13)?;
    rows.push(("sum (-1)^(n-1) 2/n, n>=2".to_string(), s.value, s.error_bound));
    for alpha in [0.0, 0.5, 1.0] {
        let rule = CoefficientRule::new(Coefficients::MixedQuadratic { alpha }, 2)?;
        let s = series::alt_constant(&rule, 1e-13)?;
        rows.push((format!("mixed quadratic alpha={alpha}"), s.value, s.error_bound));
    }
    for (k, alpha) in [(1, 1.0), (2, 1.0), (3, 0.5)] {
        let s = series::g_alt_constant(k, alpha, 1e-13)?;
        rows.push((format!("g(k={k}, alpha={alpha})"), s.value, s.error_bound));
    }
    let r = 0.285194;
    rows.push((format!("-ln(1-r) - r at r={r}"), series::log_tail(r)?, 0.0));
    rows.push(("r - (1+r)ln(1+r) at r=1".to_string(), series::alt_nn1_tail(1.0)?, 0.0));
    Ok(rows)
}

fn main() -> bohr_core::Result<()> {
    for (label, value, err) in run_example()? {
        println!("{label:<40} {value:>20.15} ± {err:.1e}");
    }
    Ok(())
}
