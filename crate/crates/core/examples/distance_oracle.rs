// Minimum of |f(z) - f(0)| on circles approaching the unit circle.
//
// The truncated extremal is evaluated on 720 equally spaced points of
// `|z| = rho`; the minimum tends to the class constant d*.
//
// Run with `cargo run --release --example distance_oracle`.

use bohr_core::verify::{self, OracleEstimate};
use bohr_core::ClassSpec;

pub fn run_example() -> bohr_core::Result<(f64, Vec<OracleEstimate>)> {
    let spec = ClassSpec::PhAlpha { alpha: 0.3 };
    let d = spec.distance_bound(1e-13)?.value;
    let estimates = [0.9, 0.99, 0.999]
        .into_iter()
        .map(|rho| verify::distance_oracle(&spec, rho, 720, 100_000))
        .collect::<bohr_core::Result<Vec<_>>>()?;
    Ok((d, estimates))
}

fn main() -> bohr_core::Result<()> {
    let (d, estimates) = run_example()?;
    println!("d* = {d:.12}");
    for e in estimates {
        println!(
            "rho={:<6} min={:.9} |min - d*|={:.2e} at theta={:.6}",
            e.rho,
            e.value,
            (e.value - d).abs(),
            e.theta_min
        );
    }
    Ok(())
}
