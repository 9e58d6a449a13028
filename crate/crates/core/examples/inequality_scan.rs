// Scans r and reports where the Bohr inequality stops holding.
//
// Run with `cargo run --example inequality_scan`.

use bohr_core::verify::{self, ScanReport};
use bohr_core::ClassSpec;

pub fn run_example() -> bohr_core::Result<Vec<ScanReport>> {
    [
        (ClassSpec::PhAlpha { alpha: 0.0 }, 0.5, 500),
        (ClassSpec::WhAlpha { alpha: 1.0 }, 0.9, 900),
        (ClassSpec::TbM { m: 1.9 }, 0.2, 2000),
    ]
    .iter()
    .map(|(spec, r_max, steps)| verify::bohr_scan(spec, *r_max, *steps))
    .collect()
}

fn main() -> bohr_core::Result<()> {
    for rep in run_example()? {
        println!(
            "{:<20} r_f={:.9} first violation at r={:?} (step {})",
            rep.spec.to_string(),
            rep.radius,
            rep.first_violation,
            rep.step
        );
    }
    Ok(())
}
