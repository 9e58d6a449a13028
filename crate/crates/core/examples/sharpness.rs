// The Bohr sum at the computed radius exhausts the distance bound.
//
// Run with `cargo run --example sharpness`.

use bohr_core::verify::{self, SharpnessReport};
use bohr_core::ClassTag;

pub fn run_example() -> bohr_core::Result<Vec<SharpnessReport>> {
    ClassTag::ALL
        .into_iter()
        .flat_map(|tag| tag.standard_grid())
        .map(|spec| verify::sharpness_check(&spec, verify::sharpness_tolerance(&spec)))
        .collect()
}

fn main() -> bohr_core::Result<()> {
    for rep in run_example()? {
        let status = if rep.passed { "ok" } else { "FAILED" };
        println!(
            "{:<28} r_f={:.12} gap={:.1e} {status}",
            rep.spec.to_string(),
            rep.radius,
            rep.gap
        );
    }
    Ok(())
}
