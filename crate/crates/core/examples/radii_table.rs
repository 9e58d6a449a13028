// Bohr radius of every class on its standard parameter grid.
//
// Run with `cargo run --example radii_table`.

use bohr_core::{solve_radius, ClassSpec, ClassTag, RadiusResult, SolverConfig};

pub fn run_example() -> bohr_core::Result<Vec<(ClassSpec, RadiusResult)>> {
    let cfg = SolverConfig::default();
    let mut rows = Vec::new();
    for tag in ClassTag::ALL {
        for spec in tag.standard_grid() {
            rows.push((spec, solve_radius(spec, &cfg)?));
        }
    }
    Ok(rows)
}

fn main() -> bohr_core::Result<()> {
    println!("{:<28} {:>16} {:>10} method", "class", "radius", "residual");
    for (spec, res) in run_example()? {
        println!(
            "{:<28} {:>16.12} {:>10.1e} {}",
            spec.to_string(),
            res.radius,
            res.residual,
            res.method
        );
    }
    Ok(())
}
