// Jacobian-augmented Bohr inequality on T_B(M): the radius is half the
// plain one.
//
// Run with `cargo run --example jacobian`.

use bohr_core::verify::{self, JacobianReport};
use bohr_core::{closed_form_radius, jacobian_radius, ClassSpec};

/// `(M, plain radius, jacobian radius, containment report)`.
pub type Row = (f64, f64, f64, JacobianReport);

pub fn run_example() -> bohr_core::Result<Vec<Row>> {
    (1..=19)
        .map(|i| {
            let m = f64::from(i) / 10.0;
            let plain = closed_form_radius(&ClassSpec::TbM { m }).expect("closed form");
            let r = jacobian_radius(m)?;
            Ok((m, plain, r, verify::jacobian_containment(m, r)?))
        })
        .collect()
}

fn main() -> bohr_core::Result<()> {
    println!(
        "{:>4} {:>16} {:>16} {:>12}",
        "M", "plain radius", "jacobian radius", "majorant"
    );
    for (m, plain, r, rep) in run_example()? {
        println!("{m:>4.1} {plain:>16.12} {r:>16.12} {:>12.9}", rep.majorant);
    }
    Ok(())
}
