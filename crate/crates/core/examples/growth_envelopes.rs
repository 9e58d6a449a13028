// Growth bounds |f(z)| on circles and the points where the extremal
// attains them.
//
// Run with `cargo run --example growth_envelopes`.

use bohr_core::verify::{self, EnvelopeReport};
use bohr_core::ClassSpec;

pub fn run_example() -> bohr_core::Result<Vec<EnvelopeReport>> {
    [
        ClassSpec::PhAlpha { alpha: 0.5 },
        ClassSpec::GtBeta { beta: 0.25 },
        ClassSpec::WhAlpha { alpha: 0.5 },
        ClassSpec::GhKAlpha { k: 2, alpha: 1.0 },
        ClassSpec::TbM { m: 1.0 },
        ClassSpec::PhM { m: 0.9 },
    ]
    .iter()
    .map(|spec| verify::envelope_check(spec, &[0.2, 0.5, 0.8], 10_000, 1e-10))
    .collect()
}

fn main() -> bohr_core::Result<()> {
    for rep in run_example()? {
        println!("{}", rep.spec);
        for p in &rep.points {
            println!(
                "  r={:.1} lower={:.10} upper={:.10} extremal range=[{:.10}, {:.10}]",
                p.r, p.lower, p.upper, p.circle_min, p.circle_max
            );
        }
    }
    Ok(())
}
