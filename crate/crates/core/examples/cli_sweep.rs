// Drives the `bohr` command line in-process: a parameter sweep as CSV and
// a plot table.
//
// Run with `cargo run --example cli_sweep`.

use bohr_core::cli;

/// Returns `(exit code, stdout)` of each command.
pub fn run_example() -> Vec<(i32, String)> {
    let commands: [&[&str]; 2] = [
        &[
            "bohr",
            "scan",
            "--class",
            "tb-m",
            "--m",
            "0.1:1.9:0.2",
            "--format",
            "csv",
        ],
        &["bohr", "table", "--class", "ph-m", "--m", "0.05:1.25:0.05"],
    ];
    commands
        .iter()
        .map(|args| {
            let (mut out, mut err) = (Vec::new(), Vec::new());
            let code = cli::run(args.iter(), &mut out, &mut err);
            (code, String::from_utf8_lossy(&out).into_owned())
        })
        .collect()
}

fn main() {
    for (code, text) in run_example() {
        print!("{text}");
        println!("(exit {code})\n");
    }
}
