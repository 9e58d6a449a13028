//! The `bohr` command-line front end.
//!
//! [`run`] takes the argument list and the two output streams explicitly so
//! the whole command surface can be driven from tests. Exit codes: 0 on
//! success, 1 when `verify` has failing checks, 2 for invalid input, 3 when
//! a computation does not converge.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classes::{round12, ClassSpec, ClassTag};
use crate::error::BohrError;
use crate::solver::{self, SolverConfig};
use crate::suite::{self, SuiteFilter};
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CONVERGENCE: i32 = 3;

/// Largest number of points a `lo:hi:step` grid may expand to.
pub const MAX_GRID_POINTS: usize = 100_000;

pub const CSV_HEADER: &str = "class,param_name,param_value,radius,residual,method";

#[derive(Debug, Parser)]
#[command(name = "bohr", version, about = "Sharp Bohr radii for classes of harmonic mappings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute the Bohr radius for one parameter choice.
    Radius {
        #[command(flatten)]
        class: ClassArgs,
        #[command(flatten)]
        solver: SolverArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Sweep one parameter over a `lo:hi:step` grid, or scan the Bohr
    /// inequality in r with --r-max/--steps.
    Scan {
        #[command(flatten)]
        class: ClassArgs,
        #[command(flatten)]
        solver: SolverArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Upper end of the r grid for an inequality scan.
        #[arg(long, requires = "steps")]
        r_max: Option<f64>,
        /// Number of r intervals for an inequality scan.
        #[arg(long, requires = "r_max")]
        steps: Option<usize>,
    },
    /// Run the verification suite.
    Verify {
        /// Restrict class-specific checks to one class.
        #[arg(long)]
        class: Option<String>,
        /// Run only the named check groups (comma separated or repeated).
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
    },
    /// Emit a two-column `parameter,radius` CSV for plotting.
    Table {
        #[command(flatten)]
        class: ClassArgs,
        #[command(flatten)]
        solver: SolverArgs,
    },
}

#[derive(Debug, Args)]
struct ClassArgs {
    /// ph-alpha, gt-beta, wh-alpha, gh-k-alpha, tb-m, tb-m-jacobian or ph-m.
    #[arg(long)]
    class: String,
    /// Value or `lo:hi:step` grid.
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    m: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    k: Option<String>,
}

#[derive(Debug, Args)]
struct SolverArgs {
    #[arg(long, env = "BOHR_TOL", default_value_t = 1e-12)]
    tol: f64,
    #[arg(long, default_value_t = 200)]
    max_iter: usize,
}

impl SolverArgs {
    fn config(&self) -> Result<SolverConfig, BohrError> {
        let cfg = SolverConfig {
            tol: self.tol,
            max_iter: self.max_iter,
            ..SolverConfig::default()
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

/// One computed radius. Parameters are written as top-level JSON fields.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub class: String,
    #[serde(flatten)]
    pub params: BTreeMap<String, f64>,
    pub radius: f64,
    pub residual: f64,
    pub method: String,
    pub d_star: f64,
    pub tol: f64,
}

impl OutputRecord {
    /// CSV fields matching [`CSV_HEADER`]. Classes with two parameters list
    /// names and values separated by `;`.
    pub fn csv_fields(&self) -> Vec<String> {
        let names: Vec<&str> = self.params.keys().map(String::as_str).collect();
        let values: Vec<String> = self.params.values().map(|v| fmt12(*v)).collect();
        vec![
            self.class.clone(),
            names.join(";"),
            values.join(";"),
            fmt12(self.radius),
            fmt_sci(self.residual),
            self.method.clone(),
        ]
    }
}

/// 12 significant digits, shortest spelling.
pub fn fmt12(x: f64) -> String {
    format!("{}", round12(x))
}

fn fmt_sci(x: f64) -> String {
    format!("{x:.11e}")
}

/// Expands `lo:hi:step` to `lo, lo+step, …` for every point below
/// `hi + step/2`, each rounded to 12 significant digits.
pub fn parse_grid(text: &str) -> Result<Vec<f64>, BohrError> {
    let parts: Vec<&str> = text.split(':').collect();
    let num = |s: &str| -> Result<f64, BohrError> {
        s.trim()
            .parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .ok_or_else(|| BohrError::Validation(format!("cannot parse {s:?} as a number in {text:?}")))
    };
    match parts.as_slice() {
        [single] => Ok(vec![num(single)?]),
        [lo, hi, step] => {
            let (lo, hi, step) = (num(lo)?, num(hi)?, num(step)?);
            if step <= 0.0 {
                return Err(BohrError::Validation(format!("grid step must be > 0 in {text:?}")));
            }
            if hi < lo {
                return Err(BohrError::Validation(format!(
                    "grid upper end below lower end in {text:?}"
                )));
            }
            let count = ((hi - lo) / step + 0.5).floor() as usize + 1;
            if count > MAX_GRID_POINTS {
                return Err(BohrError::Validation(format!(
                    "grid {text:?} has {count} points, limit is {MAX_GRID_POINTS}"
                )));
            }
            Ok((0..count)
                .map(|i| round12(lo + i as f64 * step))
                .filter(|&x| x < hi + step / 2.0)
                .collect())
        }
        _ => Err(BohrError::Validation(format!(
            "expected a number or lo:hi:step, got {text:?}"
        ))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Target {
    Class(ClassSpec),
    /// Jacobian-augmented inequality on `T_{B⁰_H(M)}`.
    TbMJacobian {
        m: f64,
    },
}

impl Target {
    fn class_name(&self) -> &'static str {
        match self {
            Target::Class(spec) => spec.tag().name(),
            Target::TbMJacobian { .. } => "tb-m-jacobian",
        }
    }

    fn params(&self) -> Vec<(&'static str, f64)> {
        match self {
            Target::Class(spec) => spec.params(),
            Target::TbMJacobian { m } => vec![("m", *m)],
        }
    }
}

fn param_names(class: &str) -> Result<&'static [&'static str], BohrError> {
    Ok(match class {
        "ph-alpha" | "wh-alpha" => &["alpha"],
        "gt-beta" => &["beta"],
        "gh-k-alpha" => &["k", "alpha"],
        "tb-m" | "tb-m-jacobian" | "ph-m" => &["m"],
        other => {
            return Err(BohrError::Validation(format!(
                "unknown class {other:?}; expected one of ph-alpha, gt-beta, wh-alpha, gh-k-alpha, tb-m, tb-m-jacobian, ph-m"
            )))
        }
    })
}

fn to_k(k: f64) -> Result<u32, BohrError> {
    if k.fract() != 0.0 || !(1.0..=f64::from(u32::MAX)).contains(&k) {
        return Err(BohrError::Validation(format!("k must be a positive integer (got {k})")));
    }
    Ok(k as u32)
}

fn make_target(class: &str, values: &BTreeMap<&str, f64>) -> Result<Target, BohrError> {
    let get = |name: &str| values[name];
    let target = match class {
        "ph-alpha" => Target::Class(ClassSpec::PhAlpha { alpha: get("alpha") }),
        "gt-beta" => Target::Class(ClassSpec::GtBeta { beta: get("beta") }),
        "wh-alpha" => Target::Class(ClassSpec::WhAlpha { alpha: get("alpha") }),
        "gh-k-alpha" => Target::Class(ClassSpec::GhKAlpha {
            k: to_k(get("k"))?,
            alpha: get("alpha"),
        }),
        "tb-m" => Target::Class(ClassSpec::TbM { m: get("m") }),
        "ph-m" => Target::Class(ClassSpec::PhM { m: get("m") }),
        "tb-m-jacobian" => Target::TbMJacobian { m: get("m") },
        _ => unreachable!("class name checked by param_names"),
    };
    if let Target::Class(spec) = target {
        spec.validate()?;
    }
    Ok(target)
}

/// Expands the class arguments to the list of targets, in ascending order of
/// the swept parameter.
fn targets(args: &ClassArgs) -> Result<(Vec<Target>, Option<&'static str>), BohrError> {
    let names = param_names(&args.class)?;
    let given = [
        ("alpha", &args.alpha),
        ("beta", &args.beta),
        ("m", &args.m),
        ("k", &args.k),
    ];
    let mut fixed = BTreeMap::new();
    let mut swept: Option<(&'static str, Vec<f64>)> = None;
    for (name, value) in given {
        match (names.contains(&name), value) {
            (false, Some(_)) => {
                return Err(BohrError::Validation(format!(
                    "--{name} does not apply to {}",
                    args.class
                )))
            }
            (true, None) => return Err(BohrError::Validation(format!("{} requires --{name}", args.class))),
            (true, Some(text)) => {
                if text.contains(':') {
                    if swept.is_some() {
                        return Err(BohrError::Validation("only one parameter may be swept".into()));
                    }
                    swept = Some((name, parse_grid(text)?));
                } else {
                    fixed.insert(name, parse_grid(text)?[0]);
                }
            }
            (false, None) => {}
        }
    }
    match swept {
        None => Ok((vec![make_target(&args.class, &fixed)?], None)),
        Some((name, grid)) => {
            let list = grid
                .into_iter()
                .map(|v| {
                    let mut values = fixed.clone();
                    values.insert(name, v);
                    make_target(&args.class, &values)
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok((list, Some(name)))
        }
    }
}

/// Computes the output record of one target.
fn compute(target: Target, cfg: &SolverConfig) -> Result<OutputRecord, BohrError> {
    let (radius, residual, method, d_star) = match target {
        Target::Class(spec) => {
            let res = solver::solve_radius(spec, cfg)?;
            let d = spec.distance_bound(cfg.series_tol)?.value;
            (res.radius, res.residual, res.method.as_str(), d)
        }
        Target::TbMJacobian { m } => {
            let r = solver::jacobian_radius(m)?;
            let d = 1.0 - m / 2.0;
            let residual = (solver::jacobian_functional(m, r)? - d).abs();
            (r, residual, solver::Method::ClosedForm.as_str(), d)
        }
    };
    Ok(OutputRecord {
        class: target.class_name().to_string(),
        params: target.params().into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        radius,
        residual,
        method: method.to_string(),
        d_star,
        tol: cfg.tol,
    })
}

fn compute_all(targets: &[Target], cfg: &SolverConfig) -> Result<Vec<OutputRecord>, BohrError> {
    targets.par_iter().map(|t| compute(*t, cfg)).collect()
}

fn exit_code(e: &BohrError) -> i32 {
    if e.is_input_error() {
        EXIT_INPUT
    } else {
        EXIT_CONVERGENCE
    }
}

fn write_csv(out: &mut dyn Write, header: &str, rows: impl IntoIterator<Item = Vec<String>>) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header.split(','))?;
    for row in rows {
        w.write_record(&row)?;
    }
    w.flush()
}

fn write_records(out: &mut dyn Write, records: &[OutputRecord], format: Format) -> std::io::Result<()> {
    match format {
        Format::Json => {
            for rec in records {
                let line = serde_json::to_string(rec).map_err(std::io::Error::other)?;
                writeln!(out, "{line}")?;
            }
        }
        Format::Csv => write_csv(out, CSV_HEADER, records.iter().map(OutputRecord::csv_fields))?,
    }
    Ok(())
}

#[derive(Serialize)]
struct ScanRow {
    r: f64,
    bohr_sum: f64,
    d_star: f64,
    satisfied: bool,
}

fn cmd_r_scan(out: &mut dyn Write, args: &ClassArgs, format: Format, r_max: f64, steps: usize) -> Result<(), Failure> {
    let (list, swept) = targets(args)?;
    let spec = match (list.as_slice(), swept) {
        ([Target::Class(spec)], None) => *spec,
        (_, Some(_)) => {
            return Err(BohrError::Validation("an r scan takes fixed parameters, not a grid".into()).into())
        }
        _ => return Err(BohrError::Validation("an r scan is not available for tb-m-jacobian".into()).into()),
    };
    let report = verify::bohr_scan(&spec, r_max, steps)?;
    match format {
        Format::Json => {
            for p in &report.grid {
                let row = ScanRow {
                    r: p.r,
                    bohr_sum: p.bohr_sum,
                    d_star: p.d_star,
                    satisfied: p.satisfied,
                };
                writeln!(out, "{}", serde_json::to_string(&row).map_err(std::io::Error::other)?)?;
            }
        }
        Format::Csv => {
            let rows = report
                .grid
                .iter()
                .map(|p| vec![fmt12(p.r), fmt12(p.bohr_sum), fmt12(p.d_star), p.satisfied.to_string()]);
            write_csv(out, "r,bohr_sum,d_star,satisfied", rows)?;
        }
    }
    Ok(())
}

fn cmd_table(out: &mut dyn Write, args: &ClassArgs, cfg: &SolverConfig) -> Result<(), Failure> {
    let (list, swept) = targets(args)?;
    let records = compute_all(&list, cfg)?;
    let column = swept.unwrap_or_else(|| param_names(&args.class).map(|n| n[n.len() - 1]).unwrap_or("param"));
    let rows = records
        .iter()
        .map(|rec| vec![fmt12(rec.params[column]), fmt12(rec.radius)]);
    write_csv(out, &format!("{column},radius"), rows)?;
    Ok(())
}

fn cmd_verify(
    out: &mut dyn Write,
    err: &mut dyn Write,
    class: Option<String>,
    only: Vec<String>,
) -> Result<i32, Failure> {
    let class = match class.as_deref() {
        None => None,
        Some("tb-m-jacobian") => Some(ClassTag::TbM),
        Some(name) => {
            Some(ClassTag::from_name(name).ok_or_else(|| BohrError::Validation(format!("unknown class {name:?}")))?)
        }
    };
    if let Some(bad) = only.iter().find(|g| !suite::known_group(g)) {
        let mut groups: Vec<&str> = suite::GROUPS.to_vec();
        groups.push(suite::PUBLISHED_GROUP);
        return Err(BohrError::Validation(format!("unknown check group {bad:?}; known: {}", groups.join(", "))).into());
    }
    let filter = SuiteFilter {
        class,
        only: (!only.is_empty()).then_some(only),
    };
    let results = suite::run_suite(&filter);
    let mut failed = Vec::new();
    for r in &results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        writeln!(out, "{status} [{}] {}: {}", r.group, r.name, r.detail)?;
        if !r.passed {
            failed.push(r);
        }
    }
    writeln!(out, "{} checks, {} failed", results.len(), failed.len())?;
    for r in &failed {
        writeln!(err, "failed check: [{}] {}", r.group, r.name)?;
    }
    Ok(if failed.is_empty() { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

enum Failure {
    Bohr(BohrError),
    Io(std::io::Error),
}

impl From<BohrError> for Failure {
    fn from(e: BohrError) -> Self {
        Failure::Bohr(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match cli.command {
        Command::Radius { class, solver, format } => {
            let cfg = solver.config()?;
            let (list, swept) = targets(&class)?;
            if swept.is_some() {
                return Err(BohrError::Validation("radius takes single values; use scan for grids".into()).into());
            }
            let records = compute_all(&list, &cfg)?;
            write_records(out, &records, format)?;
        }
        Command::Scan {
            class,
            solver,
            format,
            r_max,
            steps,
        } => {
            if let (Some(r_max), Some(steps)) = (r_max, steps) {
                cmd_r_scan(out, &class, format, r_max, steps)?;
            } else {
                let cfg = solver.config()?;
                let (list, _) = targets(&class)?;
                let records = compute_all(&list, &cfg)?;
                write_records(out, &records, format)?;
            }
        }
        Command::Verify { class, only } => return cmd_verify(out, err, class, only),
        Command::Table { class, solver } => {
            let cfg = solver.config()?;
            cmd_table(out, &class, &cfg)?;
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                EXIT_INPUT
            } else {
                let _ = write!(out, "{}", e.render());
                EXIT_OK
            };
            return code;
        }
    };
    // Everything goes to a buffer first so a failing sweep leaves stdout empty.
    let mut buf = Vec::new();
    let code = match dispatch(cli, &mut buf, err) {
        Ok(code) => code,
        Err(Failure::Bohr(e)) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code(&e);
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT;
        }
    };
    if let Err(e) = out.write_all(&buf).and_then(|_| out.flush()) {
        let _ = writeln!(err, "error: {e}");
        return EXIT_INPUT;
    }
    code
}
