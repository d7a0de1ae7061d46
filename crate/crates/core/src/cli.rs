//! `specfun` command-line front end.
//!
//! ```text
//! specfun eval <NAME> <X> [--precision EPS] [--format csv|json]
//! specfun verify --family <TAG> [grid flags] [--format csv|json] [--output PATH]
//! specfun compare --families <TAG,TAG,..> [--side lower|upper|width] [grid flags] ...
//! specfun constants [--precision EPS] [--format csv|json]
//! ```
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
//! 3 unknown function or family name.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::bounds::{self, AuxFn, BoundFamily};
use crate::oracle::{self, ErrorBoundedValue};
use crate::verifier::{self, GridSpec, Side, Spacing};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNKNOWN_NAME: i32 = 3;

pub const SCHEMA_VERSION: &str = "1";

const DEFAULT_XMIN: f64 = 1e-3;
const DEFAULT_XMAX: f64 = 1e4;
const DEFAULT_POINTS: usize = 500;
const DEFAULT_PRECISION: f64 = 1e-12;

#[derive(Debug, Parser)]
#[command(name = "specfun", version, about = "Gamma-function bounds: evaluation and verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a named function at one point.
    Eval(EvalArgs),
    /// Check a bound family against the reference oracle on a grid.
    Verify(VerifyArgs),
    /// Tabulate the distance of several same-target families from the target.
    Compare(CompareArgs),
    /// Print Euler's constant and log 2π with error radii.
    Constants(ConstantsArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Scale {
    Log,
    Linear,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SideArg {
    Lower,
    Upper,
    Width,
}

#[derive(Debug, Args)]
struct GridArgs {
    /// Lower grid end [default: 1e-3, raised to the family domain]
    #[arg(long)]
    xmin: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_XMAX)]
    xmax: f64,
    #[arg(long, default_value_t = DEFAULT_POINTS)]
    points: usize,
    #[arg(long, value_enum, default_value_t = Scale::Log)]
    scale: Scale,
}

impl GridArgs {
    /// The requested grid. An omitted `--xmin` is raised to `domain_min`; an
    /// explicit one is kept as given and checked by the verifier.
    fn grid(&self, domain_min: f64) -> GridSpec {
        let spacing = match self.scale {
            Scale::Log => Spacing::Logarithmic,
            Scale::Linear => Spacing::Linear,
        };
        let x_min = self.xmin.unwrap_or(DEFAULT_XMIN.max(domain_min));
        GridSpec::new(x_min, self.xmax, self.points, spacing)
    }
}

#[derive(Debug, Args)]
struct EvalArgs {
    /// gamma, log_gamma, digamma, trigamma, polygamma:n, stirling_ratio, beta,
    /// delta_star, tau:k, f, h, theta, H, P, p, g_c:c
    name: String,
    #[arg(allow_hyphen_values = true)]
    x: String,
    #[arg(long, default_value_t = DEFAULT_PRECISION)]
    precision: f64,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    family: String,
    #[command(flatten)]
    grid: GridArgs,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CompareArgs {
    /// Comma-separated family tags sharing one target.
    #[arg(long, value_delimiter = ',', required = true)]
    families: Vec<String>,
    #[arg(long, value_enum, default_value_t = SideArg::Width)]
    side: SideArg,
    #[command(flatten)]
    grid: GridArgs,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ConstantsArgs {
    #[arg(long, default_value_t = DEFAULT_PRECISION)]
    precision: f64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

/// Failure of a subcommand, carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::UnknownName(_) => EXIT_UNKNOWN_NAME,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: format!("i/o error: {e}"),
        }
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: format!("csv error: {e}"),
        }
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the subcommand,
/// returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let result = match cli.command {
        Command::Eval(a) => cmd_eval(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Compare(a) => cmd_compare(a),
        Command::Constants(a) => cmd_constants(a),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

/// Shortest round-trip decimal for `v`; `null` for non-finite values.
pub fn fmt_num(v: f64) -> String {
    serde_json::to_string(&v).expect("f64 serializes")
}

/// `v` rounded to the decimal places implied by a relative precision, with
/// trailing zeros removed.
pub fn fmt_rounded(v: f64, precision: f64) -> String {
    if !v.is_finite() {
        return fmt_num(v);
    }
    let abs_tol = precision * v.abs().max(1.0);
    let places = (-abs_tol.log10()).ceil().clamp(0.0, 17.0) as usize;
    let mut s = format!("{v:.places$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

fn emit(output: &Option<PathBuf>, content: &str) -> std::io::Result<()> {
    match output {
        Some(p) => std::fs::write(p, content),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(content.as_bytes())?;
            out.flush()
        }
    }
}

fn parse_family(tag: &str) -> Result<BoundFamily, Error> {
    tag.trim().parse()
}

fn parse_real(what: &'static str, s: &str) -> Result<f64, Error> {
    s.trim()
        .parse::<f64>()
        .map_err(|_| Error::InvalidGrid(format!("{what}: `{s}` is not a number")))
}

fn check_precision(p: f64) -> Result<(), Failure> {
    if p > 0.0 && p.is_finite() {
        Ok(())
    } else {
        Err(Failure {
            code: EXIT_USAGE,
            message: format!("precision must be positive, got {p}"),
        })
    }
}

/// Result of evaluating a CLI function name: the value and, when an oracle
/// backs the function, its error radius.
fn evaluate(name: &str, x: f64, precision: f64) -> Result<(f64, Option<f64>), Error> {
    let eps = precision.max(oracle::EPS_FLOOR);
    let backed = |v: ErrorBoundedValue| (v.value, Some(v.error_radius));
    let plain = |v: f64| (v, None);
    let (head, param) = match name.split_once(':') {
        Some((h, p)) => (h, Some(p)),
        None => (name, None),
    };
    let need_param = |p: Option<&str>| -> Result<f64, Error> {
        p.ok_or_else(|| Error::UnknownName(name.to_string()))
            .and_then(|s| parse_real("parameter", s))
    };
    Ok(match (head, param) {
        ("gamma", None) => backed(oracle::ref_gamma(x, eps)?),
        ("log_gamma", None) => backed(oracle::ref_log_gamma(x, eps)?),
        ("digamma", None) => backed(oracle::ref_digamma(x, eps)?),
        ("trigamma", None) => backed(oracle::ref_trigamma(x, eps)?),
        ("polygamma", Some(p)) => {
            let n: u32 = p
                .trim()
                .parse()
                .map_err(|_| Error::InvalidGrid(format!("polygamma order `{p}` is not a nonnegative integer")))?;
            if n == 0 {
                backed(oracle::ref_digamma(x, eps)?)
            } else {
                backed(oracle::ref_polygamma(n, x, eps)?)
            }
        }
        ("stirling_ratio", None) => backed(oracle::ref_stirling_ratio(x, eps)?),
        ("beta", None) => plain(bounds::beta(x)?),
        ("delta_star", None) => plain(bounds::delta_star(x)?),
        ("tau", p @ Some(_)) => plain(bounds::tau(need_param(p)?, x)?),
        ("g_c", p @ Some(_)) => plain(bounds::g_c(x, need_param(p)?)?),
        (aux, None) => match AuxFn::parse(aux) {
            Some(a) => plain(bounds::aux_eval(a, x)?),
            None => return Err(Error::UnknownName(name.to_string())),
        },
        _ => return Err(Error::UnknownName(name.to_string())),
    })
}

fn cmd_eval(a: EvalArgs) -> CmdResult {
    check_precision(a.precision)?;
    let x = parse_real("x", &a.x)?;
    let (value, radius) = evaluate(&a.name, x, a.precision)?;
    let out = match a.format {
        Some(Format::Json) => {
            let doc = json!({
                "schema_version": SCHEMA_VERSION,
                "command": "eval",
                "name": a.name,
                "x": x,
                "precision": a.precision,
                "value": value,
                "error_radius": radius,
                "display": fmt_rounded(value, a.precision),
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("json"))
        }
        Some(Format::Csv) => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["name", "x", "value", "error_radius"])?;
            w.write_record([
                a.name.as_str(),
                &fmt_num(x),
                &fmt_num(value),
                &radius.map(fmt_num).unwrap_or_default(),
            ])?;
            csv_string(w)?
        }
        None => match radius {
            Some(r) => format!("{} ± {}\n", fmt_rounded(value, a.precision), fmt_num(r)),
            None => format!("{}\n", fmt_rounded(value, a.precision)),
        },
    };
    emit(&None, &out)?;
    Ok(EXIT_OK)
}

fn csv_string(w: csv::Writer<Vec<u8>>) -> Result<String, Failure> {
    let bytes = w.into_inner().map_err(|e| Failure {
        code: EXIT_USAGE,
        message: format!("csv error: {e}"),
    })?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn grid_json(g: &GridSpec) -> serde_json::Value {
    json!({
        "x_min": g.x_min,
        "x_max": g.x_max,
        "points": g.points,
        "spacing": g.spacing,
    })
}

fn pretty<T: Serialize>(v: &T) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("json"))
}

fn cmd_verify(a: VerifyArgs) -> CmdResult {
    let family = parse_family(&a.family)?;
    let grid = a.grid.grid(family.domain_min());
    let report = verifier::sweep(&grid, family)?;
    let s = &report.summary;
    let out = match a.format {
        Format::Json => pretty(&json!({
            "schema_version": SCHEMA_VERSION,
            "command": "verify",
            "grid": grid_json(&grid),
            "family": family,
            "target": report.target,
            "rows": report.records,
            "summary": s,
        })),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "x",
                "target",
                "target_error_radius",
                "lower",
                "upper",
                "lower_margin",
                "upper_margin",
                "lower_rel_margin",
                "upper_rel_margin",
                "required_lower",
                "required_upper",
                "pass",
            ])?;
            for r in &report.records {
                let nums = [
                    r.x,
                    r.target.value,
                    r.target.error_radius,
                    r.interval.lower,
                    r.interval.upper,
                    r.lower_margin,
                    r.upper_margin,
                    r.lower_rel_margin,
                    r.upper_rel_margin,
                    r.required_lower,
                    r.required_upper,
                ];
                let mut rec: Vec<String> = nums.iter().map(|&v| fmt_num(v)).collect();
                rec.push(r.pass.to_string());
                w.write_record(&rec)?;
            }
            csv_string(w)?
        }
    };
    emit(&a.output, &out)?;
    eprintln!(
        "{}: {} points, {} failures, min margin {} at x = {}",
        family,
        report.records.len(),
        s.failures,
        fmt_num(s.min_margin),
        fmt_num(s.argmin_x)
    );
    Ok(if s.all_pass { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

fn cmd_compare(a: CompareArgs) -> CmdResult {
    let families = a
        .families
        .iter()
        .map(|t| parse_family(t))
        .collect::<Result<Vec<_>, _>>()?;
    let side = match a.side {
        SideArg::Lower => Side::Lower,
        SideArg::Upper => Side::Upper,
        SideArg::Width => Side::Width,
    };
    let domain_min = families.iter().map(|f| f.domain_min()).fold(0.0, f64::max);
    let grid = a.grid.grid(domain_min);
    let table = verifier::compare(&grid, &families, side)?;
    let out = match a.format {
        Format::Json => pretty(&json!({
            "schema_version": SCHEMA_VERSION,
            "command": "compare",
            "grid": grid_json(&grid),
            "families": table.families,
            "target": table.target,
            "side": side,
            "rows": table.rows,
            "summary": table.summary,
        })),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut header = vec!["x".to_string(), "target".to_string()];
            header.extend(families.iter().map(|f| format!("{}_{}", f.tag(), side)));
            w.write_record(&header)?;
            for row in &table.rows {
                let mut rec = vec![fmt_num(row.x), fmt_num(row.target)];
                rec.extend(families.iter().map(|f| fmt_num(row.gap_by_family[f])));
                w.write_record(&rec)?;
            }
            csv_string(w)?
        }
    };
    emit(&a.output, &out)?;
    let counts: Vec<String> = table
        .summary
        .tightest_count
        .iter()
        .map(|(f, n)| format!("{f}={n}"))
        .collect();
    eprintln!(
        "{} rows; tightest {} side: {}",
        table.rows.len(),
        side,
        counts.join(", ")
    );
    Ok(EXIT_OK)
}

fn cmd_constants(a: ConstantsArgs) -> CmdResult {
    check_precision(a.precision)?;
    let gamma = oracle::ref_euler_gamma(a.precision.max(oracle::EULER_EPS_FLOOR))?;
    let log_two_pi = oracle::ref_log_two_pi(a.precision.max(oracle::EPS_FLOOR))?;
    let entries = [("euler_gamma", gamma), ("log_two_pi", log_two_pi)];
    let out = match a.format {
        Format::Json => {
            let rows: Vec<_> = entries
                .iter()
                .map(|(n, v)| json!({"name": n, "value": v.value, "error_radius": v.error_radius}))
                .collect();
            pretty(&json!({
                "schema_version": SCHEMA_VERSION,
                "command": "constants",
                "precision": a.precision,
                "rows": rows,
            }))
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["name", "value", "error_radius"])?;
            for (n, v) in &entries {
                w.write_record([n.to_string(), fmt_num(v.value), fmt_num(v.error_radius)])?;
            }
            csv_string(w)?
        }
    };
    emit(&None, &out)?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_strips_zeros() {
        assert_eq!(fmt_rounded(24.000000000000004, 1e-12), "24");
        assert_eq!(fmt_rounded(-0.5772156649015329, 1e-12), "-0.577215664902");
        assert_eq!(fmt_rounded(0.5772156649015329, 1e-5), "0.57722");
    }

    #[test]
    fn shortest_round_trip() {
        assert_eq!(fmt_num(0.1), "0.1");
        assert_eq!(fmt_num(1e-300), "1e-300");
        assert_eq!(fmt_num(f64::NAN), "null");
    }

    #[test]
    fn eval_names() {
        assert!(matches!(evaluate("zeta", 1.0, 1e-12), Err(Error::UnknownName(_))));
        assert!(matches!(evaluate("tau", 1.0, 1e-12), Err(Error::UnknownName(_))));
        assert!(matches!(evaluate("digamma", -1.0, 1e-12), Err(Error::Domain { .. })));
        let (v, r) = evaluate("gamma", 5.0, 1e-12).unwrap();
        assert!((v - 24.0).abs() < 1e-11 && r.is_some());
        let (t, r) = evaluate("tau:2", 1.0, 1e-12).unwrap();
        assert!((t - 0.299_793_998_031_522_6).abs() < 1e-13 && r.is_none());
        assert!(evaluate("H", 1.0, 1e-12).is_ok());
        assert!(evaluate("g_c:0.3333333333333333", 1.0, 1e-12).is_ok());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(["specfun", "eval", "digamma", "-1"]), EXIT_USAGE);
        assert_eq!(run(["specfun", "eval", "nope", "1"]), EXIT_UNKNOWN_NAME);
        assert_eq!(run(["specfun", "verify", "--family", "eq6", "--xmin", "1"]), EXIT_USAGE);
        assert_eq!(run(["specfun", "verify", "--family", "eq99"]), EXIT_UNKNOWN_NAME);
        assert_eq!(run(["specfun", "frobnicate"]), EXIT_USAGE);
    }
}
