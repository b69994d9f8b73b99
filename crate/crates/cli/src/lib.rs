//! Command-line front end: stability classification, exponent tables,
//! dimension thresholds and the exact verification suite.
//!
//! Exit codes: 0 success, 1 a check or computation failed, 2 bad input.

mod format;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use lestab::criterion::ParamPoint;
use lestab::exponents::{
    classify_regime, exponent_table, n0_threshold, ExponentProfile, Regime, CRITICAL_TOL, DEFAULT_TOL,
};
use lestab::suite::{run_suite, SUITE_VERSION};
use lestab::{Error, ExecMode};

pub use format::fmt_g;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Upper end of the `n0` bound `2s + 8.998` for `2 < s < 3`.
const N0_BOUND_OFFSET: f64 = 8.998;

#[derive(Parser, Debug)]
#[command(name = "lestab", version, about = "Stability thresholds for (-Δ)^s u = |u|^{p-1} u")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify stable solutions at (n, s, p).
    Check(CheckArgs),
    /// Tabulate p_s, p_m, p_c and a_ns over a grid of dimensions.
    Exponents(TableArgs),
    /// Tabulate the regime boundaries p_c and p_m over a grid of dimensions.
    Region(TableArgs),
    /// Run the exact verification suite.
    Verify(VerifyArgs),
    /// Compute the dimension threshold n0(s) above which p_c is finite.
    N0(N0Args),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Args, Debug)]
struct Common {
    /// Output format.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to FILE instead of standard output.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(long)]
    n: f64,
    #[arg(long)]
    s: f64,
    #[arg(long)]
    p: f64,
    /// Relative tolerance for recognising p = p_s.
    #[arg(long, default_value_t = CRITICAL_TOL)]
    tol: f64,
    #[command(flatten)]
    common: Common,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Column {
    #[value(name = "p_s")]
    Ps,
    #[value(name = "p_m")]
    Pm,
    #[value(name = "p_c")]
    Pc,
    #[value(name = "a_ns")]
    Ans,
}

impl Column {
    fn name(self) -> &'static str {
        match self {
            Column::Ps => "p_s",
            Column::Pm => "p_m",
            Column::Pc => "p_c",
            Column::Ans => "a_ns",
        }
    }

    /// Rendered cell: `inf` for infinity, empty when undefined.
    fn cell(self, p: &ExponentProfile) -> String {
        match self {
            Column::Ps => fmt_g(p.p_s),
            Column::Pm => fmt_g(p.p_m),
            Column::Pc => fmt_g(p.p_c),
            Column::Ans => p.a_ns.map(fmt_g).unwrap_or_default(),
        }
    }
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long)]
    s: f64,
    #[arg(long)]
    n_min: f64,
    #[arg(long)]
    n_max: f64,
    #[arg(long, default_value_t = 1.0)]
    n_step: f64,
    /// Absolute root-finding tolerance.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Columns to emit (exponents only), comma separated.
    #[arg(long, value_enum, value_delimiter = ',')]
    outputs: Option<Vec<Column>>,
    /// Compute rows on one thread.
    #[arg(long)]
    sequential: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Only run checks whose id starts with PREFIX, or a group name such as
    /// `scaling`, `radial`, `ibp`.
    #[arg(long, value_name = "PREFIX")]
    filter: Option<String>,
    #[arg(long)]
    sequential: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct N0Args {
    #[arg(long)]
    s: f64,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[command(flatten)]
    common: Common,
}

/// A failed command: exit code plus message for standard error.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Domain(_) | Error::Parse(_) | Error::Undefined(_) => EXIT_USAGE,
            _ => EXIT_FAILED,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: EXIT_FAILED,
            message: format!("i/o error: {e}"),
        }
    }
}

/// Rendered output plus the exit code it implies.
struct Output {
    body: String,
    code: i32,
}

/// Parses `args` (including the program name) and runs the command, writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let (result, target) = match &cli.command {
        Command::Check(a) => (cmd_check(a, err), &a.common.out),
        Command::Exponents(a) => (cmd_table(a, false), &a.common.out),
        Command::Region(a) => (cmd_table(a, true), &a.common.out),
        Command::Verify(a) => (cmd_verify(a), &a.common.out),
        Command::N0(a) => (cmd_n0(a), &a.common.out),
    };
    match result.and_then(|o| emit(o, target.as_ref(), out)) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn emit(o: Output, target: Option<&PathBuf>, out: &mut dyn Write) -> Result<i32, Failure> {
    match target {
        Some(path) => File::create(path)?.write_all(o.body.as_bytes())?,
        None => out.write_all(o.body.as_bytes())?,
    }
    Ok(o.code)
}

fn require(cond: bool, message: impl FnOnce() -> String) -> Result<(), Failure> {
    if cond {
        Ok(())
    } else {
        Err(Failure::usage(message()))
    }
}

fn format_or(f: Option<Format>, default: Format, allowed: &[Format]) -> Result<Format, Failure> {
    let f = f.unwrap_or(default);
    require(allowed.contains(&f), || {
        let names: Vec<_> = allowed.iter().map(|a| format!("{a:?}").to_lowercase()).collect();
        format!("--format must be one of {} for this command", names.join(", "))
    })?;
    Ok(f)
}

fn validate_s(s: f64, err: &mut dyn Write) -> Result<(), Failure> {
    require(s > 0.0 && s <= 3.0, || format!("s must lie in (0, 3], got {s}"))?;
    if !(s > 2.0 && s < 3.0) {
        let _ = writeln!(
            err,
            "warning: s = {} lies outside (2, 3); the classification is stated for 2 < s < 3",
            fmt_g(s)
        );
    }
    Ok(())
}

fn regime_label(r: Regime) -> &'static str {
    match r {
        Regime::Subcritical => "Subcritical",
        Regime::Critical => "Critical",
        Regime::SupercriticalLiouville => "SupercriticalLiouville",
        Regime::SupercriticalStableSingular => "SupercriticalStableSingular",
    }
}

fn cmd_check(a: &CheckArgs, err: &mut dyn Write) -> Result<Output, Failure> {
    let format = format_or(a.common.format, Format::Text, &[Format::Text, Format::Json])?;
    validate_s(a.s, err)?;
    require(a.n > 2.0 * a.s, || format!("need n > 2s, got n = {}, s = {}", fmt_g(a.n), fmt_g(a.s)))?;
    require(a.p > 1.0, || format!("need p > 1, got p = {}", fmt_g(a.p)))?;
    require(a.tol > 0.0, || format!("need tol > 0, got {}", fmt_g(a.tol)))?;
    let pt = ParamPoint::new(a.n, a.s, a.p)?;
    let v = classify_regime(&pt, a.tol)?;
    let p_s = lestab::exponents::sobolev_exponent(a.n, a.s);
    let body = match format {
        Format::Json => {
            let value = json!({
                "n": a.n, "s": a.s, "p": a.p, "p_s": p_s,
                "regime": regime_label(v.regime),
                "statement": v.statement,
                "criterion": v.criterion,
            });
            format!("{value}\n")
        }
        _ => {
            let mut s = format!("{}: {}\n", regime_label(v.regime), v.statement);
            s += &format!("n = {}, s = {}, p = {}, p_s = {}\n", fmt_g(a.n), fmt_g(a.s), fmt_g(a.p), fmt_g(p_s));
            if let Some(c) = v.criterion {
                s += &format!("F = {}", fmt_g(c.f));
                if c.on_boundary {
                    s += " (on the boundary F = 0)";
                }
                s.push('\n');
            }
            s
        }
    };
    Ok(Output { body, code: EXIT_OK })
}

/// `n_min, n_min + step, ...` up to `n_max` (inclusive, up to rounding).
fn grid(n_min: f64, n_max: f64, step: f64) -> Vec<f64> {
    let count = ((n_max - n_min) / step + 1e-9).floor() as usize;
    (0..=count).map(|i| n_min + step * i as f64).collect()
}

fn cmd_table(a: &TableArgs, region: bool) -> Result<Output, Failure> {
    let format = format_or(a.common.format, Format::Csv, &[Format::Csv, Format::Json])?;
    require(a.s > 0.0 && a.s.is_finite(), || format!("s must be positive, got {}", fmt_g(a.s)))?;
    require(a.n_min > 2.0 * a.s, || {
        format!("need n-min > 2s, got n-min = {}, s = {}", fmt_g(a.n_min), fmt_g(a.s))
    })?;
    require(a.n_max >= a.n_min, || "need n-max >= n-min".to_string())?;
    require(a.n_step > 0.0, || format!("need n-step > 0, got {}", fmt_g(a.n_step)))?;
    require(a.tol > 0.0, || format!("need tol > 0, got {}", fmt_g(a.tol)))?;
    let columns: Vec<Column> = if region {
        require(a.outputs.is_none(), || "region always emits p_c and p_m; drop --outputs".into())?;
        vec![Column::Pm, Column::Pc]
    } else {
        let mut c = a.outputs.clone().unwrap_or_else(|| vec![Column::Ps, Column::Pm, Column::Pc, Column::Ans]);
        c.sort_by_key(|c| *c as u8);
        c.dedup();
        c
    };
    let mode = if a.sequential { ExecMode::Sequential } else { ExecMode::Parallel };
    let ns = grid(a.n_min, a.n_max, a.n_step);
    let rows = exponent_table(a.s, &ns, a.tol, mode)?;
    let any_error = rows.iter().any(|r| r.is_err());
    let body = match format {
        Format::Json => render_json_rows(a.s, &ns, &rows, &columns)?,
        _ => render_csv(a.s, &ns, &rows, &columns, any_error)?,
    };
    Ok(Output {
        body,
        code: if any_error { EXIT_FAILED } else { EXIT_OK },
    })
}

fn render_csv(
    s: f64,
    ns: &[f64],
    rows: &[lestab::Result<ExponentProfile>],
    columns: &[Column],
    error_column: bool,
) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["n", "s"];
    header.extend(columns.iter().map(|c| c.name()));
    if error_column {
        header.push("error");
    }
    let csv_err = |e: csv::Error| Failure {
        code: EXIT_FAILED,
        message: format!("csv: {e}"),
    };
    w.write_record(&header).map_err(csv_err)?;
    for (n, row) in ns.iter().zip(rows) {
        let mut rec = vec![fmt_g(*n), fmt_g(s)];
        match row {
            Ok(p) => {
                rec.extend(columns.iter().map(|c| c.cell(p)));
                if error_column {
                    rec.push(String::new());
                }
            }
            Err(e) => {
                rec.extend(columns.iter().map(|_| String::new()));
                rec.push(e.to_string());
            }
        }
        w.write_record(&rec).map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure {
        code: EXIT_FAILED,
        message: format!("csv: {e}"),
    })?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

/// JSON value for an extended real: a number, or `{"value": null, "infinite": true}`.
fn extended(x: f64) -> serde_json::Value {
    if x.is_infinite() {
        json!({"value": null, "infinite": true})
    } else {
        json!(x)
    }
}

fn render_json_rows(
    s: f64,
    ns: &[f64],
    rows: &[lestab::Result<ExponentProfile>],
    columns: &[Column],
) -> Result<String, Failure> {
    let mut body = String::new();
    for (n, row) in ns.iter().zip(rows) {
        let mut obj = serde_json::Map::new();
        obj.insert("n".into(), json!(n));
        obj.insert("s".into(), json!(s));
        match row {
            Ok(p) => {
                for c in columns {
                    let v = match c {
                        Column::Ps => extended(p.p_s),
                        Column::Pm => extended(p.p_m),
                        Column::Pc => extended(p.p_c),
                        Column::Ans => p.a_ns.map(extended).unwrap_or(serde_json::Value::Null),
                    };
                    obj.insert(c.name().into(), v);
                }
            }
            Err(e) => {
                obj.insert("error".into(), json!(e.to_string()));
            }
        }
        body += &serde_json::Value::Object(obj).to_string();
        body.push('\n');
    }
    Ok(body)
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    version: &'a str,
    passed: bool,
    checks: &'a [lestab::Check],
    notes: &'a [String],
}

fn cmd_verify(a: &VerifyArgs) -> Result<Output, Failure> {
    let format = format_or(a.common.format, Format::Text, &[Format::Text, Format::Json])?;
    let mode = if a.sequential { ExecMode::Sequential } else { ExecMode::Parallel };
    let report = run_suite(a.filter.as_deref(), mode);
    if report.checks.is_empty() {
        return Err(Failure::usage(format!(
            "no checks match filter {:?}",
            a.filter.as_deref().unwrap_or("")
        )));
    }
    let passed = report.all_passed();
    let body = match format {
        Format::Json => {
            let v = VerifyJson {
                version: SUITE_VERSION,
                passed,
                checks: &report.checks,
                notes: &report.notes,
            };
            format!("{}\n", serde_json::to_string(&v).expect("serializable"))
        }
        _ => {
            let mut s = format!("verification suite v{SUITE_VERSION}\n");
            for c in &report.checks {
                s += &format!("{c}\n");
            }
            for n in &report.notes {
                s += &format!("note: {n}\n");
            }
            let failed = report.failures().count();
            s += &format!("{} checks, {} passed, {} failed\n", report.checks.len(), report.checks.len() - failed, failed);
            s
        }
    };
    Ok(Output {
        body,
        code: if passed { EXIT_OK } else { EXIT_FAILED },
    })
}

fn cmd_n0(a: &N0Args) -> Result<Output, Failure> {
    let format = format_or(a.common.format, Format::Text, &[Format::Text, Format::Json])?;
    require(a.s > 0.0 && a.s <= 3.0, || format!("s must lie in (0, 3], got {}", fmt_g(a.s)))?;
    require(a.tol > 0.0, || format!("need tol > 0, got {}", fmt_g(a.tol)))?;
    let n0 = n0_threshold(a.s, a.tol)?;
    let bound = 2.0 * a.s + N0_BOUND_OFFSET;
    let applies = a.s > 2.0 && a.s < 3.0;
    let holds = n0 <= bound;
    let body = match format {
        Format::Json => {
            let v = json!({
                "s": a.s,
                "n0": n0,
                "bound": bound,
                "bound_applies": applies,
                "bound_holds": applies.then_some(holds),
            });
            format!("{v}\n")
        }
        _ => {
            let verdict = match (applies, holds) {
                (false, _) => "not applicable (stated for 2 < s < 3)",
                (true, true) => "pass",
                (true, false) => "fail",
            };
            format!(
                "n0({}) = {}\nbound 2s + 8.998 = {}\nbound: {verdict}\n",
                fmt_g(a.s),
                fmt_g(n0),
                fmt_g(bound)
            )
        }
    };
    Ok(Output {
        body,
        code: if applies && !holds { EXIT_FAILED } else { EXIT_OK },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["lestab"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn check_classifies_each_regime() {
        let first = |args: &[&str]| {
            let (code, out, _) = call(args);
            assert_eq!(code, EXIT_OK);
            out.lines().next().unwrap().split(':').next().unwrap().to_string()
        };
        assert_eq!(first(&["check", "--n", "20", "--s", "2.5", "--p", "1.3"]), "Subcritical");
        assert_eq!(first(&["check", "--n", "20", "--s", "2.5", "--p", "1.6666666666666667"]), "Critical");
        assert_eq!(first(&["check", "--n", "20", "--s", "2.5", "--p", "3"]), "SupercriticalLiouville");
        assert_eq!(first(&["check", "--n", "20", "--s", "2.5", "--p", "5"]), "SupercriticalStableSingular");
    }

    #[test]
    fn check_reports_criterion_value() {
        let (_, out, _) = call(&["check", "--n", "20", "--s", "2.5", "--p", "3"]);
        let f: f64 = out.lines().find_map(|l| l.strip_prefix("F = ")).unwrap().parse().unwrap();
        assert!(f > 0.0);
        let (_, out, _) = call(&["check", "--n", "20", "--s", "2.5", "--p", "3", "--format", "json"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["regime"], "SupercriticalLiouville");
        assert!((v["criterion"]["F"].as_f64().unwrap() - f).abs() < 1e-13);
    }

    #[test]
    fn check_validates_input() {
        let (code, _, err) = call(&["check", "--n", "20", "--s", "3.5", "--p", "3"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("(0, 3]"));
        assert_eq!(call(&["check", "--n", "4", "--s", "2.5", "--p", "3"]).0, EXIT_USAGE);
        assert_eq!(call(&["check", "--n", "20", "--s", "2.5", "--p", "1"]).0, EXIT_USAGE);
        assert_eq!(call(&["check", "--n", "20", "--s", "2.5"]).0, EXIT_USAGE);
        assert_eq!(call(&["check", "--n", "20", "--s", "2.5", "--p", "3", "--format", "csv"]).0, EXIT_USAGE);
    }

    #[test]
    fn check_warns_outside_range() {
        let (code, _, err) = call(&["check", "--n", "20", "--s", "1.5", "--p", "3"]);
        assert_eq!(code, EXIT_OK);
        assert!(err.starts_with("warning:"));
        let (_, _, err) = call(&["check", "--n", "20", "--s", "2.5", "--p", "3"]);
        assert!(err.is_empty());
    }

    fn parse_csv(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
        let mut r = csv::Reader::from_reader(text.as_bytes());
        let header = r.headers().unwrap().iter().map(String::from).collect();
        let rows = r
            .records()
            .map(|rec| rec.unwrap().iter().map(String::from).collect())
            .collect();
        (header, rows)
    }

    #[test]
    fn exponents_csv_layout() {
        let (code, out, _) = call(&["exponents", "--s", "2.5", "--n-min", "6", "--n-max", "20", "--n-step", "2"]);
        assert_eq!(code, EXIT_OK);
        let (header, rows) = parse_csv(&out);
        assert_eq!(header, ["n", "s", "p_s", "p_m", "p_c", "a_ns"]);
        assert_eq!(rows.len(), 8);
        assert_eq!(rows[0][..5], ["6", "2.5", "11", "inf", "inf"]);
        assert_eq!(rows[0][5], "");
        let last = &rows[7];
        assert_eq!(last[0], "20");
        let p_s: f64 = last[2].parse().unwrap();
        assert!((p_s - 5.0 / 3.0).abs() < 1e-14);
        let p_c: f64 = last[4].parse().unwrap();
        let a: f64 = last[5].parse().unwrap();
        assert!(p_c > p_s && a > 0.0 && a < 1.0);
    }

    #[test]
    fn exponents_values_round_trip() {
        let (_, out, _) = call(&["exponents", "--s", "2.25", "--n-min", "16", "--n-max", "19"]);
        let (_, rows) = parse_csv(&out);
        for row in rows {
            let n: f64 = row[0].parse().unwrap();
            let p_s: f64 = row[2].parse().unwrap();
            let exact = lestab::exponents::sobolev_exponent(n, 2.25);
            assert!((p_s - exact).abs() <= 1e-14 * exact);
        }
    }

    #[test]
    fn exponents_outputs_selection() {
        let (_, out, _) = call(&[
            "exponents", "--s", "2.5", "--n-min", "20", "--n-max", "20", "--outputs", "a_ns,p_s",
        ]);
        let (header, rows) = parse_csv(&out);
        assert_eq!(header, ["n", "s", "p_s", "a_ns"]);
        assert_eq!(rows[0].len(), 4);
    }

    #[test]
    fn exponents_deterministic_across_modes() {
        let args = ["exponents", "--s", "2.75", "--n-min", "6", "--n-max", "40", "--n-step", "0.5"];
        let (_, a, _) = call(&args);
        let (_, b, _) = call(&args);
        let mut seq = args.to_vec();
        seq.push("--sequential");
        let (_, c, _) = call(&seq);
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn exponents_rejects_bad_grid() {
        for args in [
            &["exponents", "--s", "2.5", "--n-min", "5", "--n-max", "9"][..],
            &["exponents", "--s", "2.5", "--n-min", "9", "--n-max", "8"],
            &["exponents", "--s", "2.5", "--n-min", "6", "--n-max", "9", "--n-step", "0"],
            &["exponents", "--s", "2.5", "--n-min", "6", "--n-max", "9", "--tol", "-1"],
            &["exponents", "--s", "2.5", "--n-min", "6", "--n-max", "9", "--format", "text"],
        ] {
            let (code, out, err) = call(args);
            assert_eq!(code, EXIT_USAGE, "{args:?}");
            assert!(out.is_empty());
            assert!(err.starts_with("error:"));
        }
    }

    #[test]
    fn exponents_json_lines() {
        let (code, out, _) = call(&["exponents", "--s", "2.5", "--n-min", "12", "--n-max", "14", "--format", "json"]);
        assert_eq!(code, EXIT_OK);
        let rows: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0]["p_c"]["infinite"], true);
        assert!(rows[0]["a_ns"].is_null());
        assert!(rows[2]["p_c"].is_f64());
    }

    #[test]
    fn region_emits_boundaries() {
        let (code, out, _) = call(&["region", "--s", "2.5", "--n-min", "20", "--n-max", "21"]);
        assert_eq!(code, EXIT_OK);
        let (header, rows) = parse_csv(&out);
        assert_eq!(header, ["n", "s", "p_m", "p_c"]);
        assert_eq!(rows.len(), 2);
        assert_eq!(
            call(&["region", "--s", "2.5", "--n-min", "20", "--n-max", "21", "--outputs", "p_s"]).0,
            EXIT_USAGE
        );
    }

    #[test]
    fn out_file_receives_output() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("table.csv");
        let p = path.to_str().unwrap();
        let (code, out, _) = call(&["exponents", "--s", "2.5", "--n-min", "6", "--n-max", "8", "--out", p]);
        assert_eq!(code, EXIT_OK);
        assert!(out.is_empty());
        let (direct_code, direct, _) = call(&["exponents", "--s", "2.5", "--n-min", "6", "--n-max", "8"]);
        assert_eq!(direct_code, EXIT_OK);
        assert_eq!(std::fs::read_to_string(&path).unwrap(), direct);
        let missing = dir.path().join("no/such/dir.csv");
        assert_eq!(
            call(&["exponents", "--s", "2.5", "--n-min", "6", "--n-max", "8", "--out", missing.to_str().unwrap()]).0,
            EXIT_FAILED
        );
    }

    #[test]
    fn verify_filter_and_exit_codes() {
        let (code, out, _) = call(&["verify", "--filter", "section32"]);
        assert_eq!(code, EXIT_OK);
        let lines: Vec<_> = out.lines().collect();
        assert!(lines[0].starts_with("verification suite"));
        assert!(lines[1..lines.len() - 1].iter().all(|l| l.starts_with("pass scaling.")));
        assert!(lines.last().unwrap().ends_with("0 failed"));
        let (code, _, err) = call(&["verify", "--filter", "nothing"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("no checks"));
    }

    #[test]
    fn verify_json_report() {
        let (code, out, _) = call(&["verify", "--filter", "jordan", "--format", "json", "--sequential"]);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["passed"], true);
        assert_eq!(v["version"], SUITE_VERSION);
        let checks = v["checks"].as_array().unwrap();
        assert!(!checks.is_empty());
        assert!(checks.iter().all(|c| c["id"].as_str().unwrap().starts_with("jordan.")));
    }

    #[test]
    fn n0_reports_bound() {
        let (code, out, _) = call(&["n0", "--s", "2.5"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("bound: pass"));
        let (_, out, _) = call(&["n0", "--s", "2", "--format", "json"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert!((v["n0"].as_f64().unwrap() - 12.565_344_462_7).abs() < 1e-9);
        assert_eq!(v["bound_applies"], false);
        assert_eq!(call(&["n0", "--s", "0"]).0, EXIT_USAGE);
        assert_eq!(call(&["n0", "--s", "3.01"]).0, EXIT_USAGE);
    }

    #[test]
    fn help_and_version_succeed() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("exponents"));
        assert_eq!(call(&["--version"]).0, EXIT_OK);
        assert_eq!(call(&["bogus"]).0, EXIT_USAGE);
    }
}
