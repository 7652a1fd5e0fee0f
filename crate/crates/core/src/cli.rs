// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on a verification or internal failure,
//! 2 on a usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::closed_forms::{is_strictly_increasing, kirchhoff_closed, ratio_point, spanning_trees_closed, wiener_closed, RatioPoint};
use crate::error::Error;
use crate::graph::{wiener_index_bfs, GraphFamily, Variant};
use crate::linalg::{kirchhoff_exact, spanning_tree_count};
use crate::parallel;
use crate::report::{aligned_table, integer_string, render_decimal, reports_to_csv, Format, InvariantReport};
use crate::spectral::{kirchhoff_spectral, resistance_distances, spanning_trees_spectral};
use crate::table;
use crate::verify::{self, VerifyOptions, RELATIVE_TOLERANCE};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "pentakirch",
    version,
    about = "Kirchhoff index, Wiener index and spanning trees of pentagonal cylinder and Möbius chains"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute invariants of one graph.
    Compute(ComputeArgs),
    /// Reproduce the reference table and compare it cell by cell.
    Table1(Table1Args),
    /// Run every cross-check.
    Verify(VerifyArgs),
    /// Emit the W/Kf series for plotting.
    Series(SeriesArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum What {
    Kf,
    Wiener,
    Trees,
    Resistance,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    Exact,
    Spectral,
    All,
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    /// Number of pentagons (n >= 2).
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "cylinder")]
    pub variant: VariantArg,
    /// Comma-separated list of invariants.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "kf")]
    pub what: Vec<What>,
    #[arg(long, value_enum, default_value = "closed")]
    pub method: Method,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
    /// Decimal digits for exact rationals and tabulated floats.
    #[arg(long, default_value_t = 6)]
    pub precision: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct Table1Args {
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 2)]
    pub n_min: usize,
    #[arg(long, default_value_t = 12)]
    pub n_max: usize,
    /// Raise the spanning-tree cap to n = 30 and the Wiener cap to n = 50.
    #[arg(long)]
    pub deep: bool,
    #[arg(long, hide = true)]
    pub corrupt_corner_sign: bool,
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    #[arg(long, value_enum, default_value = "cylinder")]
    pub variant: VariantArg,
    #[arg(long)]
    pub n_max: usize,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Cylinder,
    #[value(alias = "mobius", alias = "möbius")]
    Moebius,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Cylinder => Variant::Cylinder,
            VariantArg::Moebius => Variant::Moebius,
        }
    }
}

/// Why a command stopped early.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ChainTooShort(_) | Error::InvalidRange { .. } => Failure::Usage(e.to_string()),
            other => Failure::Internal(other.to_string()),
        }
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{text}");
                EXIT_OK
            };
        }
    };
    let outcome = match cli.command {
        Command::Compute(a) => cmd_compute(&a, stdout, stderr),
        Command::Table1(a) => cmd_table1(&a, stdout, stderr),
        Command::Verify(a) => cmd_verify(&a, stdout),
        Command::Series(a) => cmd_series(&a, stdout, stderr),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}\n\nFor more information, try '--help'.");
            EXIT_USAGE
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_FAILURE
        }
    }
}

fn emit(text: &str, out: &Option<PathBuf>, stdout: &mut dyn Write) -> std::result::Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Internal(format!("cannot write {}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Internal(format!("cannot write output: {e}"))),
    }
}

fn family(n: usize, variant: VariantArg) -> std::result::Result<GraphFamily, Failure> {
    GraphFamily::new(variant.into(), n).map_err(|e| Failure::Usage(format!("invalid value for '--n': {e}")))
}

fn relative_gap(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1.0)
}

/// Computes the requested fields of one report. `methods_agree` is only
/// set when `method` is `all`.
pub fn compute_report(family: &GraphFamily, what: &[What], method: Method, precision: usize) -> crate::Result<InvariantReport> {
    let g = family.build();
    let mut report = InvariantReport::new(family.n(), family.variant());
    let wants = |w| what.contains(&w);
    let (closed, exact, spectral) = match method {
        Method::Closed => (true, false, false),
        Method::Exact => (false, true, false),
        Method::Spectral => (false, false, true),
        Method::All => (true, true, true),
    };
    let mut agree = true;

    let mut kf_value: Option<f64> = None;
    if wants(What::Kf) {
        let mut closed_q: Option<BigRational> = None;
        if closed {
            let q = kirchhoff_closed(family)?;
            report.kf_closed = Some(render_decimal(&q, precision));
            kf_value = q.to_f64();
            closed_q = Some(q);
        }
        if exact {
            let q = kirchhoff_exact(&g)?;
            report.kf_exact = Some(render_decimal(&q, precision));
            if let Some(c) = &closed_q {
                agree &= *c == q;
            }
            kf_value = kf_value.or(q.to_f64());
        }
        if spectral {
            let s = kirchhoff_spectral(&g)?;
            report.kf_spectral = Some(s);
            if let Some(v) = kf_value {
                agree &= relative_gap(v, s) <= RELATIVE_TOLERANCE;
            }
            kf_value = kf_value.or(Some(s));
        }
    }
    if wants(What::Resistance) {
        let r = resistance_distances(&g)?.kirchhoff_index();
        report.kf_resistance = Some(r);
        if method == Method::All {
            let target = kirchhoff_closed(family)?.to_f64().unwrap_or(f64::NAN);
            agree &= relative_gap(target, r) <= RELATIVE_TOLERANCE;
        }
    }
    if wants(What::Wiener) {
        let w = if closed {
            let w = wiener_closed(family)?;
            w.to_u64().ok_or_else(|| Error::NotIntegral(w.to_string()))?
        } else {
            wiener_index_bfs(&g)?
        };
        if method == Method::All {
            agree &= wiener_index_bfs(&g)? == w;
        }
        report.wiener = Some(w);
        if let Some(kf) = kf_value {
            report.ratio_w_over_kf = Some(w as f64 / kf);
        }
    }
    if wants(What::Trees) {
        let mut value: Option<BigInt> = None;
        if closed {
            value = Some(spanning_trees_closed(family));
        }
        if exact {
            let t = spanning_tree_count(&g);
            if let Some(c) = &value {
                agree &= *c == t;
            }
            value = value.or(Some(t));
        }
        let mut rendered = value.as_ref().map(integer_string);
        if spectral {
            let s = spanning_trees_spectral(&g)?;
            match &value {
                Some(v) => agree &= relative_gap(v.to_f64().unwrap_or(f64::INFINITY), s) <= RELATIVE_TOLERANCE,
                None => rendered = Some(format!("{s:.0}")),
            }
        }
        report.spanning_trees = rendered;
    }
    if method == Method::All {
        report.methods_agree = Some(agree);
    }
    Ok(report)
}

fn compute_table_text(report: &InvariantReport, precision: usize) -> String {
    let fields: Vec<(&str, String)> = report
        .fields()
        .into_iter()
        .skip(2)
        .map(|(k, v)| match k {
            "kf_spectral" | "kf_resistance" | "ratio_w_over_kf" => {
                let x: f64 = v.parse().expect("float field");
                (k, format!("{x:.precision$}"))
            }
            _ => (k, v),
        })
        .collect();
    if fields.len() == 1 {
        return format!("{}\n", fields[0].1);
    }
    let rows: Vec<Vec<String>> = fields.into_iter().map(|(k, v)| vec![k.to_string(), v]).collect();
    let mut text = format!("{} n = {}\n", report.variant, report.n);
    text.push_str(&aligned_table(&["field", "value"], &rows));
    text
}

fn cmd_compute(args: &ComputeArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Outcome {
    let family = family(args.n, args.variant)?;
    let report = compute_report(&family, &args.what, args.method, args.precision)?;
    let text = match args.format {
        Format::Json => report.to_json() + "\n",
        Format::Csv => reports_to_csv(std::slice::from_ref(&report)),
        Format::Table => compute_table_text(&report, args.precision),
    };
    emit(&text, &args.out, stdout)?;
    if report.methods_agree == Some(false) {
        let _ = writeln!(stderr, "error: methods disagree for {} n = {}", family.variant(), family.n());
        return Ok(EXIT_FAILURE);
    }
    Ok(EXIT_OK)
}

fn cmd_table1(args: &Table1Args, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Outcome {
    let rows = parallel::install(table::compute_table)?;
    let text = match args.format {
        Format::Table => table::render_text(&rows),
        Format::Csv => table::render_csv(&rows),
        Format::Json => table::render_json(&rows) + "\n",
    };
    emit(&text, &args.out, stdout)?;
    let deviations = table::compare_with_reference(&rows);
    if deviations.is_empty() {
        return Ok(EXIT_OK);
    }
    let _ = writeln!(stderr, "{} cell(s) deviate from the reference table:", deviations.len());
    for d in &deviations {
        let _ = writeln!(stderr, "  n={} {} {}: reference {}, computed {}", d.n, d.variant, d.column, d.reference, d.computed);
    }
    Ok(EXIT_FAILURE)
}

fn cmd_verify(args: &VerifyArgs, stdout: &mut dyn Write) -> Outcome {
    let opts = VerifyOptions {
        n_min: args.n_min,
        n_max: args.n_max,
        deep: args.deep,
        corrupt_corner_sign: args.corrupt_corner_sign,
    };
    let outcomes = parallel::install(|| verify::run_all(&opts))?;
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    let mut text = String::new();
    for o in &outcomes {
        text.push_str(&format!("{o}\n"));
    }
    text.push_str(&format!("{} checks, {} passed, {} failed\n", outcomes.len(), outcomes.len() - failed, failed));
    emit(&text, &None, stdout)?;
    Ok(if failed == 0 { EXIT_OK } else { EXIT_FAILURE })
}

/// `(n, Kf, W, W/Kf)` for `n = 2..=n_max`, computed in parallel.
pub fn series_points(variant: Variant, n_max: usize) -> crate::Result<Vec<RatioPoint>> {
    if n_max < 2 {
        return Err(Error::ChainTooShort(n_max));
    }
    let ns: Vec<usize> = (2..=n_max).collect();
    ns.par_iter()
        .map(|&n| ratio_point(&GraphFamily::new(variant, n)?))
        .collect()
}

fn series_json(points: &[RatioPoint]) -> String {
    let rows: Vec<serde_json::Value> = points
        .iter()
        .map(|p| {
            serde_json::json!({
                "n": p.n,
                "kf": render_decimal(&p.kirchhoff, 6),
                "wiener": p.wiener.to_u64(),
                "ratio": p.ratio,
            })
        })
        .collect();
    serde_json::to_string(&rows).expect("series serializes") + "\n"
}

fn cmd_series(args: &SeriesArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Outcome {
    if args.n_max < 2 {
        return Err(Failure::Usage(format!("invalid value for '--n-max': {}", Error::ChainTooShort(args.n_max))));
    }
    let variant: Variant = args.variant.into();
    let points = parallel::install(|| series_points(variant, args.n_max))?;
    let text = match args.format {
        Format::Csv => {
            let mut s = String::from("n,kf,wiener,ratio\n");
            for p in &points {
                s.push_str(&format!("{},{},{},{}\n", p.n, render_decimal(&p.kirchhoff, 6), p.wiener, p.ratio));
            }
            s
        }
        Format::Json => series_json(&points),
        Format::Table => {
            let rows: Vec<Vec<String>> = points
                .iter()
                .map(|p| vec![p.n.to_string(), render_decimal(&p.kirchhoff, 6), p.wiener.to_string(), format!("{:.11}", p.ratio)])
                .collect();
            aligned_table(&["n", "kf", "wiener", "ratio"], &rows)
        }
    };
    emit(&text, &args.out, stdout)?;
    let monotone = if is_strictly_increasing(&points) { "yes" } else { "no" };
    let _ = writeln!(stderr, "{variant}: ratio strictly increasing over n = 2..={}: {monotone}", args.n_max);
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("pentakirch").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn compute_json_example() {
        let (code, out, _) = run_capture(&["compute", "--n", "2", "--variant", "cylinder", "--what", "kf", "--method", "closed", "--format", "json"]);
        assert_eq!(code, 0);
        assert_eq!(out, "{\"n\":2,\"variant\":\"cylinder\",\"kf_closed\":\"39.083333\"}\n");
    }

    #[test]
    fn compute_trees_exact() {
        let (code, out, _) = run_capture(&["compute", "--n", "2", "--variant", "moebius", "--what", "trees", "--method", "exact"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "800");
    }

    #[test]
    fn short_chain_is_usage_error() {
        let (code, _, err) = run_capture(&["compute", "--n", "1"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("n >= 2"), "{err}");
    }

    #[test]
    fn all_methods_agree() {
        let (code, out, _) = run_capture(&["compute", "--n", "3", "--what", "kf,wiener,trees,resistance", "--method", "all", "--format", "json"]);
        assert_eq!(code, 0);
        let report: InvariantReport = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(report.methods_agree, Some(true));
        assert_eq!(report.wiener, Some(249));
        assert_eq!(report.kf_closed, report.kf_exact);
    }

    #[test]
    fn series_rejects_short() {
        let (code, _, err) = run_capture(&["series", "--n-max", "1"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("n >= 2"));
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_capture(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("table1"));
    }
}
