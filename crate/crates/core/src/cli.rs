//! Command-line front end. `run` holds all of it so tests can drive the
//! commands without spawning a process.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage or parse
//! error.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::identities::{run_suite, Suite, VerifyConfig};
use crate::perm::{CycleForm, Permutation};
use crate::recurrence::{Family, Triangle, TriangleFamily};
use crate::report::Aggregate;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest integer a JSON consumer can hold in an IEEE double without loss.
const MAX_SAFE_INTEGER: i64 = (1 << 53) - 1;

#[derive(Debug, Parser)]
#[command(
    name = "cyclic-stats",
    version,
    about = "Cyclic peak and valley statistics of permutations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficient rows of a specialized family.
    Triangle(TriangleArgs),
    /// One polynomial in canonical text form.
    Poly(PolyArgs),
    /// Run identity checks.
    Verify(VerifyArgs),
    /// Every statistic of one permutation.
    Stats(StatsArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Plain,
}

#[derive(Debug, Args)]
pub struct TriangleArgs {
    /// M, Mbar, D, Dbar, runs, combinedR, combinedI, stirlingS or stirlingT.
    #[arg(long, value_parser = parse_with::<TriangleFamily>)]
    pub family: TriangleFamily,
    #[arg(long)]
    pub max_n: usize,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    /// P, V, Pder, Vder, W, Wbar, S, T, runs, combinedR or combinedI.
    #[arg(long, value_parser = parse_with::<Family>)]
    pub family: Family,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: ReportFormat,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// all, bell, pell, euler, stirling, degrees, xcoeff, logconcave, egf,
    /// oracle, rowsums, switching or linear.
    #[arg(long, default_value = "all", value_parser = parse_with::<Suite>)]
    pub suite: Suite,
    #[arg(long, default_value_t = 14)]
    pub max_n: usize,
    #[arg(long, default_value_t = 8)]
    pub oracle_cap: usize,
    #[arg(long, default_value_t = 12)]
    pub egf_order: usize,
    /// Worker threads for exhaustive enumeration.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: u16,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: ReportFormat,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false, id = "input")]
pub struct StatsInput {
    /// One-line notation, e.g. 64713258 or 10,2,1,...
    #[arg(long)]
    pub word: Option<String>,
    /// A written cycle form, e.g. "(1,6,2,4)(3,7,5)(8)". Cyclic statistics
    /// are read from it as written.
    #[arg(long)]
    pub cycles: Option<String>,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    #[command(flatten)]
    pub input: StatsInput,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: ReportFormat,
}

fn parse_with<T: std::str::FromStr<Err = Error>>(s: &str) -> std::result::Result<T, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match execute(&cli.command) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Output text and exit code of a parsed command.
pub fn execute(command: &Command) -> Result<(String, i32)> {
    match command {
        Command::Triangle(a) => Ok((cmd_triangle(a.family, a.max_n, a.format)?, EXIT_OK)),
        Command::Poly(a) => Ok((cmd_poly(a.family, a.n, a.format)?, EXIT_OK)),
        Command::Verify(a) => {
            let config = VerifyConfig {
                max_n: a.max_n,
                oracle_cap: a.oracle_cap,
                egf_order: a.egf_order,
                jobs: a.jobs as usize,
            };
            cmd_verify(a.suite, &config, a.format)
        }
        Command::Stats(a) => {
            let text = match (&a.input.word, &a.input.cycles) {
                (Some(w), _) => cmd_stats_word(w, a.format)?,
                (None, Some(c)) => cmd_stats_cycles(c, a.format)?,
                (None, None) => return Err(Error::Usage("give --word or --cycles".into())),
            };
            Ok((text, EXIT_OK))
        }
    }
}

fn json_int(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(i) if (-MAX_SAFE_INTEGER..=MAX_SAFE_INTEGER).contains(&i) => Value::from(i),
        _ => Value::String(v.to_string()),
    }
}

fn to_json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn triangle_json(t: &Triangle) -> Value {
    json!({
        "family": t.family.name(),
        "offset": t.offset,
        "rows": t.rows.iter().map(|r| r.iter().map(json_int).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

/// The JSON document printed by `triangle --format json`.
pub fn triangle_document(t: &Triangle) -> String {
    to_json_line(&triangle_json(t))
}

pub fn cmd_triangle(family: TriangleFamily, max_n: usize, format: Format) -> Result<String> {
    if max_n < 1 {
        return Err(Error::Usage("--max-n must be at least 1".into()));
    }
    let t = Triangle::compute(family, max_n)?;
    let join = |sep: &str| {
        t.rows
            .iter()
            .map(|r| r.iter().map(BigInt::to_string).collect::<Vec<_>>().join(sep) + "\n")
            .collect::<String>()
    };
    Ok(match format {
        Format::Json => triangle_document(&t),
        Format::Csv => join(","),
        Format::Plain => join(" "),
    })
}

pub fn cmd_poly(family: Family, n: usize, format: ReportFormat) -> Result<String> {
    let p = family.nth(n)?;
    Ok(match format {
        ReportFormat::Plain => format!("{p}\n"),
        ReportFormat::Json => to_json_line(&json!({
            "family": family.name(),
            "n": n,
            "poly": p.to_string(),
        })),
    })
}

pub fn cmd_verify(suite: Suite, config: &VerifyConfig, format: ReportFormat) -> Result<(String, i32)> {
    let agg = run_suite(suite, config)?;
    let code = if agg.passed() { EXIT_OK } else { EXIT_FAILED };
    let text = match format {
        ReportFormat::Plain => agg.to_string(),
        ReportFormat::Json => report_json(suite, config, &agg),
    };
    Ok((text, code))
}

/// The JSON document printed by `verify --format json`.
pub fn report_json(suite: Suite, config: &VerifyConfig, agg: &Aggregate) -> String {
    to_json_line(&json!({
        "suite": suite.name(),
        "config": config,
        "status": agg.status,
        "findings": agg.findings,
        "checks": agg.checks,
    }))
}

fn stats_text(word: &Permutation, written: &CycleForm, format: ReportFormat) -> String {
    let c = written.cycle_stats();
    let l = word.linear_stats();
    match format {
        ReportFormat::Plain => format!(
            "word: {word}\ncycles: {written}\ncpk={} cval={} cyc={} fix={} pk={} val={} lpk={} runs={}\n",
            c.cpk, c.cval, c.cyc, c.fix, l.pk, l.val, l.lpk, l.runs
        ),
        ReportFormat::Json => to_json_line(&json!({
            "word": word.to_string(),
            "cycles": written.to_string(),
            "cyclic": c,
            "linear": l,
        })),
    }
}

pub fn cmd_stats_word(text: &str, format: ReportFormat) -> Result<String> {
    let p: Permutation = text.parse()?;
    Ok(stats_text(&p, &p.cycle_form(), format))
}

pub fn cmd_stats_cycles(text: &str, format: ReportFormat) -> Result<String> {
    let c: CycleForm = text.parse()?;
    Ok(stats_text(&c.to_permutation(), &c, format))
}
