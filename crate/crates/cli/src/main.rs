mod plot;
mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use supportimpl::curveimpl::{implicitize, CurveError};
use supportimpl::surfimpl::tables::{run_row, select_rows};
use supportimpl::surfimpl::{
    harmonic_surface, revolution_surface, sendra_degrees_with, surface_implicitize_small, SendraOptions, SurfaceError,
    SurfaceParam, SMALL_DEGREE_LIMIT,
};
use supportimpl::trigsupport::{classify, is_convex, parity_class, SphericalSupport, SupportError, TrigPoly};

use report::{CheckReport, Envelope, SurfaceOutput};

#[derive(Parser, Debug)]
#[command(name = "supportimpl", version, about = "Implicit equations and degrees from support functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Support-function file.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Treat the input as a planar support function and rotate its curve about the x-axis.
    #[arg(long, global = true)]
    revolve: bool,
    /// Admit inputs above the default cost limit.
    #[arg(long, global = true)]
    slow: bool,
    #[arg(long, global = true, default_value_t = 1000, value_parser = clap::value_parser!(u32).range(1..))]
    samples: u32,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Table rows by id or label, comma separated.
    #[arg(long, global = true, value_delimiter = ',')]
    rows: Vec<String>,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
enum Command {
    /// Defining polynomial of a planar curve.
    Curve,
    /// Map degree and partial degrees of a surface.
    Surface,
    /// Recompute the bundled partial-degree tables.
    Table,
    /// Sample a planar curve as SVG or CSV.
    Plot,
    /// Classification and convexity of a planar support function.
    Check,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Svg,
    Csv,
}

const PARSE: u8 = 1;
const DEGENERATE: u8 = 2;
const ASSUMPTION: u8 = 3;
const MISMATCH: u8 = 4;
const REFUSED: u8 = 5;

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

impl From<SupportError> for Failure {
    fn from(e: SupportError) -> Self {
        fail(PARSE, e.to_string())
    }
}

impl From<CurveError> for Failure {
    fn from(e: CurveError) -> Self {
        fail(DEGENERATE, e.to_string())
    }
}

impl From<SurfaceError> for Failure {
    fn from(e: SurfaceError) -> Self {
        let code = match e {
            SurfaceError::Assumption(_) | SurfaceError::InconsistentDegrees { .. } => ASSUMPTION,
            SurfaceError::TooExpensive(_) | SurfaceError::Timeout(_) => REFUSED,
            _ => DEGENERATE,
        };
        fail(code, e.to_string())
    }
}

fn read_input(cli: &Cli) -> Result<(String, String), Failure> {
    let path = cli.input.as_ref().ok_or_else(|| fail(PARSE, "--input is required"))?;
    let text = fs::read_to_string(path).map_err(|e| fail(PARSE, format!("{}: {e}", path.display())))?;
    Ok((path.display().to_string(), text))
}

fn envelope<T>(cli: &Cli, command: &str, input: Option<String>, report: T) -> Envelope<T> {
    Envelope { command: command.into(), input, seed: cli.seed, report }
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => fs::write(path, text).map_err(|e| fail(PARSE, format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn format_or(cli: &Cli, default: Format, allowed: &[Format]) -> Result<Format, Failure> {
    let f = cli.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(fail(PARSE, format!("format {f:?} is not available for this command").to_lowercase()))
    }
}

fn cmd_curve(cli: &Cli) -> Result<u8, Failure> {
    let format = format_or(cli, Format::Text, &[Format::Text, Format::Json])?;
    let (path, text) = read_input(cli)?;
    let p = TrigPoly::parse(&text)?;
    let r = implicitize(&p)?;
    let env = envelope(cli, "curve", Some(path), r);
    emit(cli, &if format == Format::Json { report::json(&env) } else { report::curve_text(&env) })?;
    Ok(0)
}

fn surface_input(cli: &Cli, text: &str) -> Result<SurfaceParam, Failure> {
    if cli.revolve {
        Ok(revolution_surface(&TrigPoly::parse(text)?)?)
    } else {
        Ok(harmonic_surface(&SphericalSupport::parse(text)?)?)
    }
}

fn cmd_surface(cli: &Cli) -> Result<u8, Failure> {
    let format = format_or(cli, Format::Text, &[Format::Text, Format::Json])?;
    let (path, text) = read_input(cli)?;
    let s = surface_input(cli, &text)?;
    let opts = SendraOptions { slow: cli.slow, timeout: None };
    let mut degrees = sendra_degrees_with(&s, &opts)?;
    degrees.input = Some(path.clone());
    degrees.wall_time_ms = None;
    let implicit = if s.max_degree() <= SMALL_DEGREE_LIMIT {
        surface_implicitize_small(&s).ok().map(|f| f.to_string())
    } else {
        None
    };
    let env = envelope(cli, "surface", Some(path), SurfaceOutput { degrees, implicit });
    emit(cli, &if format == Format::Json { report::json(&env) } else { report::surface_text(&env) })?;
    Ok(0)
}

fn cmd_table(cli: &Cli) -> Result<u8, Failure> {
    let format = format_or(cli, Format::Text, &[Format::Text, Format::Json, Format::Csv])?;
    let rows = select_rows(&cli.rows, cli.slow);
    if rows.is_empty() {
        return Err(fail(PARSE, format!("no table row matches {}", cli.rows.join(", "))));
    }
    let opts = SendraOptions { slow: true, timeout: Some(Duration::from_secs(3600)) };
    let outcomes: Vec<_> = rows
        .iter()
        .map(|row| {
            let mut out = run_row(row, &opts);
            if let Some(r) = out.report.as_mut() {
                r.wall_time_ms = None;
            }
            out
        })
        .collect();
    let all_match = outcomes.iter().all(|o| o.all_match());
    let env = envelope(cli, "table", None, outcomes);
    let body = match format {
        Format::Json => report::json(&env),
        Format::Csv => report::table_csv(&env.report),
        _ => report::table_text(&env),
    };
    emit(cli, &body)?;
    Ok(if all_match { 0 } else { MISMATCH })
}

fn sibling(path: &Path, ext: &str) -> PathBuf {
    path.with_extension(ext)
}

fn cmd_plot(cli: &Cli) -> Result<u8, Failure> {
    let format = format_or(cli, Format::Svg, &[Format::Svg, Format::Csv])?;
    let (_, text) = read_input(cli)?;
    let p = TrigPoly::parse(&text)?;
    if p.is_zero() {
        return Err(fail(DEGENERATE, CurveError::EmptySupport.to_string()));
    }
    let samples = plot::sample(&p, cli.samples as usize);
    let svg = plot::svg(&samples, cli.seed);
    let csv = plot::csv(&samples);
    match &cli.out {
        Some(path) => {
            for (ext, body) in [("svg", &svg), ("csv", &csv)] {
                let target = sibling(path, ext);
                fs::write(&target, body).map_err(|e| fail(PARSE, format!("{}: {e}", target.display())))?;
            }
        }
        None => print!("{}", if format == Format::Csv { csv } else { svg }),
    }
    Ok(0)
}

fn cmd_check(cli: &Cli) -> Result<u8, Failure> {
    let format = format_or(cli, Format::Text, &[Format::Text, Format::Json])?;
    let (path, text) = read_input(cli)?;
    let p = TrigPoly::parse(&text)?;
    if p.is_zero() {
        return Err(fail(DEGENERATE, CurveError::EmptySupport.to_string()));
    }
    let check = CheckReport {
        support: p.to_formula(),
        parity: parity_class(&p),
        classification: classify(&p),
        convexity: is_convex(&p),
    };
    let env = envelope(cli, "check", Some(path), check);
    emit(cli, &if format == Format::Json { report::json(&env) } else { report::check_text(&env) })?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { PARSE } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Curve => cmd_curve(&cli),
        Command::Surface => cmd_surface(&cli),
        Command::Table => cmd_table(&cli),
        Command::Plot => cmd_plot(&cli),
        Command::Check => cmd_check(&cli),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
