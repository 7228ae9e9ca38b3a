use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pathcheck::contraction::Engine;
use pathcheck::formula::ParseError;
use pathcheck::trace::{load_trace, TraceError, TraceFormat};
use pathcheck::{Formula, Path};
use thiserror::Error;

mod bench;
mod check;
mod dot;
mod selftest;

#[derive(Parser)]
#[command(name = "pathcheck", version, about = "Check finite paths against LTL formulas with past and bounded operators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a trace satisfies a formula at position 0.
    Check(check::CheckArgs),
    /// Write DOT for a builder circuit or for every contraction stage.
    Dot(dot::DotArgs),
    /// Randomized differential campaign, circuit engine against the naive one.
    Selftest(selftest::SelftestArgs),
    /// Timing table over a grid of generated instances, as CSV.
    Bench(bench::BenchArgs),
}

/// Where the formula comes from.
#[derive(Args, Debug, Clone, Default)]
pub struct FormulaSource {
    /// Formula text.
    #[arg(long, conflicts_with = "formula_file")]
    pub formula: Option<String>,
    /// File holding the formula text.
    #[arg(long)]
    pub formula_file: Option<PathBuf>,
}

impl FormulaSource {
    pub fn is_given(&self) -> bool {
        self.formula.is_some() || self.formula_file.is_some()
    }

    pub fn load(&self) -> Result<Formula, CliError> {
        let text = match (&self.formula, &self.formula_file) {
            (Some(text), _) => text.clone(),
            (None, Some(path)) => read(path).map(|b| String::from_utf8_lossy(&b).into_owned())?,
            (None, None) => return Err(CliError::Usage("one of --formula or --formula-file is required".into())),
        };
        Formula::parse(&text).map_err(|source| CliError::Parse { text, source })
    }
}

#[derive(Args, Debug, Clone)]
pub struct TraceSource {
    /// Trace file, one state per row or line.
    #[arg(long)]
    pub trace: Option<PathBuf>,
    /// Trace file format.
    #[arg(long, default_value = "csv")]
    pub format: TraceFormat,
}

impl TraceSource {
    pub fn load(&self) -> Result<Path, CliError> {
        let path = self
            .trace
            .as_ref()
            .ok_or_else(|| CliError::Usage("--trace is required".into()))?;
        load_trace(&read(path)?, self.format).map_err(|source| CliError::Trace {
            path: path.clone(),
            source,
        })
    }
}

#[derive(Args, Debug, Clone)]
pub struct EngineArgs {
    #[arg(long, default_value = "circuit")]
    pub engine: Engine,
    /// Worker threads for contraction; defaults to the machine's parallelism.
    #[arg(long)]
    pub workers: Option<usize>,
}

impl EngineArgs {
    pub fn workers(&self) -> Result<usize, CliError> {
        resolve_workers(self.workers)
    }
}

pub fn resolve_workers(w: Option<usize>) -> Result<usize, CliError> {
    match w {
        Some(0) => Err(CliError::Usage("--workers must be at least 1".into())),
        Some(w) => Ok(w),
        None => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{}", caret(text, source))]
    Parse { text: String, source: ParseError },
    #[error("{}: {source}", path.display())]
    Trace { path: PathBuf, source: TraceError },
    #[error("writing output: {0}")]
    Output(String),
    #[error(transparent)]
    Check(#[from] pathcheck::Error),
}

/// The parse error followed by the offending line with a caret under the
/// reported column.
fn caret(text: &str, e: &ParseError) -> String {
    let line = text.lines().nth(e.line.saturating_sub(1)).unwrap_or("");
    format!("{e}\n  {line}\n  {}^", " ".repeat(e.column.saturating_sub(1)))
}

pub fn read(path: &std::path::Path) -> Result<Vec<u8>, CliError> {
    std::fs::read(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write(path: &std::path::Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check(args) => check::run(&args),
        Command::Dot(args) => dot::run(&args),
        Command::Selftest(args) => selftest::run(&args),
        Command::Bench(args) => bench::run(&args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
