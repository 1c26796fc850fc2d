//! `entmat` command-line front end.
//!
//! Every subcommand is a plain function taking a [`RunConfig`] and two
//! writers, returning the process exit code, so the whole surface can be
//! driven in-process by tests. [`run`] parses arguments and dispatches.

mod args;
mod commands;
mod svg;

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::Parser;
use entmat_core::geometry::DEFAULT_TOL;
use entmat_core::{EntropyBackend, Error};

pub use commands::analyze::cmd_analyze;
pub use commands::census::{cmd_census, CensusSpan};
pub use commands::classify::cmd_classify;
pub use commands::maxent::{cmd_maxent, PlotOutputs};
pub use commands::verify::cmd_verify;

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_SIZE: u8 = 3;
pub const EXIT_AMBIGUITY: u8 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// How entanglement values are annotated. The numbers are the same
/// integers either way; `log2` writes them as multiples of `log 2`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Units {
    #[default]
    Ebits,
    Log2,
}

impl Units {
    pub fn as_str(self) -> &'static str {
        match self {
            Units::Ebits => "ebits",
            Units::Log2 => "log2",
        }
    }

    pub fn display(self, value: u64) -> String {
        match self {
            Units::Ebits if value == 1 => "1 ebit".into(),
            Units::Ebits => format!("{value} ebits"),
            Units::Log2 => format!("{value} log 2"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSource {
    Path(PathBuf),
    Inline(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub input: Option<GraphSource>,
    pub backend: EntropyBackend,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub tol: f64,
    pub jobs: usize,
    pub cache: Option<PathBuf>,
    pub units: Units,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            input: None,
            backend: EntropyBackend::CutRank,
            format: Format::Json,
            output: None,
            tol: DEFAULT_TOL,
            jobs: 1,
            cache: None,
            units: Units::Ebits,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(CliError::input(format!(
                "--tol must be positive, got {}",
                self.tol
            )));
        }
        if self.jobs == 0 {
            return Err(CliError::input("--jobs must be at least 1"));
        }
        Ok(())
    }
}

/// A failure already mapped to its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SizeLimit { .. } => EXIT_SIZE,
            Error::CoincidenceAmbiguity { .. } => EXIT_AMBIGUITY,
            Error::NonIntegralEntropy { .. } | Error::Inconsistency(_) => EXIT_VERIFY,
            _ => EXIT_INPUT,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

/// Runs a command body, reporting any error on `err` and returning the
/// exit code.
pub(crate) fn finish(err: &mut dyn Write, result: Result<u8, CliError>) -> u8 {
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code
        }
    }
}

/// Writes `text` to the configured output file, or to `out` when none.
pub(crate) fn emit(cfg: &RunConfig, out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    match &cfg.output {
        Some(path) => write_file(path, text),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| CliError::input(format!("writing output: {e}"))),
    }
}

pub(crate) fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

pub(crate) fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serialization is infallible");
    s.push('\n');
    s
}

/// Parses `args` (program name first) and runs the chosen subcommand.
/// `env_cache` is the `ENTMAT_CACHE` value; an explicit `--cache` wins.
pub fn run<I, T>(
    args: I,
    env_cache: Option<PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match args::Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
                return EXIT_INPUT;
            }
            let _ = out.write_all(rendered.as_bytes());
            return EXIT_OK;
        }
    };
    cli.dispatch(env_cache, out, err)
}
