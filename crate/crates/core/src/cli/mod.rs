//! Command-line front end: `dim`, `decomp`, `verify <suite>` and
//! `cache <build|inspect|purge>`, each printing one JSON report.
//!
//! Exit codes: 0 when every check passes, 1 when one fails, 2 for an
//! invalid configuration, an unmet hypothesis or an I/O problem.

pub mod cache;
pub mod config;
pub mod report;
pub mod suites;

use std::ffi::OsString;

use clap::Parser;
use thiserror::Error;

pub use config::{CacheAction, Cli, Command, CommonArgs, ConfigEcho, RunConfig, Suite};
pub use report::{ReportDocument, Status};

use crate::ariki_koike::AkError;
use crate::exact_linear::{FieldSpec, Fp, Rational, ScalarError};
use crate::modified_ak::ModifiedError;
use crate::parabolic::ParabolicError;
use crate::schur::SchurError;
use cache::build_entry;
use suites::{decomp, dim, verify, Outcome, Timer};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("computation failed: {0}")]
    Computation(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Computation(_) => 1,
            _ => 2,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::InvalidConfig(_) => "InvalidConfig",
            CliError::HypothesisNotMet(_) => "HypothesisNotMet",
            CliError::Computation(_) => "Computation",
            CliError::Io(_) => "IoError",
            CliError::Json(_) => "IoError",
        }
    }
}

impl From<ScalarError> for CliError {
    fn from(e: ScalarError) -> Self {
        CliError::InvalidConfig(e.to_string())
    }
}

impl From<ModifiedError> for CliError {
    fn from(e: ModifiedError) -> Self {
        match e {
            ModifiedError::RepeatedParameter => CliError::HypothesisNotMet(e.to_string()),
            e => CliError::Computation(e.to_string()),
        }
    }
}

macro_rules! computation_errors {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Computation(e.to_string())
            }
        }
    )*};
}
computation_errors!(AkError, SchurError, ParabolicError);

fn dispatch(cfg: &RunConfig, command: &Command, t: &Timer) -> Result<Outcome, CliError> {
    macro_rules! over_field {
        ($f:ident) => {
            match cfg.params.field {
                FieldSpec::Rational => $f::<Rational>,
                FieldSpec::PrimeField(_) => $f::<Fp>,
            }
        };
    }
    match command {
        Command::Dim(_) => over_field!(dim)(cfg, t),
        Command::Decomp(_) => over_field!(decomp)(cfg, t),
        Command::Verify { suite, .. } => over_field!(verify)(cfg, *suite, t),
        Command::Cache { common, .. } => over_field!(build_entry)(cfg, &common.cache_dir, t),
    }
}

/// Run a parsed command line and produce its report.
pub fn execute(cli: &Cli) -> ReportDocument {
    let t = Timer::new();
    let (name, suite, common) = match &cli.command {
        Command::Dim(c) => ("dim", None, c),
        Command::Decomp(c) => ("decomp", None, c),
        Command::Verify { suite, common } => ("verify", Some(suite.name().to_string()), common),
        Command::Cache { action, common } => {
            let sub = match action {
                CacheAction::Build => "build",
                CacheAction::Inspect => "inspect",
                CacheAction::Purge => "purge",
            };
            let cmd = format!("cache {sub}");
            let out = match action {
                CacheAction::Inspect => Some(cache::inspect(&common.cache_dir)),
                CacheAction::Purge => Some(cache::purge(&common.cache_dir)),
                CacheAction::Build => None,
            };
            if let Some(out) = out {
                return match out {
                    Ok(o) => ReportDocument::finished(cmd, None, None, o.checks, o.data),
                    Err(e) => ReportDocument::failed(cmd, None, None, &e),
                };
            }
            ("cache build", None, common)
        }
    };
    let cfg = match RunConfig::from_args(common) {
        Ok(c) => c,
        Err(e) => return ReportDocument::failed(name.into(), suite, None, &e),
    };
    let echo = Some(cfg.echo());
    let doc = match dispatch(&cfg, &cli.command, &t) {
        Ok(o) => ReportDocument::finished(name.into(), suite, echo, o.checks, o.data),
        Err(e) => ReportDocument::failed(name.into(), suite, echo, &e),
    };
    t.stage("done");
    doc
}

/// Parse `args`, run, write the report, and return the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    let doc = execute(&cli);
    let json = doc.to_json();
    let out = match &cli.command {
        Command::Dim(c) | Command::Decomp(c) | Command::Verify { common: c, .. } | Command::Cache { common: c, .. } => &c.out,
    };
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, json) {
                eprintln!("cannot write {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{json}"),
    }
    doc.exit_code
}

pub fn main() -> i32 {
    run(std::env::args_os())
}
