//! Command-line front end for the `fiberbound` engine: scheme files in,
//! deterministic text or JSON reports out.

pub mod commands;
pub mod report;
pub mod scheme;
pub mod verify;

use std::fmt;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use fiberbound::bounds::BoundKind;
use fiberbound::Error;

/// Process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Exit {
    Success = 0,
    /// A bound is violated or a verification check failed.
    Violated = 1,
    /// Unreadable file, malformed input, or inconsistent flags.
    Input = 2,
    Internal = 3,
    /// Well-formed input outside the engine's domain, such as an ideal that
    /// is not zero-dimensional.
    Domain = 4,
}

impl Exit {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliError {
    pub exit: Exit,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> CliError {
        CliError {
            exit: Exit::Input,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

pub fn classify(e: &Error) -> Exit {
    match e {
        Error::Syntax { .. }
        | Error::UnknownVariable { .. }
        | Error::BadExponent { .. }
        | Error::InvalidField(_)
        | Error::InvalidRing(_)
        | Error::RingMismatch
        | Error::LengthMismatch(..)
        | Error::ZeroIdeal
        | Error::DeclaredDimension { .. }
        | Error::TooFewVariables { .. }
        | Error::BoardmanSymbol(_) => Exit::Input,
        Error::ImproperIdeal
        | Error::NotZeroDimensional(_)
        | Error::ZeroDenominator
        | Error::NegativeDenominator { .. }
        | Error::Precondition(_) => Exit::Domain,
        Error::AlgebraMismatch
        | Error::DimensionMismatch { .. }
        | Error::NotSubmodule
        | Error::NotModuleMap => Exit::Internal,
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        CliError {
            exit: classify(&e),
            message: e.to_string(),
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "fiberbound",
    version,
    about = "Invariants of finite schemes and fiber bounds for generic projections"
)]
pub struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Subscheme,
    Tb,
    Family,
    Fiber,
}

impl From<KindArg> for BoundKind {
    fn from(k: KindArg) -> BoundKind {
        match k {
            KindArg::Subscheme => BoundKind::Subscheme,
            KindArg::Tb => BoundKind::ThomBoardman,
            KindArg::Family => BoundKind::Family,
            KindArg::Fiber => BoundKind::Fiber,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Degree, and the degrees of the differentials, tangent and normal modules.
    Invariants { file: PathBuf },
    /// Evaluate one of the fiber inequalities.
    Bound {
        kind: KindArg,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        c: Option<u64>,
        #[arg(long)]
        m: Option<u64>,
        /// Comma-separated coranks for `tb`.
        #[arg(long, value_delimiter = ',')]
        coranks: Vec<u64>,
        /// Fiber degree for `fiber`, instead of a scheme file.
        #[arg(long)]
        deg_z: Option<u64>,
        /// Degree of the generated submodule for `fiber`, instead of a scheme file.
        #[arg(long)]
        deg_closure: Option<u64>,
        files: Vec<PathBuf>,
    },
    /// First-order deformations inside the normal module.
    Deform {
        file: PathBuf,
        /// Restrict to deformations along which the differentials stay flat.
        #[arg(long)]
        fix_omega: bool,
        /// Also report the dimension of the generated submodule.
        #[arg(long)]
        closure: bool,
    },
    /// The q invariant of two subvarieties meeting in a finite scheme.
    Qinv {
        #[arg(long)]
        x: PathBuf,
        #[arg(long)]
        y: PathBuf,
        #[arg(long)]
        dim_x: Option<usize>,
    },
    /// Recompute the published example values from the bundled fixtures.
    VerifyPaper {
        /// Read fixtures from this directory instead of the bundled copies.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Invariants { .. } => "invariants",
            Command::Bound { .. } => "bound",
            Command::Deform { .. } => "deform",
            Command::Qinv { .. } => "qinv",
            Command::VerifyPaper { .. } => "verify-paper",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub exit: Exit,
}

/// Run a parsed command line.
pub fn run(cli: &Cli) -> Output {
    let start = std::time::Instant::now();
    let outcome = match &cli.command {
        Command::Invariants { file } => commands::invariants(file),
        Command::Bound {
            kind,
            n,
            c,
            m,
            coranks,
            deg_z,
            deg_closure,
            files,
        } => {
            let args = commands::BoundArgs {
                n: *n,
                c: *c,
                m: *m,
                coranks: coranks.clone(),
                deg_z: *deg_z,
                deg_closure: *deg_closure,
            };
            commands::bound((*kind).into(), &args, files)
        }
        Command::Deform {
            file,
            fix_omega,
            closure,
        } => commands::deform(file, *fix_omega, *closure),
        Command::Qinv { x, y, dim_x } => commands::qinv(x, y, *dim_x),
        Command::VerifyPaper { fixtures } => verify::verify_paper(fixtures.as_deref()),
    };
    match outcome {
        Ok(report) => {
            let stdout = if cli.json {
                report.to_json(Some(start.elapsed()))
            } else {
                report.to_text()
            };
            Output {
                stdout,
                stderr: String::new(),
                exit: report.exit,
            }
        }
        Err(e) => {
            let stdout = if cli.json {
                report::error_json(cli.command.name(), &e)
            } else {
                String::new()
            };
            Output {
                stdout,
                stderr: format!("error: {e}\n"),
                exit: e.exit,
            }
        }
    }
}
