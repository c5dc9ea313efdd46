//! The `ziegler` command line: argument parsing, dispatch and reports.

mod commands;
mod regress;

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::{is_prime, CoefficientDomain};
use crate::error::ArrangementError;
use crate::resolution::multiprime::{Backend, Policy};

pub use commands::run_command;
pub use regress::{regress_cases, run_regress, RegressOutcome};

/// Coefficient domain for the computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Domain {
    /// Exact arithmetic over the rationals.
    Q,
    /// Prime fields with a vote over several primes.
    #[default]
    Gfp,
    /// Exact arithmetic over `Q(sqrt m)`.
    QSqrt(i64),
}

impl FromStr for Domain {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "q" | "Q" => Ok(Domain::Q),
            "gfp" => Ok(Domain::Gfp),
            _ => {
                let m = s
                    .strip_prefix("qsqrt:")
                    .ok_or_else(|| format!("unknown domain `{s}` (expected q, gfp or qsqrt:<m>)"))?;
                m.parse().map(Domain::QSqrt).map_err(|_| format!("bad radicand `{m}`"))
            }
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Q => write!(f, "q"),
            Domain::Gfp => write!(f, "gfp"),
            Domain::QSqrt(m) => write!(f, "qsqrt:{m}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "ziegler", version, about = "Jacobian syzygies and Ziegler pairs of hyperplane arrangements")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// q, gfp or qsqrt:<m>
    #[arg(long, global = true, default_value = "gfp")]
    pub domain: Domain,
    /// Comma separated primes for the gfp domain.
    #[arg(long, global = true, value_delimiter = ',')]
    pub primes: Vec<u64>,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Three-prime majority in gfp; exact arithmetic otherwise.
    #[arg(long, global = true)]
    pub certify: bool,
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Graded Betti numbers of the Jacobian syzygy module.
    Betti {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Hilbert function, polynomial and stabilization of the Jacobian algebra.
    Hilbert {
        file: PathBuf,
        /// Print the Hilbert function up to this degree.
        #[arg(long, default_value_t = 15)]
        degrees: usize,
    },
    /// Intersection lattice profile, optionally compared with a second file.
    Lattice {
        file: PathBuf,
        #[arg(long)]
        against: Option<PathBuf>,
    },
    /// Check the Ziegler pair conditions for two arrangements.
    Ziegler {
        first: PathBuf,
        second: PathBuf,
        /// A family file to sample for the specialization conditions.
        #[arg(long)]
        family: Option<PathBuf>,
        /// Parameter values for the family, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        samples: Vec<String>,
        /// The sample whose lattice is the reference.
        #[arg(long, default_value = "0")]
        reference: String,
    },
    /// Hilbert polynomial and syzygies of the cone over a line arrangement.
    Cone {
        file: PathBuf,
        /// Number of cone coordinates.
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Also resolve the cone directly and verify the predicted basis.
        #[arg(long)]
        direct: bool,
    },
    /// Tameness of a cone with respect to its first two syzygies.
    Tame { file: PathBuf },
    /// The elliptic matroid `T_n`.
    Tn {
        n: usize,
        /// Check every affine map `i -> u i + a`.
        #[arg(long)]
        automorphisms: bool,
    },
    /// The `T_10` family member `Q_t`; `t` may use `sqrt(5)`.
    Qt {
        #[arg(allow_hyphen_values = true)]
        t: String,
    },
    /// Evaluate the eleven-plane realization matrix at a parameter point.
    Realize {
        /// Comma separated rationals.
        #[arg(value_delimiter = ',', allow_hyphen_values = true, required = true)]
        point: Vec<String>,
        /// Matrix file; defaults to the shipped one.
        #[arg(long)]
        matrix: Option<PathBuf>,
    },
    /// Recompute every shipped example and diff against golden files.
    Regress {
        #[arg(long)]
        golden: Option<PathBuf>,
        /// Overwrite the golden files with the current output.
        #[arg(long)]
        bless: bool,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error(transparent)]
    Compute(#[from] crate::error::ComputeError),
    #[error(transparent)]
    Algebra(#[from] crate::error::AlgebraError),
    #[error(transparent)]
    Matroid(#[from] crate::error::MatroidError),
    #[error("{0}")]
    Io(String),
    #[error("regression failed: {0}")]
    Regression(String),
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if let Some(p) = self.primes.iter().find(|&&p| !is_prime(p)) {
            return Err(CliError::Usage(format!("{p} is not prime")));
        }
        if !self.primes.is_empty() && self.domain != Domain::Gfp {
            return Err(CliError::Usage("--primes only applies to --domain gfp".into()));
        }
        Ok(())
    }

    /// Backend for an input over `field`.
    pub fn backend(&self, field: CoefficientDomain) -> Result<Backend, CliError> {
        match (self.domain, field) {
            (Domain::Gfp, _) => Ok(Backend::Modular {
                primes: self.primes.clone(),
                policy: if self.certify { Policy::Certify } else { Policy::TwoPrime },
            }),
            (Domain::Q, CoefficientDomain::Rationals) => Ok(Backend::Exact),
            (Domain::QSqrt(m), CoefficientDomain::QuadraticExtension { m: k }) if m == k => Ok(Backend::Exact),
            // Betti numbers do not change under field extension.
            (Domain::QSqrt(_), CoefficientDomain::Rationals) => Ok(Backend::Exact),
            (d, f) => Err(CliError::Usage(format!("input over {f} cannot be computed in domain {d}"))),
        }
    }
}

/// A command result with a text rendering of the same data.
pub trait Report: Serialize {
    fn text(&self) -> String;
}

pub fn render<R: Report>(report: &R, format: Format) -> String {
    match format {
        Format::Text => report.text(),
        Format::Json => serde_json::to_string_pretty(report).expect("reports serialize"),
    }
}

/// Parses arguments, runs the command and prints the report.
pub fn main() -> std::process::ExitCode {
    let config = RunConfig::parse();
    match config.validate().and_then(|_| run_command(&config)) {
        Ok(out) => {
            println!("{out}");
            std::process::ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::ExitCode::FAILURE
        }
    }
}

#[cfg(test)]
mod tests;
