//! Library side of the `hilb` command. Every subcommand is a function from a
//! [`CommandConfig`] and an optional input text to an [`Outcome`]; the binary
//! only parses flags and touches the filesystem.

pub mod commands;
pub mod export;
pub mod report;
pub mod suites;

use std::path::PathBuf;

use ar_singularity::{ArError, CellLabel};

pub use commands::{execute, Outcome};
pub use report::{CheckStatus, SuiteCheck, VerifyReport, SCHEMA_VERSION};
pub use suites::{run_suite, Suite};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    /// a well-formed request whose check or operation failed
    #[error("{0}")]
    Failed(String),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

impl From<ArError> for CliError {
    fn from(e: ArError) -> Self {
        match e {
            ArError::Unsupported { .. } => CliError::Usage(e.to_string()),
            other => CliError::Failed(other.to_string()),
        }
    }
}

impl From<toric_lattice::ToricError> for CliError {
    fn from(e: toric_lattice::ToricError) -> Self {
        CliError::Failed(e.to_string())
    }
}

impl From<ideal_calculus::IdealError> for CliError {
    fn from(e: ideal_calculus::IdealError) -> Self {
        CliError::Failed(e.to_string())
    }
}

impl From<a4_hilbert::A4Error> for CliError {
    fn from(e: a4_hilbert::A4Error) -> Self {
        CliError::Failed(e.to_string())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Json,
    Off,
    Csv,
}

impl Format {
    pub fn parse(s: &str) -> Option<Format> {
        match s {
            "json" => Some(Format::Json),
            "off" => Some(Format::Off),
            "csv" => Some(Format::Csv),
            _ => None,
        }
    }

    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Off => "off",
            Format::Csv => "csv",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subcommand {
    Decompose,
    Ideals,
    Charts,
    /// center numerators over 2(r+1), new axis
    Flop { center: Vec<i64>, axis: u8 },
    Resolve,
    Verify,
    Export,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandConfig {
    pub subcommand: Subcommand,
    pub r: i64,
    pub n: usize,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub seed: u64,
    pub suite: Option<String>,
    pub choice: Option<String>,
    pub verbosity: u8,
}

impl CommandConfig {
    pub fn new(subcommand: Subcommand) -> Self {
        CommandConfig {
            subcommand,
            r: 1,
            n: 4,
            format: Format::Json,
            out: None,
            seed: 0,
            suite: None,
            choice: None,
            verbosity: 0,
        }
    }
}

fn join(v: &[i64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Short ASCII name of a cell label, e.g. `C2'(0,0,0,0)` or `Du(1,0,0,0)`.
pub fn label_name(label: &CellLabel) -> String {
    match label {
        CellLabel::DeltaU { a } => format!("Du({})", join(a)),
        CellLabel::DeltaD { a } => format!("Dd({})", join(a)),
        CellLabel::Octahedron { a } => format!("Oct({})", join(a)),
        CellLabel::Hypersimplex => "Hyp".into(),
        CellLabel::C { a, i } => format!("C{i}({})", join(a)),
        CellLabel::Cp { a, i } => format!("C{i}'({})", join(a)),
        CellLabel::Flop { a, axis, t } => format!("F{axis}.{t}({})", join(a)),
    }
}
