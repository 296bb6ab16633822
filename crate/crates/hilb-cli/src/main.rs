use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use hilb_cli::{execute, CliError, CommandConfig, Format, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "hilb", version, about = "Toric decompositions, central ideals and verification suites")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, default_value_t = 1)]
    r: i64,
    #[arg(long, global = true, default_value_t = 4)]
    n: usize,
    #[arg(long, global = true)]
    suite: Option<String>,
    /// `all`, one axis for every octahedron, or one axis per octahedron (`1,3,2,2`)
    #[arg(long, global = true)]
    choice: Option<String>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// output file, or directory for `decompose`
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Off,
    Csv,
}

#[derive(clap::Subcommand, Debug)]
enum Command {
    /// Write Ξ, Ξ* and optionally resolutions
    Decompose,
    /// List the central ideals with their cells
    Ideals,
    /// List the affine chart of every maximal cell
    Charts,
    /// Flop one octahedron of a resolution file
    Flop {
        input: PathBuf,
        /// center numerators over 2(r+1), e.g. 1,1,1,1
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        center: Vec<i64>,
        #[arg(long)]
        axis: u8,
    },
    /// Build and certify one resolution
    Resolve,
    /// Run a verification suite: a1-4, ar-4, a4 or all
    Verify {
        #[arg(value_name = "SUITE")]
        name: Option<String>,
    },
    /// Convert a decomposition or resolution file
    Export { input: PathBuf },
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let (subcommand, input, suite) = match cli.command {
        Command::Decompose => (Subcommand::Decompose, None, cli.suite),
        Command::Ideals => (Subcommand::Ideals, None, cli.suite),
        Command::Charts => (Subcommand::Charts, None, cli.suite),
        Command::Resolve => (Subcommand::Resolve, None, cli.suite),
        Command::Flop { input, center, axis } => (Subcommand::Flop { center, axis }, Some(input), cli.suite),
        Command::Verify { name } => (Subcommand::Verify, None, name.or(cli.suite)),
        Command::Export { input } => (Subcommand::Export, Some(input), cli.suite),
    };
    let cfg = CommandConfig {
        subcommand,
        r: cli.r,
        n: cli.n,
        format: match cli.format {
            FormatArg::Json => Format::Json,
            FormatArg::Off => Format::Off,
            FormatArg::Csv => Format::Csv,
        },
        out: cli.out,
        seed: cli.seed,
        suite,
        choice: cli.choice,
        verbosity: cli.verbose,
    };
    let text = match &input {
        Some(p) => Some(std::fs::read_to_string(p).map_err(|e| CliError::Usage(format!("{}: {e}", p.display())))?),
        None => None,
    };
    let out = execute(&cfg, text.as_deref())?;
    for (path, content) in &out.files {
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            std::fs::create_dir_all(dir)?;
        }
        std::fs::write(path, content)?;
    }
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    Ok(out.exit_code)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("hilb: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
