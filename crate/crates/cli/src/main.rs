use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ltsig_cli::commands::{
    cmd_catalog_list, cmd_compare_fo, cmd_profile, cmd_sigma, cmd_twistspin, TwistSpinArgs,
};
use ltsig_cli::error::single_line;
use ltsig_cli::{load_catalog, Catalog, CliError, OutputFormat, RunConfig};

/// Levine-Tristram signatures of knots and signature invariants of knotted tori.
#[derive(Parser)]
#[command(name = "ltsig", version)]
struct Cli {
    /// JSON knot catalog merged with the built-in knots
    #[arg(long, global = true, value_name = "PATH")]
    catalog: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value = "table")]
    format: OutputFormat,
    /// Accept decimal rotation numbers; their results are marked uncertified
    #[arg(long, global = true)]
    no_certify: bool,
    /// Starting precision for certified sign evaluation
    #[arg(long, global = true, default_value_t = ltsig_core::DEFAULT_START_BITS)]
    precision_bits: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Signature, nullity and averaged signature at one point of the circle
    Sigma {
        knot: String,
        /// Rotation number q/n, or a decimal with --no-certify
        alpha: String,
    },
    /// The signature function on the whole circle
    Profile {
        knot: String,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Invariants of the n-twist spin at alpha^k, alpha = exp(2 pi i/d)
    #[command(allow_negative_numbers = true)]
    Twistspin {
        knot: String,
        n: u32,
        d: u64,
        k: i64,
        /// Casson invariant of the ambient homology sphere
        lambda: i64,
    },
    /// Catalog operations
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Printed against recomputed discrepancy for n = 3, d = 5, k = 2
    CompareFo { knot: Option<String> },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List the knots available by name
    List,
}

fn run(cli: Cli) -> Result<String, CliError> {
    let config = RunConfig::new(cli.format, !cli.no_certify, cli.precision_bits)?;
    let catalog = match &cli.catalog {
        Some(path) => load_catalog(path)?,
        None => Catalog::builtin(),
    };
    match cli.command {
        Command::Sigma { knot, alpha } => cmd_sigma(&catalog, &knot, &alpha, &config),
        Command::Profile { knot, out } => cmd_profile(&catalog, &knot, out.as_deref(), &config),
        Command::Twistspin { knot, n, d, k, lambda } => {
            cmd_twistspin(&catalog, &knot, &TwistSpinArgs { n, d, k, lambda }, &config)
        }
        Command::Catalog { action: CatalogAction::List } => Ok(cmd_catalog_list(&catalog, &config)),
        Command::CompareFo { knot } => cmd_compare_fo(&catalog, knot.as_deref(), &config),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(std::io::stdout(), "{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            let first = text.lines().next().unwrap_or("invalid arguments");
            eprintln!("Usage: {}", single_line(first.trim_start_matches("error: ")));
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(text) => {
            // A closed pipe is not an error worth reporting.
            let _ = std::io::stdout().write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{}", single_line(&e.to_string()));
            ExitCode::from(e.exit_code())
        }
    }
}
