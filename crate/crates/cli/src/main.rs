use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use skein_cli::{cmd_expand, cmd_verify, CliError, Family, Suite};
use skein_core::handlebody::Basis;
use skein_core::torusknot::Convention;

#[derive(Parser)]
#[command(name = "skein", version, about = "Exact skein-module identity checks and expansions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and report every check.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 3, allow_negative_numbers = true)]
        p_max: i64,
        #[arg(long, default_value_t = 10, allow_negative_numbers = true)]
        n_max: i64,
        /// Write the report as JSON to this path.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Use this reduction convention instead of each suite's own.
        #[arg(long)]
        convention: Option<Convention>,
        /// Worker threads (defaults to the number of cores).
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Print one element as JSON.
    Expand {
        /// X, Y, XT, YT, sigma, Xi or reduce
        family: Family,
        #[arg(allow_negative_numbers = true)]
        index: i64,
        #[arg(long, default_value = "monomial")]
        basis: Basis,
        /// Knot parameter for `reduce`.
        #[arg(long)]
        p: Option<i64>,
        #[arg(long, default_value = "kbsm")]
        convention: Convention,
    },
}

fn run(cli: Cli) -> Result<bool, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Verify { suite, p_max, n_max, json, convention, jobs } => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.unwrap_or(0)).build()?;
            let report = pool.install(|| cmd_verify(suite, p_max, n_max, convention))?;
            println!("{report}");
            if let Some(path) = json {
                std::fs::write(&path, serde_json::to_string_pretty(&report)?)?;
            }
            Ok(report.all_passed())
        }
        Command::Expand { family, index, basis, p, convention } => {
            let v = cmd_expand(family, index, basis, p, convention)?;
            println!("{}", serde_json::to_string(&v)?);
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            if e.downcast_ref::<CliError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
