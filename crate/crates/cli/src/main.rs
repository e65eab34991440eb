use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qdiscord_cli::{
    cmd_example, cmd_ppt_count, cmd_scan, cmd_werner, CliError, PptArgs, ScanArgs, WernerArgs,
    EXIT_THEOREM_VIOLATION,
};

/// Geometric discord vs. negativity experiments on random and Werner states.
#[derive(Parser)]
#[command(name = "qdiscord", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample random 2⊗n states and record D, N, N² and D − N² per state.
    Scan {
        #[arg(long, default_value_t = 2)]
        dim_a: usize,
        #[arg(long)]
        dim_b: usize,
        #[arg(long, default_value_t = 100_000)]
        count: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Columns of the Gaussian factor (default dim_a·dim_b, the Hilbert-Schmidt measure).
        #[arg(long)]
        ginibre_k: Option<usize>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Sweep the Werner parameter z and compare numeric and closed-form measures.
    Werner {
        #[arg(long, default_value_t = 4)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        view_a: usize,
        #[arg(long, default_value_t = 8)]
        view_b: usize,
        #[arg(long, default_value_t = -1.0, allow_negative_numbers = true)]
        z_min: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        z_max: f64,
        #[arg(long, default_value_t = 400)]
        steps: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Histogram of negative partial-transpose eigenvalue counts.
    PptCount {
        #[arg(long, default_value_t = 2)]
        dim_a: usize,
        #[arg(long)]
        dim_b: usize,
        #[arg(long, default_value_t = 10_000)]
        count: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Sample pure states instead of Ginibre-induced mixed states.
        #[arg(long)]
        pure: bool,
        #[arg(long)]
        ginibre_k: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report all measures for a state stored as JSON.
    Example { path: PathBuf },
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Scan {
            dim_a,
            dim_b,
            count,
            seed,
            ginibre_k,
            out,
            svg,
        } => {
            let summary = cmd_scan(&ScanArgs {
                dim_a,
                dim_b,
                count,
                seed,
                ginibre_k,
                out,
                svg,
            })?;
            println!("{summary}");
        }
        Command::Werner {
            m,
            view_a,
            view_b,
            z_min,
            z_max,
            steps,
            out,
            svg,
        } => {
            let report = cmd_werner(&WernerArgs {
                m,
                view_a,
                view_b,
                z_min,
                z_max,
                steps,
                out,
                svg,
            })?;
            println!("{report}");
        }
        Command::PptCount {
            dim_a,
            dim_b,
            count,
            seed,
            pure,
            ginibre_k,
            out,
        } => {
            let report = cmd_ppt_count(&PptArgs {
                dim_a,
                dim_b,
                count,
                seed,
                pure,
                ginibre_k,
                out,
            })?;
            println!("{report}");
            if report.bound_violated() {
                return Ok(EXIT_THEOREM_VIOLATION);
            }
        }
        Command::Example { path } => {
            println!("{}", cmd_example(&path)?);
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
