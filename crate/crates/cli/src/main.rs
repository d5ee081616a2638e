//! `sqz-hh`: Hochschild homology of `κ[x_1, …, x_r]/(x_i x_j)` from the command line.

mod commands;
mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sqz_hochschild::{GroundRing, DEFAULT_BUDGET};

use commands::Failure;
use report::Report;

const DEFAULT_SEED: u64 = 0x5eed_2024;

#[derive(Parser)]
#[command(name = "sqz-hh", version, about = "Hochschild homology of the square-zero algebras κ[x_1..x_r]/(x_i x_j)")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest number of basis elements (or enumerated objects) allowed per step.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_ring(s: &str) -> Result<GroundRing, String> {
    s.parse().map_err(|e: sqz_hochschild::Error| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// HH_q for q <= max-q with the per-summand breakdown.
    Compute {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        r: u32,
        #[arg(long, value_parser = parse_ring, default_value = "Z")]
        ring: GroundRing,
        #[arg(long)]
        max_q: usize,
    },
    /// Normalized complex, homology and generators of one summand.
    Word {
        /// Letters such as `x1,x2,x2` or `1,2,2`; `0` for the empty word.
        #[arg(long)]
        word: String,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        r: Option<u32>,
        #[arg(long, value_parser = parse_ring, default_value = "Z")]
        ring: GroundRing,
    },
    /// Cyclical words of each length up to max-m.
    Necklaces {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        r: u32,
        #[arg(long)]
        max_m: usize,
    },
    /// Compares every summand with the closed formulas.
    VerifyLemma {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        r: u32,
        #[arg(long)]
        max_m: usize,
        #[arg(long, value_parser = parse_ring, default_value = "Z")]
        ring: GroundRing,
    },
    /// Checks that the projected symbols {1+x_1,…,1+x_q}, q <= r, are nonzero classes.
    VerifyTheorem {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        r: u32,
        #[arg(long, value_parser = parse_ring, default_value = "Z")]
        ring: GroundRing,
    },
    /// Checks exactness of 0 → κ[2] → κ[C_ℓ] → κ[C_ℓ] → κ/2κ → 0 for odd ℓ.
    VerifyExactness {
        #[arg(long, default_value_t = 7)]
        max_period: usize,
        #[arg(long, value_parser = parse_ring, default_value = "Z")]
        ring: GroundRing,
    },
    /// Compares the full bar complex with the summand decomposition.
    Oracle {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        r: u32,
        #[arg(long, value_parser = parse_ring, default_value = "Z")]
        ring: GroundRing,
        #[arg(long)]
        max_q: usize,
    },
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let budget = cli.budget;
    Ok(match &cli.command {
        Command::Compute { r, ring, max_q } => Report::Compute(commands::compute(*r, *ring, *max_q, budget)?),
        Command::Word { word, r, ring } => Report::Word(commands::word(word, *r, *ring)?),
        Command::Necklaces { r, max_m } => Report::Necklaces(commands::necklaces(*r, *max_m, budget)?),
        Command::VerifyLemma { r, max_m, ring } => {
            Report::Verify(commands::verify_lemma(*r, *max_m, *ring, budget)?)
        }
        Command::VerifyTheorem { r, ring } => Report::Verify(commands::verify_theorem(*r, *ring, budget)?),
        Command::VerifyExactness { max_period, ring } => {
            Report::Verify(commands::verify_exactness(*max_period, *ring)?)
        }
        Command::Oracle { r, ring, max_q } => {
            Report::Verify(commands::oracle(*r, *ring, *max_q, budget, cli.seed)?)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Text => print!("{}", report.text()),
                Format::Json => println!("{}", report.json()),
            }
            if report.ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
