use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use gnf_core::{Format, Payoff, Property};

#[derive(Debug, Parser)]
#[command(
    name = "gnf",
    version,
    about = "Solve and verify finite normal-form games"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print every solution concept for a game
    Analyze {
        /// A .gnf file, or `-` for standard input
        path: PathBuf,
        #[arg(long, default_value = "text", value_parser = parse_format)]
        format: Format,
    },
    /// Iteratively delete minimax-dominated strategies
    Eliminate {
        path: PathBuf,
        /// Also print the game that remains after each round
        #[arg(long)]
        trace: bool,
    },
    /// Check the theorems, order independence and IR round-1 survival
    Check {
        path: PathBuf,
        /// Random deletion orders to try when exhaustive search is too large
        #[arg(long, default_value_t = 20)]
        orders: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check properties on a seeded batch of random symmetric games
    Search {
        #[arg(long, default_value_t = 2)]
        players: usize,
        /// A count `K` or an inclusive range `LO..HI`
        #[arg(long, default_value = "2..6", value_parser = parse_range::<usize>)]
        strategies: (usize, usize),
        #[arg(long, default_value_t = 1000)]
        games: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "0..99", value_parser = parse_range::<Payoff>, allow_hyphen_values = true)]
        payoff_range: (Payoff, Payoff),
        /// Comma-separated property names
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "theorem-1,theorem-2,ir-survives-round-1",
            value_parser = Property::from_str
        )]
        properties: Vec<Property>,
        #[arg(long, default_value_t = 20)]
        orders: usize,
        /// Worker threads; defaults to one per core
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, default_value = "text", value_parser = parse_format)]
        format: Format,
    },
    /// Print a random game as a .gnf document
    Gen {
        #[arg(long)]
        players: usize,
        #[arg(long)]
        strategies: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        symmetric: bool,
        #[arg(long, default_value = "0..99", value_parser = parse_range::<Payoff>, allow_hyphen_values = true)]
        payoff_range: (Payoff, Payoff),
    },
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
        .map_err(|e: gnf_core::io::UnknownFormat| e.to_string())
}

/// `K` or `LO..HI`, both ends inclusive.
pub fn parse_range<T>(s: &str) -> Result<(T, T), String>
where
    T: FromStr + PartialOrd + Copy,
{
    let value = |t: &str| {
        t.trim()
            .parse::<T>()
            .map_err(|_| format!("`{t}` is not a valid number"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (value(lo)?, value(hi)?),
        None => {
            let k = value(s)?;
            (k, k)
        }
    };
    if lo > hi {
        return Err(format!("empty range `{s}`"));
    }
    Ok((lo, hi))
}
