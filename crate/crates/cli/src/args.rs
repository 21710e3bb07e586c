//! Command-line grammar.

use std::path::PathBuf;

use bisector_core::Rat;
use clap::{Parser, Subcommand, ValueEnum};

use crate::input::{parse_positive, parse_q, parse_rat, QInput};
use crate::selftest::DEFAULT_SEED;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Straightedge-and-compass analysis of the isosceles triangle with base-vertex
/// bisector p = 1 and apex bisector q.
#[derive(Debug, Parser)]
#[command(name = "bisectorc", version)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "BISECTORC_FORMAT", default_value = "text")]
    pub format: Format,

    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

fn parse_digits(text: &str) -> Result<usize, String> {
    match text.parse::<usize>() {
        Ok(d) if (1..=1000).contains(&d) => Ok(d),
        _ => Err(format!("digits must be an integer in 1..=1000, got {text}")),
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide constructibility of t = l/b for a rational q, or for a transcendental q.
    Analyze {
        /// Positive rational (3, 11/28, 0.5) or `symbolic`.
        #[arg(long, value_parser = parse_q)]
        q: QInput,
        /// Decimal digits for the root.
        #[arg(long, default_value = "12", value_parser = parse_digits)]
        digits: usize,
    },
    /// Isolate t and rebuild the triangle, checking that p = 1.
    Solve {
        #[arg(long, value_parser = parse_positive)]
        q: Rat,
        /// Width bound for the enclosures of t, b, l and p.
        #[arg(long, default_value = "1e-12", value_parser = parse_positive)]
        eps: Rat,
        #[arg(long, default_value = "12", value_parser = parse_digits)]
        digits: usize,
    },
    /// Replay and check the derivation of the cubic.
    Derive,
    /// Tabulate the rational-root family s -> (q, t).
    Scan {
        #[arg(long, value_parser = parse_rat)]
        from: Rat,
        #[arg(long, value_parser = parse_rat)]
        to: Rat,
        #[arg(long, value_parser = parse_rat)]
        step: Rat,
    },
    /// Run the randomized consistency suites.
    Selftest {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}
