//! `osculant`: tables, constructions and seeded verification campaigns.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exit statuses; every run ends in exactly one of them.
pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_INCONCLUSIVE: u8 = 2;
pub const EXIT_USAGE: u8 = 64;

#[derive(Parser, Debug)]
#[command(
    name = "osculant",
    version,
    about = "Varieties carrying rational normal curves through general points"
)]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Number of verification trials.
    #[arg(long, global = true, default_value_t = 20)]
    pub trials: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// File holding a JSON variety spec, e.g. {"family": "Scroll", "params": {"a": [1, 1]}}.
    #[arg(long, global = true)]
    pub spec: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// π_{r,n}(q) alongside g_{r,n}(q + r(n−1) + 2) − 1.
    PiTable {
        #[arg(long, default_value = "1-4")]
        r: String,
        #[arg(long, default_value = "2-6")]
        n: String,
        #[arg(long, default_value = "1-12")]
        q: String,
    },
    /// List the monomial index set of the variety.
    Enumerate,
    /// Print the parametrization, class and span of the variety.
    Build,
    /// Osculating spaces at a point.
    Osculate {
        /// Chart point as comma-separated rationals; random if absent.
        #[arg(long)]
        point: Option<String>,
        #[arg(long, default_value_t = 2)]
        order: u32,
    },
    /// Fit a rational normal curve through n random points.
    Fit,
    /// Membership campaign plus the specialness witness when one applies.
    Verify {
        /// Also run the osculating projection checks.
        #[arg(long)]
        projection: bool,
    },
    /// Specialness witness of the variety, or the inequivalence invariants of a scroll.
    Witness {
        /// Scroll degrees for the inequivalence invariants, e.g. 2,1,1.
        #[arg(long)]
        scroll: Option<String>,
        /// ρ for the inequivalence invariants.
        #[arg(long)]
        rho: Option<u32>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("osculant: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
