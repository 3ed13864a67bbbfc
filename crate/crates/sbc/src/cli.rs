use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use sbc_core::families::ThetaSize;
use sbc_core::oracle::ORACLE_BUDGET;

#[derive(Parser, Debug)]
#[command(
    name = "sbc",
    version,
    about = "Skew braces and Hopf-Galois structures of Heisenberg type"
)]
pub struct Cli {
    /// Odd prime p >= 5.
    #[arg(long, global = true, default_value_t = 5)]
    pub prime: u64,

    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Worker threads; output does not depend on it.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// One record per brace with stabiliser, orbit, socle and annihilator.
    Classify {
        #[arg(long, value_enum)]
        theta: Option<Theta>,
    },
    /// Closed-form brace and Hopf-Galois counts against computed ones.
    Count {
        /// Also enumerate regular subgroups by brute force.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = ORACLE_BUDGET)]
        oracle_budget: u32,
    },
    /// Brute-force enumeration of regular subgroups of Hol(M1).
    Oracle {
        #[arg(long, default_value_t = ORACLE_BUDGET)]
        oracle_budget: u32,
        /// Include every subgroup in the report.
        #[arg(long)]
        dump: bool,
    },
    /// Runs the invariant suite and prints a pass/fail matrix.
    Verify {
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = ORACLE_BUDGET)]
        oracle_budget: u32,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<Fault>,
    },
    /// Exports one brace.
    Brace {
        #[arg(long)]
        id: String,
    },
    /// Yang-Baxter solution of one brace.
    Ybe {
        #[arg(long)]
        id: String,
        /// List every (x, y) -> r(x, y).
        #[arg(long)]
        full_ybe: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theta {
    #[value(name = "1")]
    One,
    P,
    P2,
    P3,
}

impl From<Theta> for ThetaSize {
    fn from(t: Theta) -> Self {
        match t {
            Theta::One => ThetaSize::One,
            Theta::P => ThetaSize::P,
            Theta::P2 => ThetaSize::P2,
            Theta::P3 => ThetaSize::P3,
        }
    }
}

/// Deliberate defects for checking that `verify` notices them.
#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Perturbs the bracket composition formula.
    Composition,
}
