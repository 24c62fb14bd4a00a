use std::num::NonZeroUsize;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use cusp_atlas::{FamilyId, SingularityType};

#[derive(Debug, Parser)]
#[command(
    name = "cusp-atlas",
    version,
    about = "Two-pair cusp types on rational unicuspidal plane curves"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,

    /// Write the report here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    /// Worker threads for enumeration [default: available parallelism]
    #[arg(long, global = true, env = "CUSP_ATLAS_JOBS")]
    pub jobs: Option<NonZeroUsize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the counting criterion on one type.
    Check {
        #[arg(long, value_parser = parse_type)]
        pairs: SingularityType,
        #[arg(long, value_parser = parse_positive)]
        degree: Option<u128>,
    },
    /// Print delta, generators, degree and C^2 for one type.
    Invariants {
        #[arg(long, value_parser = parse_type)]
        pairs: SingularityType,
        #[arg(long, value_parser = parse_positive)]
        degree: Option<u128>,
    },
    /// Enumerate every passing type up to a degree and compare with the families.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_degree: u64,
    },
    /// Only the comparison part of `enumerate`.
    Crosscheck {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_degree: u64,
    },
    /// List family members up to a degree.
    Families {
        #[arg(long, value_parser = parse_family)]
        family: Option<FamilyId>,
        #[arg(long, value_parser = parse_positive)]
        max_degree: u128,
    },
    /// Find the family (or known exception) a type belongs to.
    Identify {
        #[arg(long, value_parser = parse_type)]
        pairs: SingularityType,
        #[arg(long, value_parser = parse_positive)]
        degree: Option<u128>,
    },
}

fn parse_type(s: &str) -> Result<SingularityType, String> {
    s.parse()
        .map_err(|e: cusp_atlas::ParseTypeError| e.to_string())
}

fn parse_family(s: &str) -> Result<FamilyId, String> {
    s.parse()
}

fn parse_positive(s: &str) -> Result<u128, String> {
    match s.trim().parse::<u128>() {
        Ok(0) | Err(_) => Err(format!("expected a positive integer, got {s:?}")),
        Ok(n) => Ok(n),
    }
}

impl Cli {
    pub fn workers(&self) -> usize {
        self.jobs
            .or_else(|| std::thread::available_parallelism().ok())
            .map_or(1, NonZeroUsize::get)
    }
}
