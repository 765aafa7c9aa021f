//! `ekr-kit`: exact verification of the Schrijver/Wilson pseudoadjacency
//! matrices of G(n,k,t).
//!
//! Exit codes: 0 verified, 1 verification failed, 2 invalid input,
//! 3 resource cap exceeded, 4 I/O failure.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::report::Outcome;

#[derive(Parser, Debug)]
#[command(name = "ekr-kit", version, about = "Exact pseudoadjacency matrices and EKR certificates for G(n,k,t)")]
pub struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the report (or, for `matrix`, the matrix file) here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Vertex cap for the dense operation the subcommand runs.
    #[arg(long, global = true, env = "EKR_KIT_CAP")]
    pub cap_n: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Triple {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub t: u32,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MatrixName {
    Schrijver,
    Wilson,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisName {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "D", alias = "d")]
    D,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeName {
    Coefficients,
    Materialized,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compare the two constructions over every valid (n,k,t) in range.
    VerifyEquality {
        /// Largest n (default 24 for coefficients, 12 for materialized).
        #[arg(long)]
        n_max: Option<u32>,
        /// Largest k (default 8 for coefficients, 5 for materialized).
        #[arg(long)]
        k_max: Option<u32>,
        #[arg(long, value_enum, default_value_t = ModeName::Coefficients)]
        mode: ModeName,
    },
    /// Print a construction's coefficients in either basis.
    Coeffs {
        #[command(flatten)]
        triple: Triple,
        #[arg(long, value_enum, default_value_t = MatrixName::Wilson)]
        matrix: MatrixName,
        #[arg(long, value_enum, default_value_t = BasisName::D)]
        basis: BasisName,
    },
    /// Certify λ_max, λ_min = -1 and the Hoffman bound.
    Spectrum {
        #[command(flatten)]
        triple: Triple,
        #[arg(long, value_enum, default_value_t = MatrixName::Wilson)]
        matrix: MatrixName,
    },
    /// Write the dense matrix in `rational-coo` format.
    Matrix {
        #[command(flatten)]
        triple: Triple,
        #[arg(long, value_enum, default_value_t = MatrixName::Wilson)]
        matrix: MatrixName,
    },
    /// Exhaustive independence number of G(n,k,t) with a witness family.
    Alpha {
        #[command(flatten)]
        triple: Triple,
    },
    /// Inner distribution of a family read from a block file.
    InnerDist {
        #[arg(long)]
        family: PathBuf,
    },
    /// List registered Steiner systems or check one against the a-vector.
    Designs {
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        check: bool,
    },
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { Outcome::InvalidInput.code() } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let command_echo = argv.iter().skip(1).cloned().collect::<Vec<_>>().join(" ");
    ExitCode::from(commands::run(&cli, &command_echo))
}
