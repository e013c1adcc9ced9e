mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use reslat_core::census::Filter;
use reslat_core::DEFAULT_SIZE_CAP;

/// Finite residuated lattices, BL-algebras and MV-algebras from finite
/// commutative rings.
///
/// Exit status: 0 when every check passes, 1 when a checked property or
/// claim fails, 2 on usage, parse or file errors.
#[derive(Parser, Debug)]
#[command(name = "reslat", version)]
pub struct Cli {
    /// Largest ring carrier or algebra order to build
    #[arg(long, global = true, default_value_t = DEFAULT_SIZE_CAP)]
    size_cap: usize,

    /// Directory for serialized output
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Accepted for compatibility; every command is deterministic
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify an algebra against the BL/MV properties
    Check {
        expr: String,
        /// Comma-separated subset of prel,div,bl,mv,chain,involutive,bl-identity
        #[arg(long, value_delimiter = ',')]
        props: Vec<Prop>,
    },
    /// Print the order, product and residuum tables
    Tables {
        expr: String,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// List the ideals of a ring
    Ideals {
        ring: String,
        /// Compare against the closed-form statements for the ring family
        #[arg(long)]
        claims: bool,
    },
    /// Decide whether a ring's ideal lattice is a BL-algebra, two ways
    Blring { ring: String },
    /// Enumerate algebras of order n up to isomorphism
    Enumerate {
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        /// all, bl, mv, chain, bl-chain or mv-chain
        #[arg(long, default_value = "bl")]
        filter: Filter,
    },
    /// Count MV/BL algebras and chains for each order, by both enumerators
    Census {
        #[arg(long, default_value_t = 5)]
        nmax: usize,
    },
    /// Search for an isomorphism between two algebras
    Iso { left: String, right: String },
    /// Check a table file against the claims written into it
    Audit { path: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Prop {
    Prel,
    Div,
    Bl,
    Mv,
    Chain,
    Involutive,
    BlIdentity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Text,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Ordinal,
    Oracle,
    Both,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
