use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Trivializing and knotting numbers of 2-bouquet pseudodiagrams.
///
/// INPUT is a pretzel code such as "(2,3)", a pretzel state such as
/// "(+?-,?)", or the path of a diagram JSON file.
#[derive(Debug, Parser)]
#[command(name = "bouquet", version)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Largest enumeration size for `check`, or largest input diagram
    /// (in double points) for searching commands.
    #[arg(long, value_name = "N", global = true)]
    pub max_crossings: Option<u32>,
    /// Largest number of precrossings resolved exhaustively.
    #[arg(long, value_name = "N", global = true)]
    pub max_precrossings: Option<u32>,
    /// Catalog file used instead of the built-in one.
    #[arg(long, value_name = "PATH", global = true)]
    pub catalog: Option<PathBuf>,
    /// Print only the essential result.
    #[arg(long, short, global = true)]
    pub quiet: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that the input is a valid 2-bouquet pseudodiagram.
    Validate { input: String },
    /// Print the type (K or L) of the input.
    Type { input: String },
    /// Trivializing number.
    Tr { input: String },
    /// Knotting number.
    Kn { input: String },
    /// Build a projection with prescribed values.
    #[command(subcommand)]
    Construct(Construct),
    /// Weighted resolution set.
    Wrs { input: String },
    /// Search for a sequence of moves deciding a resolved diagram.
    Simplify { input: String },
    /// Recompute the catalog and print its table.
    Table {
        #[arg(long = "type", value_enum, default_value_t = TableType::All)]
        bouquet_type: TableType,
    },
    /// Run a batch of property checks.
    Check {
        #[arg(value_enum)]
        suite: Suite,
        /// Pseudodiagrams generated for the `wrs` suite.
        #[arg(long, default_value_t = 50)]
        samples: usize,
        /// Seed of the `wrs` corpus generator.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// A projection with trivializing number T.
    Tr { t: u32 },
    /// A projection with knotting number K.
    Kn { k: u32 },
    /// A projection with knotting number K and a trivializing number set
    /// by the chosen family.
    Pair {
        k: u32,
        #[arg(long, value_enum)]
        case: PairFamily,
        #[arg(long, default_value_t = 0)]
        m: u32,
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        l: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PairFamily {
    /// A single even stack.
    Single,
    /// A single odd stack.
    SingleOdd,
    /// The last tall stack is even.
    EvenStack,
    /// All stacks odd, m <= n+1.
    FewOnes,
    /// All stacks odd, m > n+1.
    ManyOnes,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableType {
    K,
    L,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Formulas,
    Tables,
    Wrs,
    Moves,
}
