mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Subgraph component polynomial toolkit.
///
/// Graphs are given as graph6 (`Bg`) or as an edge list (`"3; 0 1; 1 2"`).
/// Without a graph argument or `--file`, graphs are read from stdin, one per
/// line.
#[derive(Parser, Debug)]
#[command(name = "scpoly", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a graph polynomial.
    Compute {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = PolyKind::Q)]
        poly: PolyKind,
        #[command(flatten)]
        q: QFlags,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the invariants read off Q next to direct computations.
    Invariants {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        q: QFlags,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Report which of Q, charpoly, matching and Tutte tell two graphs apart.
    Compare {
        a: String,
        b: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print a named family member as graph6.
    Family {
        /// One of: complete, edgeless, path, cycle, star, complete_bipartite,
        /// tadpole, friendship, book, hypercube, fan, fan_plus.
        name: String,
        params: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Enumerate all graphs of one order and group them by Q.
    Census {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = GroupBy::Q)]
        group_by: GroupBy,
        /// Census file; written to stdout when absent.
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        census: CensusFlags,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check whether a graph is the only one of its order with its Q.
    VerifyUnique {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        census: CensusFlags,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Debug)]
pub struct GraphInput {
    /// graph6 string or edge list.
    #[arg(conflicts_with = "file")]
    pub graph: Option<String>,
    /// File with one graph per line.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct QFlags {
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    pub method: MethodArg,
    /// Largest order the subset enumeration accepts.
    #[arg(long, default_value_t = scpoly::qpoly::DEFAULT_DEFINITION_BOUND)]
    pub max_subset_order: usize,
    /// Largest number of memoized subgraphs.
    #[arg(long)]
    pub memo_capacity: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
}

#[derive(Args, Debug)]
pub struct CensusFlags {
    /// Permit order 8 (2^28 masks).
    #[arg(long)]
    pub allow_order_8: bool,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyKind {
    Q,
    Tutte,
    Matching,
    Charpoly,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum MethodArg {
    Auto,
    Definition,
    Recurrence,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupBy {
    Q,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("scpoly: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
