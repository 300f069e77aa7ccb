//! `admg`: local Markov bases, m-separation and SEM tests for path diagrams.

use std::path::PathBuf;
use std::process::ExitCode;

use admg_markov::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

/// Exit status for a failed verification or a rejected test.
const EXIT_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_CAPACITY: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "admg",
    version,
    about = "Local Markov properties of acyclic directed mixed graphs"
)]
#[command(
    after_help = "GRAPH is a file path or one of the bundled fixtures: figure1, figure2, figure3.\n\
Graph files hold one item per line: `x -> y`, `x <-> y`, a bare `x` for an isolated vertex; `#` starts a comment.\n\
Exit status: 0 success, 1 verification or test failure, 2 input error, 3 capacity exceeded."
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Random seed for parameter draws and simulation.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Largest vertex count for the statement universe (and the path-enumerating oracle).
    #[arg(long, global = true)]
    pub cap: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Ordered local property over all maximal ancestral sets.
    Ordered,
    /// One statement per vertex; needs a graph without mixed directed cycles.
    Reduced,
    /// Reduction procedure over the contracted ordering; works for any graph.
    Auto,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axioms {
    Semigraphoid,
    Composition,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    /// Is every ordered local statement derivable from the reduced basis?
    OrderedVsReduced,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    /// Reduced list when the graph has no mixed directed cycle, else auto.
    Default,
    Reduced,
    Auto,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Oracle {
    /// Reachability over the latent-augmented DAG.
    Fast,
    /// Enumerate every simple path.
    Bruteforce,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorrectionArg {
    Bonferroni,
    None,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List c-components and report whether a mixed directed cycle exists.
    Components { graph: String },
    /// Decide m-separation; exit 0 if separated, 1 if connected.
    Msep {
        graph: String,
        #[arg(long, value_delimiter = ',', required = true)]
        x: Vec<String>,
        #[arg(long, value_delimiter = ',', required = true)]
        y: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        given: Vec<String>,
        #[arg(long, value_enum, default_value_t = Oracle::Fast)]
        oracle: Oracle,
    },
    /// Build the contracted consistent ordering.
    Order { graph: String },
    /// Emit a local Markov statement list, one `I({x} ; {z} ; {y})` per line.
    Analyze {
        graph: String,
        #[arg(long, value_enum, default_value_t = Mode::Auto)]
        mode: Mode,
        /// Consistent ordering as a comma list, e.g. `e,d,a,b,c`.
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<String>>,
    },
    /// Check by axiom closure that the basis implies the ordered local list.
    Verify {
        graph: String,
        #[arg(long, value_enum, default_value_t = VerifyMode::OrderedVsReduced)]
        mode: VerifyMode,
        #[arg(long, value_enum, default_value_t = Axioms::Composition)]
        axioms: Axioms,
        #[arg(long, value_enum, default_value_t = Basis::Default)]
        basis: Basis,
        /// Ordering for the ordered local list (and the auto basis).
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<String>>,
    },
    /// Print the vanishing partial correlations to test, `rho(a,e | d) = 0` per line.
    SemTests {
        graph: String,
        #[arg(long, value_enum, default_value_t = Mode::Auto)]
        mode: Mode,
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<String>>,
    },
    /// Draw data from a random linear SEM for the graph, as CSV.
    Simulate {
        graph: String,
        #[arg(long, default_value_t = 1000)]
        n: usize,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Seed for the model parameters; defaults to --seed.
        #[arg(long)]
        param_seed: Option<u64>,
    },
    /// Test the planned vanishing partial correlations on CSV data; exit 0 iff none rejects.
    SemCheck {
        graph: String,
        data: PathBuf,
        #[arg(long, default_value_t = 0.05)]
        alpha: f64,
        #[arg(long, value_enum, default_value_t = Mode::Auto)]
        mode: Mode,
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<String>>,
        #[arg(long, value_enum, default_value_t = CorrectionArg::Bonferroni)]
        correction: CorrectionArg,
    },
}

/// What a command run amounts to, beyond its printed output.
pub enum Outcome {
    Success,
    Failed,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Capacity { .. } => EXIT_CAPACITY,
        _ => EXIT_INPUT,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = std::io::stdout().lock();
    match commands::run(&cli, &mut out) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(EXIT_FAILED),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
