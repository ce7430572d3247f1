//! Command-line grammar and the run configuration derived from it.

use std::path::PathBuf;

use clap::builder::{PossibleValuesParser, TypedValueParser};
use clap::{Args, Parser, Subcommand, ValueEnum};
use specht_core::fock::{DecompCache, CACHE_DIR_ENV};
use specht_core::{LadderWord, Partition, Suite};

/// Size ceiling for commands that build decomposition matrices when no
/// `--max-n` is given.
pub const DEFAULT_MAX_N: usize = 30;

#[derive(Debug, Parser)]
#[command(
    name = "specht",
    version,
    about = "Reducibility of Specht modules at q = -1: decomposition matrices, classifiers and witnesses"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Output format; JSON goes to standard output, progress to standard error.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    pub output: OutputFormat,

    /// Directory holding `decomp_e2_n{N}.json` matrix files.
    #[arg(long, global = true, env = CACHE_DIR_ENV, value_name = "DIR")]
    pub cache_dir: Option<PathBuf>,

    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub jobs: Option<u32>,

    /// Size bound: the sweep bound for `verify`, and the largest `n` other
    /// commands will build a decomposition matrix for.
    #[arg(long, global = true, value_name = "N")]
    pub max_n: Option<usize>,

    /// Suppress progress messages.
    #[arg(long, short, global = true)]
    pub quiet: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify `S^λ` as reducible or irreducible.
    Classify(ClassifyArgs),
    /// Compute (or load) the v-decomposition matrix for `n`.
    Decompose(DecomposeArgs),
    /// Run an exhaustive verification sweep.
    Verify(VerifyArgs),
    /// Littlewood–Richardson coefficients.
    Lr(LrArgs),
    /// Fock-space computations.
    #[command(subcommand)]
    Fock(FockCommand),
    /// Core, weight and domino quotient of a partition.
    Block(BlockArgs),
}

/// A partition such as `4,4,2,2`; `-` is the empty partition.
fn partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: specht_core::Error| e.to_string())
}

fn ladder_word(s: &str) -> Result<LadderWord, String> {
    s.parse().map_err(|e: specht_core::Error| e.to_string())
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// The partition, e.g. `4,4,2,2` (`-` for the empty partition).
    #[arg(value_parser = partition, allow_hyphen_values = true)]
    pub partition: Partition,

    /// Build and verify a reducibility witness when a ladder is disconnected.
    #[arg(long)]
    pub witness: bool,

    /// Decide by composition length from the decomposition matrix.
    #[arg(long)]
    pub oracle: bool,

    /// Evaluate the FM-partition conjecture.
    #[arg(long)]
    pub conjecture: bool,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    pub n: usize,

    /// Restrict to the block with this 2-core, e.g. `2,1` or `-`.
    #[arg(long, value_parser = partition, allow_hyphen_values = true, value_name = "CORE")]
    pub block: Option<Partition>,

    /// Compare Rouquier-block entries with Littlewood–Richardson coefficients.
    #[arg(long)]
    pub rouquier_check: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_parser = PossibleValuesParser::new(Suite::ALL.map(Suite::name))
        .map(|s| s.parse::<Suite>().expect("listed suite")))]
    pub suite: Suite,
}

#[derive(Debug, Args)]
pub struct LrArgs {
    #[arg(value_parser = partition, allow_hyphen_values = true)]
    pub left: Partition,

    #[arg(value_parser = partition, allow_hyphen_values = true)]
    pub right: Partition,

    /// Report the single coefficient `c^OUTER_{left,right}` instead of the
    /// whole product.
    #[arg(long, value_parser = partition, allow_hyphen_values = true)]
    pub outer: Option<Partition>,
}

#[derive(Debug, Subcommand)]
pub enum FockCommand {
    /// Apply a word `i:a,…` of divided powers (first step applied first) to
    /// `s(BASE)`, or to `G(BASE)` with `--canonical`.
    Apply(FockApplyArgs),
}

#[derive(Debug, Args)]
pub struct FockApplyArgs {
    /// E.g. `1:4,0:3,1:2`; `-` for the empty word.
    #[arg(value_parser = ladder_word, allow_hyphen_values = true)]
    pub word: LadderWord,

    #[arg(value_parser = partition, allow_hyphen_values = true, default_value = "-")]
    pub base: Partition,

    /// Start from the canonical basis vector `G(BASE)`.
    #[arg(long)]
    pub canonical: bool,
}

#[derive(Debug, Args)]
pub struct BlockArgs {
    #[arg(value_parser = partition, allow_hyphen_values = true)]
    pub partition: Partition,
}

/// Settings shared by every command.
#[derive(Debug)]
pub struct RunConfig {
    pub max_n: Option<usize>,
    pub cache_dir: Option<PathBuf>,
    pub jobs: usize,
    pub output: OutputFormat,
    pub quiet: bool,
}

impl RunConfig {
    pub fn from_args(args: &GlobalArgs) -> Self {
        let jobs = args
            .jobs
            .map(|j| j as usize)
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
        RunConfig {
            max_n: args.max_n,
            cache_dir: args.cache_dir.clone().filter(|d| !d.as_os_str().is_empty()),
            jobs,
            output: args.output,
            quiet: args.quiet,
        }
    }

    pub fn cache(&self) -> DecompCache {
        match &self.cache_dir {
            Some(dir) => DecompCache::with_dir(dir),
            None => DecompCache::in_memory(),
        }
    }

    /// The largest size for which a decomposition matrix may be built.
    pub fn size_ceiling(&self) -> usize {
        self.max_n.unwrap_or(DEFAULT_MAX_N)
    }

    pub fn progress(&self, msg: impl FnOnce() -> String) {
        if !self.quiet {
            eprintln!("{}", msg());
        }
    }
}
