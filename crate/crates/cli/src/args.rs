use clap::{Args, Parser, Subcommand, ValueEnum};
use sigperm_core::{Method, Pattern, Signature};

#[derive(Debug, Parser)]
#[command(
    name = "sigperm",
    version,
    about = "Pattern avoidance in signed permutations"
)]
pub struct Cli {
    /// Worker threads for brute-force enumeration (default: available parallelism).
    #[arg(long, global = true, env = "SIGPERM_THREADS")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count B_n^j(π), or the whole row j = 0..n with its total.
    Count(CountArgs),
    /// Run every cross-method check up to a size.
    Verify(VerifyArgs),
    /// Compare refined brute-force counts for two patterns.
    Conjecture(ConjectureArgs),
    /// Print a truncated path generating function.
    Gf(GfArgs),
    /// Dump the explicit generating tree as JSON.
    Tree(TreeArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Human,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub j: Option<usize>,
    #[arg(long, value_parser = parse_pattern)]
    pub pattern: Pattern,
    #[arg(long, default_value = "brute", value_parser = parse_method)]
    pub method: Method,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 5)]
    pub max_n: usize,
}

#[derive(Debug, Args)]
pub struct ConjectureArgs {
    #[arg(long)]
    pub max_n: usize,
    #[arg(long, default_value = "12345", value_parser = parse_pattern)]
    pub p1: Pattern,
    #[arg(long, default_value = "21354", value_parser = parse_pattern)]
    pub p2: Pattern,
    /// Largest n allowed without --allow-long.
    #[arg(long, default_value_t = 6)]
    pub guard: usize,
    #[arg(long)]
    pub allow_long: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct GfArgs {
    #[arg(long, value_parser = parse_pattern)]
    pub pattern: Pattern,
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub q: u32,
    /// Signature, comma separated: 4,3,4,2
    #[arg(long, value_parser = parse_signature)]
    pub gamma: Signature,
    #[arg(long, default_value_t = 6)]
    pub degree: usize,
}

#[derive(Debug, Args)]
pub struct TreeArgs {
    #[arg(long, value_parser = parse_pattern)]
    pub pattern: Pattern,
    #[arg(long, default_value_t = 0)]
    pub j: usize,
    #[arg(long, default_value_t = 3)]
    pub depth: usize,
}

fn parse_pattern(s: &str) -> Result<Pattern, String> {
    s.parse().map_err(|e: sigperm_core::Error| e.to_string())
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|e: sigperm_core::Error| e.to_string())
}

fn parse_signature(s: &str) -> Result<Signature, String> {
    s.parse().map_err(|e: sigperm_core::Error| e.to_string())
}
