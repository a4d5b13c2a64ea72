//! `algcon`: construct, verify and certify minimizers of the largest
//! Laplacian eigenvalue from the command line.

mod commands;
mod golden;
mod outcome;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(
    name = "algcon",
    version,
    about = "Largest-Laplacian-eigenvalue minimizers and algebraic connectivity maximizers"
)]
pub struct Cli {
    /// Print the full outcome as JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Numeric tolerance override for the command's checks.
    #[arg(long, global = true, value_name = "FLOAT")]
    pub tol: Option<f64>,
    /// Seed for randomized inputs.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build the union of complete graphs for n vertices and m edges.
    Construct(ConstructArgs),
    /// List every local and global certificate for the constructed graph.
    Certify(CertifyArgs),
    /// Check local minimality of a graph over its one-edge neighborhood.
    VerifyLelm(VerifyArgs),
    /// Exhaustive global minimum of the largest eigenvalue.
    Brute(BruteArgs),
    /// Spectrum of a circulant graph given its 0/1 generating row.
    Circulant(CirculantArgs),
    /// Circulant with n vertices and degree d minimizing the largest eigenvalue.
    Problem2(Problem2Args),
    /// Regenerate the reference table and diff it against the golden copy.
    Table(GoldenArgs),
    /// Reproduce the four worked examples and diff against the golden copy.
    Examples(GoldenArgs),
    /// Check the complement eigenvalue relation on a graph.
    ComplementCheck(ComplementArgs),
}

#[derive(Args, Debug, Serialize)]
pub struct ConstructArgs {
    pub n: usize,
    pub m: usize,
    /// Run the local-minimality verifier on the result.
    #[arg(long)]
    pub verify: bool,
    /// List the certificates behind the status tag.
    #[arg(long)]
    pub certify: bool,
}

#[derive(Args, Debug, Serialize)]
pub struct CertifyArgs {
    pub n: usize,
    pub m: usize,
    /// Also run the exhaustive oracle (n <= 9).
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Args, Debug, Serialize)]
#[command(group(ArgGroup::new("input").required(true).args(["file", "partition", "row"])))]
pub struct VerifyArgs {
    /// Edge-list file ("-" for stdin).
    pub file: Option<PathBuf>,
    /// Union of complete graphs, e.g. 6,3.
    #[arg(long, value_delimiter = ',')]
    pub partition: Option<Vec<usize>>,
    /// Pad the partition with singletons up to this many vertices.
    #[arg(long, requires = "partition")]
    pub n: Option<usize>,
    /// Circulant generating row.
    #[arg(long)]
    pub row: Option<String>,
    /// Scan the whole neighborhood and report per-case statistics.
    #[arg(long)]
    pub full: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MethodArg {
    Labeled,
    Canonical,
}

#[derive(Args, Debug, Serialize)]
pub struct BruteArgs {
    pub n: usize,
    pub m: usize,
    /// Defaults to labeled for n <= 6, canonical above.
    #[arg(long, value_enum)]
    pub method: Option<MethodArg>,
    /// Maximum-degree cap for canonical search: auto, off, or an integer.
    #[arg(long, default_value = "auto")]
    pub cap: String,
}

#[derive(Args, Debug, Serialize)]
pub struct CirculantArgs {
    /// 0/1 generating row; position 0 must be 0.
    #[arg(long)]
    pub row: String,
}

#[derive(Args, Debug, Serialize)]
pub struct Problem2Args {
    pub n: usize,
    pub d: usize,
}

#[derive(Args, Debug, Serialize)]
pub struct GoldenArgs {
    /// Golden file to diff against.
    #[arg(long)]
    pub golden: Option<PathBuf>,
    /// Overwrite the golden file with the regenerated output.
    #[arg(long)]
    pub bless: bool,
}

#[derive(Args, Debug, Serialize)]
#[command(group(ArgGroup::new("input").required(true).args(["file", "random", "row"])))]
pub struct ComplementArgs {
    /// Edge-list file ("-" for stdin).
    pub file: Option<PathBuf>,
    /// Random graph with N vertices and M edges, drawn from --seed.
    #[arg(long, num_args = 2, value_names = ["N", "M"])]
    pub random: Option<Vec<usize>>,
    /// Circulant generating row.
    #[arg(long)]
    pub row: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(outcome) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&outcome).expect("outcome serializes"));
            } else {
                print!("{}", outcome.human);
            }
            ExitCode::from(if outcome.passed() { 0 } else { 1 })
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
