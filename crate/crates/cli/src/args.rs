use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::Format;

#[derive(Debug, Parser)]
#[command(name = "codecalc", version, about = "Straighten Bernstein and Schur-Q operator words on code words")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, env = "CODECALC_FORMAT", default_value = "text")]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Encode a composition as a code word, or decode a word.
    Code(CodeArgs),
    /// Straighten an operator word indexed by a composition.
    Straighten(StraightenArgs),
    /// Apply one operator to a Schur or Schur-Q function.
    Act(ActArgs),
    /// Expand B(t) s_λ or Y(t) Q_λ up to a bound.
    Series(SeriesArgs),
    /// Run agreement sweeps or replay a golden corpus.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algebra {
    /// Bernstein operators and Schur functions.
    B,
    /// Vertex operators Y and Schur Q-functions.
    Q,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Iterated exchange rule on the plain code.
    Code,
    /// Read-and-delete on the plain code (b only).
    Reading,
    /// Permutation sign (q only).
    Perm,
    /// Exchange rule on the shifted code (q only).
    Shifted,
    /// Exponent-vector sort (b only).
    Oracle,
    /// Every method valid for the algebra; they must agree.
    All,
}

#[derive(Debug, Args)]
pub struct CodeArgs {
    /// Composition to encode, e.g. 4,2,2,1.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "decode")]
    pub index: Option<String>,
    /// Word to decode instead, e.g. RURUURRU.
    #[arg(long)]
    pub decode: Option<String>,
    /// Use the shifted code.
    #[arg(long, conflicts_with = "preshifted")]
    pub shifted: bool,
    /// Show the preshifted code, prefix included.
    #[arg(long)]
    pub preshifted: bool,
}

#[derive(Debug, Args)]
pub struct StraightenArgs {
    #[arg(long, value_enum, default_value = "b")]
    pub algebra: Algebra,
    #[arg(long, value_enum, default_value = "code")]
    pub method: Method,
    /// Print each rewriting step and the total sign exponent.
    #[arg(long)]
    pub trace: bool,
    /// Composition, e.g. 1,3,1,6,2.
    #[arg(allow_hyphen_values = true, default_value = "")]
    pub index: String,
}

#[derive(Debug, Args)]
pub struct ActArgs {
    #[arg(long, value_enum, default_value = "b")]
    pub algebra: Algebra,
    /// Operator subscript: B_n, or Y_(-n).
    #[arg(short = 'n', allow_negative_numbers = true)]
    pub n: i64,
    /// Partition (b) or strict partition (q) acted on.
    #[arg(long, default_value = "")]
    pub index: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Form {
    /// Indexed by insertion position j and part n.
    J,
    /// Indexed by i through λ^[i].
    I,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(long, value_enum, default_value = "b")]
    pub algebra: Algebra,
    #[arg(long, default_value = "")]
    pub index: String,
    /// Last index i (b, or q with --form i).
    #[arg(long)]
    pub i_max: Option<u64>,
    /// Largest t-exponent (q with --form j).
    #[arg(long)]
    pub n_max: Option<i64>,
    /// Largest t-exponent (b); overrides --i-max.
    #[arg(long, allow_negative_numbers = true)]
    pub t_max: Option<i64>,
    #[arg(long, value_enum, default_value = "j")]
    pub form: Form,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// codes, bernstein, qvertex, shifted, oracle, all or corpus.
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long)]
    pub max_part: Option<i64>,
    #[arg(long)]
    pub max_len: Option<usize>,
    #[arg(long)]
    pub max_size: Option<i64>,
    #[arg(long)]
    pub i_max: Option<u64>,
    #[arg(long)]
    pub window: Option<i64>,
    /// Number of random words for the reduction check.
    #[arg(long)]
    pub words: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Corpus file for --suite corpus.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Write failures here, one JSON object per line.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Run cases on one thread.
    #[arg(long)]
    pub sequential: bool,
}
