//! Command-line definitions.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "itemsum",
    version,
    about = "Itemset-mining extractive summarizer",
    long_about = "Builds a sentence-level transaction database from a document, mines frequent \
                  itemsets with Apriori, scores sentences by summed itemset support, and emits \
                  a compressed extract. Also evaluates summaries with ROUGE metrics."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Summarize one document
    Summarize(SummarizeArgs),
    /// Score system summaries against model summaries with ROUGE
    Evaluate(EvaluateArgs),
    /// Produce a Lead or Random baseline summary
    Baseline(BaselineArgs),
    /// Sweep min_sup over a corpus and tabulate mean scores and itemset counts
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Concept,
    Term,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Plain,
    #[value(name = "structured-json")]
    StructuredJson,
    #[value(name = "pre-segmented")]
    PreSegmented,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BaselineKind {
    Lead,
    Random,
}

/// Options shared by the pipeline subcommands. Flags override values from
/// `--config`; unset values fall back to the tuned defaults.
#[derive(Args, Debug, Default)]
pub struct CommonArgs {
    /// JSON config file mirroring these flags
    #[arg(long)]
    pub config: Option<PathBuf>,

    /// Item vocabulary: concept annotations or stemmed terms
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,

    /// Minimum support threshold, e.g. 0.08 or 7/85
    #[arg(long = "min-sup")]
    pub min_sup: Option<String>,

    /// Compression rate in (0,1), e.g. 0.30
    #[arg(long)]
    pub rate: Option<String>,

    /// Concept annotation file (JSON lines), required in concept mode
    #[arg(long)]
    pub annotations: Option<PathBuf>,

    /// Stop-word list (one word per line); bundled list when omitted
    #[arg(long)]
    pub stopwords: Option<PathBuf>,

    /// Blocked semantic types (one per line); bundled nine when omitted
    #[arg(long = "blocked-types")]
    pub blocked_types: Option<PathBuf>,

    /// Seed for the random baseline
    #[arg(long)]
    pub seed: Option<u64>,

    /// Output directory
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Input format; inferred from the file extension when omitted
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,

    /// Comma-separated metrics: r1,r2,rw12,rsu4
    #[arg(long)]
    pub metrics: Option<String>,
}

#[derive(Args, Debug)]
pub struct SummarizeArgs {
    /// Document to summarize
    pub document: Option<PathBuf>,

    #[command(flatten)]
    pub common: CommonArgs,

    /// Also write the transaction debug dump
    #[arg(long)]
    pub dump_transactions: bool,
}

#[derive(Args, Debug)]
pub struct BaselineArgs {
    /// Document to summarize
    pub document: Option<PathBuf>,

    /// Which baseline to run
    #[arg(long, value_enum)]
    pub kind: BaselineKind,

    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args, Debug)]
pub struct EvaluateArgs {
    /// System summary files; paired with models by shared id
    #[arg(long = "system", required = true, num_args = 1..)]
    pub system: Vec<PathBuf>,

    /// Model (reference) summary files
    #[arg(long = "model", required = true, num_args = 1..)]
    pub model: Vec<PathBuf>,

    /// Comma-separated metrics: r1,r2,rw12,rsu4 (default: all four)
    #[arg(long)]
    pub metrics: Option<String>,

    /// Output directory for report.json / report.txt
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// Corpus directory of <id>.doc.* documents with <id>.model.txt
    /// summaries (and <id>.annotations.jsonl in concept mode)
    pub corpus: PathBuf,

    /// Thresholds as start:end:step or a comma list (default 0.02:0.20:0.01)
    #[arg(long = "sweep-range")]
    pub sweep_range: Option<String>,

    #[command(flatten)]
    pub common: CommonArgs,
}
