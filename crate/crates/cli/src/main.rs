//! `pairforge` — forge balanced linguistic-acceptability minimal-pair
//! datasets from dependency-annotated Danish corpora.
//!
//! The pipeline is decomposed into commands so externally produced files
//! (grammar-checker judgments, manual verdicts) can be inserted between
//! stages:
//!
//! ```text
//! clean -> census -> corrupt -> pairs -> split -> export
//!                        \-> sample-review -> precision -> report
//!                    split -> distances
//! ```

mod artifacts;
mod commands;
mod config;
mod manifest;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};

use config::{load_file_config, resolve, CliValues, FileConfig};

#[derive(Parser)]
#[command(
    name = "pairforge",
    version,
    about = "Forge minimal-pair acceptability datasets from CoNLL-U corpora",
    after_help = "Every flag can also come from a PAIRFORGE_* environment variable or a \
                  [config] section in --config; flags win over environment, environment \
                  over file, file over defaults."
)]
struct Cli {
    /// Config file ([config] section, key<TAB>value entries).
    #[arg(long, global = true, env = "PAIRFORGE_CONFIG")]
    config: Option<PathBuf>,

    /// CoNLL-U corpus file(s); repeat or comma-separate.
    #[arg(long, global = true, env = "PAIRFORGE_CORPUS", value_delimiter = ',')]
    corpus: Vec<PathBuf>,

    /// Rule file overriding/extending the built-in Danish rules.
    #[arg(long, global = true, env = "PAIRFORGE_RULES")]
    rules: Option<PathBuf>,

    /// Seed for all randomized choices.
    #[arg(long, global = true, env = "PAIRFORGE_SEED")]
    seed: Option<u64>,

    /// Split geometry: default, medium, large, counts `512,128,1024`, or
    /// proportions `0.6,0.05,0.35`.
    #[arg(long, global = true, env = "PAIRFORGE_GEOMETRY")]
    geometry: Option<String>,

    /// Export format: csv or jsonl.
    #[arg(long, global = true, env = "PAIRFORGE_FORMAT")]
    format: Option<String>,

    /// Output directory for artifacts and manifests.
    #[arg(long, global = true, env = "PAIRFORGE_OUT")]
    out: Option<PathBuf>,

    /// Cap the worker thread count (outputs are identical at any setting).
    #[arg(long, global = true, env = "PAIRFORGE_JOBS")]
    jobs: Option<usize>,

    /// Train/test JS divergence ceiling for `distances`.
    #[arg(long, global = true, env = "PAIRFORGE_JS_THRESHOLD")]
    js_threshold: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse CoNLL-U corpora and apply the cleaning filters.
    Clean,
    /// Measure per-kind corruption applicability on the cleaned corpus.
    Census,
    /// Corrupt every sentence with its rarest applicable kind.
    Corrupt,
    /// Assemble minimal pairs from the corruption plan.
    Pairs,
    /// Stratified train/validation/test split of the pairs.
    Split,
    /// Export the split dataset as CSV or JSONL.
    Export,
    /// Train/test kind-distribution distances; nonzero exit on JS breach.
    Distances,
    /// Sample automatic false positives into a manual-review worksheet.
    SampleReview {
        /// Checker judgment file (sentence_id<TAB>detected<TAB>category).
        #[arg(long)]
        judgments: PathBuf,
        /// Maximum sampled sentences per corruption kind.
        #[arg(long, default_value_t = 50)]
        sample_size: usize,
    },
    /// Compute per-kind adjusted precision from judgments and verdicts.
    Precision {
        /// Checker judgment file (sentence_id<TAB>detected<TAB>category).
        #[arg(long)]
        judgments: PathBuf,
        /// Manual verdict file (sentence_id<TAB>verdict<TAB>comment).
        #[arg(long)]
        verdicts: Option<PathBuf>,
    },
    /// Render the precision report table plus its CSV companion.
    Report,
}

fn run(cli: Cli) -> Result<u8> {
    let file_config = match &cli.config {
        Some(path) => load_file_config(path)?,
        None => FileConfig::default(),
    };
    let run_config = resolve(
        CliValues {
            corpus: cli.corpus,
            rules: cli.rules,
            seed: cli.seed,
            geometry: cli.geometry,
            format: cli.format,
            out: cli.out,
            jobs: cli.jobs,
            js_threshold: cli.js_threshold,
        },
        file_config,
    )?;

    if let Some(jobs) = run_config.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
            .ok();
    }

    match cli.command {
        Command::Clean => commands::clean(&run_config),
        Command::Census => commands::census(&run_config),
        Command::Corrupt => commands::corrupt(&run_config),
        Command::Pairs => commands::pairs(&run_config),
        Command::Split => commands::split(&run_config),
        Command::Export => commands::export(&run_config),
        Command::Distances => commands::distances(&run_config),
        Command::SampleReview {
            judgments,
            sample_size,
        } => commands::sample_review(&run_config, &judgments, sample_size),
        Command::Precision {
            judgments,
            verdicts,
        } => commands::precision(&run_config, &judgments, verdicts.as_deref()),
        Command::Report => commands::report(&run_config),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(error) => {
            eprintln!("error: {error:#}");
            ExitCode::from(1)
        }
    }
}
