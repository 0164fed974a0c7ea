//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by parsing, rule loading, and the pipeline stages.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("rule load error in [{section}]: {message}")]
    RuleLoad { section: String, message: String },

    #[error("corpus is empty")]
    EmptyCorpus,

    #[error("duplicate sentence id {0:?} in corpus")]
    DuplicateSentenceId(String),

    #[error("census does not match corpus: {0}")]
    CensusMismatch(String),

    #[error("sentence id {0:?} does not resolve in the corpus")]
    UnresolvedId(String),

    #[error("requested {needed} pairs but only {available} are available")]
    InsufficientPairs { needed: usize, available: usize },

    #[error("invalid split spec: {0}")]
    InvalidSplitSpec(String),

    #[error("distributions have different lengths ({0} vs {1})")]
    DistributionLength(usize, usize),

    #[error("vector does not describe a probability distribution: {0}")]
    NotADistribution(String),

    #[error("judgment references unknown sentence id {0:?}")]
    UnknownJudgmentId(String),

    #[error("no accepted checker categories configured for kind(s): {0}")]
    UnmappedKinds(String),

    #[error("invalid validation counts: {0}")]
    InvalidCounts(String),

    #[error("export format error: {0}")]
    Export(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
