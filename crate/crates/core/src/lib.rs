//! Build balanced linguistic-acceptability minimal-pair datasets from
//! dependency-annotated Danish corpora.
//!
//! The pipeline: parse CoNLL-U ([`conllu`]), clean ([`clean`]), measure
//! per-kind applicability and corrupt rarest-first ([`pipeline`]) with
//! rule-driven corruption functions ([`corrupt`], [`rules`]), assemble and
//! split minimal pairs ([`dataset`], [`distance`]), and account for
//! corruption precision against external checker judgments ([`validation`]).

pub mod clean;
pub mod conllu;
pub mod corrupt;
pub mod dataset;
pub mod distance;
pub mod error;
pub mod pipeline;
pub mod rules;
pub mod synth;
pub mod validation;

pub use clean::{clean_corpus, CleaningReport};
pub use conllu::{
    parse_conllu, parse_conllu_str, render_text, AnnotatedSentence, AnnotatedToken, ParsedCorpus,
};
pub use corrupt::{corrupt, is_applicable, CorruptionKind, CorruptionOutcome, EditLocus};
pub use dataset::{
    build_pairs, export_dataset, import_dataset, kind_distribution, split_dataset, ExportFormat,
    MinimalPair, PairedDataset, SplitGeometry, SplitName, SplitSpec,
};
pub use distance::{distribution_distances, DistanceReport};
pub use error::{Error, Result};
pub use pipeline::{
    applicability_census, iterative_corrupt, sentence_rng, ApplicabilityCensus,
    CorruptionPlanEntry,
};
pub use rules::{load_rule_pack, RulePack};
pub use validation::{
    adjusted_precision, apply_manual_verdicts, ingest_auto_judgments, sample_for_review,
    validation_report, AutoJudgment, AutoValidation, ManualVerdict, PrecisionEstimate,
    ValidationCounts, Verdict,
};
