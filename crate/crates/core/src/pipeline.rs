//! Applicability census and the rarest-first iterative corruption pass.
//!
//! The census measures, per corruption kind, how many sentences of the
//! cleaned corpus have at least one candidate site. The corruption pass then
//! visits every sentence and applies the applicable kind with the lowest
//! census fraction, so rare error types claim their sentences before common
//! ones can. Per-sentence rng streams are derived from the global seed and
//! the sentence ordinal, which keeps results identical under any degree of
//! parallelism.

use std::collections::{BTreeMap, HashSet};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::conllu::AnnotatedSentence;
use crate::corrupt::{corrupt, is_applicable, CorruptionKind, CorruptionOutcome};
use crate::error::{Error, Result};
use crate::rules::RulePack;

/// Per-kind applicability counts over a corpus. A sentence may be counted
/// under several kinds; the rows are not disjoint.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ApplicabilityCensus {
    pub corpus_size: usize,
    /// Sentence count with a non-empty candidate set, per kind.
    pub counts: BTreeMap<CorruptionKind, usize>,
    /// The corpus fingerprint: every sentence id, in corpus order.
    pub sentence_ids: Vec<String>,
}

impl ApplicabilityCensus {
    /// Applicable fraction of the corpus for this kind.
    pub fn fraction(&self, kind: CorruptionKind) -> f64 {
        self.counts.get(&kind).copied().unwrap_or(0) as f64 / self.corpus_size as f64
    }

    /// Kinds in ascending applicability order; ties resolve by canonical
    /// kind order. This is the application order of the corruption pass.
    pub fn ascending_kinds(&self) -> Vec<CorruptionKind> {
        let mut kinds: Vec<CorruptionKind> = CorruptionKind::ALL.to_vec();
        kinds.sort_by_key(|k| {
            (
                self.counts.get(k).copied().unwrap_or(0),
                k.canonical_index(),
            )
        });
        kinds
    }

    /// Rows as `(kind, count, fraction)` sorted descending by fraction, the
    /// layout used for the census export.
    pub fn table(&self) -> Vec<(CorruptionKind, usize, f64)> {
        let mut rows: Vec<(CorruptionKind, usize, f64)> = CorruptionKind::ALL
            .iter()
            .map(|&k| (k, self.counts.get(&k).copied().unwrap_or(0), self.fraction(k)))
            .collect();
        rows.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.canonical_index().cmp(&b.0.canonical_index())));
        rows
    }
}

/// One planned corruption: the sentence, the kind that claimed it, and the
/// materialized outcome.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorruptionPlanEntry {
    pub sentence_id: String,
    pub kind: CorruptionKind,
    pub outcome: CorruptionOutcome,
}

/// Count, for each kind, the sentences where the corruptor has at least one
/// candidate site. Deterministic: applicability needs no rng.
pub fn applicability_census(
    corpus: &[AnnotatedSentence],
    pack: &RulePack,
) -> Result<ApplicabilityCensus> {
    if corpus.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let mut ids = HashSet::with_capacity(corpus.len());
    for s in corpus {
        if !ids.insert(s.id.as_str()) {
            return Err(Error::DuplicateSentenceId(s.id.clone()));
        }
    }

    let per_sentence: Vec<u16> = corpus
        .par_iter()
        .map(|sentence| {
            let mut mask = 0u16;
            for kind in CorruptionKind::ALL {
                if is_applicable(kind, sentence, pack) {
                    mask |= 1 << kind.canonical_index();
                }
            }
            mask
        })
        .collect();

    let mut counts: BTreeMap<CorruptionKind, usize> = CorruptionKind::ALL
        .iter()
        .map(|&k| (k, 0usize))
        .collect();
    for mask in per_sentence {
        for kind in CorruptionKind::ALL {
            if mask & (1 << kind.canonical_index()) != 0 {
                *counts.get_mut(&kind).expect("all kinds present") += 1;
            }
        }
    }

    Ok(ApplicabilityCensus {
        corpus_size: corpus.len(),
        counts,
        sentence_ids: corpus.iter().map(|s| s.id.clone()).collect(),
    })
}

/// The rng stream for one sentence, derived from the global seed and the
/// sentence's ordinal in the corpus. Independent streams make the corruption
/// pass embarrassingly parallel without affecting outputs.
pub fn sentence_rng(seed: u64, ordinal: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&ordinal.to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

/// Corrupt every sentence with the rarest applicable kind.
///
/// Kinds are tried in ascending census order and the first success wins, so
/// each sentence receives exactly one corruption or none. Visiting sentences
/// first and kinds second is equivalent to the kind-major reading (apply the
/// rarest kind to all its sentences, then the next kind to the remainder):
/// both try the same kinds in the same order per sentence and stop at the
/// first success.
///
/// The census must describe exactly this corpus; unknown sentence ids or a
/// size mismatch are errors.
pub fn iterative_corrupt(
    corpus: &[AnnotatedSentence],
    census: &ApplicabilityCensus,
    pack: &RulePack,
    seed: u64,
) -> Result<Vec<CorruptionPlanEntry>> {
    if census.corpus_size != corpus.len() {
        return Err(Error::CensusMismatch(format!(
            "census covers {} sentences, corpus has {}",
            census.corpus_size,
            corpus.len()
        )));
    }
    let known: HashSet<&str> = census.sentence_ids.iter().map(String::as_str).collect();
    for s in corpus {
        if !known.contains(s.id.as_str()) {
            return Err(Error::CensusMismatch(format!(
                "unknown sentence id {:?}",
                s.id
            )));
        }
    }

    let order = census.ascending_kinds();
    let entries: Vec<Option<CorruptionPlanEntry>> = corpus
        .par_iter()
        .enumerate()
        .map(|(ordinal, sentence)| {
            let mut rng = sentence_rng(seed, ordinal as u64);
            for &kind in &order {
                if let Some(outcome) = corrupt(kind, sentence, pack, &mut rng) {
                    return Some(CorruptionPlanEntry {
                        sentence_id: sentence.id.clone(),
                        kind,
                        outcome,
                    });
                }
            }
            None
        })
        .collect();

    Ok(entries.into_iter().flatten().collect())
}
