//! Corruption-quality validation: ingest automatic grammar-checker
//! judgments, sample residual auto-false-positives for manual review, ingest
//! manual verdicts, and compute per-kind adjusted precision.
//!
//! The external checker is never called; its output arrives as a TSV
//! judgment file (`sentence_id <TAB> detected(0/1) <TAB> error_category`).
//! A corrupted sentence counts as an automatic true positive when the
//! checker flagged it with a category accepted for its corruption kind;
//! everything else (undetected, or detected under a wrong category) is an
//! automatic false positive. The manual stage re-judges a sample of those
//! false positives and the precision estimate extrapolates the sampled
//! true-positive rate back over all automatic false positives:
//!
//! ```text
//! tp_new   = tp_man / (tp_man + fp_man) * fp_auto + tp_auto
//! prec_new = tp_new / n_corruptions
//! ```
//!
//! Spelling corruptions are excluded from validation by default: their
//! misspellings are attested list entries, not rule products.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::io::BufRead;

use rand::seq::index::sample as index_sample;
use serde::{Deserialize, Serialize};

use crate::corrupt::CorruptionKind;
use crate::error::{Error, Result};
use crate::pipeline::CorruptionPlanEntry;

/// One checker judgment for a corrupted sentence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutoJudgment {
    pub sentence_id: String,
    pub detected: bool,
    /// Checker-internal error label; empty when nothing was detected.
    pub error_category: String,
}

/// Parse the TSV judgment file.
pub fn parse_judgments<R: BufRead>(reader: R) -> Result<Vec<AutoJudgment>> {
    let mut judgments = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim_end();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = trimmed.split('\t').collect();
        if cols.len() < 2 {
            return Err(Error::Parse {
                line: lineno + 1,
                message: "judgment line needs sentence_id<TAB>detected[<TAB>category]".into(),
            });
        }
        let detected = match cols[1] {
            "0" => false,
            "1" => true,
            other => {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: format!("detected flag must be 0 or 1, found {other:?}"),
                })
            }
        };
        judgments.push(AutoJudgment {
            sentence_id: cols[0].to_string(),
            detected,
            error_category: cols.get(2).unwrap_or(&"").to_string(),
        });
    }
    Ok(judgments)
}

/// Manual verdict values for one reviewed sentence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// The corruption did introduce the intended error.
    IntendedErrorPresent,
    /// The corrupted sentence is still acceptable.
    StillAcceptable,
    /// Anything else (original already erroneous, named-entity damage, ...).
    Other,
}

impl std::str::FromStr for Verdict {
    type Err = Error;

    fn from_str(s: &str) -> Result<Verdict> {
        match s {
            "intended_error_present" => Ok(Verdict::IntendedErrorPresent),
            "still_acceptable" => Ok(Verdict::StillAcceptable),
            "other" => Ok(Verdict::Other),
            other => Err(Error::InvalidCounts(format!("unknown verdict {other:?}"))),
        }
    }
}

/// One manually reviewed sentence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManualVerdict {
    pub sentence_id: String,
    pub verdict: Verdict,
    pub comment: String,
}

/// Parse the TSV verdict file (`sentence_id <TAB> verdict [<TAB> comment]`).
pub fn parse_verdicts<R: BufRead>(reader: R) -> Result<Vec<ManualVerdict>> {
    let mut verdicts = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim_end();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = trimmed.split('\t').collect();
        if cols.len() < 2 {
            return Err(Error::Parse {
                line: lineno + 1,
                message: "verdict line needs sentence_id<TAB>verdict[<TAB>comment]".into(),
            });
        }
        let verdict: Verdict = cols[1].parse().map_err(|_| Error::Parse {
            line: lineno + 1,
            message: format!(
                "verdict must be intended_error_present, still_acceptable, or other; found {:?}",
                cols[1]
            ),
        })?;
        verdicts.push(ManualVerdict {
            sentence_id: cols[0].to_string(),
            verdict,
            comment: cols.get(2).unwrap_or(&"").to_string(),
        });
    }
    Ok(verdicts)
}

/// Validation tallies for one corruption kind.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationCounts {
    pub kind: CorruptionKind,
    /// Judged corruptions of this kind (= tp_auto + fp_auto).
    pub n_corruptions: usize,
    pub tp_auto: usize,
    pub fp_auto: usize,
    pub tp_man: usize,
    pub fp_man: usize,
}

impl ValidationCounts {
    pub fn new(kind: CorruptionKind) -> Self {
        ValidationCounts {
            kind,
            n_corruptions: 0,
            tp_auto: 0,
            fp_auto: 0,
            tp_man: 0,
            fp_man: 0,
        }
    }
}

/// Result of ingesting the automatic judgments: per-kind counts plus the
/// identities of the auto-false-positive sentences (the manual review pool),
/// in judgment-file order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct AutoValidation {
    pub counts: BTreeMap<CorruptionKind, ValidationCounts>,
    pub false_positives: BTreeMap<CorruptionKind, Vec<String>>,
}

/// Tally automatic judgments against the corruption plan.
///
/// Every judgment must reference a planned corruption; duplicates are
/// errors. Kinds appearing among judged corruptions must have an accepted
/// category set in `categories` (keyed by kind identifier), except
/// `spelling_error`, which is skipped entirely.
pub fn ingest_auto_judgments(
    judgments: &[AutoJudgment],
    plan: &[CorruptionPlanEntry],
    categories: &BTreeMap<String, BTreeSet<String>>,
) -> Result<AutoValidation> {
    let kind_by_id: HashMap<&str, CorruptionKind> = plan
        .iter()
        .map(|e| (e.sentence_id.as_str(), e.kind))
        .collect();

    let mut unmapped: BTreeSet<&'static str> = BTreeSet::new();
    let mut seen: BTreeSet<&str> = BTreeSet::new();
    let mut result = AutoValidation::default();

    for judgment in judgments {
        let kind = *kind_by_id
            .get(judgment.sentence_id.as_str())
            .ok_or_else(|| Error::UnknownJudgmentId(judgment.sentence_id.clone()))?;
        if !seen.insert(judgment.sentence_id.as_str()) {
            return Err(Error::InvalidCounts(format!(
                "duplicate judgment for sentence {:?}",
                judgment.sentence_id
            )));
        }
        if kind == CorruptionKind::SpellingError {
            continue;
        }
        let Some(accepted) = categories.get(kind.identifier()) else {
            unmapped.insert(kind.identifier());
            continue;
        };
        let counts = result
            .counts
            .entry(kind)
            .or_insert_with(|| ValidationCounts::new(kind));
        counts.n_corruptions += 1;
        if judgment.detected && accepted.contains(&judgment.error_category) {
            counts.tp_auto += 1;
        } else {
            counts.fp_auto += 1;
            result
                .false_positives
                .entry(kind)
                .or_default()
                .push(judgment.sentence_id.clone());
        }
    }

    if !unmapped.is_empty() {
        let list: Vec<&str> = unmapped.into_iter().collect();
        return Err(Error::UnmappedKinds(list.join(", ")));
    }
    Ok(result)
}

/// One row of the manual-review worksheet.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReviewRow {
    pub sentence_id: String,
    pub kind: CorruptionKind,
    pub original_text: String,
    pub corrupted_text: String,
}

/// Sample up to `n_per_kind` auto-false-positives per kind, uniformly
/// without replacement, for manual review. When a kind has at most
/// `n_per_kind` false positives they are all included. Rows come out
/// grouped by kind in canonical order.
pub fn sample_for_review(
    auto: &AutoValidation,
    plan: &[CorruptionPlanEntry],
    n_per_kind: usize,
    seed: u64,
) -> Vec<ReviewRow> {
    let by_id: HashMap<&str, &CorruptionPlanEntry> =
        plan.iter().map(|e| (e.sentence_id.as_str(), e)).collect();
    let mut rows = Vec::new();
    for kind in CorruptionKind::ALL {
        let Some(pool) = auto.false_positives.get(&kind) else {
            continue;
        };
        if pool.is_empty() {
            continue;
        }
        let take = n_per_kind.min(pool.len());
        let mut rng = crate::pipeline::sentence_rng(seed, kind.canonical_index() as u64);
        let mut picked: Vec<usize> = index_sample(&mut rng, pool.len(), take).into_vec();
        picked.sort_unstable();
        for index in picked {
            let id = &pool[index];
            if let Some(entry) = by_id.get(id.as_str()) {
                rows.push(ReviewRow {
                    sentence_id: id.clone(),
                    kind,
                    original_text: entry.outcome.original_text.clone(),
                    corrupted_text: entry.outcome.corrupted_text.clone(),
                });
            }
        }
    }
    rows
}

/// Fold manual verdicts into the per-kind counts. Every verdict must
/// reference an auto-false-positive sentence; `intended_error_present`
/// counts toward `tp_man`, the other verdicts toward `fp_man`.
pub fn apply_manual_verdicts(
    auto: &mut AutoValidation,
    verdicts: &[ManualVerdict],
) -> Result<()> {
    let mut kind_of: HashMap<&str, CorruptionKind> = HashMap::new();
    for (kind, ids) in &auto.false_positives {
        for id in ids {
            kind_of.insert(id.as_str(), *kind);
        }
    }
    let mut seen: BTreeSet<&str> = BTreeSet::new();
    for verdict in verdicts {
        let kind = *kind_of
            .get(verdict.sentence_id.as_str())
            .ok_or_else(|| Error::UnknownJudgmentId(verdict.sentence_id.clone()))?;
        if !seen.insert(verdict.sentence_id.as_str()) {
            return Err(Error::InvalidCounts(format!(
                "duplicate verdict for sentence {:?}",
                verdict.sentence_id
            )));
        }
        let counts = auto
            .counts
            .get_mut(&kind)
            .expect("false positive implies counts entry");
        match verdict.verdict {
            Verdict::IntendedErrorPresent => counts.tp_man += 1,
            Verdict::StillAcceptable | Verdict::Other => counts.fp_man += 1,
        }
    }
    Ok(())
}

/// The adjusted precision estimate for one kind.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PrecisionEstimate {
    pub kind: CorruptionKind,
    pub n_corruptions: usize,
    pub prec_auto: f64,
    /// Estimated total true positives after manual extrapolation.
    pub tp_new: f64,
    pub prec_new: f64,
}

/// Adjusted precision from the validation counts.
pub fn adjusted_precision(counts: &ValidationCounts) -> Result<PrecisionEstimate> {
    let kind = counts.kind;
    if counts.n_corruptions == 0 {
        return Err(Error::InvalidCounts(format!(
            "{kind}: no corruptions to validate"
        )));
    }
    if counts.tp_auto + counts.fp_auto != counts.n_corruptions {
        return Err(Error::InvalidCounts(format!(
            "{kind}: tp_auto + fp_auto = {} does not match n_corruptions = {}",
            counts.tp_auto + counts.fp_auto,
            counts.n_corruptions
        )));
    }
    let manual = counts.tp_man + counts.fp_man;
    if manual > counts.fp_auto {
        return Err(Error::InvalidCounts(format!(
            "{kind}: manual verdicts ({manual}) exceed automatic false positives ({})",
            counts.fp_auto
        )));
    }
    let n = counts.n_corruptions as f64;
    let prec_auto = counts.tp_auto as f64 / n;
    let tp_new = if counts.fp_auto == 0 {
        counts.tp_auto as f64
    } else {
        if manual == 0 {
            return Err(Error::InvalidCounts(format!(
                "{kind}: {} automatic false positives but no manual verdicts",
                counts.fp_auto
            )));
        }
        counts.tp_man as f64 / manual as f64 * counts.fp_auto as f64 + counts.tp_auto as f64
    };
    Ok(PrecisionEstimate {
        kind,
        n_corruptions: counts.n_corruptions,
        prec_auto,
        tp_new,
        prec_new: tp_new / n,
    })
}

/// Precision formatted for the report table: three decimals with ties
/// rounded to even, trailing zeros trimmed (at least one decimal kept), so
/// 1.0 renders as `1.0` and 0.9625 as `0.962`.
pub fn format_precision(value: f64) -> String {
    let scaled = (value * 1000.0).round_ties_even();
    let mut text = format!("{:.3}", scaled / 1000.0);
    while text.ends_with('0') && !text.ends_with(".0") {
        text.pop();
    }
    text
}

/// Render the per-kind report: rows sorted descending by adjusted
/// precision (ties in canonical kind order).
pub fn validation_report(estimates: &[PrecisionEstimate]) -> String {
    let mut sorted: Vec<&PrecisionEstimate> = estimates.iter().collect();
    sorted.sort_by(|a, b| {
        b.prec_new
            .partial_cmp(&a.prec_new)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.kind.canonical_index().cmp(&b.kind.canonical_index()))
    });
    let mut out = String::new();
    out.push_str(&format!("{:<26} {:>10}\n", "Corruption Type", "Precision"));
    out.push_str(&format!("{}\n", "-".repeat(37)));
    for estimate in sorted {
        out.push_str(&format!(
            "{:<26} {:>10}\n",
            estimate.kind.label(),
            format_precision(estimate.prec_new)
        ));
    }
    out
}

/// Machine-readable companion of the report.
pub fn report_csv<W: std::io::Write>(
    estimates: &[PrecisionEstimate],
    counts: &BTreeMap<CorruptionKind, ValidationCounts>,
    writer: W,
) -> Result<()> {
    let mut sorted: Vec<&PrecisionEstimate> = estimates.iter().collect();
    sorted.sort_by(|a, b| {
        b.prec_new
            .partial_cmp(&a.prec_new)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.kind.canonical_index().cmp(&b.kind.canonical_index()))
    });
    let mut csv_writer = csv::Writer::from_writer(writer);
    csv_writer.write_record([
        "kind",
        "n_corruptions",
        "tp_auto",
        "fp_auto",
        "tp_man",
        "fp_man",
        "prec_auto",
        "tp_new",
        "prec_new",
    ])?;
    for estimate in sorted {
        let c = counts
            .get(&estimate.kind)
            .cloned()
            .unwrap_or_else(|| ValidationCounts::new(estimate.kind));
        csv_writer.write_record([
            estimate.kind.identifier().to_string(),
            estimate.n_corruptions.to_string(),
            c.tp_auto.to_string(),
            c.fp_auto.to_string(),
            c.tp_man.to_string(),
            c.fp_man.to_string(),
            format!("{}", estimate.prec_auto),
            format!("{}", estimate.tp_new),
            format!("{}", estimate.prec_new),
        ])?;
    }
    csv_writer.flush()?;
    Ok(())
}
