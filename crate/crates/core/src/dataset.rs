//! Minimal-pair assembly, stratified splitting, and dataset exchange.
//!
//! Splitting is stratified by corruption kind: each kind's pairs are
//! shuffled with a seed-derived stream and allocated to train/validation/
//! test in proportion to the split targets, using largest-remainder rounding
//! per (kind, split) cell under exact split totals. Proportional geometries
//! give train and test the floor of their share and let validation absorb
//! the remaining pairs, which reproduces the published Medium/Large sample
//! counts exactly.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};

use crate::conllu::{render_text, AnnotatedSentence};
use crate::corrupt::CorruptionKind;
use crate::error::{Error, Result};
use crate::pipeline::CorruptionPlanEntry;

/// A correct sentence and its single-error corrupted counterpart.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalPair {
    /// Equal to the source sentence id.
    pub pair_id: String,
    pub correct_text: String,
    pub corrupted_text: String,
    pub kind: CorruptionKind,
}

/// One pair per plan entry; every plan sentence id must resolve in the
/// corpus.
pub fn build_pairs(
    plan: &[CorruptionPlanEntry],
    corpus: &[AnnotatedSentence],
) -> Result<Vec<MinimalPair>> {
    let by_id: BTreeMap<&str, &AnnotatedSentence> =
        corpus.iter().map(|s| (s.id.as_str(), s)).collect();
    plan.iter()
        .map(|entry| {
            let sentence = by_id
                .get(entry.sentence_id.as_str())
                .ok_or_else(|| Error::UnresolvedId(entry.sentence_id.clone()))?;
            Ok(MinimalPair {
                pair_id: entry.sentence_id.clone(),
                correct_text: render_text(sentence),
                corrupted_text: entry.outcome.corrupted_text.clone(),
                kind: entry.kind,
            })
        })
        .collect()
}

/// Split geometry: absolute pair counts or proportions summing to 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum SplitGeometry {
    /// 512 / 128 / 1024 pairs (train / validation / test).
    Default,
    /// Proportions 0.6 / 0.05 / 0.35.
    Medium,
    /// Proportions 0.8 / 0.05 / 0.15.
    Large,
    Counts {
        train: usize,
        validation: usize,
        test: usize,
    },
    Proportions {
        train: f64,
        validation: f64,
        test: f64,
    },
}

/// Split geometry plus the shuffle seed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SplitSpec {
    pub geometry: SplitGeometry,
    pub seed: u64,
}

/// Pairs partitioned into train/validation/test. Pairs are never split
/// across partitions; each split is sorted by pair id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairedDataset {
    pub train: Vec<MinimalPair>,
    pub validation: Vec<MinimalPair>,
    pub test: Vec<MinimalPair>,
}

impl PairedDataset {
    pub fn split(&self, name: SplitName) -> &[MinimalPair] {
        match name {
            SplitName::Train => &self.train,
            SplitName::Validation => &self.validation,
            SplitName::Test => &self.test,
        }
    }

    pub fn total_pairs(&self) -> usize {
        self.train.len() + self.validation.len() + self.test.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitName {
    Train,
    Validation,
    Test,
}

impl SplitName {
    pub const ALL: [SplitName; 3] = [SplitName::Train, SplitName::Validation, SplitName::Test];

    pub fn as_str(&self) -> &'static str {
        match self {
            SplitName::Train => "train",
            SplitName::Validation => "validation",
            SplitName::Test => "test",
        }
    }
}

impl std::str::FromStr for SplitName {
    type Err = Error;

    fn from_str(s: &str) -> Result<SplitName> {
        SplitName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::Export(format!("unknown split {s:?}")))
    }
}

/// Resolve a geometry to exact pair targets for the available pool.
///
/// Proportions allocate floor(share) to train and test; validation takes
/// whatever remains, absorbing the fractional pairs.
pub fn resolve_targets(geometry: SplitGeometry, available: usize) -> Result<[usize; 3]> {
    match geometry {
        SplitGeometry::Default => resolve_targets(
            SplitGeometry::Counts {
                train: 512,
                validation: 128,
                test: 1024,
            },
            available,
        ),
        SplitGeometry::Medium => resolve_targets(
            SplitGeometry::Proportions {
                train: 0.6,
                validation: 0.05,
                test: 0.35,
            },
            available,
        ),
        SplitGeometry::Large => resolve_targets(
            SplitGeometry::Proportions {
                train: 0.8,
                validation: 0.05,
                test: 0.15,
            },
            available,
        ),
        SplitGeometry::Counts {
            train,
            validation,
            test,
        } => {
            let needed = train + validation + test;
            if needed > available {
                return Err(Error::InsufficientPairs { needed, available });
            }
            Ok([train, validation, test])
        }
        SplitGeometry::Proportions {
            train,
            validation,
            test,
        } => {
            for share in [train, validation, test] {
                if !(0.0..1.0).contains(&share) || share == 0.0 {
                    return Err(Error::InvalidSplitSpec(format!(
                        "proportion {share} outside (0, 1)"
                    )));
                }
            }
            if (train + validation + test - 1.0).abs() > 1e-9 {
                return Err(Error::InvalidSplitSpec(format!(
                    "proportions sum to {}, not 1",
                    train + validation + test
                )));
            }
            let n = available as f64;
            let train_pairs = (train * n + 1e-9).floor() as usize;
            let test_pairs = (test * n + 1e-9).floor() as usize;
            let validation_pairs = available - train_pairs - test_pairs;
            Ok([train_pairs, validation_pairs, test_pairs])
        }
    }
}

/// Stratified split of the pairs into the requested geometry.
pub fn split_dataset(pairs: &[MinimalPair], spec: &SplitSpec) -> Result<PairedDataset> {
    let available = pairs.len();
    let targets = resolve_targets(spec.geometry, available)?;
    let selected: usize = targets.iter().sum();
    if selected == 0 {
        return Err(Error::InvalidSplitSpec("empty split targets".into()));
    }

    // Group pairs by kind in canonical order, preserving input order within
    // a kind, then shuffle each group with its own derived stream.
    let mut groups: Vec<Vec<&MinimalPair>> = vec![Vec::new(); CorruptionKind::ALL.len()];
    for pair in pairs {
        groups[pair.kind.canonical_index()].push(pair);
    }
    for (kind_idx, group) in groups.iter_mut().enumerate() {
        let mut rng = crate::pipeline::sentence_rng(spec.seed, kind_idx as u64);
        group.shuffle(&mut rng);
    }

    let alloc = allocate(&groups, targets, available);

    let mut dataset = PairedDataset {
        train: Vec::with_capacity(targets[0]),
        validation: Vec::with_capacity(targets[1]),
        test: Vec::with_capacity(targets[2]),
    };
    for (kind_idx, group) in groups.iter().enumerate() {
        let [a, b, c] = alloc[kind_idx];
        dataset.train.extend(group[..a].iter().map(|p| (*p).clone()));
        dataset
            .validation
            .extend(group[a..a + b].iter().map(|p| (*p).clone()));
        dataset
            .test
            .extend(group[a + b..a + b + c].iter().map(|p| (*p).clone()));
    }
    dataset.train.sort_by(|x, y| x.pair_id.cmp(&y.pair_id));
    dataset.validation.sort_by(|x, y| x.pair_id.cmp(&y.pair_id));
    dataset.test.sort_by(|x, y| x.pair_id.cmp(&y.pair_id));

    debug_assert_eq!(dataset.train.len(), targets[0]);
    debug_assert_eq!(dataset.validation.len(), targets[1]);
    debug_assert_eq!(dataset.test.len(), targets[2]);
    Ok(dataset)
}

/// Largest-remainder apportionment of per-kind pair counts to exact split
/// targets. Every cell receives floor(n_k * T_s / N) pairs; the remaining
/// seats go to the cells with the largest fractional parts, subject to the
/// kind's pool size and the split's deficit. Cells therefore stay within one
/// pair of their exact quota except in degenerate corner cases where a
/// second bump is unavoidable.
fn allocate(groups: &[Vec<&MinimalPair>], targets: [usize; 3], available: usize) -> Vec<[usize; 3]> {
    let kinds = groups.len();
    let mut alloc = vec![[0usize; 3]; kinds];
    let mut bumped = vec![[false; 3]; kinds];
    let mut capacity: Vec<usize> = groups.iter().map(Vec::len).collect();
    let mut deficit = targets;

    // (remainder, kind, split) for every cell, largest remainder first.
    let mut cells: Vec<(u64, usize, usize)> = Vec::with_capacity(kinds * 3);
    for (k, group) in groups.iter().enumerate() {
        let n_k = group.len() as u64;
        for (s, &target) in targets.iter().enumerate() {
            let num = n_k * target as u64;
            let den = available as u64;
            let floor = (num / den) as usize;
            alloc[k][s] = floor;
            capacity[k] -= floor;
            deficit[s] -= floor;
            cells.push((num % den, k, s));
        }
    }
    cells.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));

    for &(_, k, s) in &cells {
        if deficit[s] > 0 && capacity[k] > 0 && !bumped[k][s] {
            alloc[k][s] += 1;
            bumped[k][s] = true;
            capacity[k] -= 1;
            deficit[s] -= 1;
        }
    }

    // Leftover deficits (rare): fill from any kind with spare pairs,
    // preferring cells that have not been bumped yet.
    for s in 0..3 {
        while deficit[s] > 0 {
            let pick = (0..kinds)
                .find(|&k| capacity[k] > 0 && !bumped[k][s])
                .or_else(|| (0..kinds).find(|&k| capacity[k] > 0))
                .expect("total capacity covers the targets");
            alloc[pick][s] += 1;
            bumped[pick][s] = true;
            capacity[pick] -= 1;
            deficit[s] -= 1;
        }
    }

    alloc
}

/// Kind distribution of a pair list over the canonical kind axis.
pub fn kind_distribution(pairs: &[MinimalPair]) -> Result<Vec<f64>> {
    if pairs.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let mut counts = vec![0usize; CorruptionKind::ALL.len()];
    for pair in pairs {
        counts[pair.kind.canonical_index()] += 1;
    }
    let total = pairs.len() as f64;
    Ok(counts.into_iter().map(|c| c as f64 / total).collect())
}

/// Exchange formats for the paired dataset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExportFormat {
    Csv,
    Jsonl,
}

impl ExportFormat {
    pub fn extension(&self) -> &'static str {
        match self {
            ExportFormat::Csv => "csv",
            ExportFormat::Jsonl => "jsonl",
        }
    }
}

impl std::str::FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<ExportFormat> {
        match s {
            "csv" => Ok(ExportFormat::Csv),
            "jsonl" => Ok(ExportFormat::Jsonl),
            other => Err(Error::Export(format!(
                "unknown export format {other:?} (csv or jsonl)"
            ))),
        }
    }
}

/// One exported record: a single sentence with its label and provenance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportRecord {
    pub text: String,
    /// `correct` or `incorrect`.
    pub label: String,
    /// Kind identifier; empty for correct sentences.
    pub corruption_type: String,
    pub pair_id: String,
    /// `train`, `validation`, or `test`.
    pub split: String,
}

/// Flatten the dataset into records: splits in train/validation/test order,
/// pairs by pair id, the correct sentence before the corrupted one.
pub fn export_records(ds: &PairedDataset) -> Vec<ExportRecord> {
    let mut records = Vec::with_capacity(ds.total_pairs() * 2);
    for split in SplitName::ALL {
        let mut pairs: Vec<&MinimalPair> = ds.split(split).iter().collect();
        pairs.sort_by(|a, b| a.pair_id.cmp(&b.pair_id));
        for pair in pairs {
            records.push(ExportRecord {
                text: pair.correct_text.clone(),
                label: "correct".into(),
                corruption_type: String::new(),
                pair_id: pair.pair_id.clone(),
                split: split.as_str().into(),
            });
            records.push(ExportRecord {
                text: pair.corrupted_text.clone(),
                label: "incorrect".into(),
                corruption_type: pair.kind.identifier().into(),
                pair_id: pair.pair_id.clone(),
                split: split.as_str().into(),
            });
        }
    }
    records
}

/// Write the dataset to `writer` in the chosen format (UTF-8, no BOM).
pub fn export_dataset<W: Write>(
    ds: &PairedDataset,
    format: ExportFormat,
    writer: W,
) -> Result<()> {
    let records = export_records(ds);
    match format {
        ExportFormat::Csv => {
            let mut csv_writer = csv::Writer::from_writer(writer);
            for record in &records {
                csv_writer.serialize(record)?;
            }
            csv_writer.flush()?;
        }
        ExportFormat::Jsonl => {
            let mut writer = writer;
            for record in &records {
                serde_json::to_writer(&mut writer, record)?;
                writer.write_all(b"\n")?;
            }
            writer.flush()?;
        }
    }
    Ok(())
}

/// Rebuild a [`PairedDataset`] from an exported file.
pub fn import_dataset<R: BufRead>(format: ExportFormat, reader: R) -> Result<PairedDataset> {
    let records: Vec<ExportRecord> = match format {
        ExportFormat::Csv => {
            let mut csv_reader = csv::Reader::from_reader(reader);
            csv_reader
                .deserialize()
                .collect::<std::result::Result<_, _>>()?
        }
        ExportFormat::Jsonl => {
            let mut records = Vec::new();
            for line in reader.lines() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                records.push(serde_json::from_str(&line)?);
            }
            records
        }
    };
    records_to_dataset(&records)
}

fn records_to_dataset(records: &[ExportRecord]) -> Result<PairedDataset> {
    struct Partial {
        split: SplitName,
        correct: Option<String>,
        incorrect: Option<(String, CorruptionKind)>,
    }
    let mut pairs: BTreeMap<String, Partial> = BTreeMap::new();
    for record in records {
        let split: SplitName = record.split.parse()?;
        let entry = pairs.entry(record.pair_id.clone()).or_insert(Partial {
            split,
            correct: None,
            incorrect: None,
        });
        if entry.split != split {
            return Err(Error::Export(format!(
                "pair {:?} spans splits {} and {}",
                record.pair_id,
                entry.split.as_str(),
                split.as_str()
            )));
        }
        match record.label.as_str() {
            "correct" => {
                if entry.correct.replace(record.text.clone()).is_some() {
                    return Err(Error::Export(format!(
                        "duplicate correct record for pair {:?}",
                        record.pair_id
                    )));
                }
            }
            "incorrect" => {
                let kind = CorruptionKind::from_identifier(&record.corruption_type)
                    .ok_or_else(|| {
                        Error::Export(format!(
                            "unknown corruption_type {:?}",
                            record.corruption_type
                        ))
                    })?;
                if entry
                    .incorrect
                    .replace((record.text.clone(), kind))
                    .is_some()
                {
                    return Err(Error::Export(format!(
                        "duplicate incorrect record for pair {:?}",
                        record.pair_id
                    )));
                }
            }
            other => {
                return Err(Error::Export(format!("unknown label {other:?}")));
            }
        }
    }

    let mut dataset = PairedDataset {
        train: Vec::new(),
        validation: Vec::new(),
        test: Vec::new(),
    };
    for (pair_id, partial) in pairs {
        let (Some(correct), Some((corrupted, kind))) = (partial.correct, partial.incorrect)
        else {
            return Err(Error::Export(format!("pair {pair_id:?} is incomplete")));
        };
        let pair = MinimalPair {
            pair_id,
            correct_text: correct,
            corrupted_text: corrupted,
            kind,
        };
        match partial.split {
            SplitName::Train => dataset.train.push(pair),
            SplitName::Validation => dataset.validation.push(pair),
            SplitName::Test => dataset.test.push(pair),
        }
    }
    Ok(dataset)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::distribution_distances;

    fn synthetic_pairs(total: usize) -> Vec<MinimalPair> {
        // Spread pairs over 10 kinds with uneven weights.
        let kinds = [
            (CorruptionKind::SuffixDeterminer, 30usize),
            (CorruptionKind::PronounCase, 20),
            (CorruptionKind::IndefiniteDeterminer, 15),
            (CorruptionKind::FaarFor, 10),
            (CorruptionKind::RProblemNoun, 8),
            (CorruptionKind::EndeEne, 6),
            (CorruptionKind::BasicFlip, 5),
            (CorruptionKind::Genitive, 3),
            (CorruptionKind::SomDer, 2),
            (CorruptionKind::LiggeLaegge, 1),
        ];
        let weight_sum: usize = kinds.iter().map(|(_, w)| w).sum();
        let mut pairs = Vec::with_capacity(total);
        let mut produced = 0usize;
        for (i, (kind, weight)) in kinds.iter().enumerate() {
            let n = if i + 1 == kinds.len() {
                total - produced
            } else {
                total * weight / weight_sum
            };
            for j in 0..n {
                pairs.push(MinimalPair {
                    pair_id: format!("p{:02}-{:05}", i, j),
                    correct_text: format!("korrekt sætning {i} {j}"),
                    corrupted_text: format!("forkert sætning {i} {j}"),
                    kind: *kind,
                });
            }
            produced += n;
        }
        pairs
    }

    #[test]
    fn build_pairs_resolves_plan_ids() {
        use crate::pipeline::{applicability_census, iterative_corrupt};
        use crate::rules::RulePack;
        use crate::synth::synth_corpus;
        let corpus = synth_corpus(40, 2);
        let pack = RulePack::default();
        let census = applicability_census(&corpus, &pack).unwrap();
        let plan = iterative_corrupt(&corpus, &census, &pack, 1).unwrap();
        let pairs = build_pairs(&plan, &corpus).unwrap();
        assert_eq!(pairs.len(), plan.len());
        for (pair, entry) in pairs.iter().zip(&plan) {
            assert_eq!(pair.pair_id, entry.sentence_id);
            assert_eq!(pair.kind, entry.kind);
            assert_ne!(pair.correct_text, pair.corrupted_text);
        }

        let err = build_pairs(&plan, &corpus[1..]).unwrap_err();
        assert!(matches!(err, Error::UnresolvedId(_)));
    }

    #[test]
    fn empty_plan_gives_empty_pairs() {
        assert!(build_pairs(&[], &[]).unwrap().is_empty());
    }

    #[test]
    fn medium_geometry_reproduces_published_counts() {
        let pairs = synthetic_pairs(3828);
        let ds = split_dataset(
            &pairs,
            &SplitSpec {
                geometry: SplitGeometry::Medium,
                seed: 4242,
            },
        )
        .unwrap();
        assert_eq!(
            (ds.train.len(), ds.validation.len(), ds.test.len()),
            (2296, 193, 1339)
        );
        // In sentences: 4592 / 386 / 2678.
        assert_eq!(ds.train.len() * 2, 4592);
        assert_eq!(ds.validation.len() * 2, 386);
        assert_eq!(ds.test.len() * 2, 2678);
    }

    #[test]
    fn large_geometry_reproduces_published_counts() {
        let pairs = synthetic_pairs(3828);
        let ds = split_dataset(
            &pairs,
            &SplitSpec {
                geometry: SplitGeometry::Large,
                seed: 4242,
            },
        )
        .unwrap();
        assert_eq!(
            (ds.train.len(), ds.validation.len(), ds.test.len()),
            (3062, 192, 574)
        );
        assert_eq!(ds.train.len() * 2, 6124);
        assert_eq!(ds.validation.len() * 2, 384);
        assert_eq!(ds.test.len() * 2, 1148);
    }

    #[test]
    fn default_geometry_takes_exact_counts() {
        let pairs = synthetic_pairs(3828);
        let ds = split_dataset(
            &pairs,
            &SplitSpec {
                geometry: SplitGeometry::Default,
                seed: 4242,
            },
        )
        .unwrap();
        assert_eq!(
            (ds.train.len(), ds.validation.len(), ds.test.len()),
            (512, 128, 1024)
        );
    }

    #[test]
    fn insufficient_pairs_reports_deficit() {
        let pairs = synthetic_pairs(100);
        let err = split_dataset(
            &pairs,
            &SplitSpec {
                geometry: SplitGeometry::Default,
                seed: 0,
            },
        )
        .unwrap_err();
        match err {
            Error::InsufficientPairs { needed, available } => {
                assert_eq!(needed, 1664);
                assert_eq!(available, 100);
            }
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn splits_are_disjoint_and_exhaustive() {
        let pairs = synthetic_pairs(500);
        let ds = split_dataset(
            &pairs,
            &SplitSpec {
                geometry: SplitGeometry::Medium,
                seed: 7,
            },
        )
        .unwrap();
        let mut seen = std::collections::HashSet::new();
        for split in SplitName::ALL {
            for pair in ds.split(split) {
                assert!(seen.insert(pair.pair_id.clone()), "duplicate {}", pair.pair_id);
            }
        }
        assert_eq!(seen.len(), 500);
    }

    #[test]
    fn stratification_stays_within_one_pair_of_quota() {
        for total in [333usize, 1000, 2500] {
            let pairs = synthetic_pairs(total);
            let spec = SplitSpec {
                geometry: SplitGeometry::Medium,
                seed: 99,
            };
            let ds = split_dataset(&pairs, &spec).unwrap();
            let mut kind_totals = vec![0usize; CorruptionKind::ALL.len()];
            for p in &pairs {
                kind_totals[p.kind.canonical_index()] += 1;
            }
            let targets = resolve_targets(spec.geometry, total).unwrap();
            for (s, split) in SplitName::ALL.into_iter().enumerate() {
                let mut split_kind = vec![0usize; CorruptionKind::ALL.len()];
                for p in ds.split(split) {
                    split_kind[p.kind.canonical_index()] += 1;
                }
                for k in 0..kind_totals.len() {
                    let quota = kind_totals[k] as f64 * targets[s] as f64 / total as f64;
                    let got = split_kind[k] as f64;
                    assert!(
                        (got - quota).abs() <= 1.0 + 1e-9,
                        "kind {k} split {s}: got {got}, quota {quota:.3}"
                    );
                }
            }
        }
    }

    #[test]
    fn default_split_js_divergence_under_threshold() {
        let pairs = synthetic_pairs(1800);
        let ds = split_dataset(
            &pairs,
            &SplitSpec {
                geometry: SplitGeometry::Default,
                seed: 4242,
            },
        )
        .unwrap();
        let p = kind_distribution(&ds.train).unwrap();
        let q = kind_distribution(&ds.test).unwrap();
        let report = distribution_distances(&p, &q).unwrap();
        assert!(
            report.js_divergence < 0.01,
            "JS = {}",
            report.js_divergence
        );
    }

    #[test]
    fn same_seed_same_split() {
        let pairs = synthetic_pairs(700);
        let spec = SplitSpec {
            geometry: SplitGeometry::Medium,
            seed: 31,
        };
        assert_eq!(
            split_dataset(&pairs, &spec).unwrap(),
            split_dataset(&pairs, &spec).unwrap()
        );
        let other = SplitSpec {
            geometry: SplitGeometry::Medium,
            seed: 32,
        };
        assert_ne!(
            split_dataset(&pairs, &spec).unwrap(),
            split_dataset(&pairs, &other).unwrap()
        );
    }

    #[test]
    fn export_emits_two_records_per_pair_in_order() {
        let pairs = synthetic_pairs(1700);
        let ds = split_dataset(
            &pairs,
            &SplitSpec {
                geometry: SplitGeometry::Default,
                seed: 1,
            },
        )
        .unwrap();
        let records = export_records(&ds);
        assert_eq!(records.len(), 3328);
        for chunk in records.chunks(2) {
            assert_eq!(chunk[0].pair_id, chunk[1].pair_id);
            assert_eq!(chunk[0].label, "correct");
            assert_eq!(chunk[0].corruption_type, "");
            assert_eq!(chunk[1].label, "incorrect");
            assert!(!chunk[1].corruption_type.is_empty());
        }
        // Split blocks in order.
        let splits: Vec<&str> = records.iter().map(|r| r.split.as_str()).collect();
        let train_end = splits.iter().rposition(|s| *s == "train").unwrap();
        let val_start = splits.iter().position(|s| *s == "validation").unwrap();
        assert!(train_end < val_start);
    }

    #[test]
    fn export_import_round_trip_both_formats() {
        let pairs = synthetic_pairs(400);
        let ds = split_dataset(
            &pairs,
            &SplitSpec {
                geometry: SplitGeometry::Medium,
                seed: 5,
            },
        )
        .unwrap();
        for format in [ExportFormat::Jsonl, ExportFormat::Csv] {
            let mut buffer = Vec::new();
            export_dataset(&ds, format, &mut buffer).unwrap();
            let back = import_dataset(format, buffer.as_slice()).unwrap();
            assert_eq!(back, ds, "{format:?}");
        }
    }

    #[test]
    fn csv_quoting_survives_commas_and_quotes() {
        let ds = PairedDataset {
            train: vec![MinimalPair {
                pair_id: "q1".into(),
                correct_text: "Han sagde \"ja, tak\" i går".into(),
                corrupted_text: "Han sagde \"ja, tak\" går i".into(),
                kind: CorruptionKind::BasicFlip,
            }],
            validation: Vec::new(),
            test: Vec::new(),
        };
        let mut buffer = Vec::new();
        export_dataset(&ds, ExportFormat::Csv, &mut buffer).unwrap();
        let back = import_dataset(ExportFormat::Csv, buffer.as_slice()).unwrap();
        assert_eq!(back, ds);
    }
}
