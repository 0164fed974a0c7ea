//! Implementations of the pipeline commands. Each command reads its
//! prerequisite artifacts from the output directory, writes its own
//! artifacts plus a run manifest, and prints a short summary.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use pairforge::clean::clean_corpus;
use pairforge::conllu::corpus_to_conllu;
use pairforge::dataset::{
    build_pairs, export_dataset, kind_distribution, split_dataset, resolve_targets, SplitName,
    SplitSpec,
};
use pairforge::distance::distribution_distances;
use pairforge::pipeline::{applicability_census, iterative_corrupt};
use pairforge::rules::{load_rule_pack, RulePack};
use pairforge::validation::{
    adjusted_precision, apply_manual_verdicts, ingest_auto_judgments, parse_judgments,
    parse_verdicts, sample_for_review, validation_report, report_csv, PrecisionEstimate,
    ValidationCounts,
};
use pairforge::{CorruptionKind, ParsedCorpus};

use crate::artifacts::{self, out_path};
use crate::config::RunConfig;
use crate::manifest::{sha256_text, ManifestBuilder};

fn load_pack(config: &RunConfig) -> Result<RulePack> {
    let mut pack = load_rule_pack(config.rules.as_deref())
        .with_context(|| "cannot load rule pack".to_string())?;
    if let Some(threshold) = config.js_threshold {
        pack.js_threshold = threshold;
    }
    Ok(pack)
}

fn manifest(command: &str, config: &RunConfig, pack: &RulePack) -> ManifestBuilder {
    ManifestBuilder::new(command, config, sha256_text(&pack.canonical_text()))
}

fn ensure_out_dir(config: &RunConfig) -> Result<()> {
    std::fs::create_dir_all(&config.out)
        .with_context(|| format!("cannot create output directory {}", config.out.display()))
}

pub fn clean(config: &RunConfig) -> Result<u8> {
    if config.corpus.is_empty() {
        bail!("`clean` needs at least one --corpus file (CoNLL-U)");
    }
    ensure_out_dir(config)?;
    let pack = load_pack(config)?;
    let mut builder = manifest("clean", config, &pack);

    let mut merged = ParsedCorpus::default();
    for path in &config.corpus {
        builder.input(path)?;
        let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
        let parsed = pairforge::parse_conllu(BufReader::new(file))
            .with_context(|| format!("cannot parse {}", path.display()))?;
        merged.sentences.extend(parsed.sentences);
        merged.structural_rejects += parsed.structural_rejects;
    }

    let (cleaned, report) = clean_corpus(&merged);

    let corpus_path = out_path(&config.out, artifacts::CLEANED_CORPUS);
    std::fs::write(&corpus_path, corpus_to_conllu(&cleaned))?;
    let report_path = out_path(&config.out, artifacts::CLEANING_REPORT);
    artifacts::write_json_pretty(&report_path, &report)?;
    builder.output(&corpus_path)?;
    builder.output(&report_path)?;
    builder.write()?;

    println!(
        "kept {} of {} sentences (duplicates {}, too short {}, too simple {}, \
         char bounds {}, ambiguous punctuation {}, structural {})",
        report.output_count,
        report.input_count,
        report.deduplicated,
        report.too_short,
        report.too_simple,
        report.char_bounds,
        report.ambiguous_punct,
        report.structural_rejects,
    );
    Ok(0)
}

pub fn census(config: &RunConfig) -> Result<u8> {
    ensure_out_dir(config)?;
    let pack = load_pack(config)?;
    let mut builder = manifest("census", config, &pack);
    let corpus_path = out_path(&config.out, artifacts::CLEANED_CORPUS);
    artifacts::require(&corpus_path, "clean")?;
    builder.input(&corpus_path)?;

    let corpus = artifacts::load_cleaned_corpus(&config.out)?;
    let census = applicability_census(&corpus, &pack)?;

    let json_path = out_path(&config.out, artifacts::CENSUS_JSON);
    artifacts::write_json_pretty(&json_path, &census)?;
    let csv_path = out_path(&config.out, artifacts::CENSUS_CSV);
    let mut csv = BufWriter::new(File::create(&csv_path)?);
    writeln!(csv, "kind,fraction")?;
    for (kind, _, fraction) in census.table() {
        writeln!(csv, "{},{:.6}", kind.identifier(), fraction)?;
    }
    csv.flush()?;
    drop(csv);
    builder.output(&json_path)?;
    builder.output(&csv_path)?;
    builder.write()?;

    println!("censused {} sentences across {} kinds", census.corpus_size, CorruptionKind::ALL.len());
    for (kind, count, fraction) in census.table() {
        println!("  {:<26} {:>6}  {:.6}", kind.label(), count, fraction);
    }
    Ok(0)
}

pub fn corrupt(config: &RunConfig) -> Result<u8> {
    ensure_out_dir(config)?;
    let pack = load_pack(config)?;
    let mut builder = manifest("corrupt", config, &pack);
    let corpus_path = out_path(&config.out, artifacts::CLEANED_CORPUS);
    artifacts::require(&corpus_path, "clean")?;
    builder.input(&corpus_path)?;
    let census_path = out_path(&config.out, artifacts::CENSUS_JSON);
    artifacts::require(&census_path, "census")?;
    builder.input(&census_path)?;

    let corpus = artifacts::load_cleaned_corpus(&config.out)?;
    let census = artifacts::load_census(&config.out)?;
    let plan = iterative_corrupt(&corpus, &census, &pack, config.seed)?;

    let plan_path = out_path(&config.out, artifacts::PLAN);
    artifacts::write_jsonl(&plan_path, &plan)?;
    builder.output(&plan_path)?;
    builder.write()?;

    let mut per_kind: BTreeMap<CorruptionKind, usize> = BTreeMap::new();
    for entry in &plan {
        *per_kind.entry(entry.kind).or_default() += 1;
    }
    println!(
        "corrupted {} of {} sentences (seed {})",
        plan.len(),
        corpus.len(),
        config.seed
    );
    for kind in CorruptionKind::ALL {
        if let Some(count) = per_kind.get(&kind) {
            println!("  {:<26} {:>6}", kind.label(), count);
        }
    }
    Ok(0)
}

pub fn pairs(config: &RunConfig) -> Result<u8> {
    ensure_out_dir(config)?;
    let pack = load_pack(config)?;
    let mut builder = manifest("pairs", config, &pack);
    let plan_path = out_path(&config.out, artifacts::PLAN);
    artifacts::require(&plan_path, "corrupt")?;
    builder.input(&plan_path)?;
    let corpus_path = out_path(&config.out, artifacts::CLEANED_CORPUS);
    artifacts::require(&corpus_path, "clean")?;
    builder.input(&corpus_path)?;

    let plan = artifacts::load_plan(&config.out)?;
    let corpus = artifacts::load_cleaned_corpus(&config.out)?;
    let pairs = build_pairs(&plan, &corpus)?;

    let pairs_path = out_path(&config.out, artifacts::PAIRS);
    artifacts::write_jsonl(&pairs_path, &pairs)?;
    builder.output(&pairs_path)?;
    builder.write()?;

    println!("built {} minimal pairs ({} sentences)", pairs.len(), pairs.len() * 2);
    Ok(0)
}

pub fn split(config: &RunConfig) -> Result<u8> {
    ensure_out_dir(config)?;
    let pack = load_pack(config)?;
    let mut builder = manifest("split", config, &pack);
    let pairs_path = out_path(&config.out, artifacts::PAIRS);
    artifacts::require(&pairs_path, "pairs")?;
    builder.input(&pairs_path)?;

    let pairs = artifacts::load_pairs(&config.out)?;
    let targets = resolve_targets(config.geometry, pairs.len())?;
    let dataset = split_dataset(
        &pairs,
        &SplitSpec {
            geometry: config.geometry,
            seed: config.seed,
        },
    )?;

    let dataset_path = out_path(&config.out, artifacts::DATASET);
    let file = File::create(&dataset_path)?;
    export_dataset(&dataset, pairforge::ExportFormat::Jsonl, BufWriter::new(file))?;
    builder.output(&dataset_path)?;
    builder.write()?;

    println!(
        "split {} pairs into train/validation/test = {}/{}/{} pairs ({} geometry, seed {})",
        dataset.total_pairs(),
        targets[0],
        targets[1],
        targets[2],
        config.geometry_label,
        config.seed
    );
    Ok(0)
}

pub fn export(config: &RunConfig) -> Result<u8> {
    ensure_out_dir(config)?;
    let pack = load_pack(config)?;
    let mut builder = manifest("export", config, &pack);
    let dataset_path = out_path(&config.out, artifacts::DATASET);
    artifacts::require(&dataset_path, "split")?;
    builder.input(&dataset_path)?;

    let dataset = artifacts::load_dataset(&config.out)?;
    let export_path = out_path(
        &config.out,
        &format!("export.{}", config.format.extension()),
    );
    let file = File::create(&export_path)?;
    export_dataset(&dataset, config.format, BufWriter::new(file))?;
    builder.output(&export_path)?;
    builder.write()?;

    println!(
        "exported {} records to {}",
        dataset.total_pairs() * 2,
        export_path.display()
    );
    Ok(0)
}

fn finite_or_null(value: f64) -> serde_json::Value {
    if value.is_finite() {
        serde_json::json!(value)
    } else {
        serde_json::Value::Null
    }
}

pub fn distances(config: &RunConfig) -> Result<u8> {
    ensure_out_dir(config)?;
    let pack = load_pack(config)?;
    let mut builder = manifest("distances", config, &pack);
    let dataset_path = out_path(&config.out, artifacts::DATASET);
    artifacts::require(&dataset_path, "split")?;
    builder.input(&dataset_path)?;

    let dataset = artifacts::load_dataset(&config.out)?;
    let train = kind_distribution(dataset.split(SplitName::Train))?;
    let test = kind_distribution(dataset.split(SplitName::Test))?;
    let report = distribution_distances(&train, &test)?;

    let json = serde_json::json!({
        "kl_forward": finite_or_null(report.kl_forward),
        "kl_backward": finite_or_null(report.kl_backward),
        "js_divergence": finite_or_null(report.js_divergence),
        "total_variation": finite_or_null(report.total_variation),
        "wasserstein": finite_or_null(report.wasserstein),
        "hellinger": finite_or_null(report.hellinger),
        "js_threshold": pack.js_threshold,
    });
    let distances_path = out_path(&config.out, artifacts::DISTANCES);
    artifacts::write_json_pretty(&distances_path, &json)?;
    builder.output(&distances_path)?;
    builder.write()?;

    let rows = [
        ("KL Divergence (Tr || Te)", report.kl_forward),
        ("KL Divergence (Te || Tr)", report.kl_backward),
        ("JS Divergence", report.js_divergence),
        ("Total Variation Distance", report.total_variation),
        ("Wasserstein Distance", report.wasserstein),
        ("Hellinger Distance", report.hellinger),
    ];
    println!("{:<26} {:>12}", "Metric", "Train-Test");
    for (name, value) in rows {
        if value.is_finite() {
            println!("{name:<26} {value:>12.6}");
        } else {
            println!("{name:<26} {:>12}", "inf");
        }
    }

    if report.js_divergence >= pack.js_threshold {
        eprintln!(
            "JS divergence {:.6} exceeds the threshold {}",
            report.js_divergence, pack.js_threshold
        );
        return Ok(2);
    }
    Ok(0)
}

pub fn sample_review(
    config: &RunConfig,
    judgments_path: &Path,
    sample_size: usize,
) -> Result<u8> {
    if sample_size == 0 {
        bail!("--sample-size must be at least 1");
    }
    ensure_out_dir(config)?;
    let pack = load_pack(config)?;
    let mut builder = manifest("sample-review", config, &pack);
    let plan_path = out_path(&config.out, artifacts::PLAN);
    artifacts::require(&plan_path, "corrupt")?;
    builder.input(&plan_path)?;
    builder.input(judgments_path)?;

    let plan = artifacts::load_plan(&config.out)?;
    let judgments = parse_judgments(BufReader::new(
        File::open(judgments_path)
            .with_context(|| format!("cannot open {}", judgments_path.display()))?,
    ))?;
    let auto = ingest_auto_judgments(&judgments, &plan, &pack.categories)?;
    let rows = sample_for_review(&auto, &plan, sample_size, config.seed);

    let worksheet_path = out_path(&config.out, artifacts::REVIEW_WORKSHEET);
    let mut worksheet = BufWriter::new(File::create(&worksheet_path)?);
    writeln!(
        worksheet,
        "sentence_id\toriginal_text\tcorrupted_text\tkind\tverdict"
    )?;
    for row in &rows {
        writeln!(
            worksheet,
            "{}\t{}\t{}\t{}\t",
            row.sentence_id,
            row.original_text,
            row.corrupted_text,
            row.kind.identifier()
        )?;
    }
    worksheet.flush()?;
    drop(worksheet);
    builder.output(&worksheet_path)?;
    builder.write()?;

    println!(
        "sampled {} auto-false-positives for manual review (<= {} per kind, seed {})",
        rows.len(),
        sample_size,
        config.seed
    );
    Ok(0)
}

/// Serialized form of the precision artifact.
#[derive(Serialize, Deserialize)]
pub struct PrecisionArtifact {
    pub estimates: Vec<PrecisionEstimate>,
    pub counts: BTreeMap<CorruptionKind, ValidationCounts>,
}

pub fn precision(
    config: &RunConfig,
    judgments_path: &Path,
    verdicts_path: Option<&Path>,
) -> Result<u8> {
    ensure_out_dir(config)?;
    let pack = load_pack(config)?;
    let mut builder = manifest("precision", config, &pack);
    let plan_path = out_path(&config.out, artifacts::PLAN);
    artifacts::require(&plan_path, "corrupt")?;
    builder.input(&plan_path)?;
    builder.input(judgments_path)?;

    let plan = artifacts::load_plan(&config.out)?;
    let judgments = parse_judgments(BufReader::new(
        File::open(judgments_path)
            .with_context(|| format!("cannot open {}", judgments_path.display()))?,
    ))?;
    let mut auto = ingest_auto_judgments(&judgments, &plan, &pack.categories)?;
    if let Some(verdicts_path) = verdicts_path {
        builder.input(verdicts_path)?;
        let verdicts = parse_verdicts(BufReader::new(
            File::open(verdicts_path)
                .with_context(|| format!("cannot open {}", verdicts_path.display()))?,
        ))?;
        apply_manual_verdicts(&mut auto, &verdicts)?;
    }

    let estimates: Vec<PrecisionEstimate> = auto
        .counts
        .values()
        .map(adjusted_precision)
        .collect::<pairforge::Result<_>>()?;

    let artifact = PrecisionArtifact {
        estimates,
        counts: auto.counts.clone(),
    };
    let precision_path = out_path(&config.out, artifacts::PRECISION_JSON);
    artifacts::write_json_pretty(&precision_path, &artifact)?;
    builder.output(&precision_path)?;
    builder.write()?;

    println!(
        "estimated precision for {} kinds from {} judgments",
        artifact.estimates.len(),
        judgments.len()
    );
    Ok(0)
}

pub fn report(config: &RunConfig) -> Result<u8> {
    ensure_out_dir(config)?;
    let pack = load_pack(config)?;
    let mut builder = manifest("report", config, &pack);
    let precision_path = out_path(&config.out, artifacts::PRECISION_JSON);
    artifacts::require(&precision_path, "precision")?;
    builder.input(&precision_path)?;

    let artifact: PrecisionArtifact = serde_json::from_reader(BufReader::new(File::open(
        &precision_path,
    )?))
    .with_context(|| format!("cannot parse {}", precision_path.display()))?;

    print!("{}", validation_report(&artifact.estimates));

    let csv_path = out_path(&config.out, artifacts::PRECISION_CSV);
    let file = File::create(&csv_path)?;
    report_csv(&artifact.estimates, &artifact.counts, BufWriter::new(file))?;
    builder.output(&csv_path)?;
    builder.write()?;
    Ok(0)
}
