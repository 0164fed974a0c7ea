//! Artifact files exchanged between pipeline commands, all under the run's
//! output directory. Each loader reports which command produces a missing
//! prerequisite.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use pairforge::dataset::{import_dataset, ExportFormat, PairedDataset};
use pairforge::pipeline::{ApplicabilityCensus, CorruptionPlanEntry};
use pairforge::{AnnotatedSentence, ParsedCorpus};

pub const CLEANED_CORPUS: &str = "cleaned.conllu";
pub const CLEANING_REPORT: &str = "cleaning_report.json";
pub const CENSUS_JSON: &str = "census.json";
pub const CENSUS_CSV: &str = "census.csv";
pub const PLAN: &str = "plan.jsonl";
pub const PAIRS: &str = "pairs.jsonl";
pub const DATASET: &str = "dataset.jsonl";
pub const DISTANCES: &str = "distances.json";
pub const REVIEW_WORKSHEET: &str = "review_worksheet.tsv";
pub const PRECISION_JSON: &str = "precision.json";
pub const PRECISION_CSV: &str = "precision.csv";

pub fn require(path: &Path, producer: &str) -> Result<()> {
    if !path.exists() {
        bail!(
            "missing prerequisite artifact {}; run `pairforge {producer}` first",
            path.display()
        );
    }
    Ok(())
}

pub fn out_path(out: &Path, name: &str) -> PathBuf {
    out.join(name)
}

pub fn load_cleaned_corpus(out: &Path) -> Result<Vec<AnnotatedSentence>> {
    let path = out_path(out, CLEANED_CORPUS);
    require(&path, "clean")?;
    let file = File::open(&path)?;
    let parsed: ParsedCorpus = pairforge::parse_conllu(BufReader::new(file))
        .with_context(|| format!("cannot parse {}", path.display()))?;
    Ok(parsed.sentences)
}

pub fn load_census(out: &Path) -> Result<ApplicabilityCensus> {
    let path = out_path(out, CENSUS_JSON);
    require(&path, "census")?;
    let file = File::open(&path)?;
    serde_json::from_reader(BufReader::new(file))
        .with_context(|| format!("cannot parse {}", path.display()))
}

pub fn load_plan(out: &Path) -> Result<Vec<CorruptionPlanEntry>> {
    let path = out_path(out, PLAN);
    require(&path, "corrupt")?;
    read_jsonl(&path)
}

pub fn load_pairs(out: &Path) -> Result<Vec<pairforge::MinimalPair>> {
    let path = out_path(out, PAIRS);
    require(&path, "pairs")?;
    read_jsonl(&path)
}

pub fn load_dataset(out: &Path) -> Result<PairedDataset> {
    let path = out_path(out, DATASET);
    require(&path, "split")?;
    let file = File::open(&path)?;
    import_dataset(ExportFormat::Jsonl, BufReader::new(file))
        .with_context(|| format!("cannot parse {}", path.display()))
}

pub fn read_jsonl<T: serde::de::DeserializeOwned>(path: &Path) -> Result<Vec<T>> {
    let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    let mut items = Vec::new();
    for (lineno, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        items.push(serde_json::from_str(&line).with_context(|| {
            format!("{}:{}: malformed record", path.display(), lineno + 1)
        })?);
    }
    Ok(items)
}

pub fn write_jsonl<T: serde::Serialize>(path: &Path, items: &[T]) -> Result<()> {
    let file = File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
    let mut writer = BufWriter::new(file);
    for item in items {
        serde_json::to_writer(&mut writer, item)?;
        writer.write_all(b"\n")?;
    }
    writer.flush()?;
    Ok(())
}

pub fn write_json_pretty<T: serde::Serialize>(path: &Path, value: &T) -> Result<()> {
    let json = serde_json::to_string_pretty(value)?;
    std::fs::write(path, json + "\n")
        .with_context(|| format!("cannot write {}", path.display()))?;
    Ok(())
}
