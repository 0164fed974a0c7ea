//! End-to-end exercises of the `pairforge` binary: the full forging chain,
//! the validation chain with fabricated checker judgments and manual
//! verdicts, prerequisite errors, and configuration precedence.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use pairforge::conllu::corpus_to_conllu;
use pairforge::pipeline::CorruptionPlanEntry;
use pairforge::synth::synth_corpus;
use pairforge::CorruptionKind;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_pairforge")
}

fn run(args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut command = Command::new(bin());
    command.args(args);
    command.env_remove("PAIRFORGE_CONFIG");
    for (key, value) in envs {
        command.env(key, value);
    }
    command.output().expect("binary runs")
}

fn run_ok(args: &[&str]) -> String {
    let output = run(args, &[]);
    assert!(
        output.status.success(),
        "command {:?} failed:\n{}",
        args,
        String::from_utf8_lossy(&output.stderr)
    );
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn write_corpus(dir: &Path, n: usize, seed: u64) -> PathBuf {
    let corpus = synth_corpus(n, seed);
    let path = dir.join("corpus.conllu");
    fs::write(&path, corpus_to_conllu(&corpus)).unwrap();
    path
}

fn categories_rules_file(dir: &Path) -> PathBuf {
    let mut text = String::new();
    for kind in CorruptionKind::ALL {
        let _ = writeln!(text, "[categories:{}]", kind.identifier());
        let _ = writeln!(text, "CAT_{}", kind.identifier().to_uppercase());
    }
    let path = dir.join("rules.txt");
    fs::write(&path, text).unwrap();
    path
}

fn read_plan(out: &Path) -> Vec<CorruptionPlanEntry> {
    fs::read_to_string(out.join("plan.jsonl"))
        .unwrap()
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn full_pipeline_produces_all_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = write_corpus(dir.path(), 260, 11);
    let out = dir.path().join("out");
    let out_str = out.to_str().unwrap();

    run_ok(&["clean", "--corpus", corpus.to_str().unwrap(), "--out", out_str]);
    run_ok(&["census", "--out", out_str]);
    run_ok(&["corrupt", "--out", out_str]);
    run_ok(&["pairs", "--out", out_str]);
    run_ok(&["split", "--geometry", "0.6,0.05,0.35", "--out", out_str]);
    run_ok(&["export", "--format", "csv", "--out", out_str]);
    let distances_out = run_ok(&["distances", "--out", out_str]);
    assert!(distances_out.contains("JS Divergence"));

    for artifact in [
        "cleaned.conllu",
        "cleaning_report.json",
        "census.json",
        "census.csv",
        "plan.jsonl",
        "pairs.jsonl",
        "dataset.jsonl",
        "export.csv",
        "distances.json",
        "clean.manifest.json",
        "census.manifest.json",
        "corrupt.manifest.json",
        "pairs.manifest.json",
        "split.manifest.json",
        "export.manifest.json",
        "distances.manifest.json",
    ] {
        assert!(out.join(artifact).exists(), "missing {artifact}");
    }

    // The census CSV mirrors the two-column table layout.
    let census_csv = fs::read_to_string(out.join("census.csv")).unwrap();
    assert!(census_csv.starts_with("kind,fraction\n"));
    assert_eq!(census_csv.lines().count(), 17);

    // Manifests record the seed and input digests.
    let manifest: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(out.join("corrupt.manifest.json")).unwrap())
            .unwrap();
    assert_eq!(manifest["command"], "corrupt");
    assert_eq!(manifest["seed"], 4242);
    assert!(manifest["inputs"].as_object().unwrap().len() >= 2);
    assert!(!manifest["rule_pack_sha256"].as_str().unwrap().is_empty());
}

#[test]
fn validation_chain_from_judgments_to_report() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = write_corpus(dir.path(), 220, 23);
    let rules = categories_rules_file(dir.path());
    let out = dir.path().join("out");
    let out_str = out.to_str().unwrap();
    let rules_str = rules.to_str().unwrap();

    run_ok(&["clean", "--corpus", corpus.to_str().unwrap(), "--out", out_str]);
    run_ok(&["census", "--out", out_str, "--rules", rules_str]);
    run_ok(&["corrupt", "--out", out_str, "--rules", rules_str]);

    // Fabricate checker judgments: by position, 80% detected with the
    // accepted category, 10% detected under a wrong label, 10% undetected.
    let plan = read_plan(&out);
    assert!(plan.len() > 150);
    let mut judgments = String::new();
    for (i, entry) in plan.iter().enumerate() {
        let accepted = format!("CAT_{}", entry.kind.identifier().to_uppercase());
        let (detected, category) = match i % 10 {
            0 => (true, "SOMETHING_ELSE".to_string()),
            1 => (false, String::new()),
            _ => (true, accepted),
        };
        let _ = writeln!(
            judgments,
            "{}\t{}\t{}",
            entry.sentence_id,
            if detected { 1 } else { 0 },
            category
        );
    }
    let judgments_path = dir.path().join("judgments.tsv");
    fs::write(&judgments_path, judgments).unwrap();

    run_ok(&[
        "sample-review",
        "--out",
        out_str,
        "--rules",
        rules_str,
        "--judgments",
        judgments_path.to_str().unwrap(),
        "--sample-size",
        "10",
    ]);
    let worksheet = fs::read_to_string(out.join("review_worksheet.tsv")).unwrap();
    let mut lines = worksheet.lines();
    assert_eq!(
        lines.next().unwrap(),
        "sentence_id\toriginal_text\tcorrupted_text\tkind\tverdict"
    );

    // Fill in verdicts: alternate between confirming the error and not.
    let mut verdicts = String::new();
    for (i, line) in lines.enumerate() {
        let sentence_id = line.split('\t').next().unwrap();
        let verdict = if i % 3 == 0 {
            "still_acceptable"
        } else {
            "intended_error_present"
        };
        let _ = writeln!(verdicts, "{sentence_id}\t{verdict}\tchecked by hand");
    }
    let verdicts_path = dir.path().join("verdicts.tsv");
    fs::write(&verdicts_path, verdicts).unwrap();

    run_ok(&[
        "precision",
        "--out",
        out_str,
        "--rules",
        rules_str,
        "--judgments",
        judgments_path.to_str().unwrap(),
        "--verdicts",
        verdicts_path.to_str().unwrap(),
    ]);
    let artifact: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(out.join("precision.json")).unwrap()).unwrap();
    let estimates = artifact["estimates"].as_array().unwrap();
    assert!(!estimates.is_empty());
    for estimate in estimates {
        let prec_new = estimate["prec_new"].as_f64().unwrap();
        let prec_auto = estimate["prec_auto"].as_f64().unwrap();
        assert!((0.0..=1.0).contains(&prec_new));
        assert!(prec_new >= prec_auto - 1e-12);
        // Spelling errors are excluded from validation.
        assert_ne!(estimate["kind"].as_str().unwrap(), "spelling_error");
    }

    let report_out = run_ok(&["report", "--out", out_str]);
    assert!(report_out.contains("Corruption Type"));
    assert!(report_out.contains("Precision"));
    assert!(out.join("precision.csv").exists());
    let csv = fs::read_to_string(out.join("precision.csv")).unwrap();
    assert!(csv.starts_with("kind,n_corruptions,tp_auto,fp_auto,tp_man,fp_man"));
}

#[test]
fn missing_prerequisites_name_the_producing_command() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("fresh");
    let output = run(&["corrupt", "--out", out.to_str().unwrap()], &[]);
    assert!(!output.status.success());
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("pairforge clean"), "stderr: {stderr}");

    let output = run(&["report", "--out", out.to_str().unwrap()], &[]);
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("pairforge precision"), "stderr: {stderr}");
}

#[test]
fn config_file_supplies_values_and_flags_override() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = write_corpus(dir.path(), 120, 31);
    let configured_out = dir.path().join("configured");
    let config_path = dir.path().join("forge.conf");
    fs::write(
        &config_path,
        format!(
            "# run configuration\n[config]\ncorpus\t{}\nout\t{}\nseed\t7\n",
            corpus.display(),
            configured_out.display()
        ),
    )
    .unwrap();

    run_ok(&["clean", "--config", config_path.to_str().unwrap()]);
    assert!(configured_out.join("cleaned.conllu").exists());
    let manifest: serde_json::Value = serde_json::from_str(
        &fs::read_to_string(configured_out.join("clean.manifest.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(manifest["seed"], 7);

    // A flag beats the config file.
    let flag_out = dir.path().join("flagged");
    run_ok(&[
        "clean",
        "--config",
        config_path.to_str().unwrap(),
        "--out",
        flag_out.to_str().unwrap(),
        "--seed",
        "99",
    ]);
    let manifest: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(flag_out.join("clean.manifest.json")).unwrap())
            .unwrap();
    assert_eq!(manifest["seed"], 99);

    // An environment variable beats the config file too.
    let env_out = dir.path().join("from-env");
    let output = run(
        &["clean", "--config", config_path.to_str().unwrap()],
        &[("PAIRFORGE_OUT", env_out.to_str().unwrap())],
    );
    assert!(output.status.success());
    assert!(env_out.join("cleaned.conllu").exists());
}

#[test]
fn distances_exit_code_flags_js_breach() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = write_corpus(dir.path(), 200, 47);
    let out = dir.path().join("out");
    let out_str = out.to_str().unwrap();
    run_ok(&["clean", "--corpus", corpus.to_str().unwrap(), "--out", out_str]);
    run_ok(&["census", "--out", out_str]);
    run_ok(&["corrupt", "--out", out_str]);
    run_ok(&["pairs", "--out", out_str]);
    run_ok(&["split", "--geometry", "0.6,0.05,0.35", "--out", out_str]);

    // Stratification keeps the real divergence tiny, so exit 0 here...
    let output = run(&["distances", "--out", out_str], &[]);
    assert_eq!(output.status.code(), Some(0));

    // ...and an absurdly small threshold forces the breach path.
    let output = run(
        &["distances", "--out", out_str, "--js-threshold", "1e-12"],
        &[],
    );
    assert_eq!(output.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&output.stderr).contains("exceeds"));
}
