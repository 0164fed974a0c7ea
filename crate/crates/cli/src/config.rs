//! Run configuration: command-line flags override environment variables
//! (prefix `PAIRFORGE_`), which override the config file, which overrides
//! built-in defaults.
//!
//! The config file uses the same key-sectioned plain-text format as rule
//! files, with a single `[config]` section of `key <TAB> value` entries:
//!
//! ```text
//! [config]
//! corpus\tdata/train.conllu
//! corpus\tdata/dev.conllu
//! seed\t4242
//! geometry\tdefault
//! format\tjsonl
//! out\tout
//! ```

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use pairforge::dataset::{ExportFormat, SplitGeometry};

pub const DEFAULT_SEED: u64 = 4242;

/// Values read from a config file; `None` means "not set".
#[derive(Debug, Default, Clone)]
pub struct FileConfig {
    pub corpus: Vec<PathBuf>,
    pub rules: Option<PathBuf>,
    pub seed: Option<u64>,
    pub geometry: Option<String>,
    pub format: Option<String>,
    pub out: Option<PathBuf>,
    pub jobs: Option<usize>,
    pub js_threshold: Option<f64>,
}

pub fn load_file_config(path: &Path) -> Result<FileConfig> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read config file {}", path.display()))?;
    let mut config = FileConfig::default();
    let mut in_config_section = false;
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let line = line.trim_end();
        if line.trim().is_empty() {
            continue;
        }
        if let Some(section) = line.trim().strip_prefix('[') {
            let section = section
                .strip_suffix(']')
                .with_context(|| format!("line {}: unterminated section header", lineno + 1))?;
            if section != "config" {
                bail!(
                    "line {}: config files accept only a [config] section, found [{section}]",
                    lineno + 1
                );
            }
            in_config_section = true;
            continue;
        }
        if !in_config_section {
            bail!("line {}: entry before the [config] section", lineno + 1);
        }
        let (key, value) = line
            .split_once('\t')
            .with_context(|| format!("line {}: expected key<TAB>value", lineno + 1))?;
        let value = value.trim();
        match key.trim() {
            "corpus" => config.corpus.push(PathBuf::from(value)),
            "rules" => config.rules = Some(PathBuf::from(value)),
            "seed" => {
                config.seed =
                    Some(value.parse().with_context(|| {
                        format!("line {}: seed {value:?} is not an integer", lineno + 1)
                    })?)
            }
            "geometry" => config.geometry = Some(value.to_string()),
            "format" => config.format = Some(value.to_string()),
            "out" => config.out = Some(PathBuf::from(value)),
            "jobs" => {
                config.jobs =
                    Some(value.parse().with_context(|| {
                        format!("line {}: jobs {value:?} is not an integer", lineno + 1)
                    })?)
            }
            "js_threshold" => {
                config.js_threshold =
                    Some(value.parse().with_context(|| {
                        format!("line {}: js_threshold {value:?} is not a number", lineno + 1)
                    })?)
            }
            other => bail!("line {}: unknown config key {other:?}", lineno + 1),
        }
    }
    Ok(config)
}

/// Fully resolved run configuration.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub corpus: Vec<PathBuf>,
    pub rules: Option<PathBuf>,
    pub seed: u64,
    pub geometry: SplitGeometry,
    pub geometry_label: String,
    pub format: ExportFormat,
    pub out: PathBuf,
    pub jobs: Option<usize>,
    pub js_threshold: Option<f64>,
}

pub struct CliValues {
    pub corpus: Vec<PathBuf>,
    pub rules: Option<PathBuf>,
    pub seed: Option<u64>,
    pub geometry: Option<String>,
    pub format: Option<String>,
    pub out: Option<PathBuf>,
    pub jobs: Option<usize>,
    pub js_threshold: Option<f64>,
}

/// Merge flag/env values (already combined by clap) with the config file
/// and defaults.
pub fn resolve(cli: CliValues, file: FileConfig) -> Result<RunConfig> {
    let geometry_label = cli
        .geometry
        .or(file.geometry)
        .unwrap_or_else(|| "default".to_string());
    let geometry = parse_geometry(&geometry_label)?;
    let format_label = cli.format.or(file.format).unwrap_or_else(|| "jsonl".to_string());
    let format: ExportFormat = format_label
        .parse()
        .map_err(|e| anyhow::anyhow!("{e}"))?;
    Ok(RunConfig {
        corpus: if cli.corpus.is_empty() {
            file.corpus
        } else {
            cli.corpus
        },
        rules: cli.rules.or(file.rules),
        seed: cli.seed.or(file.seed).unwrap_or(DEFAULT_SEED),
        geometry,
        geometry_label,
        format,
        out: cli
            .out
            .or(file.out)
            .unwrap_or_else(|| PathBuf::from("out")),
        jobs: cli.jobs.or(file.jobs),
        js_threshold: cli.js_threshold.or(file.js_threshold),
    })
}

/// `default`, `medium`, `large`, absolute counts `512,128,1024`, or
/// proportions `0.6,0.05,0.35`.
pub fn parse_geometry(label: &str) -> Result<SplitGeometry> {
    match label {
        "default" => return Ok(SplitGeometry::Default),
        "medium" => return Ok(SplitGeometry::Medium),
        "large" => return Ok(SplitGeometry::Large),
        _ => {}
    }
    let parts: Vec<&str> = label.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        bail!(
            "geometry {label:?} is not default/medium/large or three comma-separated values"
        );
    }
    if label.contains('.') {
        let shares: Vec<f64> = parts
            .iter()
            .map(|p| p.parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .with_context(|| format!("geometry {label:?} has non-numeric proportions"))?;
        Ok(SplitGeometry::Proportions {
            train: shares[0],
            validation: shares[1],
            test: shares[2],
        })
    } else {
        let counts: Vec<usize> = parts
            .iter()
            .map(|p| p.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .with_context(|| format!("geometry {label:?} has non-integer counts"))?;
        Ok(SplitGeometry::Counts {
            train: counts[0],
            validation: counts[1],
            test: counts[2],
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometry_labels_parse() {
        assert!(matches!(parse_geometry("default").unwrap(), SplitGeometry::Default));
        assert!(matches!(parse_geometry("medium").unwrap(), SplitGeometry::Medium));
        assert!(matches!(
            parse_geometry("512,128,1024").unwrap(),
            SplitGeometry::Counts { train: 512, validation: 128, test: 1024 }
        ));
        assert!(matches!(
            parse_geometry("0.6,0.05,0.35").unwrap(),
            SplitGeometry::Proportions { .. }
        ));
        assert!(parse_geometry("enormous").is_err());
    }

    #[test]
    fn flags_override_file_which_overrides_defaults() {
        let file = FileConfig {
            seed: Some(7),
            out: Some(PathBuf::from("file-out")),
            ..FileConfig::default()
        };
        let cli = CliValues {
            corpus: vec![],
            rules: None,
            seed: Some(9),
            geometry: None,
            format: None,
            out: None,
            jobs: None,
            js_threshold: None,
        };
        let resolved = resolve(cli, file).unwrap();
        assert_eq!(resolved.seed, 9);
        assert_eq!(resolved.out, PathBuf::from("file-out"));
        assert_eq!(resolved.format, ExportFormat::Jsonl);
        assert!(matches!(resolved.geometry, SplitGeometry::Default));
    }
}
