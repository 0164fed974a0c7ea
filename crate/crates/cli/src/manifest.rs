//! Run manifests: every command records its resolved configuration, the
//! digest of the rule pack it used, and the digests of all inputs and
//! outputs, so any artifact can be reproduced from its manifest alone.
//! Manifests contain no timestamps; identical runs write identical bytes.

use std::collections::BTreeMap;
use std::io::Read;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::config::RunConfig;

#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub seed: u64,
    pub geometry: String,
    pub format: String,
    pub jobs: Option<usize>,
    pub js_threshold: Option<f64>,
    /// Digest of the merged rule pack (builtin defaults plus overrides).
    pub rule_pack_sha256: String,
    /// Input path -> sha256, as given on the command line.
    pub inputs: BTreeMap<String, String>,
    /// Output file name (relative to the out directory) -> sha256.
    pub outputs: BTreeMap<String, String>,
}

pub fn sha256_file(path: &Path) -> Result<String> {
    let mut file = std::fs::File::open(path)
        .with_context(|| format!("cannot open {} for digesting", path.display()))?;
    let mut hasher = Sha256::new();
    let mut buffer = [0u8; 64 * 1024];
    loop {
        let n = file.read(&mut buffer)?;
        if n == 0 {
            break;
        }
        hasher.update(&buffer[..n]);
    }
    Ok(hex(&hasher.finalize()))
}

pub fn sha256_text(text: &str) -> String {
    hex(&Sha256::digest(text.as_bytes()))
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Collects inputs/outputs during a command run and writes the manifest.
pub struct ManifestBuilder {
    manifest: RunManifest,
    out_dir: PathBuf,
}

impl ManifestBuilder {
    pub fn new(command: &str, config: &RunConfig, rule_pack_digest: String) -> Self {
        ManifestBuilder {
            manifest: RunManifest {
                command: command.to_string(),
                seed: config.seed,
                geometry: config.geometry_label.clone(),
                format: config.format.extension().to_string(),
                jobs: config.jobs,
                js_threshold: config.js_threshold,
                rule_pack_sha256: rule_pack_digest,
                inputs: BTreeMap::new(),
                outputs: BTreeMap::new(),
            },
            out_dir: config.out.clone(),
        }
    }

    pub fn input(&mut self, path: &Path) -> Result<()> {
        self.manifest
            .inputs
            .insert(path.display().to_string(), sha256_file(path)?);
        Ok(())
    }

    pub fn output(&mut self, path: &Path) -> Result<()> {
        let name = path
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.display().to_string());
        self.manifest.outputs.insert(name, sha256_file(path)?);
        Ok(())
    }

    /// Write `<out>/<command>.manifest.json`.
    pub fn write(self) -> Result<PathBuf> {
        let path = self
            .out_dir
            .join(format!("{}.manifest.json", self.manifest.command));
        let json = serde_json::to_string_pretty(&self.manifest)?;
        std::fs::write(&path, json + "\n")
            .with_context(|| format!("cannot write manifest {}", path.display()))?;
        Ok(path)
    }
}
