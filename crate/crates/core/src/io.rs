//! JSON files, digests and run manifests.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::constructions::Decomposition;
use crate::error::{GeoError, Result};
use crate::exactgeom::Configuration;

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

pub fn read_config(path: &Path) -> Result<Configuration> {
    let text = fs::read_to_string(path)?;
    let cfg: Configuration =
        serde_json::from_str(&text).map_err(|e| GeoError::Schema(format!("{}: {e}", path.display())))?;
    Ok(cfg)
}

pub fn read_decomposition(path: &Path) -> Result<Decomposition> {
    let text = fs::read_to_string(path)?;
    Decomposition::from_json(&text).map_err(|e| match e {
        GeoError::Json(j) => GeoError::Schema(format!("{}: {j}", path.display())),
        other => other,
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_json_text<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// Writes `text` and returns its digest.
pub fn write_text(path: &Path, text: &str) -> Result<String> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)?;
    }
    fs::write(path, text)?;
    Ok(sha256_hex(text.as_bytes()))
}

/// What a command was asked to do and what it wrote.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub seed: Option<u64>,
    pub version: String,
    pub elapsed_ms: u128,
    /// Output path to SHA-256 of its bytes.
    pub outputs: BTreeMap<String, String>,
}

impl RunManifest {
    pub fn new(command: &str) -> Self {
        RunManifest {
            command: command.into(),
            parameters: BTreeMap::new(),
            seed: None,
            version: env!("CARGO_PKG_VERSION").into(),
            elapsed_ms: 0,
            outputs: BTreeMap::new(),
        }
    }

    /// Sidecar path: `out.json` gets `out.json.manifest.json`.
    pub fn path_for(output: &Path) -> std::path::PathBuf {
        let mut s = output.as_os_str().to_owned();
        s.push(".manifest.json");
        s.into()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_is_stable() {
        assert_eq!(sha256_hex(b"abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    }

    #[test]
    fn manifest_path() {
        assert_eq!(RunManifest::path_for(Path::new("a/b.json")), Path::new("a/b.json.manifest.json"));
    }
}
