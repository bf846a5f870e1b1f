//! Optional JSON configuration and cache-path resolution.

use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::Deserialize;

pub const DEFAULT_CACHE: &str = ".multfree-cache.json";
pub const CACHE_ENV: &str = "MULTFREE_CACHE";

/// Contents of a `--config` file. Every field is optional; flags win.
#[derive(Debug, Default, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub degree: Option<u32>,
    pub cache: Option<PathBuf>,
    pub threads: Option<usize>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
        serde_json::from_str(&text).with_context(|| format!("parsing config {}", path.display()))
    }
}

/// Cache path: flag, then `MULTFREE_CACHE`, then config, then the default.
pub fn cache_path(flag: Option<&Path>, env: Option<String>, config: &Config) -> PathBuf {
    flag.map(Path::to_path_buf)
        .or_else(|| env.filter(|s| !s.is_empty()).map(PathBuf::from))
        .or_else(|| config.cache.clone())
        .unwrap_or_else(|| PathBuf::from(DEFAULT_CACHE))
}
