//! Flat `key = value` configuration files with `#` comments.
//!
//! Command-line flags override file values; the file overrides built-in
//! defaults. Unknown keys are rejected so typos surface instead of being
//! silently ignored.

use std::path::{Path, PathBuf};

use kosnet::Error;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct FileConfig {
    pub data: Option<PathBuf>,
    pub kos: Option<PathBuf>,
    pub output_dir: Option<PathBuf>,
    pub w_direct: Option<f64>,
    pub w_related: Option<f64>,
    pub w_broader: Option<f64>,
    pub enrichment_enabled: Option<bool>,
    pub top_k: Option<usize>,
    pub min_score: Option<f64>,
}

pub fn load(path: &Path) -> Result<FileConfig, Error> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse(&text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
}

fn parse(text: &str) -> Result<FileConfig, String> {
    let mut cfg = FileConfig::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let lineno = idx + 1;
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("line {lineno}: expected 'key = value'"))?;
        let key = key.trim();
        let value = value.trim();
        match key {
            "data" => cfg.data = Some(PathBuf::from(value)),
            "kos" => cfg.kos = Some(PathBuf::from(value)),
            "output_dir" => cfg.output_dir = Some(PathBuf::from(value)),
            "w_direct" => cfg.w_direct = Some(parse_number(key, value, lineno)?),
            "w_related" => cfg.w_related = Some(parse_number(key, value, lineno)?),
            "w_broader" => cfg.w_broader = Some(parse_number(key, value, lineno)?),
            "min_score" => cfg.min_score = Some(parse_number(key, value, lineno)?),
            "top_k" => {
                cfg.top_k = Some(value.parse().map_err(|_| {
                    format!("line {lineno}: top_k must be a non-negative integer (got {value:?})")
                })?)
            }
            "enrichment_enabled" => match value {
                "true" => cfg.enrichment_enabled = Some(true),
                "false" => cfg.enrichment_enabled = Some(false),
                other => {
                    return Err(format!(
                        "line {lineno}: enrichment_enabled must be true or false (got {other:?})"
                    ))
                }
            },
            other => return Err(format!("line {lineno}: unknown key {other:?}")),
        }
    }
    Ok(cfg)
}

fn parse_number(key: &str, value: &str, lineno: usize) -> Result<f64, String> {
    value
        .parse::<f64>()
        .map_err(|_| format!("line {lineno}: {key} must be a number (got {value:?})"))
}
