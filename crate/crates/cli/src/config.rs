//! Simple key=value configuration files for CI grids.
//!
//! ```text
//! # acceptance grid
//! nu_list = 0,0.25,0.5
//! mu_list = 0.5,1
//! n_max = 10
//! tol = 1e-7
//! threads = 2
//! format = csv
//! out = report.csv
//! ```
//!
//! Unknown keys are rejected; command-line flags override file values.

use crate::{Format, UsageError};
use anyhow::{bail, Context};
use std::path::{Path, PathBuf};

pub fn usage_error(msg: impl Into<String>) -> anyhow::Error {
    anyhow::Error::new(UsageError(msg.into()))
}

#[derive(Debug, Default)]
pub struct FileConfig {
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    pub tol: Option<f64>,
    pub threads: Option<usize>,
    pub nu_list: Option<Vec<f64>>,
    pub mu_list: Option<Vec<f64>>,
    pub n_list: Option<Vec<u32>>,
}

pub fn parse_f64_list(text: &str) -> anyhow::Result<Vec<f64>> {
    let mut items = Vec::new();
    for s in text.split(',').filter(|s| !s.trim().is_empty()) {
        items.push(
            s.trim()
                .parse::<f64>()
                .map_err(|_| usage_error(format!("not a number: {s:?}")))?,
        );
    }
    if items.is_empty() {
        return Err(usage_error("empty value list"));
    }
    Ok(items)
}

pub fn parse_u32_list(text: &str) -> anyhow::Result<Vec<u32>> {
    let mut items = Vec::new();
    for s in text.split(',').filter(|s| !s.trim().is_empty()) {
        items.push(
            s.trim()
                .parse::<u32>()
                .map_err(|_| usage_error(format!("not a non-negative integer: {s:?}")))?,
        );
    }
    if items.is_empty() {
        return Err(usage_error("empty value list"));
    }
    Ok(items)
}

impl FileConfig {
    pub fn load(path: &Path) -> anyhow::Result<FileConfig> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read config {}", path.display()))?;
        let mut cfg = FileConfig::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                bail!("config line {} is not key=value: {raw:?}", idx + 1);
            };
            let (key, value) = (key.trim(), value.trim());
            match key {
                "format" => {
                    cfg.format = Some(match value {
                        "csv" => Format::Csv,
                        "json" => Format::Json,
                        other => bail!("unknown format {other:?} in config"),
                    })
                }
                "out" => cfg.out = Some(PathBuf::from(value)),
                "tol" => cfg.tol = Some(value.parse().context("bad tol in config")?),
                "threads" => cfg.threads = Some(value.parse().context("bad threads in config")?),
                "nu_list" => cfg.nu_list = Some(parse_f64_list(value)?),
                "mu_list" => cfg.mu_list = Some(parse_f64_list(value)?),
                "n_list" => cfg.n_list = Some(parse_u32_list(value)?),
                "n_max" => {
                    let n: u32 = value.parse().context("bad n_max in config")?;
                    cfg.n_list = Some((0..=n).collect());
                }
                other => bail!("unknown config key {other:?}"),
            }
        }
        Ok(cfg)
    }
}
