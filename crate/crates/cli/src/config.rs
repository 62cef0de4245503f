//! Optional `key=value` defaults file. Command-line flags win over it.
//!
//! ```text
//! # comments and blank lines are ignored
//! cap = 1000000
//! method = gessel
//! format = markdown
//! digits = 12
//! ```

use std::path::Path;

use clap::ValueEnum;

use crate::args::{Format, MethodArg};
use crate::error::CliError;

/// Names the config file when `--config` is absent.
pub const CONFIG_ENV: &str = "LISWORD_CONFIG";

pub const DEFAULT_DIGITS: usize = 12;
pub const DEFAULT_VALIDATE_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Config {
    pub cap: Option<u64>,
    pub method: Option<MethodArg>,
    pub format: Option<Format>,
    pub digits: Option<usize>,
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut config = Config::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |what: &str| CliError::Usage(format!("config line {}: {what}", lineno + 1));
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| bad("expected key=value"))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "cap" => {
                    config.cap = Some(value.parse().map_err(|_| bad("cap must be an integer"))?)
                }
                "digits" => {
                    config.digits = Some(
                        value
                            .parse()
                            .map_err(|_| bad("digits must be an integer"))?,
                    )
                }
                "method" => {
                    config.method =
                        Some(MethodArg::from_str(value, true).map_err(|_| bad("unknown method"))?)
                }
                "format" => {
                    config.format =
                        Some(Format::from_str(value, true).map_err(|_| bad("unknown format"))?)
                }
                other => return Err(bad(&format!("unknown key {other:?}"))),
            }
        }
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Config {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    /// Loads `--config`, else the file named by `$LISWORD_CONFIG`, else
    /// returns empty defaults.
    pub fn resolve(flag: Option<&Path>) -> Result<Self, CliError> {
        if let Some(path) = flag {
            return Self::load(path);
        }
        match std::env::var_os(CONFIG_ENV) {
            Some(path) if !path.is_empty() => Self::load(Path::new(&path)),
            _ => Ok(Config::default()),
        }
    }
}
