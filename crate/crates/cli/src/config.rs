use std::fs;
use std::path::Path;

use crate::args::Cli;
use crate::error::{CliError, Result};

pub const CONFIG_ENV: &str = "LMR_CONFIG";

/// Runtime limits. The enumeration bound caps the 3^n scans, the oracle
/// bound caps the brute-force cross-checks. Flags override the config file;
/// the config file path comes only from `LMR_CONFIG`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    pub max_n: usize,
    pub oracle_bound: usize,
    pub workers: Option<usize>,
}

impl Default for Config {
    fn default() -> Config {
        Config {
            max_n: 14,
            oracle_bound: 12,
            workers: None,
        }
    }
}

impl Config {
    pub fn load(cli: &Cli) -> Result<Config> {
        let mut config = Config::default();
        if let Ok(path) = std::env::var(CONFIG_ENV) {
            config.apply_file(Path::new(&path))?;
        }
        if let Some(max_n) = cli.max_n {
            config.max_n = max_n;
        }
        if let Some(oracle_bound) = cli.oracle_bound {
            config.oracle_bound = oracle_bound;
        }
        if let Some(workers) = cli.workers {
            config.workers = Some(workers);
        }
        config.validate()?;
        Ok(config)
    }

    fn apply_file(&mut self, path: &Path) -> Result<()> {
        let text = fs::read_to_string(path).map_err(|err| {
            CliError::Usage(format!("cannot read config {}: {err}", path.display()))
        })?;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::Usage(format!(
                    "{}:{}: expected key=value, got {line:?}",
                    path.display(),
                    lineno + 1
                ))
            })?;
            let value: usize = value.trim().parse().map_err(|_| {
                CliError::Usage(format!(
                    "{}:{}: {} needs a non-negative integer",
                    path.display(),
                    lineno + 1,
                    key.trim()
                ))
            })?;
            match key.trim() {
                "max_n" => self.max_n = value,
                "oracle_bound" => self.oracle_bound = value,
                "workers" => self.workers = Some(value),
                other => {
                    return Err(CliError::Usage(format!(
                        "{}:{}: unknown config key {other:?}",
                        path.display(),
                        lineno + 1
                    )))
                }
            }
        }
        Ok(())
    }

    fn validate(&self) -> Result<()> {
        if self.max_n == 0 || self.oracle_bound == 0 {
            return Err(CliError::Usage("bounds must be positive".to_string()));
        }
        if self.oracle_bound > self.max_n {
            return Err(CliError::Usage(format!(
                "oracle_bound ({}) must not exceed max_n ({})",
                self.oracle_bound, self.max_n
            )));
        }
        Ok(())
    }

    pub fn check_enumeration(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            return Err(CliError::Bound(format!(
                "n={n} exceeds max_n={}; raise --max-n to allow the 3^{n} scan",
                self.max_n
            )));
        }
        Ok(())
    }

    pub fn check_oracle(&self, total_len: usize) -> Result<()> {
        if total_len > self.oracle_bound {
            return Err(CliError::Bound(format!(
                "brute force over 3^{total_len} words exceeds oracle_bound={}; raise --oracle-bound",
                self.oracle_bound
            )));
        }
        Ok(())
    }
}
