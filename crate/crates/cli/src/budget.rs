use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::CliError;

pub const CONFIG_FILE: &str = "hurwitz.toml";
pub const BUDGET_ENV: &str = "HURWITZ_BUDGET";

/// Upper limits on every size parameter a command accepts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Budget {
    /// Largest `n`, `|α|` or `nmax` for counting commands.
    pub max_n: usize,
    /// Largest number of factors `k`.
    pub max_k: usize,
    /// Largest series truncation `N`.
    pub max_truncation: usize,
    /// Largest weight of an operator term table or `W` input.
    pub max_weight: usize,
    /// Largest number of tuples the factorization enumerator may visit.
    pub max_tuples: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_n: 8,
            max_k: 14,
            max_truncation: 8,
            max_weight: 8,
            max_tuples: 20_000_000,
        }
    }
}

impl Budget {
    /// The explicit file if given, else `./hurwitz.toml` if present, else the
    /// defaults; then overrides from `HURWITZ_BUDGET`.
    pub fn load(explicit: Option<&Path>) -> Result<Self, CliError> {
        let path: Option<PathBuf> = match explicit {
            Some(p) => Some(p.to_path_buf()),
            None => Some(PathBuf::from(CONFIG_FILE)).filter(|p| p.exists()),
        };
        let mut budget = match path {
            Some(p) => Self::from_file(&p)?,
            None => Budget::default(),
        };
        if let Ok(overrides) = std::env::var(BUDGET_ENV) {
            budget.apply_overrides(&overrides)?;
        }
        Ok(budget)
    }

    pub fn from_file(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        Self::from_toml(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
    }

    pub fn from_toml(text: &str) -> Result<Self, String> {
        toml::from_str(text).map_err(|e| e.message().to_string())
    }

    /// Applies `key=value` pairs separated by commas, e.g. `max_n=9,max_k=14`.
    pub fn apply_overrides(&mut self, overrides: &str) -> Result<(), CliError> {
        for pair in overrides.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let bad = || CliError::Config(format!("{BUDGET_ENV}: cannot read `{pair}`"));
            let (key, value) = pair.split_once('=').ok_or_else(bad)?;
            let value = value.trim();
            match key.trim() {
                "max_n" => self.max_n = value.parse().map_err(|_| bad())?,
                "max_k" => self.max_k = value.parse().map_err(|_| bad())?,
                "max_truncation" => self.max_truncation = value.parse().map_err(|_| bad())?,
                "max_weight" => self.max_weight = value.parse().map_err(|_| bad())?,
                "max_tuples" => self.max_tuples = value.parse().map_err(|_| bad())?,
                other => {
                    return Err(CliError::Config(format!("{BUDGET_ENV}: unknown key `{other}`")))
                }
            }
        }
        Ok(())
    }

    pub fn check(&self, parameter: &'static str, value: usize, cap: usize) -> Result<(), CliError> {
        if value > cap {
            return Err(CliError::Budget {
                parameter,
                value,
                cap,
            });
        }
        Ok(())
    }

    pub fn check_n(&self, parameter: &'static str, value: usize) -> Result<(), CliError> {
        self.check(parameter, value, self.max_n)
    }

    pub fn check_k(&self, value: usize) -> Result<(), CliError> {
        self.check("k", value, self.max_k)
    }

    pub fn check_truncation(&self, value: usize) -> Result<(), CliError> {
        self.check("N", value, self.max_truncation)
    }

    pub fn check_weight(&self, parameter: &'static str, value: usize) -> Result<(), CliError> {
        self.check(parameter, value, self.max_weight)
    }
}
