//! Flat `key=value` configuration files.
//!
//! Entries supply defaults for the invoked subcommand; command-line flags
//! always win. Lines starting with `#` and blank lines are ignored. Every
//! key must name a documented flag of the subcommand being run; anything
//! else is fatal.

use crate::CliError;
use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

/// Environment variable naming the default config file, used when
/// `--config` is not given.
pub const CONFIG_ENV_VAR: &str = "XOVER_CONFIG";

#[derive(Debug, Default)]
pub struct ConfigMap {
    entries: BTreeMap<String, String>,
}

impl ConfigMap {
    pub fn load(path: &Path, accepted_keys: &[&str]) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            CliError::Usage(format!("--config: cannot read {}: {e}", path.display()))
        })?;
        let mut entries = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(CliError::Usage(format!(
                    "--config: {}:{}: expected key=value, got '{line}'",
                    path.display(),
                    lineno + 1
                )));
            };
            let key = key.trim().to_string();
            if !accepted_keys.contains(&key.as_str()) {
                return Err(CliError::Usage(format!(
                    "--config: {}:{}: unknown key '{key}' for this subcommand",
                    path.display(),
                    lineno + 1
                )));
            }
            entries.insert(key, value.trim().to_string());
        }
        Ok(Self { entries })
    }

    pub fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>, CliError>
    where
        T::Err: std::fmt::Display,
    {
        match self.entries.get(key) {
            None => Ok(None),
            Some(raw) => raw.parse::<T>().map(Some).map_err(|e| {
                CliError::Usage(format!("--config: key '{key}': cannot parse '{raw}': {e}"))
            }),
        }
    }
}

/// Flag value if given, otherwise the config entry, otherwise `None`.
pub fn merge<T: FromStr>(
    flag: Option<T>,
    config: &ConfigMap,
    key: &str,
) -> Result<Option<T>, CliError>
where
    T::Err: std::fmt::Display,
{
    match flag {
        Some(v) => Ok(Some(v)),
        None => config.get(key),
    }
}
