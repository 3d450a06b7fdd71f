use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use latticedec::constants::species_by_name;
use latticedec::AtomSpecies;
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::output::Format;

/// Keys a config file may carry alongside the command's own parameters.
const COMMON_KEYS: [&str; 3] = ["species", "format", "out"];

/// Parsed `--config` file: shared settings plus the command's parameters.
#[derive(Debug, Default)]
pub struct ConfigFile {
    pub species: Option<String>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    params: Map<String, Value>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).with_context(|| format!("cannot read config {}", path.display()))?;
        let value: Value =
            serde_json::from_str(&text).with_context(|| format!("config {} is not valid JSON", path.display()))?;
        let Value::Object(mut params) = value else {
            bail!("config {} must hold a JSON object", path.display());
        };
        let mut file = ConfigFile::default();
        for key in COMMON_KEYS {
            let Some(v) = params.remove(key) else { continue };
            match key {
                "species" => file.species = Some(serde_json::from_value(v).context("config field `species`")?),
                "format" => file.format = Some(serde_json::from_value(v).context("config field `format`")?),
                _ => file.out = Some(serde_json::from_value(v).context("config field `out`")?),
            }
        }
        file.params = params;
        Ok(file)
    }

    /// Overlays the flags that were given (non-null after serialization) onto
    /// the file's parameters and deserializes the result; unknown keys are
    /// rejected.
    pub fn resolve<T: Serialize + DeserializeOwned>(&self, flags: &T) -> Result<T> {
        let mut merged = self.params.clone();
        match serde_json::to_value(flags)? {
            Value::Object(overrides) => merged.extend(overrides.into_iter().filter(|(_, v)| !v.is_null())),
            Value::Null => {}
            other => bail!("unexpected flag encoding {other}"),
        }
        serde_json::from_value(Value::Object(merged)).map_err(|e| anyhow!("invalid config: {e}"))
    }
}

pub fn species(name: &str) -> Result<AtomSpecies> {
    species_by_name(name).ok_or_else(|| anyhow!("invalid `species`: unknown species `{name}` (available: rb87)"))
}

pub fn positive(name: &str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(anyhow!("invalid `{name}`: must be positive and finite, got {value}"))
    }
}

pub fn non_negative(name: &str, value: f64) -> Result<f64> {
    if value.is_finite() && value >= 0.0 {
        Ok(value)
    } else {
        Err(anyhow!("invalid `{name}`: must be non-negative and finite, got {value}"))
    }
}

pub fn at_least(name: &str, value: usize, min: usize) -> Result<usize> {
    if value >= min {
        Ok(value)
    } else {
        Err(anyhow!("invalid `{name}`: must be at least {min}, got {value}"))
    }
}
