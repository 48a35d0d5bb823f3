//! Run configuration: signature, memory parameters and the distance cut-off
//! for position ingestion, loaded from a TOML file.

use std::path::Path;

use scenemem_core::{MemoryParams, Signature};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignatureConfig {
    pub roles: Vec<String>,
    pub types: Vec<String>,
    #[serde(default)]
    pub inverse_pairs: Vec<(String, String)>,
    #[serde(default)]
    pub symmetric: Vec<String>,
    /// Symmetric role used for proximity facts; defaults to the only
    /// symmetric role when there is exactly one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub connection_role: Option<String>,
}

impl Default for SignatureConfig {
    fn default() -> Self {
        SignatureConfig {
            roles: vec!["connected".into()],
            types: vec!["CONNECTOR".into(), "LEG".into()],
            inverse_pairs: Vec::new(),
            symmetric: vec!["connected".into()],
            connection_role: None,
        }
    }
}

impl SignatureConfig {
    pub fn build(&self) -> Result<Signature> {
        Ok(Signature::new(
            &self.roles,
            &self.types,
            &self.inverse_pairs,
            &self.symmetric,
        )?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    /// Distance (meters) at and beyond which two objects are not connected.
    pub max_distance: f64,
    pub signature: SignatureConfig,
    pub params: MemoryParams,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_distance: 0.15,
            signature: SignatureConfig::default(),
            params: MemoryParams::default(),
        }
    }
}

impl Config {
    pub fn from_toml(text: &str) -> Result<Self> {
        let config: Config = toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::from_toml(&text)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config is always representable as TOML")
    }

    pub fn validate(&self) -> Result<()> {
        if !self.max_distance.is_finite() || self.max_distance <= 0.0 {
            return Err(CliError::Config(format!(
                "max_distance must be positive, got {}",
                self.max_distance
            )));
        }
        self.params.validate()?;
        let sig = self.signature.build()?;
        if let Some(role) = &self.signature.connection_role {
            if !sig.is_symmetric(role) {
                return Err(CliError::Config(format!(
                    "connection_role {role:?} is not a declared symmetric role"
                )));
            }
        }
        Ok(())
    }

    /// The symmetric role proximity facts are asserted with.
    pub fn connection_role(&self) -> Result<String> {
        if let Some(role) = &self.signature.connection_role {
            return Ok(role.clone());
        }
        match self.signature.symmetric.as_slice() {
            [only] => Ok(only.clone()),
            _ => Err(CliError::Config(
                "set signature.connection_role: there is not exactly one symmetric role".into(),
            )),
        }
    }
}
