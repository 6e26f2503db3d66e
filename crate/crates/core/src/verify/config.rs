use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};

/// Optional JSON run configuration; command-line flags override each field.
#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub nmax: Option<usize>,
    pub seed: Option<u64>,
    pub identities: Option<Vec<String>>,
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        RunConfig::from_json(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse() {
        let c = RunConfig::from_json(r#"{"nmax": 6, "identities": ["dixon"]}"#).unwrap();
        assert_eq!(c.nmax, Some(6));
        assert_eq!(c.seed, None);
        assert_eq!(c.identities.unwrap(), ["dixon"]);
        assert!(RunConfig::from_json(r#"{"nmx": 6}"#).is_err());
    }
}
