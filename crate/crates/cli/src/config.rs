//! Optional `key = value` configuration. Unknown keys are rejected so that
//! typos do not pass silently.

use std::fs;
use std::path::{Path, PathBuf};

use crate::error::CliError;

/// Overrides the cache directory from the config file.
pub const CACHE_ENV: &str = "CDINDEX_CACHE";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    /// Largest rank `index`, `beta` and `gamma` will compute.
    pub max_rank: usize,
    pub oracle_boolean_rank: usize,
    pub oracle_cube_dimension: usize,
    /// Directory holding precomputed rank tables, if any.
    pub cache_dir: Option<PathBuf>,
}

impl Default for Config {
    fn default() -> Self {
        let caps = cdindex::oracle::OracleCaps::default();
        Config {
            max_rank: 24,
            oracle_boolean_rank: caps.boolean_rank,
            oracle_cube_dimension: caps.cube_dimension,
            cache_dir: None,
        }
    }
}

impl Config {
    pub fn parse(text: &str) -> Result<Config, CliError> {
        let mut cfg = Config::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: &str| CliError::Config {
                line: i + 1,
                message: msg.to_string(),
            };
            let (key, value) = line.split_once('=').ok_or_else(|| bad("expected key = value"))?;
            let (key, value) = (key.trim(), value.trim().trim_matches('"'));
            let number = || value.parse::<usize>().map_err(|_| bad("expected a non-negative integer"));
            match key {
                "max_rank" => cfg.max_rank = number()?,
                "oracle_boolean_rank" => cfg.oracle_boolean_rank = number()?,
                "oracle_cube_dimension" => cfg.oracle_cube_dimension = number()?,
                "cache_dir" => cfg.cache_dir = Some(PathBuf::from(value)),
                _ => return Err(bad(&format!("unknown key `{key}`"))),
            }
        }
        Ok(cfg)
    }

    /// Reads `path` if given, then applies the environment override.
    pub fn load(path: Option<&Path>, env_cache: Option<String>) -> Result<Config, CliError> {
        let mut cfg = match path {
            Some(p) => Config::parse(&fs::read_to_string(p).map_err(|e| CliError::io(p, e))?)?,
            None => Config::default(),
        };
        if let Some(dir) = env_cache.filter(|s| !s.is_empty()) {
            cfg.cache_dir = Some(PathBuf::from(dir));
        }
        Ok(cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_keys_and_comments() {
        let cfg = Config::parse("# caps\nmax_rank = 16\ncache_dir = \"/tmp/x\"  # here\n").unwrap();
        assert_eq!(cfg.max_rank, 16);
        assert_eq!(cfg.cache_dir, Some(PathBuf::from("/tmp/x")));
    }

    #[test]
    fn rejects_unknown_keys_and_bad_numbers() {
        assert!(matches!(Config::parse("rank = 3"), Err(CliError::Config { line: 1, .. })));
        assert!(matches!(Config::parse("\nmax_rank = x"), Err(CliError::Config { line: 2, .. })));
        assert!(Config::parse("max_rank").is_err());
    }

    #[test]
    fn env_overrides_cache() {
        let cfg = Config::load(None, Some("/cache".into())).unwrap();
        assert_eq!(cfg.cache_dir, Some(PathBuf::from("/cache")));
    }
}
