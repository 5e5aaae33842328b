//! Layered run configuration: command-line flags, then a `key = value` file, then the
//! `CRITLINE_CACHE` environment variable (cache directory only).

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use sha2::{Digest, Sha256};

use crate::error::{CliError, Result};

pub const CACHE_ENV: &str = "CRITLINE_CACHE";
pub const DEFAULT_CACHE_DIR: &str = "./cache";

/// Parsed `key = value` lines. `#` starts a comment; blank lines are ignored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConfigFile {
    entries: BTreeMap<String, String>,
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                return Err(CliError::config(format!("line {}", n + 1), "expected key = value"));
            };
            let key = k.trim().replace('-', "_");
            if key.is_empty() {
                return Err(CliError::config(format!("line {}", n + 1), "empty key"));
            }
            if entries.insert(key.clone(), v.trim().to_string()).is_some() {
                return Err(CliError::config(key, "given twice"));
            }
        }
        Ok(Self { entries })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::parse(&text)
    }

    pub fn get_raw(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }
}

/// Resolves each setting from flag, then file, then default, and records what was used so
/// that the effective configuration can be hashed into artifact headers.
#[derive(Debug, Default)]
pub struct Layers {
    file: ConfigFile,
    used: BTreeMap<String, String>,
    env_cache: Option<String>,
}

impl Layers {
    pub fn new(file: ConfigFile, env_cache: Option<String>) -> Self {
        Self { file, used: BTreeMap::new(), env_cache }
    }

    pub fn from_env(file: ConfigFile) -> Self {
        Self::new(file, std::env::var(CACHE_ENV).ok().filter(|s| !s.is_empty()))
    }

    /// Flag value, else file value, else `None`.
    pub fn opt<T>(&mut self, key: &str, flag: Option<T>) -> Result<Option<T>>
    where
        T: FromStr + ToString,
        T::Err: std::fmt::Display,
    {
        let v = match flag {
            Some(v) => Some(v),
            None => match self.file.get_raw(key) {
                Some(raw) => Some(raw.parse::<T>().map_err(|e| CliError::config(key, format!("`{raw}`: {e}")))?),
                None => None,
            },
        };
        if let Some(v) = &v {
            self.used.insert(key.to_string(), v.to_string());
        }
        Ok(v)
    }

    pub fn get<T>(&mut self, key: &str, flag: Option<T>, default: T) -> Result<T>
    where
        T: FromStr + ToString,
        T::Err: std::fmt::Display,
    {
        match self.opt(key, flag)? {
            Some(v) => Ok(v),
            None => {
                self.used.insert(key.to_string(), default.to_string());
                Ok(default)
            }
        }
    }

    pub fn require<T>(&mut self, key: &str, flag: Option<T>) -> Result<T>
    where
        T: FromStr + ToString,
        T::Err: std::fmt::Display,
    {
        self.opt(key, flag)?.ok_or_else(|| CliError::config(key, "missing (give a flag or a config entry)"))
    }

    /// Cache directory: flag, then file `cache_dir`, then `CRITLINE_CACHE`, then `./cache`.
    /// Not part of the config hash, since it does not change any artifact.
    pub fn cache_dir(&mut self, flag: Option<PathBuf>) -> PathBuf {
        flag.or_else(|| self.file.get_raw("cache_dir").map(PathBuf::from))
            .or_else(|| self.env_cache.clone().map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from(DEFAULT_CACHE_DIR))
    }

    /// Drop a setting from the hash.
    pub fn forget(&mut self, key: &str) {
        self.used.remove(key);
    }

    pub fn record(&mut self, key: &str, value: impl ToString) {
        self.used.insert(key.to_string(), value.to_string());
    }

    /// Short hash of the effective settings (sorted `key=value` lines).
    pub fn hash(&self) -> String {
        let mut h = Sha256::new();
        for (k, v) in &self.used {
            h.update(k.as_bytes());
            h.update(b"=");
            h.update(v.as_bytes());
            h.update(b"\n");
        }
        hex16(&h.finalize())
    }

    pub fn effective(&self) -> &BTreeMap<String, String> {
        &self.used
    }
}

pub(crate) fn hex16(bytes: &[u8]) -> String {
    hex::encode(&bytes[..8])
}

/// Parse `a,b` as a complex number.
pub fn parse_complex(raw: &str) -> std::result::Result<critline_core::ComplexValue, String> {
    let (a, b) = raw.split_once(',').ok_or_else(|| format!("`{raw}`: expected re,im"))?;
    let re = a.trim().parse::<f64>().map_err(|e| format!("`{a}`: {e}"))?;
    let im = b.trim().parse::<f64>().map_err(|e| format!("`{b}`: {e}"))?;
    Ok(critline_core::ComplexValue::new(re, im))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_beat_file_beats_default() {
        let file = ConfigFile::parse("tmax = 50\nres = 32 # comment\n").unwrap();
        let mut l = Layers::new(file, None);
        assert_eq!(l.get("tmax", Some(10.0), 1.0).unwrap(), 10.0);
        assert_eq!(l.get::<usize>("res", None, 16).unwrap(), 32);
        assert_eq!(l.get::<usize>("other", None, 16).unwrap(), 16);
    }

    #[test]
    fn bad_values_name_their_key() {
        let mut l = Layers::new(ConfigFile::parse("tmax = ten").unwrap(), None);
        let e = l.get::<f64>("tmax", None, 1.0).unwrap_err();
        assert!(e.to_string().contains("tmax"), "{e}");
        assert!(ConfigFile::parse("just words").is_err());
        assert!(ConfigFile::parse("a=1\na=2").is_err());
    }

    #[test]
    fn cache_dir_precedence() {
        let mut l = Layers::new(ConfigFile::default(), None);
        assert_eq!(l.cache_dir(None), PathBuf::from("./cache"));
        let mut l = Layers::new(ConfigFile::default(), Some("/tmp/env".into()));
        assert_eq!(l.cache_dir(None), PathBuf::from("/tmp/env"));
        let mut l = Layers::new(ConfigFile::parse("cache_dir = /tmp/file").unwrap(), Some("/tmp/env".into()));
        assert_eq!(l.cache_dir(None), PathBuf::from("/tmp/file"));
        assert_eq!(l.cache_dir(Some("/tmp/flag".into())), PathBuf::from("/tmp/flag"));
    }

    #[test]
    fn hash_depends_on_settings() {
        let mut a = Layers::default();
        a.record("tmax", 10);
        let mut b = Layers::default();
        b.record("tmax", 11);
        assert_ne!(a.hash(), b.hash());
        assert_eq!(a.hash().len(), 16);
    }
}
