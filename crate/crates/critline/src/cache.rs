//! Content-addressed store for zero tables.
//!
//! An entry is addressed by `sha256(function | t_max | code version)` and consists of the
//! table CSV plus a `.sha256` sidecar holding the digest of the CSV bytes. A missing or
//! mismatched sidecar, an unparsable file or a version tag other than the running one all
//! count as misses, and the table is recomputed and rewritten. Writers take an exclusive
//! lock on a per-table `.lock` file and publish by rename, so concurrent runs never observe
//! a half-written table.

use std::fs::{self, File};
use std::io::Write;
use std::path::{Path, PathBuf};

use critline_core::critline::{FunctionId, ZeroRecord};
use sha2::{Digest, Sha256};

use crate::config::hex16;
use crate::error::{CliError, Result};
use crate::table::{parse_table, render_table, TableHeader};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CacheStatus {
    Hit,
    Missing,
    Corrupt,
    Stale,
}

#[derive(Debug, Clone)]
pub struct TableCache {
    dir: PathBuf,
    version: String,
}

impl TableCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self::with_version(dir, critline_core::CODE_VERSION)
    }

    /// A cache that stamps and accepts `version` instead of the running code version.
    pub fn with_version(dir: impl Into<PathBuf>, version: &str) -> Self {
        Self { dir: dir.into(), version: version.to_string() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(&self, function: FunctionId, t_max: f64) -> String {
        let mut h = Sha256::new();
        h.update(format!("{}|{}|{}", function.name(), t_max, self.version));
        hex16(&h.finalize())
    }

    pub fn path(&self, function: FunctionId, t_max: f64) -> PathBuf {
        self.dir.join(format!("{}-{}.csv", function.name(), self.key(function, t_max)))
    }

    /// Read an entry without computing anything.
    pub fn load(&self, function: FunctionId, t_max: f64) -> Result<(CacheStatus, Option<Vec<ZeroRecord>>)> {
        let path = self.path(function, t_max);
        let bytes = match fs::read(&path) {
            Ok(b) => b,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok((CacheStatus::Missing, None)),
            Err(e) => return Err(CliError::io(&path, e)),
        };
        let sidecar = sidecar(&path);
        let recorded = fs::read_to_string(&sidecar).unwrap_or_default();
        if recorded.trim() != hex::encode(Sha256::digest(&bytes)) {
            return Ok((CacheStatus::Corrupt, None));
        }
        let Ok(text) = String::from_utf8(bytes) else { return Ok((CacheStatus::Corrupt, None)) };
        match parse_table(&text, &path.display().to_string()) {
            Ok((h, _)) if h.code_version != self.version => Ok((CacheStatus::Stale, None)),
            Ok((h, _)) if h.function != function || h.t_max != t_max => Ok((CacheStatus::Corrupt, None)),
            Ok((_, records)) => Ok((CacheStatus::Hit, Some(records))),
            Err(_) => Ok((CacheStatus::Corrupt, None)),
        }
    }

    /// Write an entry atomically and return its path.
    pub fn store(&self, function: FunctionId, t_max: f64, records: &[ZeroRecord]) -> Result<PathBuf> {
        let path = self.path(function, t_max);
        let text = render_table(&TableHeader::new(function, t_max, &self.version), records);
        let digest = hex::encode(Sha256::digest(text.as_bytes()));
        write_atomic(&sidecar(&path), format!("{digest}\n").as_bytes())?;
        write_atomic(&path, text.as_bytes())?;
        Ok(path)
    }

    /// Load the table, or compute and store it under the table's writer lock.
    pub fn get_or_compute<F>(&self, function: FunctionId, t_max: f64, compute: F) -> Result<(CacheStatus, Vec<ZeroRecord>)>
    where
        F: FnOnce() -> critline_core::Result<Vec<ZeroRecord>>,
    {
        fs::create_dir_all(&self.dir).map_err(|e| CliError::io(&self.dir, e))?;
        let path = self.path(function, t_max);
        let lock_path = path.with_extension("csv.lock");
        let lock = File::create(&lock_path).map_err(|e| CliError::io(&lock_path, e))?;
        lock.lock().map_err(|e| CliError::io(&lock_path, e))?;
        let (status, cached) = self.load(function, t_max)?;
        let records = match cached {
            Some(r) => r,
            None => {
                let r = compute()?;
                self.store(function, t_max, &r)?;
                r
            }
        };
        drop(lock);
        Ok((status, records))
    }
}

fn sidecar(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".sha256");
    PathBuf::from(s)
}

/// Write to a sibling temporary file, then rename over `path`.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(format!(".tmp{}", std::process::id()));
    let tmp = PathBuf::from(tmp);
    let result = (|| {
        let mut f = File::create(&tmp)?;
        f.write_all(bytes)?;
        f.sync_all()?;
        fs::rename(&tmp, path)
    })();
    if let Err(e) = result {
        let _ = fs::remove_file(&tmp);
        return Err(CliError::io(path, e));
    }
    Ok(())
}
