//! Disk cache for graded-dimension cells, keyed by a content hash of
//! (version, operation, spec, arguments). Entries from another version are
//! ignored, never trusted; writes go through a temp file and a rename.

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

const CACHE_FILE: &str = "sfock-cache.json";

#[derive(Debug, Serialize, Deserialize, Clone)]
struct Entry {
    version: String,
    description: String,
    value: u64,
}

pub struct Cache {
    file: PathBuf,
    entries: BTreeMap<String, Entry>,
    dirty: bool,
}

impl Cache {
    /// Opens (or starts) the cache under the given directory.
    pub fn open(dir: &Path) -> io::Result<Self> {
        let file = dir.join(CACHE_FILE);
        let entries = match fs::read_to_string(&file) {
            Ok(text) => serde_json::from_str(&text).unwrap_or_default(),
            Err(e) if e.kind() == io::ErrorKind::NotFound => BTreeMap::new(),
            Err(e) => return Err(e),
        };
        Ok(Cache {
            file,
            entries,
            dirty: false,
        })
    }

    fn key(description: &str) -> String {
        let mut hasher = Sha256::new();
        hasher.update(description.as_bytes());
        let digest = hasher.finalize();
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Looks up a value, recomputing on a miss or a stale version.
    pub fn get_or_compute(
        &mut self,
        op: &str,
        spec: &str,
        args: &str,
        compute: impl FnOnce() -> Result<u64, sfock_core::Error>,
    ) -> Result<u64, sfock_core::Error> {
        let version = env!("CARGO_PKG_VERSION");
        let description = format!("{version}|{op}|{spec}|{args}");
        let key = Self::key(&description);
        if let Some(entry) = self.entries.get(&key) {
            if entry.version == version {
                return Ok(entry.value);
            }
        }
        let value = compute()?;
        self.entries.insert(
            key,
            Entry {
                version: version.to_string(),
                description,
                value,
            },
        );
        self.dirty = true;
        Ok(value)
    }

    /// Writes the cache back atomically when something changed.
    pub fn flush(&mut self) -> io::Result<()> {
        if !self.dirty {
            return Ok(());
        }
        if let Some(parent) = self.file.parent() {
            fs::create_dir_all(parent)?;
        }
        let tmp = self.file.with_extension("json.tmp");
        fs::write(&tmp, serde_json::to_string_pretty(&self.entries)?)?;
        fs::rename(&tmp, &self.file)?;
        self.dirty = false;
        Ok(())
    }
}

/// Optional cache wrapper so callers can run uncached with the same code.
pub struct MaybeCache(pub Option<Cache>);

impl MaybeCache {
    pub fn get_or_compute(
        &mut self,
        op: &str,
        spec: &str,
        args: &str,
        compute: impl FnOnce() -> Result<u64, sfock_core::Error>,
    ) -> Result<u64, sfock_core::Error> {
        match &mut self.0 {
            Some(cache) => cache.get_or_compute(op, spec, args, compute),
            None => compute(),
        }
    }

    pub fn flush(&mut self) -> io::Result<()> {
        match &mut self.0 {
            Some(cache) => cache.flush(),
            None => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caches_and_reloads() {
        let dir = tempfile::tempdir().unwrap();
        let mut cache = Cache::open(dir.path()).unwrap();
        let mut calls = 0;
        let v = cache
            .get_or_compute("graded-dim", "sp-o:l=2,s=1", "s'=1,k=2", || {
                calls += 1;
                Ok(5)
            })
            .unwrap();
        assert_eq!(v, 5);
        assert_eq!(calls, 1);
        cache.flush().unwrap();

        let mut reloaded = Cache::open(dir.path()).unwrap();
        let v2 = reloaded
            .get_or_compute("graded-dim", "sp-o:l=2,s=1", "s'=1,k=2", || {
                panic!("must hit the cache")
            })
            .unwrap();
        assert_eq!(v2, 5);
    }

    #[test]
    fn distinct_arguments_do_not_collide() {
        let dir = tempfile::tempdir().unwrap();
        let mut cache = Cache::open(dir.path()).unwrap();
        let a = cache
            .get_or_compute("graded-dim", "sp-o:l=2,s=1", "s'=1,k=2", || Ok(5))
            .unwrap();
        let b = cache
            .get_or_compute("graded-dim", "sp-o:l=2,s=1", "s'=2,k=2", || Ok(6))
            .unwrap();
        assert_ne!(a, b);
    }
}
