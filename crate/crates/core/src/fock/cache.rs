//! Memoised decomposition matrices, optionally persisted as
//! `decomp_e2_n{N}.json` files.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock};

use super::canonical::{canonical_basis, DecompositionFile, DecompositionMatrix};
use crate::error::{Error, Result};

/// Environment variable naming the on-disk cache directory.
pub const CACHE_DIR_ENV: &str = "SPECHT_CACHE_DIR";

type Slot = Arc<Mutex<Option<Arc<DecompositionMatrix>>>>;

/// Decomposition matrices keyed by `n`. Each `n` is computed at most once
/// per cache even under concurrent requests.
#[derive(Debug, Default)]
pub struct DecompCache {
    dir: Option<PathBuf>,
    slots: Mutex<HashMap<usize, Slot>>,
}

impl DecompCache {
    pub fn in_memory() -> Self {
        Self::default()
    }

    /// Reads and writes matrix files under `dir`, creating it on first write.
    pub fn with_dir(dir: impl Into<PathBuf>) -> Self {
        DecompCache {
            dir: Some(dir.into()),
            slots: Mutex::default(),
        }
    }

    /// Uses `SPECHT_CACHE_DIR` if set, otherwise memory only.
    pub fn from_env() -> Self {
        match std::env::var_os(CACHE_DIR_ENV) {
            Some(dir) if !dir.is_empty() => Self::with_dir(dir),
            _ => Self::in_memory(),
        }
    }

    /// The process-wide in-memory cache used by the free functions.
    pub fn global() -> &'static DecompCache {
        static GLOBAL: OnceLock<DecompCache> = OnceLock::new();
        GLOBAL.get_or_init(DecompCache::in_memory)
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn file_path(&self, n: usize) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(file_name(n)))
    }

    /// The matrix for `n`: from memory, else from disk, else computed (and
    /// then written to disk when a directory is configured).
    pub fn matrix(&self, n: usize) -> Result<Arc<DecompositionMatrix>> {
        let slot = self.slots.lock().unwrap().entry(n).or_default().clone();
        let mut guard = slot.lock().unwrap();
        if let Some(m) = guard.as_ref() {
            return Ok(m.clone());
        }
        let matrix = match self.load(n)? {
            Some(m) => m,
            None => {
                let m = canonical_basis(n)?;
                self.store(&m)?;
                m
            }
        };
        let matrix = Arc::new(matrix);
        *guard = Some(matrix.clone());
        Ok(matrix)
    }

    /// Reads the file for `n` if it exists.
    pub fn load(&self, n: usize) -> Result<Option<DecompositionMatrix>> {
        let Some(path) = self.file_path(n) else {
            return Ok(None);
        };
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(Error::io(path, e)),
        };
        let with_path = |reason: String| Error::Cache {
            path: path.clone(),
            reason,
        };
        let file: DecompositionFile =
            serde_json::from_str(&text).map_err(|e| with_path(e.to_string()))?;
        if file.n != n {
            return Err(with_path(format!("holds n = {} instead of {n}", file.n)));
        }
        let matrix = DecompositionMatrix::from_file_format(file).map_err(|e| match e {
            Error::Cache { reason, .. } => with_path(reason),
            other => with_path(other.to_string()),
        })?;
        Ok(Some(matrix))
    }

    /// Writes the matrix atomically (temporary file, then rename). Returns
    /// the path written, or `None` for a memory-only cache.
    pub fn store(&self, matrix: &DecompositionMatrix) -> Result<Option<PathBuf>> {
        let Some(dir) = &self.dir else {
            return Ok(None);
        };
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
        let path = dir.join(file_name(matrix.n()));
        let json = serde_json::to_string_pretty(&matrix.to_file_format())?;
        let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| Error::io(dir, e))?;
        tmp.write_all(json.as_bytes())
            .map_err(|e| Error::io(tmp.path(), e))?;
        tmp.write_all(b"\n").map_err(|e| Error::io(tmp.path(), e))?;
        tmp.persist(&path).map_err(|e| Error::io(&path, e.error))?;
        Ok(Some(path))
    }
}

pub fn file_name(n: usize) -> String {
    format!("decomp_e2_n{n}.json")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPoly;

    #[test]
    fn disk_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cold = DecompCache::with_dir(dir.path());
        let m = cold.matrix(6).unwrap();
        let path = cold.file_path(6).unwrap();
        assert!(path.exists());
        let text = fs::read_to_string(&path).unwrap();
        assert!(text.contains("\"format\": 1"));

        let warm = DecompCache::with_dir(dir.path());
        assert_eq!(warm.load(6).unwrap().unwrap(), *m);
        assert_eq!(*warm.matrix(6).unwrap(), *m);
        // byte-identical on rewrite
        warm.store(&m).unwrap();
        assert_eq!(fs::read_to_string(&path).unwrap(), text);
    }

    #[test]
    fn corrupt_file_names_the_path() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join(file_name(3)), "{ not json").unwrap();
        let cache = DecompCache::with_dir(dir.path());
        let err = cache.matrix(3).unwrap_err();
        assert!(
            matches!(&err, Error::Cache { path, .. } if path.ends_with(file_name(3))),
            "{err}"
        );
    }

    #[test]
    fn memory_cache_shares_results() {
        let cache = DecompCache::in_memory();
        let a = cache.matrix(4).unwrap();
        let b = cache.matrix(4).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(cache.store(&a).unwrap(), None);
        assert_eq!(
            a.entry(&"4".parse().unwrap(), &"4".parse().unwrap()),
            LaurentPoly::one()
        );
    }
}
