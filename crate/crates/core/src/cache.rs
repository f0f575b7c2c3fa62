//! On-disk cache of character tables, one JSON file per `n`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::charvalues::CharTables;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct TableCache {
    dir: PathBuf,
}

impl TableCache {
    pub fn new(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(TableCache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, n: usize) -> PathBuf {
        self.dir.join(format!("tables-{n}.json"))
    }

    /// Cached tables for `n`, if present and readable.
    pub fn load(&self, n: usize) -> Result<Option<CharTables>> {
        let path = self.path_for(n);
        if !path.exists() {
            return Ok(None);
        }
        let text = fs::read_to_string(&path)?;
        let t: CharTables =
            serde_json::from_str(&text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        if t.n != n {
            return Err(Error::Consistency(format!("{} holds tables for n={}", path.display(), t.n)));
        }
        Ok(Some(t))
    }

    /// Writes through a temporary file so a crash never leaves a torn entry.
    pub fn store(&self, t: &CharTables) -> Result<()> {
        let path = self.path_for(t.n);
        let tmp = path.with_extension("json.tmp");
        let text = serde_json::to_string(t).map_err(|e| Error::Io(e.to_string()))?;
        let mut f = fs::File::create(&tmp)?;
        f.write_all(text.as_bytes())?;
        f.sync_all()?;
        fs::rename(&tmp, &path)?;
        Ok(())
    }

    pub fn tables(&self, n: usize) -> Result<CharTables> {
        if let Some(t) = self.load(n)? {
            return Ok(t);
        }
        let t = CharTables::compute(n)?;
        self.store(&t)?;
        Ok(t)
    }
}

/// Tables from the cache when one is given, computed otherwise.
pub fn tables(cache: Option<&TableCache>, n: usize) -> Result<CharTables> {
    match cache {
        Some(c) => c.tables(n),
        None => CharTables::compute(n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = TableCache::new(dir.path().join("sub")).unwrap();
        assert!(cache.load(5).unwrap().is_none());
        let fresh = cache.tables(5).unwrap();
        assert!(cache.path_for(5).exists());
        assert_eq!(cache.load(5).unwrap().unwrap(), fresh);
        assert_eq!(fresh, CharTables::compute(5).unwrap());
    }

    #[test]
    fn rejects_mislabelled_file() {
        let dir = tempfile::tempdir().unwrap();
        let cache = TableCache::new(dir.path()).unwrap();
        let t = CharTables::compute(3).unwrap();
        let text = serde_json::to_string(&t).unwrap();
        fs::write(cache.path_for(4), text).unwrap();
        assert!(matches!(cache.load(4), Err(Error::Consistency(_))));
        fs::write(cache.path_for(4), "{").unwrap();
        assert!(matches!(cache.load(4), Err(Error::Io(_))));
    }
}
