//! Regression fixtures for derived oracle counts: the first run records the
//! observed number, later runs must reproduce it exactly.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureEntry {
    pub p: u32,
    pub params: String,
    pub observed: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixtureOutcome {
    Recorded,
    Matched,
}

/// JSON-backed store `{check-id: {p, params, observed}}`.
#[derive(Debug)]
pub struct FixtureStore {
    path: PathBuf,
    entries: BTreeMap<String, FixtureEntry>,
    dirty: bool,
}

impl FixtureStore {
    pub fn load(path: impl AsRef<Path>) -> Result<FixtureStore> {
        let path = path.as_ref().to_path_buf();
        let entries = match std::fs::read_to_string(&path) {
            Ok(text) => serde_json::from_str(&text)
                .map_err(|e| Error::Parse(format!("fixtures {}: {e}", path.display())))?,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => BTreeMap::new(),
            Err(e) => return Err(Error::Io(e.to_string())),
        };
        Ok(FixtureStore {
            path,
            entries,
            dirty: false,
        })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Compare against the stored value, or record when absent.
    pub fn check_or_record(
        &mut self,
        id: &str,
        p: u32,
        params: &str,
        observed: &str,
    ) -> Result<FixtureOutcome> {
        match self.entries.get(id) {
            Some(entry) => {
                if entry.observed == observed {
                    Ok(FixtureOutcome::Matched)
                } else {
                    Err(Error::FixtureMismatch {
                        id: id.to_string(),
                        stored: entry.observed.clone(),
                        observed: observed.to_string(),
                    })
                }
            }
            None => {
                self.entries.insert(
                    id.to_string(),
                    FixtureEntry {
                        p,
                        params: params.to_string(),
                        observed: observed.to_string(),
                    },
                );
                self.dirty = true;
                Ok(FixtureOutcome::Recorded)
            }
        }
    }

    /// Persist newly recorded entries.
    pub fn save(&mut self) -> Result<()> {
        if !self.dirty {
            return Ok(());
        }
        let text = serde_json::to_string_pretty(&self.entries)
            .map_err(|e| Error::Io(e.to_string()))?;
        std::fs::write(&self.path, text).map_err(|e| Error::Io(e.to_string()))?;
        self.dirty = false;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_then_match_then_mismatch() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("fixtures.json");
        let mut store = FixtureStore::load(&path).unwrap();
        assert!(store.is_empty());
        assert_eq!(
            store.check_or_record("check/a", 5, "n=2", "360").unwrap(),
            FixtureOutcome::Recorded
        );
        store.save().unwrap();

        let mut store = FixtureStore::load(&path).unwrap();
        assert_eq!(store.len(), 1);
        assert_eq!(
            store.check_or_record("check/a", 5, "n=2", "360").unwrap(),
            FixtureOutcome::Matched
        );
        assert!(matches!(
            store.check_or_record("check/a", 5, "n=2", "999"),
            Err(Error::FixtureMismatch { .. })
        ));
    }
}
