//! Append-only result cache.
//!
//! Records are newline-delimited JSON in `<dir>/secdom-cache.ndjson`. On a
//! hit the last record for a key wins; `--recheck` recomputes and treats
//! any disagreement as a verification failure. Appends take an advisory
//! exclusive lock so concurrent commands interleave whole lines.

use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use secdom::enumerate::canonical_form;
use secdom::graph::Graph;
use secdom::graph6::to_graph6;

use crate::error::CliError;

pub const CACHE_DIR_ENV: &str = "SECDOM_CACHE_DIR";
const CACHE_FILE: &str = "secdom-cache.ndjson";

/// One cached solve.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct RunRecord {
    /// Canonical form for orders up to the enumeration cap, exact labeled
    /// graph6 above it.
    pub key: String,
    pub parameter: String,
    pub value: usize,
    pub witness: Vec<usize>,
    pub version: String,
    pub wall_ms: u64,
}

/// Cache key for the graph actually solved.
pub fn graph_key(g: &Graph) -> String {
    match canonical_form(g) {
        Ok(canon) => canon,
        Err(_) => to_graph6(g),
    }
}

pub struct Cache {
    path: PathBuf,
}

impl Cache {
    /// Opens the cache in `dir`, creating the directory if needed.
    pub fn open(dir: &Path) -> Result<Self, CliError> {
        std::fs::create_dir_all(dir).map_err(|e| {
            CliError::usage(format!("cannot create cache dir {}: {e}", dir.display()))
        })?;
        Ok(Cache {
            path: dir.join(CACHE_FILE),
        })
    }

    /// Most recent record for (key, parameter), if any.
    pub fn lookup(&self, key: &str, parameter: &str) -> Result<Option<RunRecord>, CliError> {
        let file = match std::fs::File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let mut hit = None;
        for line in BufReader::new(file).lines() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let record: RunRecord = serde_json::from_str(&line).map_err(|e| {
                CliError::verification(format!(
                    "corrupt cache record in {}: {e}: {line}",
                    self.path.display()
                ))
            })?;
            if record.key == key && record.parameter == parameter {
                hit = Some(record);
            }
        }
        Ok(hit)
    }

    pub fn append(&self, record: &RunRecord) -> Result<(), CliError> {
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)?;
        file.lock()?;
        let mut line = serde_json::to_string(record).expect("records serialize");
        line.push('\n');
        let result = file.write_all(line.as_bytes());
        file.unlock()?;
        result?;
        Ok(())
    }
}
