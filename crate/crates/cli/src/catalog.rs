//! Append-only catalog of non-implication witnesses, one JSON record per line.

use std::fs::OpenOptions;
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use weaklat_core::verify::CounterexampleRecord;
use weaklat_core::PropertyVector;

use crate::document::{parse_instance, InstanceDocument};

#[derive(Serialize, Deserialize)]
struct Line {
    id: String,
    instance: serde_json::Value,
    property_vector: PropertyVector,
    discovered_at: Option<String>,
    canonical_hash: String,
    detail: String,
}

#[derive(Debug)]
pub enum CatalogError {
    Io(io::Error),
    Malformed { line: usize, message: String },
}

impl std::fmt::Display for CatalogError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CatalogError::Io(e) => write!(f, "catalog: {e}"),
            CatalogError::Malformed { line, message } => {
                write!(f, "catalog line {line}: {message}")
            }
        }
    }
}

impl std::error::Error for CatalogError {}

impl From<io::Error> for CatalogError {
    fn from(e: io::Error) -> Self {
        CatalogError::Io(e)
    }
}

pub fn now() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
}

pub fn encode(record: &CounterexampleRecord) -> String {
    let line = Line {
        id: record.id.clone(),
        instance: InstanceDocument::with_index_names(record.instance.clone()).to_value(),
        property_vector: record.property_vector,
        discovered_at: record.discovered_at.clone(),
        canonical_hash: record.canonical_hash.clone(),
        detail: record.detail.clone(),
    };
    serde_json::to_string(&line).expect("catalog lines serialize")
}

/// Appends one record. A missing timestamp is filled with the current time.
pub fn append(
    path: &Path,
    record: &CounterexampleRecord,
) -> Result<CounterexampleRecord, CatalogError> {
    let mut record = record.clone();
    if record.discovered_at.is_none() {
        record.discovered_at = Some(now());
    }
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    writeln!(file, "{}", encode(&record))?;
    Ok(record)
}

pub fn load(path: &Path) -> Result<Vec<CounterexampleRecord>, CatalogError> {
    let file = std::fs::File::open(path)?;
    let mut out = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let bad = |message: String| CatalogError::Malformed {
            line: i + 1,
            message,
        };
        let raw: Line = serde_json::from_str(&line).map_err(|e| bad(e.to_string()))?;
        let doc = parse_instance(&raw.instance.to_string()).map_err(|e| bad(e.to_string()))?;
        out.push(CounterexampleRecord {
            id: raw.id,
            instance: doc.instance,
            property_vector: raw.property_vector,
            discovered_at: raw.discovered_at,
            canonical_hash: raw.canonical_hash,
            detail: raw.detail,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use weaklat_core::props::decide;
    use weaklat_core::verify::{canonical_hash, search, NonImplication, SearchOutcome};
    use weaklat_core::Property;

    #[test]
    fn stored_records_redecide() {
        let q = NonImplication {
            satisfy: vec![
                Property::WeakCirc,
                Property::WeakBullet,
                Property::Topological,
            ],
            violate: Property::IWeak,
        };
        let SearchOutcome::Found { record, .. } = search(&q, 2).unwrap() else {
            panic!("witness expected");
        };
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("catalog.jsonl");
        append(&path, &record).unwrap();
        append(&path, &record).unwrap();
        let loaded = load(&path).unwrap();
        assert_eq!(loaded.len(), 2);
        for r in loaded {
            assert_eq!(r.id, record.id);
            assert!(r.discovered_at.is_some());
            assert_eq!(decide(&r.instance).unwrap(), r.property_vector);
            assert_eq!(canonical_hash(&r.instance).unwrap(), r.canonical_hash);
        }
    }

    #[test]
    fn malformed_lines_are_located() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.jsonl");
        std::fs::write(&path, "\n{}\n").unwrap();
        match load(&path) {
            Err(CatalogError::Malformed { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }
}
