//! Canonical on-disk form of enumeration reports.
//!
//! The byte stream is a function of the report alone: pretty-printed JSON
//! of [`ReportDto`] with a trailing newline, vertices in canonical order.
//! Saving, loading, and saving again reproduces the file bit for bit, so
//! committed fixtures double as regression oracles.

use std::error::Error;
use std::fmt;
use std::fs;
use std::io;
use std::path::Path;

use tristoch_core::vertex::EnumerationReport;

use crate::json::{JsonError, ReportDto};

#[derive(Debug)]
pub enum FixtureError {
    Io(io::Error),
    Parse(serde_json::Error),
    Invalid(JsonError),
}

impl fmt::Display for FixtureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixtureError::Io(e) => write!(f, "fixture i/o: {e}"),
            FixtureError::Parse(e) => write!(f, "fixture is not valid JSON: {e}"),
            FixtureError::Invalid(e) => write!(f, "fixture rejected: {e}"),
        }
    }
}

impl Error for FixtureError {
    fn source(&self) -> Option<&(dyn Error + 'static)> {
        match self {
            FixtureError::Io(e) => Some(e),
            FixtureError::Parse(e) => Some(e),
            FixtureError::Invalid(e) => Some(e),
        }
    }
}

impl From<io::Error> for FixtureError {
    fn from(e: io::Error) -> Self {
        FixtureError::Io(e)
    }
}

/// The canonical serialization of a report.
pub fn canonical_json(report: &EnumerationReport) -> Vec<u8> {
    let dto = ReportDto::from_report(report);
    let mut bytes = serde_json::to_vec_pretty(&dto).expect("report DTOs always serialize");
    bytes.push(b'\n');
    bytes
}

pub fn save_fixture(report: &EnumerationReport, path: &Path) -> Result<(), FixtureError> {
    Ok(fs::write(path, canonical_json(report))?)
}

/// Reads a fixture back, re-validating every derived field against the
/// vertex list it carries.
pub fn load_fixture(path: &Path) -> Result<EnumerationReport, FixtureError> {
    let text = fs::read_to_string(path)?;
    let dto: ReportDto = serde_json::from_str(&text).map_err(FixtureError::Parse)?;
    dto.to_report().map_err(FixtureError::Invalid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use tristoch_core::polytope::{build_line_system, build_plane_system};
    use tristoch_core::vertex::enumerate_vertices;

    #[test]
    fn save_load_round_trip_is_byte_identical() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("line2.json");
        let report = enumerate_vertices(&build_line_system(2)).unwrap();
        save_fixture(&report, &path).unwrap();
        let loaded = load_fixture(&path).unwrap();
        assert_eq!(loaded, report);
        assert_eq!(canonical_json(&loaded), fs::read(&path).unwrap());
    }

    #[test]
    fn load_rejects_tampering() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("plane2.json");
        let report = enumerate_vertices(&build_plane_system(2)).unwrap();
        save_fixture(&report, &path).unwrap();
        let tampered = fs::read_to_string(&path)
            .unwrap()
            .replace("\"count\": 6", "\"count\": 7");
        fs::write(&path, tampered).unwrap();
        assert!(matches!(
            load_fixture(&path),
            Err(FixtureError::Invalid(JsonError::Inconsistent(_)))
        ));
    }

    #[test]
    fn load_rejects_missing_file() {
        let dir = tempfile::tempdir().unwrap();
        assert!(matches!(
            load_fixture(&dir.path().join("absent.json")),
            Err(FixtureError::Io(_))
        ));
    }
}
