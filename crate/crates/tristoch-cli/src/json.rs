//! Serde-facing mirrors of the core types.
//!
//! Every rational is carried as a string — `"p/q"`, or just `"p"` when the
//! denominator is 1 — because JSON numbers cannot hold big rationals
//! exactly. Conversions back into core types re-validate everything, so a
//! hand-edited file cannot smuggle in an inconsistent report.

use std::collections::BTreeMap;
use std::error::Error;
use std::fmt;

use serde::{Deserialize, Serialize};
use tristoch_core::polytope::Kind;
use tristoch_core::rational::{format_rational, parse_rational};
use tristoch_core::tensor::Tensor3;
use tristoch_core::vertex::{
    Decomposition, EnumerationReport, NonVertexWitness, VertexCertificate,
};
use tristoch_core::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JsonError {
    /// A rational string failed to parse or had a non-positive denominator.
    BadRational(String),
    /// A tensor block was structurally wrong (entry count, side length).
    BadTensor(String),
    /// An enumerated-report file disagrees with its own vertex list.
    Inconsistent(String),
    /// An unknown polytope kind label.
    BadKind(String),
}

impl fmt::Display for JsonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JsonError::BadRational(s) => write!(f, "bad rational {s:?}"),
            JsonError::BadTensor(s) => write!(f, "bad tensor: {s}"),
            JsonError::Inconsistent(s) => write!(f, "inconsistent report: {s}"),
            JsonError::BadKind(s) => {
                write!(f, "unknown kind {s:?} (expected \"line\" or \"plane\")")
            }
        }
    }
}

impl Error for JsonError {}

pub fn kind_from_str(s: &str) -> Result<Kind, JsonError> {
    match s {
        "line" => Ok(Kind::Line),
        "plane" => Ok(Kind::Plane),
        other => Err(JsonError::BadKind(other.to_string())),
    }
}

fn parse_rat(s: &str) -> Result<Rational, JsonError> {
    parse_rational(s).map_err(|e| JsonError::BadRational(format!("{s:?}: {e}")))
}

/// A tensor as a flat row-major entry list, index (i·n + j)·n + k.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorDto {
    pub n: usize,
    pub entries: Vec<String>,
}

impl TensorDto {
    pub fn from_tensor(t: &Tensor3) -> Self {
        TensorDto {
            n: t.n(),
            entries: t.entries().iter().map(format_rational).collect(),
        }
    }

    pub fn to_tensor(&self) -> Result<Tensor3, JsonError> {
        let entries = self
            .entries
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<Vec<_>, _>>()?;
        Tensor3::new(self.n, entries).map_err(|e| JsonError::BadTensor(e.to_string()))
    }
}

/// Full enumeration output. Vertices are listed in canonical ascending
/// order; the scalar fields and histograms restate what the list implies,
/// and the parser rejects any disagreement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDto {
    pub kind: String,
    pub n: usize,
    pub count: usize,
    pub zero_one_count: usize,
    pub support_size_histogram: Vec<(usize, usize)>,
    pub max_entry_histogram: Vec<(String, usize)>,
    pub vertices: Vec<TensorDto>,
}

impl ReportDto {
    pub fn from_report(report: &EnumerationReport) -> Self {
        ReportDto {
            kind: report.kind.to_string(),
            n: report.n,
            count: report.count,
            zero_one_count: report.zero_one_count,
            support_size_histogram: report
                .support_size_histogram
                .iter()
                .map(|(&k, &v)| (k, v))
                .collect(),
            max_entry_histogram: report
                .max_entry_histogram
                .iter()
                .map(|(k, &v)| (format_rational(k), v))
                .collect(),
            vertices: report.vertices.iter().map(TensorDto::from_tensor).collect(),
        }
    }

    /// Rebuilds the core report, recomputing every derived field from the
    /// vertex list and demanding it match the file.
    pub fn to_report(&self) -> Result<EnumerationReport, JsonError> {
        let kind = kind_from_str(&self.kind)?;
        let vertices = self
            .vertices
            .iter()
            .map(|t| t.to_tensor())
            .collect::<Result<Vec<_>, _>>()?;
        for v in &vertices {
            if v.n() != self.n {
                return Err(JsonError::Inconsistent(format!(
                    "vertex of side {} in a report for n = {}",
                    v.n(),
                    self.n
                )));
            }
        }
        if vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(JsonError::Inconsistent(
                "vertex list is not strictly ascending".to_string(),
            ));
        }
        if self.count != vertices.len() {
            return Err(JsonError::Inconsistent(format!(
                "count {} but {} vertices listed",
                self.count,
                vertices.len()
            )));
        }
        let zero_one = vertices.iter().filter(|v| v.is_zero_one()).count();
        if self.zero_one_count != zero_one {
            return Err(JsonError::Inconsistent(format!(
                "zero_one_count {} but {} recomputed",
                self.zero_one_count, zero_one
            )));
        }
        let mut support: BTreeMap<usize, usize> = BTreeMap::new();
        let mut max_entry: BTreeMap<Rational, usize> = BTreeMap::new();
        for v in &vertices {
            *support.entry(v.support().len()).or_insert(0) += 1;
            *max_entry.entry(v.max_entry().clone()).or_insert(0) += 1;
        }
        let support_listed: Vec<(usize, usize)> = support.iter().map(|(&k, &v)| (k, v)).collect();
        if self.support_size_histogram != support_listed {
            return Err(JsonError::Inconsistent(
                "support-size histogram disagrees with the vertex list".to_string(),
            ));
        }
        let max_listed: Vec<(String, usize)> = max_entry
            .iter()
            .map(|(k, &v)| (format_rational(k), v))
            .collect();
        if self.max_entry_histogram != max_listed {
            return Err(JsonError::Inconsistent(
                "max-entry histogram disagrees with the vertex list".to_string(),
            ));
        }
        Ok(EnumerationReport {
            kind,
            n: self.n,
            count: vertices.len(),
            zero_one_count: zero_one,
            support_size_histogram: support,
            max_entry_histogram: max_entry,
            vertices,
        })
    }
}

/// The two extremality verdicts for one tensor, with the proof object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDto {
    pub kind: String,
    pub n: usize,
    /// Verdict of the support-column independence test: "vertex" or
    /// "not_vertex".
    pub support_test: String,
    /// Verdict of the active-halfspace rank test; always equal to
    /// `support_test` (a disagreement aborts the program instead).
    pub halfspace_test: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateDto>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDto>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDto {
    /// Ascending indices of the nonzero entries.
    pub support: Vec<usize>,
    /// Independent constraint-matrix columns covering the support,
    /// extended to full rank.
    pub witness_columns: Vec<usize>,
}

impl CertificateDto {
    pub fn from_certificate(c: &VertexCertificate) -> Self {
        CertificateDto {
            support: c.support.clone(),
            witness_columns: c.witness_columns.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDto {
    /// A constraint-nullspace direction supported on the tensor's support.
    pub direction: Vec<String>,
    pub epsilon: String,
    /// The two feasible points `tensor ± ε·direction`; their average is the
    /// input tensor, proving it is not extreme.
    pub perturbed_pair: [TensorDto; 2],
}

impl WitnessDto {
    pub fn from_witness(w: &NonVertexWitness) -> Self {
        let (plus, minus) = w.perturbed_pair();
        WitnessDto {
            direction: w.direction.iter().map(format_rational).collect(),
            epsilon: format_rational(&w.epsilon),
            perturbed_pair: [
                TensorDto::from_tensor(&plus),
                TensorDto::from_tensor(&minus),
            ],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDto {
    pub weight: String,
    pub vertex: TensorDto,
}

/// A convex combination of vertices reconstructing the input exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionDto {
    pub kind: String,
    pub n: usize,
    pub term_count: usize,
    pub terms: Vec<TermDto>,
}

impl DecompositionDto {
    pub fn from_decomposition(kind: Kind, n: usize, d: &Decomposition) -> Self {
        DecompositionDto {
            kind: kind.to_string(),
            n,
            term_count: d.len(),
            terms: d
                .terms
                .iter()
                .map(|(w, v)| TermDto {
                    weight: format_rational(w),
                    vertex: TensorDto::from_tensor(v),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsDto {
    pub kind: String,
    pub n: usize,
    pub ambient_dim: usize,
    pub matrix_rank: usize,
    pub polytope_dim: usize,
    pub facet_count_claimed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDto {
    pub kind: String,
    pub n: usize,
    pub rows: usize,
    pub cols: usize,
    /// Positions of the unit entries, row-major ascending.
    pub units: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundEntryDto {
    pub name: String,
    pub target: String,
    pub side: String,
    pub exact: String,
    /// The integer the bound actually imposes on a vertex count: the
    /// ceiling of a fractional lower bound, the floor of an upper one.
    pub effective: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsDto {
    pub n: usize,
    pub entries: Vec<BoundEntryDto>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truth_line: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truth_plane: Option<String>,
    pub flags: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatinDto {
    pub n: usize,
    pub count: String,
    /// Present only when listing was requested; each square is its n rows
    /// of 1-based symbols.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub squares: Option<Vec<Vec<Vec<usize>>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceDto {
    /// Flat variable index of the single zeroed coordinate.
    pub index: usize,
    /// `null` when the face is empty.
    pub dimension: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacesDto {
    pub kind: String,
    pub n: usize,
    pub polytope_dim: usize,
    /// How many coordinate faces have dimension `polytope_dim - 1`.
    pub facet_count: usize,
    pub faces: Vec<FaceDto>,
}

/// Vertices of the line polytope whose 1/n copies are vertices of the
/// plane polytope.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScaledSearchDto {
    pub n: usize,
    pub count: usize,
    pub tensors: Vec<TensorDto>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use tristoch_core::polytope::build_line_system;
    use tristoch_core::rational::rat;
    use tristoch_core::tensor::two_vertex_example;
    use tristoch_core::vertex::enumerate_vertices;

    #[test]
    fn tensor_round_trips() {
        let t = two_vertex_example().scale(&rat(1, 2));
        let dto = TensorDto::from_tensor(&t);
        assert_eq!(dto.entries[0], "1/2");
        assert_eq!(dto.to_tensor().unwrap(), t);
    }

    #[test]
    fn tensor_rejects_bad_entry_count() {
        let dto = TensorDto {
            n: 2,
            entries: vec!["1".to_string(); 7],
        };
        assert!(matches!(dto.to_tensor(), Err(JsonError::BadTensor(_))));
    }

    #[test]
    fn tensor_rejects_malformed_rational() {
        let dto = TensorDto {
            n: 1,
            entries: vec!["1/0".to_string()],
        };
        assert!(matches!(dto.to_tensor(), Err(JsonError::BadRational(_))));
    }

    #[test]
    fn report_round_trips() {
        let report = enumerate_vertices(&build_line_system(2)).unwrap();
        let dto = ReportDto::from_report(&report);
        assert_eq!(dto.to_report().unwrap(), report);
    }

    #[test]
    fn report_parser_rejects_tampered_count() {
        let report = enumerate_vertices(&build_line_system(2)).unwrap();
        let mut dto = ReportDto::from_report(&report);
        dto.count = 3;
        assert!(matches!(dto.to_report(), Err(JsonError::Inconsistent(_))));
    }

    #[test]
    fn report_parser_rejects_reordered_vertices() {
        let report = enumerate_vertices(&build_line_system(2)).unwrap();
        let mut dto = ReportDto::from_report(&report);
        dto.vertices.reverse();
        assert!(matches!(dto.to_report(), Err(JsonError::Inconsistent(_))));
    }

    #[test]
    fn kind_labels() {
        assert_eq!(kind_from_str("line").unwrap(), Kind::Line);
        assert_eq!(kind_from_str("plane").unwrap(), Kind::Plane);
        assert!(kind_from_str("Line").is_err());
    }
}
