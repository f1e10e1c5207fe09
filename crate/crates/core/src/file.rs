//! JSON certificate files.
//!
//! ```json
//! {
//!   "schema_version": "1",
//!   "hypergraph": { "n": 3, "q": 3, "sigma": [2, 1] },
//!   "cycle": { "kind": "berge", "edges": [[[0,1],[0,2],[1,2]], …], "vertex_sequence": [[0,2], …] },
//!   "claims": { "hamiltonian": true }
//! }
//! ```
//!
//! Indices are 0-based `[class, row]` pairs; row 0 is the top row. Fields
//! are written in a fixed order and optional fields are omitted when absent.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::certificate::{Claims, CycleCertificate, CycleKind};
use crate::hypergraph::{Edge, GridVertex, HypergraphError, SigmaHypergraph};
use crate::partition::Partition;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Error)]
pub enum CertificateFileError {
    #[error("malformed certificate JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schema_version {0:?}, expected \"1\"")]
    UnsupportedSchema(String),
    #[error("sigma must be non-increasing and positive, got {0:?}")]
    UnsortedSigma(Vec<usize>),
    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(#[from] HypergraphError),
    #[error("unknown cycle kind {0:?}")]
    UnknownKind(String),
    #[error("edge {edge}: vertex [{class},{row}] is outside the grid")]
    IndexOutOfRange {
        edge: usize,
        class: usize,
        row: usize,
    },
    #[error("vertex_sequence[{index}] = [{class},{row}] is outside the grid")]
    SequenceIndexOutOfRange {
        index: usize,
        class: usize,
        row: usize,
    },
    #[error("edge {edge}: vertex [{class},{row}] appears twice")]
    DuplicateVertexInEdge {
        edge: usize,
        class: usize,
        row: usize,
    },
    #[error("edge {edge} has {found} vertices, expected r = {expected}")]
    WrongEdgeCardinality {
        edge: usize,
        found: usize,
        expected: usize,
    },
    #[error("{0}")]
    InconsistentFields(String),
}

impl CertificateFileError {
    /// Short stable identifier for diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            CertificateFileError::Json(_) => "MalformedJson",
            CertificateFileError::UnsupportedSchema(_) => "UnsupportedSchema",
            CertificateFileError::UnsortedSigma(_) => "UnsortedSigma",
            CertificateFileError::InvalidHypergraph(_) => "InvalidHypergraph",
            CertificateFileError::UnknownKind(_) => "UnknownKind",
            CertificateFileError::IndexOutOfRange { .. } => "IndexOutOfRange",
            CertificateFileError::SequenceIndexOutOfRange { .. } => "IndexOutOfRange",
            CertificateFileError::DuplicateVertexInEdge { .. } => "DuplicateVertexInEdge",
            CertificateFileError::WrongEdgeCardinality { .. } => "WrongEdgeCardinality",
            CertificateFileError::InconsistentFields(_) => "InconsistentFields",
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CertificateFile {
    schema_version: String,
    hypergraph: HypergraphSection,
    cycle: CycleSection,
    claims: ClaimsSection,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HypergraphSection {
    n: usize,
    q: usize,
    sigma: Vec<usize>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CycleSection {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    split_index: Option<usize>,
    edges: Vec<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertex_sequence: Option<Vec<[usize; 2]>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ClaimsSection {
    hamiltonian: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    t: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    z: Option<usize>,
}

fn pair(v: &GridVertex) -> [usize; 2] {
    [v.class, v.row]
}

/// Serialises a certificate as pretty-printed JSON with a trailing newline.
pub fn to_json(cert: &CycleCertificate) -> String {
    let graph = &cert.hypergraph;
    let file = CertificateFile {
        schema_version: SCHEMA_VERSION.to_string(),
        hypergraph: HypergraphSection {
            n: graph.n(),
            q: graph.q(),
            sigma: graph.sigma().parts().to_vec(),
        },
        cycle: CycleSection {
            kind: cert.kind.as_str().to_string(),
            k: cert.k,
            split_index: cert.split_index,
            edges: cert
                .edges
                .iter()
                .map(|e| e.vertices().iter().map(pair).collect())
                .collect(),
            vertex_sequence: (cert.kind == CycleKind::Berge)
                .then(|| cert.vertex_sequence.iter().map(pair).collect()),
        },
        claims: ClaimsSection {
            hamiltonian: cert.claims.hamiltonian,
            t: cert.claims.t,
            z: cert.claims.z,
        },
    };
    let mut text = serde_json::to_string_pretty(&file).expect("certificate serialisation");
    text.push('\n');
    text
}

/// Parses and structurally validates a certificate. Whether the cycle is
/// actually valid is left to the verifiers.
pub fn from_json(text: &str) -> Result<CycleCertificate, CertificateFileError> {
    let file: CertificateFile = serde_json::from_str(text)?;
    if file.schema_version != SCHEMA_VERSION {
        return Err(CertificateFileError::UnsupportedSchema(file.schema_version));
    }
    let sigma_parts = file.hypergraph.sigma;
    if sigma_parts.is_empty()
        || sigma_parts.contains(&0)
        || sigma_parts.windows(2).any(|w| w[0] < w[1])
    {
        return Err(CertificateFileError::UnsortedSigma(sigma_parts));
    }
    let sigma = Partition::new(sigma_parts.clone())
        .map_err(|_| CertificateFileError::UnsortedSigma(sigma_parts))?;
    let graph = SigmaHypergraph::new(file.hypergraph.n, file.hypergraph.q, sigma)?;
    let kind: CycleKind = file
        .cycle
        .kind
        .parse()
        .map_err(|_| CertificateFileError::UnknownKind(file.cycle.kind.clone()))?;

    let mut edges = Vec::with_capacity(file.cycle.edges.len());
    for (index, raw) in file.cycle.edges.iter().enumerate() {
        let mut vertices = Vec::with_capacity(raw.len());
        for &[class, row] in raw {
            let v = GridVertex::new(class, row);
            if !graph.contains_vertex(&v) {
                return Err(CertificateFileError::IndexOutOfRange {
                    edge: index,
                    class,
                    row,
                });
            }
            vertices.push(v);
        }
        let edge = Edge::new(vertices);
        if edge.len() != raw.len() {
            let mut sorted = raw.clone();
            sorted.sort_unstable();
            let dup = sorted
                .windows(2)
                .find(|w| w[0] == w[1])
                .map(|w| w[0])
                .unwrap_or_default();
            return Err(CertificateFileError::DuplicateVertexInEdge {
                edge: index,
                class: dup[0],
                row: dup[1],
            });
        }
        if edge.len() != graph.r() {
            return Err(CertificateFileError::WrongEdgeCardinality {
                edge: index,
                found: edge.len(),
                expected: graph.r(),
            });
        }
        edges.push(edge);
    }

    let vertex_sequence = match (kind, file.cycle.vertex_sequence) {
        (CycleKind::Berge, Some(seq)) => {
            let mut out = Vec::with_capacity(seq.len());
            for (index, [class, row]) in seq.into_iter().enumerate() {
                let v = GridVertex::new(class, row);
                if !graph.contains_vertex(&v) {
                    return Err(CertificateFileError::SequenceIndexOutOfRange {
                        index,
                        class,
                        row,
                    });
                }
                out.push(v);
            }
            out
        }
        (CycleKind::Berge, None) => {
            return Err(CertificateFileError::InconsistentFields(
                "berge certificates need a vertex_sequence".into(),
            ))
        }
        (_, Some(_)) => {
            return Err(CertificateFileError::InconsistentFields(
                "only berge certificates carry a vertex_sequence".into(),
            ))
        }
        (_, None) => Vec::new(),
    };
    match (kind, file.cycle.k) {
        (CycleKind::KIntersecting, None) => {
            return Err(CertificateFileError::InconsistentFields(
                "k-intersecting certificates need k".into(),
            ))
        }
        (CycleKind::Berge, Some(_)) => {
            return Err(CertificateFileError::InconsistentFields(
                "berge certificates carry no k".into(),
            ))
        }
        (CycleKind::Sharp, Some(k)) if k != 2 => {
            return Err(CertificateFileError::InconsistentFields(format!(
                "sharp certificates have k = 2, got {k}"
            )))
        }
        _ => {}
    }

    Ok(CycleCertificate {
        hypergraph: graph,
        kind,
        k: file.cycle.k,
        split_index: file.cycle.split_index,
        edges,
        vertex_sequence,
        claims: Claims {
            hamiltonian: file.claims.hamiltonian,
            t: file.claims.t,
            z: file.claims.z,
        },
    })
}
