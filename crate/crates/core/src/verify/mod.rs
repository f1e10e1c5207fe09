//! Definition-level checkers for cycle certificates and matchings.
//!
//! Verifiers never trust the constructor: they re-check edge membership,
//! distinctness, the intersection pattern and coverage from scratch. On
//! failure the report carries the first violated condition, where "first"
//! means the smallest index tuple within the earliest failing check.

mod berge;
mod k_intersecting;
mod sharp;
mod vertex_set;

use std::collections::HashSet;
use std::fmt;

use crate::certificate::{CycleCertificate, CycleKind, SharpnessProfile};
use crate::hypergraph::{Edge, SigmaHypergraph};

pub use berge::verify_berge_hamiltonian;
pub use k_intersecting::{verify_k_intersecting, BudgetExceeded, DEFAULT_SUBSET_BUDGET};
pub use sharp::verify_sharp_cycle;
pub(crate) use vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ViolationTag {
    KindMismatch,
    HypergraphMismatch,
    NonEdgeMember,
    DuplicateEdge,
    VertexOutOfRange,
    VertexRepeated,
    LengthMismatch,
    DegenerateLength,
    MembershipViolated,
    ConsecutiveIntersectionEmpty,
    ForbiddenIntersection,
    CoverageGap,
    ProfileMismatch,
}

impl ViolationTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            ViolationTag::KindMismatch => "kind mismatch",
            ViolationTag::HypergraphMismatch => "hypergraph mismatch",
            ViolationTag::NonEdgeMember => "non-edge member",
            ViolationTag::DuplicateEdge => "duplicate edge",
            ViolationTag::VertexOutOfRange => "vertex out of range",
            ViolationTag::VertexRepeated => "vertex repeated",
            ViolationTag::LengthMismatch => "length mismatch",
            ViolationTag::DegenerateLength => "degenerate length",
            ViolationTag::MembershipViolated => "membership violated",
            ViolationTag::ConsecutiveIntersectionEmpty => "consecutive intersection empty",
            ViolationTag::ForbiddenIntersection => "forbidden intersection nonempty",
            ViolationTag::CoverageGap => "coverage gap",
            ViolationTag::ProfileMismatch => "profile mismatch",
        }
    }
}

impl fmt::Display for ViolationTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub tag: ViolationTag,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub passed: bool,
    pub violation: Option<Violation>,
    /// Consecutive pair intersection sizes (sharp and Berge-free kinds).
    pub profile: Option<SharpnessProfile>,
    /// |e_i ∩ … ∩ e_{i+k−1}| for every cyclic window (k-intersecting only).
    pub window_sizes: Option<Vec<usize>>,
    /// The edges (or the vertex sequence, for Berge cycles) cover V(H).
    pub hamiltonian: bool,
}

impl VerificationReport {
    pub(crate) fn fail(mut self, tag: ViolationTag, detail: impl Into<String>) -> Self {
        self.passed = false;
        self.violation = Some(Violation {
            tag,
            detail: detail.into(),
        });
        self
    }

    pub fn tag(&self) -> Option<ViolationTag> {
        self.violation.as_ref().map(|v| v.tag)
    }

    /// One line: PASS, or FAIL with the violated condition.
    pub fn summary(&self) -> String {
        match &self.violation {
            None => "PASS".to_string(),
            Some(v) => format!("FAIL: {}: {}", v.tag, v.detail),
        }
    }

    fn pending(hamiltonian: bool) -> Self {
        VerificationReport {
            passed: true,
            violation: None,
            profile: None,
            window_sizes: None,
            hamiltonian,
        }
    }
}

/// Common preamble: kind, hypergraph, edge membership and distinctness.
fn check_edges(
    graph: &SigmaHypergraph,
    cert: &CycleCertificate,
    kind: CycleKind,
    report: VerificationReport,
) -> Result<VerificationReport, VerificationReport> {
    if cert.kind != kind {
        return Err(report.fail(
            ViolationTag::KindMismatch,
            format!("expected a {kind} certificate, got {}", cert.kind),
        ));
    }
    if &cert.hypergraph != graph {
        return Err(report.fail(
            ViolationTag::HypergraphMismatch,
            format!("certificate is for {}, not {graph}", cert.hypergraph),
        ));
    }
    if let Some(i) = cert.edges.iter().position(|e| !graph.accepts(e)) {
        return Err(report.fail(
            ViolationTag::NonEdgeMember,
            format!("e{i} = {} is not an edge of {graph}", cert.edges[i]),
        ));
    }
    if let Some((i, j)) = first_duplicate(&cert.edges) {
        return Err(report.fail(
            ViolationTag::DuplicateEdge,
            format!("e{i} and e{j} are the same edge"),
        ));
    }
    Ok(report)
}

fn first_duplicate(edges: &[Edge]) -> Option<(usize, usize)> {
    let mut seen = std::collections::HashMap::new();
    for (j, e) in edges.iter().enumerate() {
        if let Some(&i) = seen.get(e) {
            return Some((i, j));
        }
        seen.insert(e, j);
    }
    None
}

fn covers_all(graph: &SigmaHypergraph, edges: &[Edge]) -> bool {
    let covered: HashSet<_> = edges.iter().flat_map(|e| e.vertices().iter()).collect();
    covered.len() == graph.vertex_count() && covered.iter().all(|v| graph.contains_vertex(v))
}

/// Compares claimed t / z against the measured profile.
fn check_claims(
    cert: &CycleCertificate,
    profile: &SharpnessProfile,
    report: VerificationReport,
) -> VerificationReport {
    let measured = (profile.uniform_t, profile.uniform_z);
    let claimed = (cert.claims.t, cert.claims.z);
    let ok = match claimed {
        (None, None) => true,
        (t, z) => {
            t.is_none_or(|t| measured.0 == Some(t)) && z.is_none_or(|z| measured.1 == Some(z))
        }
    };
    if ok {
        report
    } else {
        report.fail(
            ViolationTag::ProfileMismatch,
            format!(
                "claimed (t,z) = ({:?},{:?}) but measured {profile}",
                claimed.0, claimed.1
            ),
        )
    }
}

/// True iff every edge is an edge of `graph` and no two share a vertex.
pub fn verify_matching(graph: &SigmaHypergraph, edges: &[Edge]) -> bool {
    let mut seen = HashSet::new();
    edges.iter().all(|e| graph.accepts(e))
        && edges
            .iter()
            .flat_map(|e| e.vertices().iter())
            .all(|v| seen.insert(*v))
}
