use std::collections::HashSet;

use super::{check_edges, VerificationReport, ViolationTag};
use crate::certificate::{CycleCertificate, CycleKind};
use crate::hypergraph::SigmaHypergraph;

/// Checks v_1, e_1, v_2, e_2, …, v_p, e_p, v_1: distinct vertices covering
/// V(H), distinct edges of H, and v_k, v_{k+1} ∈ e_k cyclically.
pub fn verify_berge_hamiltonian(
    graph: &SigmaHypergraph,
    cert: &CycleCertificate,
) -> VerificationReport {
    let seq = &cert.vertex_sequence;
    let distinct: HashSet<_> = seq.iter().collect();
    let hamiltonian =
        distinct.len() == graph.vertex_count() && distinct.iter().all(|v| graph.contains_vertex(v));
    let report = match check_edges(
        graph,
        cert,
        CycleKind::Berge,
        VerificationReport::pending(hamiltonian),
    ) {
        Ok(report) => report,
        Err(report) => return report,
    };

    if let Some(i) = seq.iter().position(|v| !graph.contains_vertex(v)) {
        return report.fail(
            ViolationTag::VertexOutOfRange,
            format!("v{i} = {} lies outside the grid", seq[i]),
        );
    }
    let mut seen = std::collections::HashMap::new();
    for (j, v) in seq.iter().enumerate() {
        if let Some(i) = seen.insert(*v, j) {
            return report.fail(
                ViolationTag::VertexRepeated,
                format!("v{i} and v{j} are both {v}"),
            );
        }
    }
    let p = cert.edges.len();
    if seq.len() != p {
        return report.fail(
            ViolationTag::LengthMismatch,
            format!("{} vertices but {p} edges", seq.len()),
        );
    }
    if p < 2 {
        return report.fail(
            ViolationTag::DegenerateLength,
            format!("a Berge cycle needs at least 2 edges, got {p}"),
        );
    }
    for k in 0..p {
        let (a, b) = (seq[k], seq[(k + 1) % p]);
        let edge = &cert.edges[k];
        if !edge.contains(&a) || !edge.contains(&b) {
            return report.fail(
                ViolationTag::MembershipViolated,
                format!(
                    "e{k} = {edge} does not contain both v{k} = {a} and v{} = {b}",
                    (k + 1) % p
                ),
            );
        }
    }
    if !hamiltonian {
        return report.fail(
            ViolationTag::CoverageGap,
            format!("{} of {} vertices visited", seq.len(), graph.vertex_count()),
        );
    }
    report
}
