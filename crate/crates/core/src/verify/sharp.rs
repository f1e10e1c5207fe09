use super::{check_claims, check_edges, covers_all, VerificationReport, ViolationTag};
use crate::certificate::{CycleCertificate, CycleKind, SharpnessProfile};
use crate::hypergraph::SigmaHypergraph;

/// Checks that consecutive edges (cyclically) intersect and all other pairs
/// are disjoint. At least four edges are required; with three every pair
/// is consecutive and the disjointness clause says nothing.
///
/// A certificate claiming to be Hamiltonian must also cover V(H), and
/// claimed t / z values must match the measured profile.
pub fn verify_sharp_cycle(graph: &SigmaHypergraph, cert: &CycleCertificate) -> VerificationReport {
    let edges = &cert.edges;
    let mut report = VerificationReport::pending(covers_all(graph, edges));
    let profile = SharpnessProfile::of_edges(edges);
    report.profile = Some(profile.clone());
    let report = match check_edges(graph, cert, CycleKind::Sharp, report) {
        Ok(report) => report,
        Err(report) => return report,
    };

    let p = edges.len();
    if p < 4 {
        return report.fail(
            ViolationTag::DegenerateLength,
            format!("a sharp cycle needs at least 4 edges, got {p}"),
        );
    }
    if let Some(i) = profile.pair_sizes.iter().position(|&size| size == 0) {
        return report.fail(
            ViolationTag::ConsecutiveIntersectionEmpty,
            format!("e{i} and e{} are disjoint", (i + 1) % p),
        );
    }
    for i in 0..p {
        for j in i + 2..p {
            if i == 0 && j == p - 1 {
                continue;
            }
            let size = edges[i].intersection_size(&edges[j]);
            if size > 0 {
                return report.fail(
                    ViolationTag::ForbiddenIntersection,
                    format!("non-consecutive e{i} and e{j} share {size} vertices"),
                );
            }
        }
    }
    if cert.claims.hamiltonian && !report.hamiltonian {
        return report.fail(
            ViolationTag::CoverageGap,
            "claimed Hamiltonian but the edges miss some vertex",
        );
    }
    check_claims(cert, &profile, report)
}
