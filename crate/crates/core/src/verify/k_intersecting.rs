use thiserror::Error;

use super::{check_edges, covers_all, VerificationReport, VertexSet, ViolationTag};
use crate::certificate::{CycleCertificate, CycleKind};
use crate::hypergraph::SigmaHypergraph;

/// Default cap on the number of k-subsets examined.
pub const DEFAULT_SUBSET_BUDGET: u128 = 10_000_000;

/// The cheap checks passed but the full subset scan would exceed the
/// budget, so no verdict is given.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("checking all C({edges},{k}) = {subsets} edge subsets exceeds the budget of {budget}")]
pub struct BudgetExceeded {
    pub edges: usize,
    pub k: usize,
    pub subsets: u128,
    pub budget: u128,
    pub window_sizes: Vec<usize>,
}

/// Checks that each of the p cyclic windows of k consecutive edges has a
/// common vertex, that no other k-subset does, and that no window of k + 1
/// consecutive edges does.
///
/// Common intersections only shrink as edges are added, so those three
/// checks together cover every collection of k or more edges, provided
/// p ≥ k + 2.
pub fn verify_k_intersecting(
    graph: &SigmaHypergraph,
    cert: &CycleCertificate,
    k: usize,
    budget: u128,
) -> Result<VerificationReport, BudgetExceeded> {
    let p = cert.edges.len();
    let sets: Vec<VertexSet> = cert
        .edges
        .iter()
        .map(|e| VertexSet::of_edge(graph, e))
        .collect();
    let report = VerificationReport::pending(covers_all(graph, &cert.edges));
    let report = match check_edges(graph, cert, CycleKind::KIntersecting, report) {
        Ok(report) => report,
        Err(report) => return Ok(report),
    };
    if cert.k != Some(k) {
        return Ok(report.fail(
            ViolationTag::KindMismatch,
            format!("certificate is for k = {:?}, checked with k = {k}", cert.k),
        ));
    }
    if k < 2 || p < k + 2 {
        return Ok(report.fail(
            ViolationTag::DegenerateLength,
            format!("a {k}-intersecting cycle needs k >= 2 and at least k + 2 edges, got {p}"),
        ));
    }

    let window = |start: usize, len: usize| {
        let mut common = sets[start].clone();
        for offset in 1..len {
            common.intersect_with(&sets[(start + offset) % p]);
        }
        common
    };
    let window_sizes: Vec<usize> = (0..p).map(|i| window(i, k).len()).collect();
    let mut report = report;
    report.window_sizes = Some(window_sizes.clone());
    if let Some(i) = window_sizes.iter().position(|&size| size == 0) {
        return Ok(report.fail(
            ViolationTag::ConsecutiveIntersectionEmpty,
            format!("window e{i}..e{} has no common vertex", (i + k - 1) % p),
        ));
    }

    let subsets = binomial(p, k);
    if subsets > budget {
        return Err(BudgetExceeded {
            edges: p,
            k,
            subsets,
            budget,
            window_sizes,
        });
    }
    if let Some(tuple) = first_forbidden_subset(&sets, k) {
        let names: Vec<String> = tuple.iter().map(|i| format!("e{i}")).collect();
        return Ok(report.fail(
            ViolationTag::ForbiddenIntersection,
            format!("non-window {{{}}} has a common vertex", names.join(",")),
        ));
    }
    if let Some(i) = (0..p).find(|&i| !window(i, k + 1).is_empty()) {
        return Ok(report.fail(
            ViolationTag::ForbiddenIntersection,
            format!("{} consecutive edges from e{i} share a vertex", k + 1),
        ));
    }
    if cert.claims.hamiltonian && !report.hamiltonian {
        return Ok(report.fail(
            ViolationTag::CoverageGap,
            "claimed Hamiltonian but the edges miss some vertex",
        ));
    }
    Ok(report)
}

/// A sorted index tuple is a cyclic window iff exactly one of its k cyclic
/// gaps exceeds 1 (valid when p ≥ k + 2).
pub(crate) fn is_cyclic_window(tuple: &[usize], p: usize) -> bool {
    let k = tuple.len();
    let mut big_gaps = tuple.windows(2).filter(|w| w[1] - w[0] != 1).count();
    if tuple[0] + p - tuple[k - 1] != 1 {
        big_gaps += 1;
    }
    big_gaps == 1
}

/// Lexicographically first k-subset that is not a window yet has a common
/// vertex. Subtrees whose partial intersection is already empty are skipped.
fn first_forbidden_subset(sets: &[VertexSet], k: usize) -> Option<Vec<usize>> {
    fn rec(
        sets: &[VertexSet],
        k: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        common: Option<&VertexSet>,
    ) -> bool {
        if chosen.len() == k {
            return !is_cyclic_window(chosen, sets.len());
        }
        let need = k - chosen.len();
        for i in start..=sets.len() - need {
            let next = match common {
                Some(c) => c.intersection(&sets[i]),
                None => sets[i].clone(),
            };
            if next.is_empty() {
                continue;
            }
            chosen.push(i);
            if rec(sets, k, i + 1, chosen, Some(&next)) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::with_capacity(k);
    rec(sets, k, 0, &mut chosen, None).then_some(chosen)
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_detection() {
        let p = 8;
        assert!(is_cyclic_window(&[0, 1, 2], p));
        assert!(is_cyclic_window(&[5, 6, 7], p));
        assert!(is_cyclic_window(&[0, 6, 7], p));
        assert!(is_cyclic_window(&[0, 1, 7], p));
        assert!(!is_cyclic_window(&[0, 2, 3], p));
        assert!(!is_cyclic_window(&[0, 1, 6], p));
        assert!(is_cyclic_window(&[3, 4], p));
        assert!(is_cyclic_window(&[0, 7], p));
        assert!(!is_cyclic_window(&[0, 2], p));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(12, 3), 220);
        assert_eq!(binomial(60, 3), 34_220);
        assert_eq!(binomial(3, 5), 0);
    }
}
