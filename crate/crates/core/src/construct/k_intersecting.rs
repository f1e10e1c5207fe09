use super::matching::{block_is_tall, diagonal_edge, linked_edge};
use super::sharp::{block_layout, check_chain_preconditions};
use super::ConstructionError;
use crate::certificate::{Claims, CycleCertificate, CycleKind};
use crate::hypergraph::SigmaHypergraph;
use crate::verify::{verify_k_intersecting, DEFAULT_SUBSET_BUDGET};

/// k-intersecting Hamiltonian cycle built from k matchings per block.
///
/// Matching 1 is the diagonal matching. Edge m of group j (2 ≤ m ≤ k) takes
/// parts 1..=k−m+1 from diagonal edge E_j and the remaining parts from
/// E_{j+1}; in blocks of height r + 1 its first part is lifted onto the
/// spare row. Edges are ordered E_{1,j}, E_{2,j}, …, E_{k,j}, E_{1,j+1}, …
/// and the last group of a block borrows from the next block's first
/// diagonal edge.
pub fn construct_k_intersecting(
    graph: &SigmaHypergraph,
    k: usize,
) -> Result<CycleCertificate, ConstructionError> {
    let sigma = graph.sigma();
    let s = sigma.s();
    if s >= 2 && !(2..=s).contains(&k) {
        return Err(ConstructionError::KOutOfRange { k, s });
    }
    check_chain_preconditions(graph)?;
    let blocks = block_layout(graph)?;
    if sigma.delta_max() == 1 && blocks.iter().any(|&b| block_is_tall(graph, b)) {
        return Err(ConstructionError::DegenerateIntersection(format!(
            "blocks of height r+1 need a largest part of at least 2, {sigma} has 1"
        )));
    }

    let n = graph.n();
    let mut edges = Vec::with_capacity(k * n * blocks.len());
    for (b, &block) in blocks.iter().enumerate() {
        let next = blocks[(b + 1) % blocks.len()];
        let lift = block_is_tall(graph, block);
        for j in 0..n {
            edges.push(diagonal_edge(graph, block, j));
            let tail = if j + 1 < n { (block, j + 1) } else { (next, 0) };
            for m in 2..=k {
                edges.push(linked_edge(graph, (block, j), tail, k - m + 1, lift));
            }
        }
    }

    let cert = CycleCertificate {
        hypergraph: graph.clone(),
        kind: CycleKind::KIntersecting,
        k: Some(k),
        split_index: None,
        edges,
        vertex_sequence: Vec::new(),
        claims: Claims {
            hamiltonian: true,
            t: None,
            z: None,
        },
    };
    let report = verify_k_intersecting(graph, &cert, k, DEFAULT_SUBSET_BUDGET)
        .map_err(|e| ConstructionError::ConstructionUnsupported(e.to_string()))?;
    if !report.passed {
        return Err(ConstructionError::ConstructionUnsupported(report.summary()));
    }
    Ok(cert)
}
