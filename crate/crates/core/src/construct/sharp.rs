use super::matching::{block_is_tall, diagonal_edge, linked_edge, Block};
use super::{frobenius_decompose, ConstructionError};
use crate::certificate::{Claims, CycleCertificate, CycleKind, SharpnessProfile};
use crate::hypergraph::SigmaHypergraph;
use crate::verify::verify_sharp_cycle;

pub const DEFAULT_SPLIT: usize = 1;

/// x blocks of height r stacked from the top, then y blocks of height r + 1.
pub(crate) fn block_layout(graph: &SigmaHypergraph) -> Result<Vec<Block>, ConstructionError> {
    let r = graph.r();
    let (x, y) = frobenius_decompose(graph.q(), r)?;
    let mut blocks = Vec::with_capacity(x + y);
    let mut start = 0;
    for height in std::iter::repeat_n(r, x).chain(std::iter::repeat_n(r + 1, y)) {
        blocks.push(Block::new(start, height));
        start += height;
    }
    Ok(blocks)
}

pub(crate) fn check_chain_preconditions(graph: &SigmaHypergraph) -> Result<(), ConstructionError> {
    let s = graph.sigma().s();
    if s < 2 {
        return Err(ConstructionError::TooFewParts { s });
    }
    if graph.n() <= s {
        return Err(ConstructionError::NTooSmall { n: graph.n(), s });
    }
    Ok(())
}

/// Sharp Hamiltonian cycle built from one diagonal and one shifted matching
/// per block.
///
/// Within a block the order is E_0, E*_0, E_1, E*_1, …, E_{n−1}, E*_{n−1}.
/// The tail parts of each block's last E* are taken from the first diagonal
/// edge of the next block, the last block wrapping round to the first.
/// Consecutive intersections are t then z in blocks of height r and t − 1
/// then z in blocks of height r + 1, where t = a_1 + … + a_p.
///
/// If a block of height r + 1 is needed and t − 1 = 0 under `split`, the
/// smallest split with t ≥ 2 is used instead.
pub fn construct_sharp_hamiltonian(
    graph: &SigmaHypergraph,
    split: usize,
) -> Result<CycleCertificate, ConstructionError> {
    check_chain_preconditions(graph)?;
    let sigma = graph.sigma();
    let s = sigma.s();
    if split == 0 || split >= s {
        return Err(ConstructionError::InvalidSplit { p: split, s });
    }
    let blocks = block_layout(graph)?;
    let has_tall = blocks.iter().any(|&b| block_is_tall(graph, b));
    let split = if has_tall && sigma.prefix_sum(split) < 2 {
        (1..s).find(|&p| sigma.prefix_sum(p) >= 2).ok_or_else(|| {
            ConstructionError::DegenerateIntersection(format!(
                "blocks of height r+1 need t >= 2, but no split of {sigma} reaches it"
            ))
        })?
    } else {
        split
    };

    let n = graph.n();
    let mut edges = Vec::with_capacity(2 * n * blocks.len());
    for (b, &block) in blocks.iter().enumerate() {
        let next = blocks[(b + 1) % blocks.len()];
        let lift = block_is_tall(graph, block);
        for j in 0..n {
            edges.push(diagonal_edge(graph, block, j));
            let tail = if j + 1 < n { (block, j + 1) } else { (next, 0) };
            edges.push(linked_edge(graph, (block, j), tail, split, lift));
        }
    }

    let profile = SharpnessProfile::of_edges(&edges);
    let (t, z) = profile.tz().unzip();
    let cert = CycleCertificate {
        hypergraph: graph.clone(),
        kind: CycleKind::Sharp,
        k: Some(2),
        split_index: Some(split),
        edges,
        vertex_sequence: Vec::new(),
        claims: Claims {
            hamiltonian: true,
            t,
            z,
        },
    };
    let report = verify_sharp_cycle(graph, &cert);
    if !report.passed {
        return Err(ConstructionError::ConstructionUnsupported(report.summary()));
    }
    Ok(cert)
}
