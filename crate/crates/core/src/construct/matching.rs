use std::collections::BTreeSet;

use super::ConstructionError;
use crate::hypergraph::{Edge, GridVertex, SigmaHypergraph};

/// A horizontal band of rows `start_row .. start_row + height` used by the
/// block constructions. Height is r or r + 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    pub start_row: usize,
    pub height: usize,
}

impl Block {
    pub fn new(start_row: usize, height: usize) -> Self {
        Block { start_row, height }
    }

    pub(crate) fn check(&self, graph: &SigmaHypergraph) -> Result<(), ConstructionError> {
        let r = graph.r();
        let end = self.start_row + self.height;
        if (self.height != r && self.height != r + 1) || end > graph.q() {
            return Err(ConstructionError::BlockOutOfRange {
                start: self.start_row,
                end,
                q: graph.q(),
            });
        }
        Ok(())
    }

    fn is_tall(&self, graph: &SigmaHypergraph) -> bool {
        self.height == graph.r() + 1
    }

    /// The (r+1)-th row of a tall block.
    fn spare_row(&self, graph: &SigmaHypergraph) -> usize {
        self.start_row + graph.r()
    }
}

/// Pairwise vertex-disjoint edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    /// Returns `None` if two of the edges share a vertex.
    pub fn from_edges(edges: Vec<Edge>) -> Option<Self> {
        let mut seen = BTreeSet::new();
        for e in &edges {
            for v in e.vertices() {
                if !seen.insert(*v) {
                    return None;
                }
            }
        }
        Some(Matching { edges })
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn into_edges(self) -> Vec<Edge> {
        self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn covered(&self) -> BTreeSet<GridVertex> {
        self.edges
            .iter()
            .flat_map(|e| e.vertices().iter().copied())
            .collect()
    }
}

/// Vertices of part `i` of the diagonal edge `j` in `block`: the i-th
/// consecutive row segment of the block, in class (j + i) mod n.
fn diagonal_part(graph: &SigmaHypergraph, block: Block, j: usize, i: usize) -> Vec<GridVertex> {
    let sigma = graph.sigma();
    let class = (j + i) % graph.n();
    let first = block.start_row + sigma.offset(i);
    (first..first + sigma.parts()[i])
        .map(|row| GridVertex::new(class, row))
        .collect()
}

pub(crate) fn diagonal_edge(graph: &SigmaHypergraph, block: Block, j: usize) -> Edge {
    let vertices = (0..graph.sigma().s())
        .flat_map(|i| diagonal_part(graph, block, j, i))
        .collect();
    Edge::new(vertices)
}

/// Parts `0..split` as in diagonal edge `head`, parts `split..s` as in
/// diagonal edge `tail`. With `lift`, the last vertex of part 0 is swapped
/// for the spare row of the head block in the same class.
pub(crate) fn linked_edge(
    graph: &SigmaHypergraph,
    head: (Block, usize),
    tail: (Block, usize),
    split: usize,
    lift: bool,
) -> Edge {
    let s = graph.sigma().s();
    let mut vertices = Vec::with_capacity(graph.r());
    for i in 0..split {
        let mut part = diagonal_part(graph, head.0, head.1, i);
        if i == 0 && lift {
            if let Some(last) = part.last_mut() {
                last.row = head.0.spare_row(graph);
            }
        }
        vertices.extend(part);
    }
    for i in split..s {
        vertices.extend(diagonal_part(graph, tail.0, tail.1, i));
    }
    Edge::new(vertices)
}

/// The n diagonal edges E_0 … E_{n−1} covering the top r rows of a block.
pub fn diagonal_matching(
    graph: &SigmaHypergraph,
    block_start_row: usize,
    block_height: usize,
) -> Result<Matching, ConstructionError> {
    let block = Block::new(block_start_row, block_height);
    block.check(graph)?;
    let edges = (0..graph.n())
        .map(|j| diagonal_edge(graph, block, j))
        .collect();
    Ok(Matching { edges })
}

/// The n edges E*_j taking parts `0..p` from E_j and parts `p..s` from
/// E_{j+1 mod n}. In a block of height r + 1 the first part is lifted onto
/// the spare row.
pub fn shifted_matching(
    graph: &SigmaHypergraph,
    block_start_row: usize,
    block_height: usize,
    p: usize,
) -> Result<Matching, ConstructionError> {
    let s = graph.sigma().s();
    if p == 0 || p >= s {
        return Err(ConstructionError::InvalidSplit { p, s });
    }
    if graph.n() <= s {
        return Err(ConstructionError::NTooSmall { n: graph.n(), s });
    }
    let block = Block::new(block_start_row, block_height);
    block.check(graph)?;
    let lift = block.is_tall(graph);
    let n = graph.n();
    let edges = (0..n)
        .map(|j| linked_edge(graph, (block, j), (block, (j + 1) % n), p, lift))
        .collect();
    Ok(Matching { edges })
}

pub(crate) fn block_is_tall(graph: &SigmaHypergraph, block: Block) -> bool {
    block.is_tall(graph)
}
