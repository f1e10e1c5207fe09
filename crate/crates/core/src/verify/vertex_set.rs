use crate::hypergraph::{Edge, SigmaHypergraph};

/// Fixed-width bitset over vertex ids of one hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    /// Vertices outside the grid are dropped.
    pub(crate) fn of_edge(graph: &SigmaHypergraph, edge: &Edge) -> Self {
        let mut words = vec![0u64; graph.vertex_count().div_ceil(64)];
        for v in edge.vertices().iter().filter(|v| graph.contains_vertex(v)) {
            let id = graph.vertex_id(v);
            words[id / 64] |= 1 << (id % 64);
        }
        VertexSet { words }
    }

    pub(crate) fn intersect_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub(crate) fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub(crate) fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub(crate) fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}
