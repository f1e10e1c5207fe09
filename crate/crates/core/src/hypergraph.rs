//! The σ-hypergraph H(n, r, q | σ) and its edges.
//!
//! Vertices live on a q × n grid: `class` selects the column V_i and `row`
//! the position inside it, with row 0 at the top.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("no edges exist: n = {n} is smaller than the number of parts s = {s}")]
    TooFewClasses { n: usize, s: usize },
    #[error("no edges exist: q = {q} is smaller than the largest part {delta}")]
    ClassTooSmall { q: usize, delta: usize },
    #[error("n and q must be at least 1")]
    ZeroDimension,
    #[error("vertex ({class},{row}) lies outside the {q}x{n} grid")]
    VertexOutOfRange {
        class: usize,
        row: usize,
        n: usize,
        q: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GridVertex {
    pub class: usize,
    pub row: usize,
}

impl GridVertex {
    pub const fn new(class: usize, row: usize) -> Self {
        GridVertex { class, row }
    }
}

impl fmt::Display for GridVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.class, self.row)
    }
}

/// A set of grid vertices kept sorted by `(class, row)`.
///
/// An `Edge` is only a canonical vertex set; whether it is an edge of a
/// particular hypergraph is decided by [`SigmaHypergraph::is_edge`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    vertices: Vec<GridVertex>,
}

impl Edge {
    /// Builds the canonical form: sorted, duplicates removed.
    pub fn new(mut vertices: Vec<GridVertex>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Edge { vertices }
    }

    pub fn vertices(&self) -> &[GridVertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: &GridVertex) -> bool {
        self.vertices.binary_search(v).is_ok()
    }

    /// Class index → |K ∩ V_class| for the classes this edge meets.
    pub fn parts(&self) -> BTreeMap<usize, usize> {
        let mut parts = BTreeMap::new();
        for v in &self.vertices {
            *parts.entry(v.class).or_insert(0) += 1;
        }
        parts
    }

    pub fn intersection_size(&self, other: &Edge) -> usize {
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < self.vertices.len() && j < other.vertices.len() {
            match self.vertices[i].cmp(&other.vertices[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    pub fn is_disjoint(&self, other: &Edge) -> bool {
        self.intersection_size(other) == 0
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self
            .vertices
            .iter()
            .map(|v| format!("[{},{}]", v.class, v.row))
            .collect();
        write!(f, "[{}]", items.join(","))
    }
}

/// H(n, r, q | σ): n classes of q vertices, edges realise the partition σ.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SigmaHypergraph {
    n: usize,
    q: usize,
    sigma: Partition,
}

impl SigmaHypergraph {
    /// Validates that the hypergraph has at least one edge (q ≥ Δ, n ≥ s).
    pub fn new(n: usize, q: usize, sigma: Partition) -> Result<Self, HypergraphError> {
        if n == 0 || q == 0 {
            return Err(HypergraphError::ZeroDimension);
        }
        if n < sigma.s() {
            return Err(HypergraphError::TooFewClasses { n, s: sigma.s() });
        }
        if q < sigma.delta_max() {
            return Err(HypergraphError::ClassTooSmall {
                q,
                delta: sigma.delta_max(),
            });
        }
        Ok(SigmaHypergraph { n, q, sigma })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn r(&self) -> usize {
        self.sigma.r()
    }

    pub fn sigma(&self) -> &Partition {
        &self.sigma
    }

    pub fn vertex_count(&self) -> usize {
        self.n * self.q
    }

    pub fn contains_vertex(&self, v: &GridVertex) -> bool {
        v.class < self.n && v.row < self.q
    }

    /// Dense index of a vertex; increasing in `(class, row)` order.
    pub fn vertex_id(&self, v: &GridVertex) -> usize {
        v.class * self.q + v.row
    }

    pub fn vertex_at(&self, id: usize) -> GridVertex {
        GridVertex::new(id / self.q, id % self.q)
    }

    /// All vertices in `(class, row)` order.
    pub fn vertices(&self) -> impl Iterator<Item = GridVertex> + '_ {
        (0..self.vertex_count()).map(move |id| self.vertex_at(id))
    }

    pub fn check_vertex(&self, v: &GridVertex) -> Result<(), HypergraphError> {
        if self.contains_vertex(v) {
            Ok(())
        } else {
            Err(HypergraphError::VertexOutOfRange {
                class: v.class,
                row: v.row,
                n: self.n,
                q: self.q,
            })
        }
    }

    /// True iff `|K| = r` and the non-zero class intersection sizes,
    /// sorted non-increasing, are exactly σ.
    pub fn is_edge(&self, vertices: &[GridVertex]) -> Result<bool, HypergraphError> {
        for v in vertices {
            self.check_vertex(v)?;
        }
        let edge = Edge::new(vertices.to_vec());
        if edge.len() != vertices.len() || edge.len() != self.r() {
            return Ok(false);
        }
        let mut sizes: Vec<usize> = edge.parts().into_values().collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Ok(sizes == self.sigma.parts())
    }

    /// Like [`is_edge`](Self::is_edge) but treats out-of-range vertices as a
    /// plain `false`.
    pub fn accepts(&self, edge: &Edge) -> bool {
        self.is_edge(edge.vertices()).unwrap_or(false)
    }

    /// Closed-form |E(H)| = n! / ((n−s)! ∏ m_j!) · ∏ C(q, a_i).
    pub fn edge_count(&self) -> BigUint {
        let s = self.sigma.s();
        let mut count = falling_factorial(self.n, s);
        for (_, multiplicity) in self.sigma.multiplicities() {
            count /= factorial(multiplicity);
        }
        for &a in self.sigma.parts() {
            count *= binomial(self.q, a);
        }
        count
    }
}

impl fmt::Display for SigmaHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H({},{},{}|{})", self.n, self.r(), self.q, self.sigma)
    }
}

fn factorial(m: usize) -> BigUint {
    (1..=m).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

fn falling_factorial(n: usize, k: usize) -> BigUint {
    (n - k + 1..=n).fold(BigUint::one(), |acc, v| acc * BigUint::from(v))
}

pub(crate) fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}
