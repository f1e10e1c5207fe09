//! Cycle certificates: an ordered edge sequence plus what it claims to be.

use std::fmt;
use std::str::FromStr;

use crate::hypergraph::{Edge, GridVertex, SigmaHypergraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CycleKind {
    Berge,
    Sharp,
    KIntersecting,
}

impl CycleKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            CycleKind::Berge => "berge",
            CycleKind::Sharp => "sharp",
            CycleKind::KIntersecting => "k-intersecting",
        }
    }
}

impl fmt::Display for CycleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CycleKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "berge" => Ok(CycleKind::Berge),
            "sharp" => Ok(CycleKind::Sharp),
            "k-intersecting" => Ok(CycleKind::KIntersecting),
            other => Err(format!("unknown cycle kind {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Claims {
    pub hamiltonian: bool,
    pub t: Option<usize>,
    pub z: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleCertificate {
    pub hypergraph: SigmaHypergraph,
    pub kind: CycleKind,
    /// Intersection order: 2 for sharp cycles, absent for Berge cycles.
    pub k: Option<usize>,
    /// Split index p used by the sharp construction.
    pub split_index: Option<usize>,
    pub edges: Vec<Edge>,
    /// Berge cycles only; empty otherwise.
    pub vertex_sequence: Vec<GridVertex>,
    pub claims: Claims,
}

impl CycleCertificate {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Consecutive intersection sizes |e_i ∩ e_{i+1}| around a cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharpnessProfile {
    pub pair_sizes: Vec<usize>,
    pub uniform_t: Option<usize>,
    pub uniform_z: Option<usize>,
}

impl SharpnessProfile {
    /// Classifies `pair_sizes` as (t,z)-alternating when the cycle length
    /// is even, every even position (0-based) equals t, every odd one z,
    /// and both are positive.
    pub fn from_pair_sizes(pair_sizes: Vec<usize>) -> Self {
        let alternating = !pair_sizes.is_empty()
            && pair_sizes.len().is_multiple_of(2)
            && pair_sizes.iter().step_by(2).all(|&x| x == pair_sizes[0])
            && pair_sizes
                .iter()
                .skip(1)
                .step_by(2)
                .all(|&x| x == pair_sizes[1])
            && pair_sizes[0] > 0
            && pair_sizes[1] > 0;
        let (uniform_t, uniform_z) = if alternating {
            (Some(pair_sizes[0]), Some(pair_sizes[1]))
        } else {
            (None, None)
        };
        SharpnessProfile {
            pair_sizes,
            uniform_t,
            uniform_z,
        }
    }

    pub fn of_edges(edges: &[Edge]) -> Self {
        let p = edges.len();
        let sizes = (0..p)
            .map(|i| edges[i].intersection_size(&edges[(i + 1) % p]))
            .collect();
        SharpnessProfile::from_pair_sizes(sizes)
    }

    pub fn tz(&self) -> Option<(usize, usize)> {
        self.uniform_t.zip(self.uniform_z)
    }

    /// (t,z)-sharp with t = z.
    pub fn is_t_sharp(&self) -> bool {
        matches!(self.tz(), Some((t, z)) if t == z)
    }
}

impl fmt::Display for SharpnessProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tz() {
            Some((t, z)) if t == z => write!(f, "{t}-sharp"),
            Some((t, z)) => write!(f, "({t},{z})-sharp"),
            None => {
                let sizes: Vec<String> = self.pair_sizes.iter().map(|x| x.to_string()).collect();
                write!(f, "pairs [{}]", sizes.join(","))
            }
        }
    }
}
