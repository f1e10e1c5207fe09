//! Exhaustive searches used as independent oracles on small instances.
//!
//! Both searches branch in a fixed lexicographic order so results and node
//! counts are reproducible. Instances are limited to 128 vertices.

use num_bigint::BigUint;
use thiserror::Error;

use crate::certificate::{Claims, CycleCertificate, CycleKind, SharpnessProfile};
use crate::enumerate::enumerate_edges;
use crate::hypergraph::{Edge, SigmaHypergraph};
use crate::verify::verify_sharp_cycle;

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{vertices} vertices exceed the 128-vertex limit of the exhaustive oracles")]
    InstanceTooLarge { vertices: usize },
    #[error("H has {edges} edges, more than the budget of {budget}")]
    BudgetExceeded { edges: BigUint, budget: u64 },
}

type Mask = u128;

struct EdgeTable {
    edges: Vec<Edge>,
    masks: Vec<Mask>,
}

impl EdgeTable {
    fn build(graph: &SigmaHypergraph, budget: u64) -> Result<Self, OracleError> {
        if graph.vertex_count() > 128 {
            return Err(OracleError::InstanceTooLarge {
                vertices: graph.vertex_count(),
            });
        }
        let count = graph.edge_count();
        if count > BigUint::from(budget) {
            return Err(OracleError::BudgetExceeded {
                edges: count,
                budget,
            });
        }
        let edges: Vec<Edge> = enumerate_edges(graph).collect();
        let masks = edges
            .iter()
            .map(|e| {
                e.vertices()
                    .iter()
                    .fold(0, |m, v| m | (1 << graph.vertex_id(v)))
            })
            .collect();
        Ok(EdgeTable { edges, masks })
    }
}

fn full_mask(graph: &SigmaHypergraph) -> Mask {
    let bits = graph.vertex_count();
    if bits == 128 {
        Mask::MAX
    } else {
        (1 << bits) - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxMatching {
    /// ν(H) when `exact`, otherwise the best lower bound found.
    pub size: usize,
    pub exact: bool,
    pub witness: Vec<Edge>,
    pub nodes: u64,
}

/// Exact ν(H) by branch and bound.
///
/// At each node the lowest undecided vertex is either covered by an edge
/// lying entirely in undecided vertices or left uncovered. A node is pruned
/// when matched + ⌊undecided / r⌋ cannot beat the best so far. Running out
/// of `node_budget` returns the best matching found with `exact = false`.
pub fn brute_force_max_matching(
    graph: &SigmaHypergraph,
    node_budget: u64,
) -> Result<MaxMatching, OracleError> {
    let table = EdgeTable::build(graph, node_budget)?;
    let vertices = graph.vertex_count();
    // edges whose smallest vertex is v: once every lower vertex is decided
    // these are the only candidates for covering v
    let mut by_min: Vec<Vec<usize>> = vec![Vec::new(); vertices];
    for (i, &m) in table.masks.iter().enumerate() {
        by_min[m.trailing_zeros() as usize].push(i);
    }

    struct Search<'a> {
        masks: &'a [Mask],
        by_min: &'a [Vec<usize>],
        full: Mask,
        r: u32,
        best: Vec<usize>,
        current: Vec<usize>,
        nodes: u64,
        budget: u64,
        exhausted: bool,
    }

    impl Search<'_> {
        fn run(&mut self, decided: Mask) {
            if self.exhausted {
                return;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                self.exhausted = true;
                return;
            }
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            let undecided = self.full & !decided;
            if undecided == 0 {
                return;
            }
            let reachable = self.current.len() + (undecided.count_ones() / self.r) as usize;
            if reachable <= self.best.len() {
                return;
            }
            let v = undecided.trailing_zeros() as usize;
            for &e in &self.by_min[v] {
                if self.masks[e] & decided == 0 {
                    self.current.push(e);
                    self.run(decided | self.masks[e]);
                    self.current.pop();
                }
            }
            self.run(decided | (1 << v));
        }
    }

    let mut search = Search {
        masks: &table.masks,
        by_min: &by_min,
        full: full_mask(graph),
        r: graph.r() as u32,
        best: Vec::new(),
        current: Vec::new(),
        nodes: 0,
        budget: node_budget,
        exhausted: false,
    };
    search.run(0);
    Ok(MaxMatching {
        size: search.best.len(),
        exact: !search.exhausted,
        witness: search
            .best
            .iter()
            .map(|&i| table.edges[i].clone())
            .collect(),
        nodes: search.nodes,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SharpSearchOutcome {
    /// A sharp Hamiltonian cycle, already checked by the verifier.
    Found(CycleCertificate),
    /// No sharp Hamiltonian cycle with at most `max_len` edges exists.
    Exhausted {
        nodes: u64,
    },
    BudgetExceeded {
        nodes: u64,
    },
}

/// Depth-first search for a sharp Hamiltonian cycle of 4 to `max_len` edges.
///
/// Any such cycle can be rotated so that its first edge contains vertex
/// (0,0), so only those first edges are tried. Each extension must meet the
/// previous edge and avoid all earlier ones except the first, which it may
/// only meet when it closes the cycle. A prefix is abandoned when the
/// remaining slots cannot cover the uncovered vertices at r − 1 new
/// vertices per edge.
pub fn brute_force_sharp_hamiltonian_exists(
    graph: &SigmaHypergraph,
    max_len: usize,
    node_budget: u64,
) -> Result<SharpSearchOutcome, OracleError> {
    let table = EdgeTable::build(graph, node_budget)?;
    let full = full_mask(graph);
    let r = graph.r();

    struct Search<'a> {
        masks: &'a [Mask],
        full: Mask,
        fresh_per_edge: u32,
        max_len: usize,
        path: Vec<usize>,
        nodes: u64,
        budget: u64,
        exhausted: bool,
    }

    impl Search<'_> {
        /// `covered` is the union of the path; `interior` the union of all
        /// path edges except the first and the last.
        fn run(&mut self, covered: Mask, interior: Mask) -> bool {
            self.nodes += 1;
            if self.nodes > self.budget {
                self.exhausted = true;
                return false;
            }
            let len = self.path.len();
            if len == self.max_len {
                return false;
            }
            let uncovered = (self.full & !covered).count_ones();
            if uncovered > (self.max_len - len) as u32 * self.fresh_per_edge {
                return false;
            }
            let first = self.masks[self.path[0]];
            let last_index = self.path[len - 1];
            let last = self.masks[last_index];
            for e in 0..self.masks.len() {
                let m = self.masks[e];
                if e == last_index || m & last == 0 || m & interior != 0 {
                    continue;
                }
                let meets_first = len >= 2 && m & first != 0;
                if meets_first {
                    if len + 1 >= 4 && covered | m == self.full {
                        self.path.push(e);
                        return true;
                    }
                    continue;
                }
                let grown_interior = if len >= 2 { interior | last } else { interior };
                self.path.push(e);
                if self.run(covered | m, grown_interior) {
                    return true;
                }
                self.path.pop();
                if self.exhausted {
                    return false;
                }
            }
            false
        }
    }

    let mut search = Search {
        masks: &table.masks,
        full,
        fresh_per_edge: r.saturating_sub(1) as u32,
        max_len,
        path: Vec::new(),
        nodes: 0,
        budget: node_budget,
        exhausted: false,
    };
    if max_len >= 4 && r >= 2 {
        for start in 0..table.masks.len() {
            if table.masks[start] & 1 == 0 {
                continue;
            }
            search.path = vec![start];
            if search.run(table.masks[start], 0) {
                let edges: Vec<Edge> = search
                    .path
                    .iter()
                    .map(|&i| table.edges[i].clone())
                    .collect();
                let (t, z) = SharpnessProfile::of_edges(&edges).tz().unzip();
                let cert = CycleCertificate {
                    hypergraph: graph.clone(),
                    kind: CycleKind::Sharp,
                    k: Some(2),
                    split_index: None,
                    edges,
                    vertex_sequence: Vec::new(),
                    claims: Claims {
                        hamiltonian: true,
                        t,
                        z,
                    },
                };
                let report = verify_sharp_cycle(graph, &cert);
                assert!(
                    report.passed,
                    "oracle produced an invalid cycle: {}",
                    report.summary()
                );
                return Ok(SharpSearchOutcome::Found(cert));
            }
            if search.exhausted {
                return Ok(SharpSearchOutcome::BudgetExceeded {
                    nodes: search.nodes,
                });
            }
        }
    }
    Ok(SharpSearchOutcome::Exhausted {
        nodes: search.nodes,
    })
}
