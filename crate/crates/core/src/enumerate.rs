//! Streaming enumeration of E(H) in lexicographic order of canonical
//! vertex sequences.

use crate::hypergraph::{Edge, SigmaHypergraph};

/// Lazily walks the r-subsets of the grid in lexicographic order, pruning
/// prefixes whose class counts can no longer realise σ.
///
/// Create a fresh iterator with [`enumerate_edges`] to restart.
#[derive(Debug, Clone)]
pub struct EdgeIter<'a> {
    graph: &'a SigmaHypergraph,
    stack: Vec<usize>,
    candidate: usize,
    done: bool,
}

pub fn enumerate_edges(graph: &SigmaHypergraph) -> EdgeIter<'_> {
    EdgeIter {
        graph,
        stack: Vec::with_capacity(graph.r()),
        candidate: 0,
        done: false,
    }
}

impl EdgeIter<'_> {
    /// Class intersection sizes of the current prefix, in class order.
    fn class_counts(&self) -> Vec<(usize, usize)> {
        let q = self.graph.q();
        let mut counts: Vec<(usize, usize)> = Vec::new();
        for &id in &self.stack {
            let class = id / q;
            match counts.last_mut() {
                Some((c, count)) if *c == class => *count += 1,
                _ => counts.push((class, 1)),
            }
        }
        counts
    }

    fn prefix_feasible(&self) -> bool {
        let counts = self.class_counts();
        let Some((&(open_class, open_count), closed)) = counts.split_last() else {
            return true;
        };
        let mut remaining: Vec<usize> = self.graph.sigma().parts().to_vec();
        for &(_, count) in closed {
            match remaining.iter().position(|&a| a == count) {
                Some(pos) => {
                    remaining.swap_remove(pos);
                }
                None => return false,
            }
        }
        if self.stack.len() == self.graph.r() {
            return remaining.len() == 1 && remaining[0] == open_count;
        }
        if !remaining.iter().any(|&a| a >= open_count) {
            return false;
        }
        // the other unassigned parts each need a later class of their own
        remaining.len() - 1 <= self.graph.n() - 1 - open_class
    }
}

impl Iterator for EdgeIter<'_> {
    type Item = Edge;

    fn next(&mut self) -> Option<Edge> {
        let total = self.graph.vertex_count();
        let r = self.graph.r();
        while !self.done {
            let need = r - self.stack.len();
            if self.candidate + need > total {
                match self.stack.pop() {
                    Some(last) => self.candidate = last + 1,
                    None => self.done = true,
                }
                continue;
            }
            self.stack.push(self.candidate);
            if !self.prefix_feasible() {
                self.stack.pop();
                self.candidate += 1;
                continue;
            }
            if self.stack.len() == r {
                let edge = Edge::new(
                    self.stack
                        .iter()
                        .map(|&id| self.graph.vertex_at(id))
                        .collect(),
                );
                let last = self.stack.pop().unwrap_or_default();
                self.candidate = last + 1;
                return Some(edge);
            }
            self.candidate += 1;
        }
        None
    }
}
