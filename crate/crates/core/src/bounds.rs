//! Matching and sharp-cycle length bounds, in exact rational arithmetic.

use std::fmt;

use num_rational::Ratio;

use crate::hypergraph::SigmaHypergraph;

pub type Rational = Ratio<u128>;

/// Unmatched-vertex bound for partitions with gcd d ≥ 2 and q ≢ 0 (mod d):
/// every class leaves t = q mod d vertices unmatched.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingBound {
    pub gcd: usize,
    pub residue: usize,
    pub unmatched_lower: u128,
    pub nu_upper: Rational,
}

/// Edge-count window n·q/(r−1) ≤ |E(C)| ≤ 2n·q/r for a sharp Hamiltonian
/// cycle C.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharpEdgeBounds {
    pub lower: Rational,
    pub upper: Rational,
}

impl SharpEdgeBounds {
    pub fn admits(&self, edges: usize) -> bool {
        let e = Rational::from_integer(edges as u128);
        self.lower <= e && e <= self.upper
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub matching: Option<MatchingBound>,
    pub sharp: Option<SharpEdgeBounds>,
    /// Present when a value for ν(H) was supplied.
    pub nonexistence_fired: Option<bool>,
}

pub fn matching_upper_bound(graph: &SigmaHypergraph) -> Option<MatchingBound> {
    let d = graph.sigma().gcd();
    let residue = graph.q() % d;
    if d < 2 || residue == 0 {
        return None;
    }
    let n = graph.n() as u128;
    Some(MatchingBound {
        gcd: d,
        residue,
        unmatched_lower: residue as u128 * n,
        nu_upper: Rational::new(n * (graph.q() - residue) as u128, graph.r() as u128),
    })
}

/// `None` when r < 2, where a sharp cycle cannot exist.
pub fn sharp_cycle_bounds(graph: &SigmaHypergraph) -> Option<SharpEdgeBounds> {
    let r = graph.r() as u128;
    if r < 2 {
        return None;
    }
    let nq = graph.vertex_count() as u128;
    Some(SharpEdgeBounds {
        lower: Rational::new(nq, r - 1),
        upper: Rational::new(2 * nq, r),
    })
}

/// True iff 2ν + 1 < n·q/(r−1). When `nu` is at least ν(H), a true result
/// proves H has no sharp Hamiltonian cycle.
pub fn sharp_nonexistence_test(graph: &SigmaHypergraph, nu: u128) -> bool {
    match sharp_cycle_bounds(graph) {
        Some(bounds) => Rational::from_integer(2 * nu + 1) < bounds.lower,
        None => true,
    }
}

pub fn bounds_report(graph: &SigmaHypergraph, nu: Option<u128>) -> BoundsReport {
    BoundsReport {
        matching: matching_upper_bound(graph),
        sharp: sharp_cycle_bounds(graph),
        nonexistence_fired: nu.map(|nu| sharp_nonexistence_test(graph, nu)),
    }
}

impl fmt::Display for BoundsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.matching {
            Some(m) => {
                writeln!(f, "gcd(sigma) = {}, q mod d = {}", m.gcd, m.residue)?;
                writeln!(f, "unmatched vertices >= {}", m.unmatched_lower)?;
                writeln!(f, "nu(H) <= {} (floor {})", m.nu_upper, m.nu_upper.floor())?;
            }
            None => writeln!(f, "matching bound: not applicable")?,
        }
        match &self.sharp {
            Some(s) => writeln!(f, "sharp HC edge count in [{}, {}]", s.lower, s.upper)?,
            None => writeln!(f, "sharp HC edge count: r < 2, no sharp cycle")?,
        }
        if let Some(fired) = self.nonexistence_fired {
            writeln!(
                f,
                "{}",
                if fired {
                    "REFUTES-SHARP-HC"
                } else {
                    "INCONCLUSIVE"
                }
            )?;
        }
        Ok(())
    }
}
