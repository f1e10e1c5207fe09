//! Explicit constructions of matchings and Hamiltonian cycles.
//!
//! Every cycle constructor runs the matching verifier on its result and
//! refuses to return a certificate that does not pass.

mod berge;
mod frobenius;
mod k_intersecting;
mod matching;
mod sharp;

use thiserror::Error;

pub use berge::construct_berge_hamiltonian;
pub use frobenius::frobenius_decompose;
pub use k_intersecting::construct_k_intersecting;
pub use matching::{diagonal_matching, shifted_matching, Block, Matching};
pub use sharp::{construct_sharp_hamiltonian, DEFAULT_SPLIT};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("rectangular partition with q = Δ and n = s: there is only one edge")]
    OnlyOneEdge,
    #[error("construction does not yield a verified cycle here: {0}")]
    ConstructionUnsupported(String),
    #[error("n = {n} must be at least s + 1 = {}", s + 1)]
    NTooSmall { n: usize, s: usize },
    #[error("q = {q} is not of the form x*{r} + y*{}", r + 1)]
    QNotRepresentable { q: usize, r: usize },
    #[error("a consecutive intersection would be empty: {0}")]
    DegenerateIntersection(String),
    #[error("k = {k} must lie in 2..={s}")]
    KOutOfRange { k: usize, s: usize },
    #[error("the partition needs at least two parts, got s = {s}")]
    TooFewParts { s: usize },
    #[error("split index p = {p} must lie in 1..{s}")]
    InvalidSplit { p: usize, s: usize },
    #[error("block rows {start}..{end} do not fit in q = {q} rows, or the height is not r or r+1")]
    BlockOutOfRange { start: usize, end: usize, q: usize },
}

impl ConstructionError {
    /// Stable identifier printed by the command-line front end.
    pub fn name(&self) -> &'static str {
        match self {
            ConstructionError::OnlyOneEdge => "OnlyOneEdge",
            ConstructionError::ConstructionUnsupported(_) => "ConstructionUnsupported",
            ConstructionError::NTooSmall { .. } => "NTooSmall",
            ConstructionError::QNotRepresentable { .. } => "QNotRepresentable",
            ConstructionError::DegenerateIntersection(_) => "DegenerateIntersection",
            ConstructionError::KOutOfRange { .. } => "KOutOfRange",
            ConstructionError::TooFewParts { .. } => "TooFewParts",
            ConstructionError::InvalidSplit { .. } => "InvalidSplit",
            ConstructionError::BlockOutOfRange { .. } => "BlockOutOfRange",
        }
    }
}
