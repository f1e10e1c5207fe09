//! Hamiltonian cycles in σ-hypergraphs.
//!
//! A σ-hypergraph H(n, r, q | σ) has n classes of q vertices; an r-set is
//! an edge when the non-zero sizes of its intersections with the classes
//! form the partition σ of r. This crate builds Hamiltonian Berge cycles,
//! sharp ((t,z)-sharp) Hamiltonian cycles and k-intersecting Hamiltonian
//! cycles from explicit matchings, emits them as certificates, and checks
//! certificates against the cycle definitions with independent verifiers.
//! Bound calculators and exhaustive oracles cover the non-existence side.

pub mod bounds;
pub mod certificate;
pub mod construct;
pub mod enumerate;
pub mod export;
pub mod file;
pub mod hypergraph;
pub mod oracle;
pub mod partition;
pub mod verify;

pub use certificate::{Claims, CycleCertificate, CycleKind, SharpnessProfile};
pub use construct::{
    construct_berge_hamiltonian, construct_k_intersecting, construct_sharp_hamiltonian,
    diagonal_matching, frobenius_decompose, shifted_matching, ConstructionError, Matching,
};
pub use enumerate::enumerate_edges;
pub use hypergraph::{Edge, GridVertex, HypergraphError, SigmaHypergraph};
pub use partition::{Partition, PartitionError};
pub use verify::{
    verify_berge_hamiltonian, verify_k_intersecting, verify_matching, verify_sharp_cycle,
    VerificationReport, ViolationTag,
};
