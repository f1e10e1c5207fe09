use super::ConstructionError;
use crate::certificate::{Claims, CycleCertificate, CycleKind};
use crate::hypergraph::{Edge, GridVertex, SigmaHypergraph};
use crate::verify::verify_berge_hamiltonian;

/// Hamiltonian Berge cycle on all n·q vertices.
///
/// Vertices are numbered bottom row first, left to right, then one row up,
/// and so on. Edge e_k starts in class k mod n and is lifted k div n rows
/// above the bottom: part i sits in class (k mod n) + i, occupying a_i rows
/// that end at the lifted bottom row and wrap from the top back to the
/// bottom. Parts that wrap past the last class into V_1, V_2, … are lifted
/// one row further, which puts v_{k+1} inside e_k at the end of each row.
pub fn construct_berge_hamiltonian(
    graph: &SigmaHypergraph,
) -> Result<CycleCertificate, ConstructionError> {
    let sigma = graph.sigma();
    let (n, q) = (graph.n(), graph.q());
    if sigma.is_rectangular() && q == sigma.delta_max() && n == sigma.s() {
        return Err(ConstructionError::OnlyOneEdge);
    }
    if graph.r() < 2 {
        return Err(ConstructionError::ConstructionUnsupported(
            "r = 1: a single-vertex edge cannot join consecutive vertices".into(),
        ));
    }
    if sigma.s() == 1 && n > 1 {
        return Err(ConstructionError::ConstructionUnsupported(
            "s = 1 with several classes: no edge meets two classes, H is disconnected".into(),
        ));
    }

    let total = n * q;
    let vertex_sequence: Vec<GridVertex> = (0..total)
        .map(|k| GridVertex::new(k % n, q - 1 - k / n))
        .collect();

    let edges = (0..total)
        .map(|k| {
            let (start, lift) = (k % n, k / n);
            let mut vertices = Vec::with_capacity(graph.r());
            for (i, &size) in sigma.parts().iter().enumerate() {
                let class = (start + i) % n;
                let wrapped = start + i >= n;
                let shift = (lift + usize::from(wrapped)) % q;
                let bottom = q - 1 - shift;
                vertices.extend((0..size).map(|d| GridVertex::new(class, (bottom + q - d) % q)));
            }
            Edge::new(vertices)
        })
        .collect();

    let cert = CycleCertificate {
        hypergraph: graph.clone(),
        kind: CycleKind::Berge,
        k: None,
        split_index: None,
        edges,
        vertex_sequence,
        claims: Claims {
            hamiltonian: true,
            t: None,
            z: None,
        },
    };
    let report = verify_berge_hamiltonian(graph, &cert);
    if !report.passed {
        return Err(ConstructionError::ConstructionUnsupported(report.summary()));
    }
    Ok(cert)
}
