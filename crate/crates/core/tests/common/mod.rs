//! Hand-built clause-violating mutations of passing certificates.

#![allow(dead_code)]

use sigma_hamilton::verify::DEFAULT_SUBSET_BUDGET;
use sigma_hamilton::{
    construct_berge_hamiltonian, construct_k_intersecting, construct_sharp_hamiltonian,
    enumerate_edges, verify_berge_hamiltonian, verify_k_intersecting, verify_sharp_cycle,
    CycleCertificate, CycleKind, Edge, GridVertex, Partition, SigmaHypergraph, VerificationReport,
    ViolationTag,
};

pub fn h(n: usize, q: usize, sigma: &str) -> SigmaHypergraph {
    SigmaHypergraph::new(n, q, Partition::parse(sigma).unwrap()).unwrap()
}

pub struct Mutation {
    pub label: String,
    pub cert: CycleCertificate,
    /// Which verifier to run, independent of the (possibly mutated) kind.
    pub checker: CycleKind,
    pub k: usize,
    pub expected: ViolationTag,
}

/// Runs the verifier named by `checker` against the certificate's own
/// hypergraph `graph`.
pub fn run_checker(
    graph: &SigmaHypergraph,
    checker: CycleKind,
    cert: &CycleCertificate,
    k: usize,
) -> VerificationReport {
    match checker {
        CycleKind::Berge => verify_berge_hamiltonian(graph, cert),
        CycleKind::Sharp => verify_sharp_cycle(graph, cert),
        CycleKind::KIntersecting => verify_k_intersecting(graph, cert, k, DEFAULT_SUBSET_BUDGET)
            .expect("mutation checks stay within budget"),
    }
}

/// r vertices stacked in one class: never an edge when s ≥ 2.
fn column_non_edge(graph: &SigmaHypergraph, class: usize) -> Edge {
    Edge::new(
        (0..graph.r())
            .map(|row| GridVertex::new(class, row))
            .collect(),
    )
}

fn out_of_grid(graph: &SigmaHypergraph) -> GridVertex {
    GridVertex::new(graph.n(), 0)
}

struct Builder {
    base: CycleCertificate,
    checker: CycleKind,
    k: usize,
    out: Vec<Mutation>,
}

impl Builder {
    fn push(
        &mut self,
        label: impl Into<String>,
        expected: ViolationTag,
        edit: impl FnOnce(&mut CycleCertificate),
    ) {
        self.push_with_k(label, expected, self.k, edit);
    }

    fn push_with_k(
        &mut self,
        label: impl Into<String>,
        expected: ViolationTag,
        k: usize,
        edit: impl FnOnce(&mut CycleCertificate),
    ) {
        let mut cert = self.base.clone();
        edit(&mut cert);
        self.out.push(Mutation {
            label: label.into(),
            cert,
            checker: self.checker,
            k,
            expected,
        });
    }
}

/// Berge cycle on H(3,3,3|(2,1)) and 20 mutations of it.
pub fn berge_mutations() -> (CycleCertificate, Vec<Mutation>) {
    use ViolationTag::*;
    let graph = h(3, 3, "2,1");
    let base = construct_berge_hamiltonian(&graph).unwrap();
    let mut b = Builder {
        base: base.clone(),
        checker: CycleKind::Berge,
        k: 0,
        out: Vec::new(),
    };
    for i in 0..5 {
        b.push(
            format!("swap v{i} and v{}", i + 1),
            MembershipViolated,
            |c| c.vertex_sequence.swap(i, i + 1),
        );
    }
    for (from, to) in [(0, 1), (2, 5), (7, 8)] {
        b.push(format!("e{to} := e{from}"), DuplicateEdge, |c| {
            c.edges[to] = c.edges[from].clone()
        });
    }
    for (i, class) in [(0, 0), (4, 1), (8, 2)] {
        let bad = column_non_edge(&graph, class);
        b.push(format!("e{i} := column {class}"), NonEdgeMember, |c| {
            c.edges[i] = bad
        });
    }
    for (from, to) in [(0, 3), (7, 8)] {
        b.push(format!("v{to} := v{from}"), VertexRepeated, |c| {
            c.vertex_sequence[to] = c.vertex_sequence[from]
        });
    }
    b.push("drop last edge", LengthMismatch, |c| {
        c.edges.pop();
    });
    let extra = enumerate_edges(&graph)
        .find(|e| !base.edges.contains(e))
        .unwrap();
    b.push("append an edge", LengthMismatch, |c| c.edges.push(extra));
    let outside = out_of_grid(&graph);
    b.push("v4 off the grid", VertexOutOfRange, |c| {
        c.vertex_sequence[4] = outside
    });
    b.push("relabel as sharp", KindMismatch, |c| {
        c.kind = CycleKind::Sharp
    });
    b.push("claim a different hypergraph", HypergraphMismatch, |c| {
        c.hypergraph = h(3, 4, "2,1")
    });
    // a 2-cycle v0 e0 v1 e' v0 that is a valid Berge cycle but misses 7 vertices
    let (v0, v1) = (base.vertex_sequence[0], base.vertex_sequence[1]);
    let back = enumerate_edges(&graph)
        .find(|e| e.contains(&v0) && e.contains(&v1) && *e != base.edges[0])
        .unwrap();
    b.push("short Berge cycle", CoverageGap, |c| {
        c.vertex_sequence.truncate(2);
        c.edges.truncate(1);
        c.edges.push(back);
    });
    let v4 = base.vertex_sequence[4];
    let detour = enumerate_edges(&graph)
        .find(|e| !e.contains(&v4) && !base.edges.contains(e))
        .unwrap();
    b.push("e4 avoids v4", MembershipViolated, |c| c.edges[4] = detour);
    (base, b.out)
}

/// Edges (a, b, c, d) where consecutive ones meet and a, c also meet.
fn chorded_four_cycle(graph: &SigmaHypergraph) -> Vec<Edge> {
    let edges: Vec<Edge> = enumerate_edges(graph).collect();
    let meets = |x: &Edge, y: &Edge| x != y && !x.is_disjoint(y);
    for a in &edges {
        for b in edges.iter().filter(|b| meets(a, b)) {
            for c in edges.iter().filter(|c| meets(b, c) && meets(a, c)) {
                if let Some(d) = edges
                    .iter()
                    .find(|d| meets(c, d) && meets(a, d) && *d != b && b.is_disjoint(d))
                {
                    return vec![a.clone(), b.clone(), c.clone(), d.clone()];
                }
            }
        }
    }
    panic!("no chorded 4-cycle in {graph}");
}

/// (2,1)-sharp cycle on H(3,3,6|(2,1)) and 20 mutations of it.
pub fn sharp_mutations() -> (CycleCertificate, Vec<Mutation>) {
    use ViolationTag::*;
    let graph = h(3, 6, "2,1");
    let base = construct_sharp_hamiltonian(&graph, 1).unwrap();
    let mut b = Builder {
        base: base.clone(),
        checker: CycleKind::Sharp,
        k: 2,
        out: Vec::new(),
    };
    for (from, to) in [(0, 1), (3, 7), (10, 11)] {
        b.push(format!("e{to} := e{from}"), DuplicateEdge, |c| {
            c.edges[to] = c.edges[from].clone()
        });
    }
    for (i, class) in [(0, 0), (5, 1), (11, 2)] {
        let bad = column_non_edge(&graph, class);
        b.push(format!("e{i} := column {class}"), NonEdgeMember, |c| {
            c.edges[i] = bad
        });
    }
    b.push("drop last edge", ConsecutiveIntersectionEmpty, |c| {
        c.edges.pop();
    });
    b.push("swap e0 and e1", ConsecutiveIntersectionEmpty, |c| {
        c.edges.swap(0, 1)
    });
    b.push("drop e2 and e3", ConsecutiveIntersectionEmpty, |c| {
        c.edges.drain(2..4);
    });
    for len in [3, 2, 1, 0] {
        b.push(format!("truncate to {len} edges"), DegenerateLength, |c| {
            c.edges.truncate(len);
            c.claims.t = None;
            c.claims.z = None;
        });
    }
    let chorded = chorded_four_cycle(&graph);
    b.push("chorded 4-cycle", ForbiddenIntersection, |c| {
        c.edges = chorded;
        c.claims.t = None;
        c.claims.z = None;
    });
    let half = construct_sharp_hamiltonian(&h(3, 3, "2,1"), 1).unwrap();
    b.push("cycle on the top half only", CoverageGap, |c| {
        c.edges = half.edges
    });
    for (t, z) in [(Some(1), Some(1)), (Some(2), Some(2)), (Some(3), None)] {
        b.push(format!("claim t={t:?} z={z:?}"), ProfileMismatch, |c| {
            c.claims.t = t;
            c.claims.z = z;
        });
    }
    b.push("relabel as berge", KindMismatch, |c| {
        c.kind = CycleKind::Berge
    });
    b.push("claim a different hypergraph", HypergraphMismatch, |c| {
        c.hypergraph = h(4, 6, "2,1")
    });
    (base, b.out)
}

/// 3-intersecting cycle on H(4,3,3|(1,1,1)) and 20 mutations of it.
pub fn k_intersecting_mutations() -> (CycleCertificate, Vec<Mutation>) {
    use ViolationTag::*;
    let graph = h(4, 3, "1,1,1");
    let base = construct_k_intersecting(&graph, 3).unwrap();
    let mut b = Builder {
        base: base.clone(),
        checker: CycleKind::KIntersecting,
        k: 3,
        out: Vec::new(),
    };
    for (from, to) in [(0, 1), (2, 9), (4, 6), (10, 11)] {
        b.push(format!("e{to} := e{from}"), DuplicateEdge, |c| {
            c.edges[to] = c.edges[from].clone()
        });
    }
    for (i, class) in [(0, 0), (3, 1), (7, 2), (11, 3)] {
        let bad = column_non_edge(&graph, class);
        b.push(format!("e{i} := column {class}"), NonEdgeMember, |c| {
            c.edges[i] = bad
        });
    }
    for i in [0, 5] {
        let p = base.edges.len();
        let near = [
            base.edges[i].clone(),
            base.edges[(i + 1) % p].clone(),
            base.edges[(i + 2) % p].clone(),
        ];
        let stranger = enumerate_edges(&graph)
            .find(|e| near.iter().all(|n| n.is_disjoint(e)) && !base.edges.contains(e))
            .unwrap();
        b.push(
            format!("e{i} := disjoint edge"),
            ConsecutiveIntersectionEmpty,
            |c| c.edges[i] = stranger,
        );
    }
    b.push("drop last edge", ConsecutiveIntersectionEmpty, |c| {
        c.edges.pop();
    });
    b.push("swap e0 and e1", ConsecutiveIntersectionEmpty, |c| {
        c.edges.swap(0, 1)
    });
    for len in [4, 2] {
        b.push(format!("truncate to {len} edges"), DegenerateLength, |c| {
            c.edges.truncate(len)
        });
    }
    b.push_with_k("check with k = 2", KindMismatch, 2, |_| {});
    b.push("relabel as sharp", KindMismatch, |c| {
        c.kind = CycleKind::Sharp
    });
    b.push("move onto a taller grid", CoverageGap, |c| {
        c.hypergraph = h(4, 6, "1,1,1")
    });
    b.push_with_k("relabel as 2-intersecting", ForbiddenIntersection, 2, |c| {
        c.k = Some(2)
    });
    let other = construct_k_intersecting(&h(4, 5, "2,2,1"), 3).unwrap();
    b.push_with_k(
        "other 3-cycle relabelled k = 2",
        ForbiddenIntersection,
        2,
        |c| {
            *c = CycleCertificate {
                k: Some(2),
                ..other
            }
        },
    );
    b.push("claim a different hypergraph", HypergraphMismatch, |c| {
        c.hypergraph = h(5, 3, "1,1,1")
    });
    (base, b.out)
}

/// Verifies a mutation against the hypergraph it claims, except for the
/// hypergraph-mismatch case which is checked against the base hypergraph.
pub fn check_mutation(base: &CycleCertificate, m: &Mutation) -> VerificationReport {
    let graph = if m.expected == ViolationTag::HypergraphMismatch {
        &base.hypergraph
    } else {
        &m.cert.hypergraph
    };
    run_checker(graph, m.checker, &m.cert, m.k)
}
