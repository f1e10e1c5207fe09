//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p sigma-hamilton --test acceptance`.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::h;
use num_bigint::BigUint;
use sigma_hamilton::bounds::{
    matching_upper_bound, sharp_cycle_bounds, sharp_nonexistence_test, Rational,
};
use sigma_hamilton::oracle::{brute_force_max_matching, DEFAULT_NODE_BUDGET};
use sigma_hamilton::verify::DEFAULT_SUBSET_BUDGET;
use sigma_hamilton::{
    construct_berge_hamiltonian, construct_k_intersecting, construct_sharp_hamiltonian,
    frobenius_decompose, verify_berge_hamiltonian, verify_k_intersecting, verify_matching,
    verify_sharp_cycle, ConstructionError, CycleCertificate, Edge, GridVertex, Partition,
    SharpnessProfile, SigmaHypergraph,
};

type Outcome = Result<String, String>;

type Criterion<'a> = (&'static str, Duration, Box<dyn FnOnce() -> Outcome + 'a>);

fn ensure(condition: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if condition {
        Ok(())
    } else {
        Err(message())
    }
}

fn partitions(r: usize) -> Vec<Partition> {
    fn grow(rest: usize, cap: usize, acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::new(acc.clone()).unwrap());
            return;
        }
        for part in (1..=rest.min(cap)).rev() {
            acc.push(part);
            grow(rest - part, part, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    grow(r, r, &mut Vec::new(), &mut out);
    out
}

fn small_berge() -> Outcome {
    let g = h(3, 3, "2,1");
    let cert = construct_berge_hamiltonian(&g).map_err(|e| e.to_string())?;
    let distinct: BTreeSet<&Edge> = cert.edges.iter().collect();
    let vertices: BTreeSet<&GridVertex> = cert.vertex_sequence.iter().collect();
    ensure(distinct.len() == 9 && cert.edges.len() == 9, || {
        format!("{} edges, {} distinct", cert.edges.len(), distinct.len())
    })?;
    ensure(
        vertices.len() == 9 && cert.vertex_sequence.len() == 9,
        || format!("{} vertices in sequence", cert.vertex_sequence.len()),
    )?;
    let report = verify_berge_hamiltonian(&g, &cert);
    ensure(report.passed && report.hamiltonian, || report.summary())?;
    Ok("9 distinct edges, 9-vertex cyclic sequence, verified".into())
}

/// Sharp certificates from the sweep, reused by the length-bound criterion.
fn sharp_sweep(out: &mut Vec<CycleCertificate>) -> Outcome {
    let mut sigmas = Vec::new();
    for r in 2..=5 {
        sigmas.extend(partitions(r).into_iter().filter(|p| p.s() >= 2));
    }
    let (mut built, mut degenerate) = (0, 0);
    for sigma in &sigmas {
        let r = sigma.r();
        for n in [sigma.s() + 1, sigma.s() + 2] {
            for q in r * (r - 1)..=r * (r - 1) + 2 * r {
                let g = SigmaHypergraph::new(n, q, sigma.clone()).unwrap();
                match construct_sharp_hamiltonian(&g, 1) {
                    Ok(cert) => {
                        let report = verify_sharp_cycle(&g, &cert);
                        ensure(report.passed && report.hamiltonian, || {
                            format!("{g}: {}", report.summary())
                        })?;
                        built += 1;
                        out.push(cert);
                    }
                    Err(ConstructionError::DegenerateIntersection(why)) => {
                        let (_, y) = frobenius_decompose(q, r).unwrap();
                        ensure(sigma.delta_max() == 1 && y > 0, || {
                            format!("{g}: unexpected DegenerateIntersection ({why})")
                        })?;
                        degenerate += 1;
                    }
                    Err(e) => return Err(format!("{g}: {e}")),
                }
            }
        }
    }
    Ok(format!(
        "{} partitions, {built} verified Hamiltonian, {degenerate} degenerate (a_1 = 1, y > 0)",
        sigmas.len()
    ))
}

fn profiles() -> Outcome {
    let g = h(3, 6, "2,1");
    let cert = construct_sharp_hamiltonian(&g, 1).map_err(|e| e.to_string())?;
    let profile = SharpnessProfile::of_edges(&cert.edges);
    let alternating = profile
        .pair_sizes
        .iter()
        .enumerate()
        .all(|(i, &size)| size == if i % 2 == 0 { 2 } else { 1 });
    ensure(alternating && profile.tz() == Some((2, 1)), || {
        format!("{g}: profile {:?}", profile.pair_sizes)
    })?;
    ensure(verify_sharp_cycle(&g, &cert).passed, || {
        format!("{g} rejected")
    })?;

    let g = h(3, 8, "2,2");
    let cert = construct_sharp_hamiltonian(&g, 1).map_err(|e| e.to_string())?;
    let profile = SharpnessProfile::of_edges(&cert.edges);
    ensure(
        profile.pair_sizes.iter().all(|&s| s == 2) && profile.is_t_sharp(),
        || format!("{g}: profile {:?}", profile.pair_sizes),
    )?;
    ensure(verify_sharp_cycle(&g, &cert).passed, || {
        format!("{g} rejected")
    })?;
    Ok("H(3,3,6|(2,1)) is (2,1)-sharp, H(3,4,8|(2,2)) is 2-sharp".into())
}

fn square_nonexistence() -> Outcome {
    let g = h(5, 5, "3,3,3");
    ensure(g.edge_count() == BigUint::from(10_000u32), || {
        format!("{} edges", g.edge_count())
    })?;
    let nu = brute_force_max_matching(&g, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?;
    ensure(nu.exact && nu.size == 1, || {
        format!("nu = {} (exact: {})", nu.size, nu.exact)
    })?;
    let lower = sharp_cycle_bounds(&g).unwrap().lower;
    ensure(lower == Rational::new(25, 8), || {
        format!("lower bound {lower}")
    })?;
    ensure(sharp_nonexistence_test(&g, 1), || {
        "test did not fire".into()
    })?;
    Ok(format!("nu = 1 exactly ({} nodes), 3 < 25/8", nu.nodes))
}

fn matching_bound() -> Outcome {
    let mut detail = Vec::new();
    for (n, q, bound) in [(2, 3, 1u128), (3, 5, 3)] {
        let g = h(n, q, "2,2");
        let m = matching_upper_bound(&g).ok_or_else(|| format!("{g}: bound not applicable"))?;
        ensure(m.nu_upper == Rational::from_integer(bound), || {
            format!("{g}: bound {}", m.nu_upper)
        })?;
        let nu = brute_force_max_matching(&g, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?;
        ensure(nu.exact && nu.size as u128 <= bound, || {
            format!("{g}: nu = {}", nu.size)
        })?;
        detail.push(format!("{g}: nu = {} <= {bound}", nu.size));
    }
    let equal = brute_force_max_matching(&h(2, 3, "2,2"), DEFAULT_NODE_BUDGET)
        .unwrap()
        .size;
    let below = brute_force_max_matching(&h(3, 5, "2,2"), DEFAULT_NODE_BUDGET)
        .unwrap()
        .size;
    ensure(equal == 1 && below == 3, || {
        format!("nu values {equal}, {below}")
    })?;
    Ok(detail.join("; "))
}

fn k_sweep() -> Outcome {
    let mut checked = 0;
    for sigma in ["1,1,1", "2,1,1", "2,2,1", "3,2,1"] {
        let sigma = Partition::parse(sigma).unwrap();
        let (r, s) = (sigma.r(), sigma.s());
        for k in 2..=s {
            for q in [r, r * (r - 1)] {
                let g = SigmaHypergraph::new(s + 1, q, sigma.clone()).unwrap();
                let cert = match construct_k_intersecting(&g, k) {
                    Ok(cert) => cert,
                    Err(ConstructionError::DegenerateIntersection(_)) => continue,
                    Err(e) => return Err(format!("{g} k={k}: {e}")),
                };
                let report = verify_k_intersecting(&g, &cert, k, DEFAULT_SUBSET_BUDGET)
                    .map_err(|e| format!("{g} k={k}: {e}"))?;
                ensure(report.passed && report.hamiltonian, || {
                    format!("{g} k={k}: {}", report.summary())
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!(
        "{checked} certificates verified with full k-subset checks"
    ))
}

fn count_by_subsets(g: &SigmaHypergraph) -> u64 {
    fn walk(g: &SigmaHypergraph, from: usize, chosen: &mut Vec<GridVertex>) -> u64 {
        if chosen.len() == g.r() {
            return u64::from(g.is_edge(chosen).unwrap());
        }
        let mut total = 0;
        for id in from..g.vertex_count() {
            chosen.push(g.vertex_at(id));
            total += walk(g, id + 1, chosen);
            chosen.pop();
        }
        total
    }
    walk(g, 0, &mut Vec::new())
}

fn edge_counts() -> Outcome {
    let mut graphs = 0;
    for r in 1..=5 {
        for sigma in partitions(r) {
            for n in sigma.s()..=4 {
                for q in sigma.delta_max()..=4 {
                    let g = SigmaHypergraph::new(n, q, sigma.clone()).unwrap();
                    let brute = count_by_subsets(&g);
                    ensure(g.edge_count() == BigUint::from(brute), || {
                        format!("{g}: formula {} vs {brute}", g.edge_count())
                    })?;
                    graphs += 1;
                }
            }
        }
    }
    Ok(format!("{graphs} hypergraphs agree"))
}

fn frobenius() -> Outcome {
    let mut cases = 0;
    for r in 2..=12 {
        for q in r * (r - 1)..=r * (r - 1) + 100 {
            let (x, y) = frobenius_decompose(q, r).map_err(|e| format!("q={q} r={r}: {e}"))?;
            ensure(x * r + y * (r + 1) == q, || {
                format!("q={q} r={r}: x={x} y={y}")
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} (q, r) pairs decomposed"))
}

fn length_bounds(certs: &[CycleCertificate]) -> Outcome {
    ensure(!certs.is_empty(), || {
        "no certificates from the sweep".into()
    })?;
    for cert in certs {
        let g = &cert.hypergraph;
        let bounds = sharp_cycle_bounds(g).unwrap();
        let p = cert.edges.len();
        ensure(bounds.admits(p), || {
            format!(
                "{g}: {p} edges outside [{}, {}]",
                bounds.lower, bounds.upper
            )
        })?;
        let odd: Vec<Edge> = cert.edges.iter().step_by(2).take(p / 2).cloned().collect();
        ensure(verify_matching(g, &odd), || {
            format!("{g}: odd-position edges overlap")
        })?;
    }
    Ok(format!(
        "{} certificates within bounds, odd edges matchings",
        certs.len()
    ))
}

fn mutations() -> Outcome {
    let mut counts = Vec::new();
    for (name, (base, list)) in [
        ("berge", common::berge_mutations()),
        ("sharp", common::sharp_mutations()),
        ("k-intersecting", common::k_intersecting_mutations()),
    ] {
        ensure(list.len() == 20, || {
            format!("{name}: {} mutations", list.len())
        })?;
        for m in &list {
            let report = common::check_mutation(&base, m);
            ensure(!report.passed && report.tag() == Some(m.expected), || {
                format!(
                    "{name} / {}: expected {}, got {}",
                    m.label,
                    m.expected.as_str(),
                    report.summary()
                )
            })?;
        }
        counts.push(format!("{name} 20/20"));
    }
    Ok(counts.join(", "))
}

fn main() -> ExitCode {
    let mut sharp_certs = Vec::new();
    let criteria: Vec<Criterion> = vec![
        (
            "Berge H(3,3,3|(2,1))",
            Duration::from_secs(1),
            Box::new(small_berge),
        ),
        (
            "sharp sweep",
            Duration::from_secs(60),
            Box::new(|| sharp_sweep(&mut sharp_certs)),
        ),
        ("(t,z) profiles", Duration::MAX, Box::new(profiles)),
        (
            "square non-existence",
            Duration::from_secs(30),
            Box::new(square_nonexistence),
        ),
        ("matching bound", Duration::MAX, Box::new(matching_bound)),
        (
            "k-intersecting sweep",
            Duration::from_secs(120),
            Box::new(k_sweep),
        ),
        (
            "edge-count equivalence",
            Duration::from_secs(30),
            Box::new(edge_counts),
        ),
        (
            "Frobenius decomposition",
            Duration::from_secs(1),
            Box::new(frobenius),
        ),
    ];
    let mut failures = 0;
    let mut report =
        |index: usize, name: &str, limit: Duration, outcome: Outcome, elapsed: Duration| {
            let timed_out = elapsed > limit;
            let verdict = match (&outcome, timed_out) {
                (Ok(_), false) => "PASS",
                _ => {
                    failures += 1;
                    "FAIL"
                }
            };
            let detail = match outcome {
                Ok(detail) if timed_out => format!("{detail}; exceeded {limit:?}"),
                Ok(detail) | Err(detail) => detail,
            };
            println!("criterion {index} {name}: {verdict} ({elapsed:.2?}) {detail}");
        };
    for (i, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        report(i + 1, name, limit, outcome, start.elapsed());
    }
    let start = Instant::now();
    let outcome = length_bounds(&sharp_certs);
    report(
        9,
        "sharp length bounds",
        Duration::MAX,
        outcome,
        start.elapsed(),
    );
    let start = Instant::now();
    let outcome = mutations();
    report(
        10,
        "mutation rejection",
        Duration::MAX,
        outcome,
        start.elapsed(),
    );

    if failures == 0 {
        println!("acceptance: all 10 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failures} of 10 criteria fail");
        ExitCode::FAILURE
    }
}
