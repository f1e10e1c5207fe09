//! Python bindings: `import pysigma`.

use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use sigma_hamilton::bounds::bounds_report;
use sigma_hamilton::construct::DEFAULT_SPLIT;
use sigma_hamilton::export::{export, ExportFormat};
use sigma_hamilton::file::{from_json, to_json};
use sigma_hamilton::oracle::{
    brute_force_max_matching, brute_force_sharp_hamiltonian_exists, OracleError,
    SharpSearchOutcome, DEFAULT_NODE_BUDGET,
};
use sigma_hamilton::verify::DEFAULT_SUBSET_BUDGET;
use sigma_hamilton::{
    construct_berge_hamiltonian, construct_k_intersecting, construct_sharp_hamiltonian,
    enumerate_edges, frobenius_decompose, verify_berge_hamiltonian, verify_k_intersecting,
    verify_sharp_cycle, CycleCertificate, CycleKind, Edge, GridVertex, Partition, SigmaHypergraph,
};

create_exception!(pysigma, ConstructionError, PyValueError);
create_exception!(pysigma, CertificateError, PyValueError);
create_exception!(pysigma, BudgetExceeded, PyRuntimeError);

type Pair = (usize, usize);

fn pairs(vertices: &[GridVertex]) -> Vec<Pair> {
    vertices.iter().map(|v| (v.class, v.row)).collect()
}

fn edge_pairs(edges: &[Edge]) -> Vec<Vec<Pair>> {
    edges.iter().map(|e| pairs(e.vertices())).collect()
}

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn oracle_error(e: OracleError) -> PyErr {
    match e {
        OracleError::BudgetExceeded { .. } => BudgetExceeded::new_err(e.to_string()),
        OracleError::InstanceTooLarge { .. } => value_error(e),
    }
}

/// H(n, r, q | σ): n classes of q vertices; sigma is a list of parts or a
/// comma-separated string.
#[pyclass(name = "Hypergraph", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyHypergraph {
    inner: SigmaHypergraph,
}

#[pymethods]
impl PyHypergraph {
    #[new]
    fn new(n: usize, q: usize, sigma: &Bound<'_, PyAny>) -> PyResult<Self> {
        let partition = match sigma.extract::<String>() {
            Ok(text) => Partition::parse(&text),
            Err(_) => Partition::new(sigma.extract::<Vec<usize>>()?),
        }
        .map_err(value_error)?;
        let inner = SigmaHypergraph::new(n, q, partition).map_err(value_error)?;
        Ok(PyHypergraph { inner })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn q(&self) -> usize {
        self.inner.q()
    }

    #[getter]
    fn r(&self) -> usize {
        self.inner.r()
    }

    #[getter]
    fn sigma(&self) -> Vec<usize> {
        self.inner.sigma().parts().to_vec()
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    /// Exact number of edges, as a Python int.
    fn edge_count(&self) -> num_bigint::BigUint {
        self.inner.edge_count()
    }

    fn is_edge(&self, vertices: Vec<Pair>) -> PyResult<bool> {
        let vertices: Vec<GridVertex> = vertices
            .into_iter()
            .map(|(c, r)| GridVertex::new(c, r))
            .collect();
        self.inner.is_edge(&vertices).map_err(value_error)
    }

    /// All edges in lexicographic order; `limit` stops early.
    #[pyo3(signature = (limit=None))]
    fn edges(&self, limit: Option<usize>) -> Vec<Vec<Pair>> {
        enumerate_edges(&self.inner)
            .take(limit.unwrap_or(usize::MAX))
            .map(|e| pairs(e.vertices()))
            .collect()
    }

    fn __repr__(&self) -> String {
        self.inner.to_string()
    }
}

#[pyclass(name = "Certificate", frozen)]
struct PyCertificate {
    inner: CycleCertificate,
}

#[pymethods]
impl PyCertificate {
    #[getter]
    fn kind(&self) -> &'static str {
        self.inner.kind.as_str()
    }

    #[getter]
    fn k(&self) -> Option<usize> {
        self.inner.k
    }

    #[getter]
    fn split_index(&self) -> Option<usize> {
        self.inner.split_index
    }

    #[getter]
    fn hypergraph(&self) -> PyHypergraph {
        PyHypergraph {
            inner: self.inner.hypergraph.clone(),
        }
    }

    #[getter]
    fn edges(&self) -> Vec<Vec<Pair>> {
        edge_pairs(&self.inner.edges)
    }

    #[getter]
    fn vertex_sequence(&self) -> Vec<Pair> {
        pairs(&self.inner.vertex_sequence)
    }

    #[getter]
    fn claims<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let claims = PyDict::new(py);
        claims.set_item("hamiltonian", self.inner.claims.hamiltonian)?;
        claims.set_item("t", self.inner.claims.t)?;
        claims.set_item("z", self.inner.claims.z)?;
        Ok(claims)
    }

    fn __len__(&self) -> usize {
        self.inner.edges.len()
    }

    fn to_json(&self) -> String {
        to_json(&self.inner)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        from_json(text)
            .map(|inner| PyCertificate { inner })
            .map_err(|e| CertificateError::new_err(format!("{}: {e}", e.name())))
    }

    /// "svg" or "dot".
    fn export(&self, format: &str) -> PyResult<String> {
        let format: ExportFormat = format.parse().map_err(PyValueError::new_err)?;
        Ok(export(&self.inner, format))
    }

    fn __repr__(&self) -> String {
        format!(
            "<Certificate {} on {}, {} edges>",
            self.inner.kind,
            self.inner.hypergraph,
            self.inner.edges.len()
        )
    }
}

fn built(
    result: Result<CycleCertificate, sigma_hamilton::ConstructionError>,
) -> PyResult<PyCertificate> {
    result
        .map(|inner| PyCertificate { inner })
        .map_err(|e| ConstructionError::new_err(format!("{}: {e}", e.name())))
}

#[pyfunction]
fn construct_berge(graph: &PyHypergraph) -> PyResult<PyCertificate> {
    built(construct_berge_hamiltonian(&graph.inner))
}

#[pyfunction]
#[pyo3(signature = (graph, split=DEFAULT_SPLIT))]
fn construct_sharp(graph: &PyHypergraph, split: usize) -> PyResult<PyCertificate> {
    built(construct_sharp_hamiltonian(&graph.inner, split))
}

#[pyfunction]
#[pyo3(name = "construct_k_intersecting")]
fn construct_k(graph: &PyHypergraph, k: usize) -> PyResult<PyCertificate> {
    built(construct_k_intersecting(&graph.inner, k))
}

/// Checks a certificate against its own hypergraph and returns a dict with
/// passed, tag, detail, pair_sizes, t, z, window_sizes and hamiltonian.
#[pyfunction]
#[pyo3(signature = (cert, budget=DEFAULT_SUBSET_BUDGET))]
fn verify<'py>(
    py: Python<'py>,
    cert: &PyCertificate,
    budget: u128,
) -> PyResult<Bound<'py, PyDict>> {
    let cert = &cert.inner;
    let graph = &cert.hypergraph;
    let report = match cert.kind {
        CycleKind::Berge => verify_berge_hamiltonian(graph, cert),
        CycleKind::Sharp => verify_sharp_cycle(graph, cert),
        CycleKind::KIntersecting => {
            let k = cert
                .k
                .ok_or_else(|| CertificateError::new_err("k-intersecting certificate without k"))?;
            verify_k_intersecting(graph, cert, k, budget)
                .map_err(|e| BudgetExceeded::new_err(e.to_string()))?
        }
    };
    let out = PyDict::new(py);
    out.set_item("passed", report.passed)?;
    out.set_item("tag", report.tag().map(|t| t.as_str()))?;
    out.set_item(
        "detail",
        report.violation.as_ref().map(|v| v.detail.clone()),
    )?;
    let profile = report.profile.as_ref();
    out.set_item("pair_sizes", profile.map(|p| p.pair_sizes.clone()))?;
    out.set_item("t", profile.and_then(|p| p.uniform_t))?;
    out.set_item("z", profile.and_then(|p| p.uniform_z))?;
    out.set_item("window_sizes", report.window_sizes.clone())?;
    out.set_item("hamiltonian", report.hamiltonian)?;
    Ok(out)
}

/// Matching bound, sharp edge-count window (as fraction strings) and, when
/// `nu` is given, whether the non-existence test fires.
#[pyfunction]
#[pyo3(signature = (graph, nu=None))]
fn bounds<'py>(
    py: Python<'py>,
    graph: &PyHypergraph,
    nu: Option<u128>,
) -> PyResult<Bound<'py, PyDict>> {
    let report = bounds_report(&graph.inner, nu);
    let out = PyDict::new(py);
    match &report.matching {
        Some(m) => {
            out.set_item("gcd", m.gcd)?;
            out.set_item("unmatched_lower", m.unmatched_lower)?;
            out.set_item("nu_upper", m.nu_upper.to_string())?;
        }
        None => {
            out.set_item("gcd", graph.inner.sigma().gcd())?;
            out.set_item("unmatched_lower", py.None())?;
            out.set_item("nu_upper", py.None())?;
        }
    }
    out.set_item(
        "sharp_lower",
        report.sharp.as_ref().map(|s| s.lower.to_string()),
    )?;
    out.set_item(
        "sharp_upper",
        report.sharp.as_ref().map(|s| s.upper.to_string()),
    )?;
    out.set_item("refutes_sharp", report.nonexistence_fired)?;
    out.set_item("text", report.to_string())?;
    Ok(out)
}

#[pyfunction]
#[pyo3(signature = (graph, budget=DEFAULT_NODE_BUDGET))]
fn max_matching<'py>(
    py: Python<'py>,
    graph: &PyHypergraph,
    budget: u64,
) -> PyResult<Bound<'py, PyDict>> {
    let found = brute_force_max_matching(&graph.inner, budget).map_err(oracle_error)?;
    let out = PyDict::new(py);
    out.set_item("size", found.size)?;
    out.set_item("exact", found.exact)?;
    out.set_item("witness", edge_pairs(&found.witness))?;
    out.set_item("nodes", found.nodes)?;
    Ok(out)
}

/// Returns ("found", Certificate), ("exhausted", None) or
/// ("budget-exceeded", None).
#[pyfunction]
#[pyo3(signature = (graph, max_len, budget=DEFAULT_NODE_BUDGET))]
fn sharp_exists(
    graph: &PyHypergraph,
    max_len: usize,
    budget: u64,
) -> PyResult<(&'static str, Option<PyCertificate>)> {
    let outcome = brute_force_sharp_hamiltonian_exists(&graph.inner, max_len, budget)
        .map_err(oracle_error)?;
    Ok(match outcome {
        SharpSearchOutcome::Found(inner) => ("found", Some(PyCertificate { inner })),
        SharpSearchOutcome::Exhausted { .. } => ("exhausted", None),
        SharpSearchOutcome::BudgetExceeded { .. } => ("budget-exceeded", None),
    })
}

/// (x, y) with x·r + y·(r+1) = q.
#[pyfunction]
fn frobenius(q: usize, r: usize) -> PyResult<(usize, usize)> {
    frobenius_decompose(q, r).map_err(|e| ConstructionError::new_err(format!("{}: {e}", e.name())))
}

#[pymodule]
fn pysigma(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add_class::<PyHypergraph>()?;
    m.add_class::<PyCertificate>()?;
    m.add_function(wrap_pyfunction!(construct_berge, m)?)?;
    m.add_function(wrap_pyfunction!(construct_sharp, m)?)?;
    m.add_function(wrap_pyfunction!(construct_k, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(bounds, m)?)?;
    m.add_function(wrap_pyfunction!(max_matching, m)?)?;
    m.add_function(wrap_pyfunction!(sharp_exists, m)?)?;
    m.add_function(wrap_pyfunction!(frobenius, m)?)?;
    m.add("ConstructionError", py.get_type::<ConstructionError>())?;
    m.add("CertificateError", py.get_type::<CertificateError>())?;
    m.add("BudgetExceeded", py.get_type::<BudgetExceeded>())?;
    Ok(())
}
