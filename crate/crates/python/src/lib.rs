//! Python bindings: the graph model plus the main spectral, bound, oracle
//! and search entry points.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use orthorank::exact::rational_string;
use orthorank::report::{emit_json, run_report, ReportOptions};
use orthorank::reps::{search_ortho_rep, verify_ortho_rep, xi_interval, SearchConfig};
use orthorank::spectral::{spectrum, MatrixKind};

fn err(e: orthorank::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// An immutable undirected simple graph.
#[pyclass(frozen, name = "Graph")]
struct PyGraph {
    inner: orthorank::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(u32, u32)>) -> PyResult<Self> {
        Ok(PyGraph {
            inner: orthorank::Graph::new(n, edges).map_err(err)?,
        })
    }

    /// Parses a graph6 line.
    #[staticmethod]
    fn from_graph6(line: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: orthorank::parse_graph6(line).map_err(err)?,
        })
    }

    /// Generates a named family, e.g. "kneser:5,2" or "folded-cube:5".
    #[staticmethod]
    fn generate(spec: &str) -> PyResult<Self> {
        let spec: orthorank::FamilySpec = spec.parse().map_err(err)?;
        Ok(PyGraph {
            inner: orthorank::generate(&spec).map_err(err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    #[getter]
    fn name(&self) -> Option<String> {
        self.inner.name().map(str::to_string)
    }

    fn edges(&self) -> Vec<(u32, u32)> {
        self.inner.edges().to_vec()
    }

    fn to_graph6(&self) -> String {
        orthorank::serialize_graph6(&self.inner)
    }

    fn complement(&self) -> Self {
        PyGraph {
            inner: self.inner.complement(),
        }
    }

    fn disjunctive_product(&self, other: &PyGraph) -> Self {
        PyGraph {
            inner: self.inner.disjunctive_product(&other.inner),
        }
    }

    fn __repr__(&self) -> String {
        match self.inner.name() {
            Some(name) => format!("Graph({name}, n={}, m={})", self.inner.n(), self.inner.m()),
            None => format!("Graph(n={}, m={})", self.inner.n(), self.inner.m()),
        }
    }
}

fn kind_from_str(kind: &str) -> PyResult<MatrixKind> {
    match kind {
        "adjacency" => Ok(MatrixKind::Adjacency),
        "laplacian" => Ok(MatrixKind::Laplacian),
        "signless-laplacian" => Ok(MatrixKind::SignlessLaplacian),
        other => Err(PyValueError::new_err(format!(
            "unknown matrix kind {other:?} (weighted matrices are built via the Rust API)"
        ))),
    }
}

/// Eigenvalues of the chosen matrix, sorted descending.
#[pyfunction]
#[pyo3(signature = (graph, kind = "adjacency"))]
fn eigenvalues(graph: &PyGraph, kind: &str) -> PyResult<Vec<f64>> {
    let s = spectrum(&graph.inner, &kind_from_str(kind)?, None).map_err(err)?;
    Ok(s.eigenvalues)
}

/// Adjacency inertia `(n_plus, n_zero, n_minus)`.
#[pyfunction]
#[pyo3(signature = (graph, tol = None))]
fn inertia(graph: &PyGraph, tol: Option<f64>) -> PyResult<(usize, usize, usize)> {
    let s = orthorank::spectral::inertia(&graph.inner, tol).map_err(err)?;
    Ok((s.inertia.positive, s.inertia.zero, s.inertia.negative))
}

/// The closed-form bound battery; inertial values come back as exact
/// rational strings.
#[pyfunction]
fn bounds<'py>(py: Python<'py>, graph: &PyGraph) -> PyResult<Bound<'py, PyDict>> {
    let set = orthorank::bounds::bound_set(&graph.inner, None).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("hoffman", set.hoffman.value)?;
    d.set_item("lima", set.lima.value)?;
    d.set_item("kolotilina", set.kolotilina.value)?;
    d.set_item("inertial", rational_string(&set.inertial.value))?;
    d.set_item("weaker_inertial", rational_string(&set.weaker_inertial.value))?;
    d.set_item("degenerate", set.hoffman.degenerate)?;
    Ok(d)
}

/// Exact oracles: chi, omega, alpha (None when the budget ran out) and
/// chi_f as an exact rational string (None above the LP size limit).
#[pyfunction]
#[pyo3(signature = (graph, budget = orthorank::exact::DEFAULT_NODE_BUDGET))]
fn exact_params<'py>(py: Python<'py>, graph: &PyGraph, budget: u64) -> PyResult<Bound<'py, PyDict>> {
    let params = orthorank::exact::exact_params(&graph.inner, budget).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("chi", params.chi.exact())?;
    d.set_item("omega", params.omega.exact())?;
    d.set_item("alpha", params.alpha.exact())?;
    d.set_item("chi_f", params.chi_f.as_ref().map(|f| rational_string(&f.value)))?;
    Ok(d)
}

/// Lower/upper interval for the orthogonal rank.
#[pyfunction]
#[pyo3(signature = (graph, seed = 1, restarts = 32, max_iters = 2000, dmax = 8))]
fn xi<'py>(
    py: Python<'py>,
    graph: &PyGraph,
    seed: u64,
    restarts: usize,
    max_iters: usize,
    dmax: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let cfg = SearchConfig {
        restarts,
        max_iters,
        seed,
        success_tolerance: 1e-9,
        dimension_range: (1, dmax.clamp(1, graph.inner.n().max(1))),
    };
    let interval = xi_interval(&graph.inner, &cfg).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("lower", interval.lower_value)?;
    d.set_item("lower_exact", interval.lower_exact.as_ref().map(rational_string))?;
    d.set_item("lower_source", interval.lower_source)?;
    d.set_item("lower_ceiling", interval.lower_ceiling)?;
    d.set_item("upper", interval.upper)?;
    Ok(d)
}

/// Searches for a d-dimensional orthogonal representation; returns the
/// vectors as lists of `(re, im)` pairs, or None when no certificate was
/// found.
#[pyfunction]
#[pyo3(signature = (graph, d, seed = 1, restarts = 32, max_iters = 2000))]
fn search_representation(
    graph: &PyGraph,
    d: usize,
    seed: u64,
    restarts: usize,
    max_iters: usize,
) -> PyResult<Option<(f64, Vec<Vec<(f64, f64)>>)>> {
    let cfg = SearchConfig {
        restarts,
        max_iters,
        seed,
        ..SearchConfig::default()
    };
    let found = search_ortho_rep(&graph.inner, d, &cfg).map_err(err)?;
    Ok(found.map(|rep| {
        let residual = verify_ortho_rep(&graph.inner, &rep)
            .map(|c| c.residual)
            .unwrap_or(rep.residual);
        let vectors = rep
            .vectors
            .iter()
            .map(|x| x.iter().map(|z| (z.re, z.im)).collect())
            .collect();
        (residual, vectors)
    }))
}

/// Full report as a JSON string (same schema as the CLI's --json output).
#[pyfunction]
#[pyo3(signature = (graph, seed = 1, exact = true, search = true))]
fn report_json(graph: &PyGraph, seed: u64, exact: bool, search: bool) -> PyResult<String> {
    let opts = ReportOptions {
        seed,
        run_exact: exact,
        run_xi: search,
        ..ReportOptions::default()
    };
    let doc = run_report(&graph.inner, None, &opts).map_err(err)?;
    emit_json(&doc).map_err(err)
}

#[pymodule]
fn orthorank_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(eigenvalues, m)?)?;
    m.add_function(wrap_pyfunction!(inertia, m)?)?;
    m.add_function(wrap_pyfunction!(bounds, m)?)?;
    m.add_function(wrap_pyfunction!(exact_params, m)?)?;
    m.add_function(wrap_pyfunction!(xi, m)?)?;
    m.add_function(wrap_pyfunction!(search_representation, m)?)?;
    m.add_function(wrap_pyfunction!(report_json, m)?)?;
    Ok(())
}
