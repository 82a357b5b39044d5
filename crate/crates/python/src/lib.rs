//! Python module `kcl`: graph constructors, orientations, kernel checks, kernel-based list
//! coloring, exact choosability and the verification pipeline. Structured results are returned
//! as plain dicts with the same layout as the JSON the `kcl` binary prints.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

use kcl_core::cayley::{self, DihedralSpec, TheoremId, TheoremOptions};
use kcl_core::choosability::{self, ChoosabilityOptions, DEFAULT_BUDGET_NODES};
use kcl_core::kernels::{self, KernelCheckOptions, DEFAULT_EXHAUSTIVE_CAP};
use kcl_core::list_coloring::{self, ListAssignment};
use kcl_core::orientation::{build_strategy_orientation, OrientationStrategy};
use kcl_core::report::{self, VerifyOptions};
use kcl_core::{dimacs, VertexSet};

fn err(e: kcl_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<T: Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

fn support(n: usize, vertices: Option<Vec<usize>>) -> PyResult<VertexSet> {
    match vertices {
        None => Ok(VertexSet::full(n)),
        Some(vs) => {
            if let Some(&v) = vs.iter().find(|&&v| v >= n) {
                return Err(err(kcl_core::Error::VertexOutOfRange { vertex: v, n }));
            }
            Ok(vs.into_iter().collect())
        }
    }
}

fn theorem(id: &str) -> PyResult<TheoremId> {
    id.parse().map_err(err)
}

#[pyclass(name = "Graph", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: kcl_core::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges=Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph {
            inner: kcl_core::Graph::from_edges(n, edges).map_err(err)?,
        })
    }

    #[staticmethod]
    fn from_dimacs(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: dimacs::read_dimacs(text).map_err(err)?,
        })
    }

    fn to_dimacs(&self) -> String {
        dimacs::write_dimacs(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.n() {
            return Err(err(kcl_core::Error::VertexOutOfRange {
                vertex: v,
                n: self.inner.n(),
            }));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        Ok(self.neighbors(v)?.len())
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.inner.n() && v < self.inner.n() && self.inner.has_edge(u, v)
    }

    fn complement(&self) -> Self {
        PyGraph {
            inner: self.inner.complement(),
        }
    }

    fn components(&self) -> Vec<Vec<usize>> {
        self.inner.components().into_iter().map(|c| c.to_vec()).collect()
    }

    fn degeneracy(&self) -> usize {
        self.inner.degeneracy()
    }

    /// `(omega, clique)`.
    fn clique_number(&self) -> (usize, Vec<usize>) {
        let (w, c) = choosability::clique_number(&self.inner);
        (w, c.to_vec())
    }

    /// `(chi, coloring)`.
    fn chromatic_number(&self) -> (usize, Vec<u32>) {
        choosability::chromatic_number(&self.inner)
    }

    /// Whether `lists` (one list per vertex) admits a proper coloring; returns it or `None`.
    fn list_coloring(&self, lists: Vec<Vec<u32>>) -> PyResult<Option<Vec<Option<u32>>>> {
        let lists = ListAssignment::new(lists).map_err(err)?;
        if lists.len() != self.inner.n() {
            return Err(PyValueError::new_err("one list per vertex is required"));
        }
        Ok(choosability::list_colorable(&self.inner, &lists).map(|c| c.colors))
    }

    #[pyo3(signature = (k, budget_nodes=DEFAULT_BUDGET_NODES))]
    fn is_f_choosable(&self, py: Python<'_>, k: usize, budget_nodes: u64) -> PyResult<Py<PyAny>> {
        if k == 0 {
            return Err(PyValueError::new_err("list size must be positive"));
        }
        let opts = ChoosabilityOptions { budget_nodes };
        let v = py.detach(|| choosability::is_f_choosable(&self.inner, &vec![k; self.inner.n()], &opts));
        to_py(py, &v)
    }

    #[pyo3(signature = (budget_nodes=DEFAULT_BUDGET_NODES))]
    fn choice_number(&self, py: Python<'_>, budget_nodes: u64) -> PyResult<Py<PyAny>> {
        let opts = ChoosabilityOptions { budget_nodes };
        let c = py.detach(|| choosability::choice_number(&self.inner, &opts));
        to_py(py, &c)
    }

    #[pyo3(signature = (max_hole=None))]
    fn perfect_spot_check(&self, py: Python<'_>, max_hole: Option<usize>) -> PyResult<Py<PyAny>> {
        let n = self.inner.n();
        let h = choosability::perfect_spot_check(&self.inner, max_hole.unwrap_or(n)).map_err(err)?;
        to_py(py, &h)
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, edges={})", self.inner.n(), self.inner.edge_count())
    }
}

#[pyclass(name = "Digraph", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyDigraph {
    inner: kcl_core::Digraph,
}

#[pymethods]
impl PyDigraph {
    /// Arcs `(v, u)` meaning `v -> u`, each along an edge of `graph`.
    #[new]
    fn new(graph: &PyGraph, arcs: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyDigraph {
            inner: kcl_core::Digraph::from_arcs(graph.inner.clone(), arcs).map_err(err)?,
        })
    }

    #[staticmethod]
    fn acyclic(graph: &PyGraph) -> Self {
        PyDigraph {
            inner: kcl_core::Digraph::acyclic_by_label(graph.inner.clone()),
        }
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let inner = serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(PyDigraph { inner })
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.inner).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn underlying(&self) -> PyGraph {
        PyGraph {
            inner: self.inner.underlying().clone(),
        }
    }

    fn arcs(&self) -> Vec<(usize, usize)> {
        self.inner.arcs()
    }

    fn outdegree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.n() {
            return Err(err(kcl_core::Error::VertexOutOfRange {
                vertex: v,
                n: self.inner.n(),
            }));
        }
        Ok(self.inner.outdegree(v))
    }

    fn max_outdegree(&self) -> usize {
        self.inner.max_outdegree()
    }

    /// Least kernel of the subdigraph induced by `support` (all vertices by default).
    #[pyo3(signature = (support=None))]
    fn find_kernel(&self, support: Option<Vec<usize>>) -> PyResult<Option<Vec<usize>>> {
        let s = self::support(self.inner.n(), support)?;
        Ok(kernels::find_kernel(&self.inner, s).map(|k| k.to_vec()))
    }

    #[pyo3(signature = (support=None))]
    fn all_kernels(&self, support: Option<Vec<usize>>) -> PyResult<Vec<Vec<usize>>> {
        let s = self::support(self.inner.n(), support)?;
        Ok(kernels::all_kernels(&self.inner, s)
            .map_err(err)?
            .into_iter()
            .map(|k| k.to_vec())
            .collect())
    }

    #[pyo3(signature = (budget=None, sample_seed=None, exhaustive_cap=DEFAULT_EXHAUSTIVE_CAP))]
    fn kernel_perfect(
        &self,
        py: Python<'_>,
        budget: Option<u64>,
        sample_seed: Option<u64>,
        exhaustive_cap: usize,
    ) -> PyResult<Py<PyAny>> {
        let opts = KernelCheckOptions {
            budget,
            exhaustive_cap,
            sample_seed,
        };
        let v = py.detach(|| kernels::kernel_perfect(&self.inner, &opts)).map_err(err)?;
        to_py(py, &v)
    }

    /// Color from `lists` one kernel per round; needs `len(lists[v]) >= outdegree(v) + 1`.
    fn galvin_color(&self, py: Python<'_>, lists: Vec<Vec<u32>>) -> PyResult<Py<PyAny>> {
        let lists = ListAssignment::new(lists).map_err(err)?;
        let out = list_coloring::galvin_color(&self.inner, &lists).map_err(err)?;
        to_py(py, &out)
    }

    fn __repr__(&self) -> String {
        format!("Digraph(n={}, arcs={})", self.inner.n(), self.inner.arc_count())
    }
}

#[pyfunction]
fn unitary(n: usize) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: cayley::unitary(n).map_err(err)?,
    })
}

#[pyfunction]
fn unitary_complement(n: usize) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: cayley::unitary_complement(n).map_err(err)?,
    })
}

#[pyfunction]
fn circulant(n: usize, connection: Vec<usize>) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: cayley::circulant_from(n, &connection).map_err(err)?,
    })
}

#[pyfunction]
fn power_of_cycle(n: usize, k: usize) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: cayley::power_of_cycle(n, k).map_err(err)?,
    })
}

#[pyfunction]
#[pyo3(signature = (n, rotations, reflections=Vec::new()))]
fn dihedral(n: usize, rotations: Vec<usize>, reflections: Vec<usize>) -> PyResult<PyGraph> {
    let spec = DihedralSpec::new(n, rotations, reflections).map_err(err)?;
    Ok(PyGraph {
        inner: cayley::dihedral_cayley(&spec).map_err(err)?,
    })
}

fn theorem_options(s2: Option<Vec<usize>>, force: bool, with_reflections: bool) -> TheoremOptions {
    TheoremOptions {
        s2: s2.unwrap_or_default(),
        force,
        with_reflections,
    }
}

/// `(graph, claim)` for a theorem instance; `claim` reads like `"ch = 3"` or `"ch <= 4"`.
#[pyfunction]
#[pyo3(signature = (theorem, n, s2=None, force=false, with_reflections=false))]
fn theorem_graph(
    theorem: &str,
    n: usize,
    s2: Option<Vec<usize>>,
    force: bool,
    with_reflections: bool,
) -> PyResult<(PyGraph, String)> {
    let inst = cayley::theorem_graph(
        self::theorem(theorem)?,
        n,
        &theorem_options(s2, force, with_reflections),
    )
    .map_err(err)?;
    Ok((PyGraph { inner: inst.graph }, inst.claim.to_string()))
}

/// `(digraph, coverage)` for a strategy such as `"paper_literal"`, `"completed"`,
/// `"full_bidirect"` or `"reps=1,2,4"`.
#[pyfunction]
#[pyo3(signature = (theorem, n, strategy, s2=None, force=false, with_reflections=false))]
fn orient(
    py: Python<'_>,
    theorem: &str,
    n: usize,
    strategy: &str,
    s2: Option<Vec<usize>>,
    force: bool,
    with_reflections: bool,
) -> PyResult<(PyDigraph, Py<PyAny>)> {
    let inst = cayley::theorem_graph(
        self::theorem(theorem)?,
        n,
        &theorem_options(s2, force, with_reflections),
    )
    .map_err(err)?;
    let strategy: OrientationStrategy = strategy.parse().map_err(err)?;
    let (d, cov) = build_strategy_orientation(&inst, &strategy).map_err(err)?;
    Ok((PyDigraph { inner: d }, to_py(py, &cov)?))
}

/// The full verification report as a dict.
#[pyfunction]
#[pyo3(signature = (
    theorem, n, strategies=None, s2=None, budget_nodes=DEFAULT_BUDGET_NODES, budget_subsets=None,
    sample_seed=None, skip_ch=false, force=false, with_reflections=false
))]
#[allow(clippy::too_many_arguments)]
fn verify(
    py: Python<'_>,
    theorem: &str,
    n: usize,
    strategies: Option<Vec<String>>,
    s2: Option<Vec<usize>>,
    budget_nodes: u64,
    budget_subsets: Option<u64>,
    sample_seed: Option<u64>,
    skip_ch: bool,
    force: bool,
    with_reflections: bool,
) -> PyResult<Py<PyAny>> {
    let mut opts = VerifyOptions {
        theorem: theorem_options(s2, force, with_reflections),
        kernel: KernelCheckOptions {
            budget: budget_subsets,
            exhaustive_cap: DEFAULT_EXHAUSTIVE_CAP,
            sample_seed,
        },
        choosability: ChoosabilityOptions { budget_nodes },
        skip_ch,
        ..VerifyOptions::default()
    };
    if let Some(s) = strategies {
        opts.strategies = s.iter().map(|s| s.parse()).collect::<Result<_, _>>().map_err(err)?;
    }
    let id = self::theorem(theorem)?;
    let r = py.detach(|| report::verify(id, n, &opts)).map_err(err)?;
    to_py(py, &r)
}

#[pymodule]
fn kcl(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyDigraph>()?;
    m.add_function(wrap_pyfunction!(unitary, m)?)?;
    m.add_function(wrap_pyfunction!(unitary_complement, m)?)?;
    m.add_function(wrap_pyfunction!(circulant, m)?)?;
    m.add_function(wrap_pyfunction!(power_of_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(dihedral, m)?)?;
    m.add_function(wrap_pyfunction!(theorem_graph, m)?)?;
    m.add_function(wrap_pyfunction!(orient, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
