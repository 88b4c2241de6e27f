//! Python bindings: the graph and plane-graph types plus the analysis,
//! synthesis and enumeration entry points. Structured reports cross the
//! boundary as plain dicts.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use pyo3::IntoPyObjectExt;
use serde_json::Value;

use planar_center::criteria;
use planar_center::enumerate;
use planar_center::error::Error;
use planar_center::fixtures;
use planar_center::graph;
use planar_center::io;
use planar_center::plane;
use planar_center::qcc;
use planar_center::synthesis;

fn err(e: Error) -> PyErr {
    match e {
        Error::OutOfRange(..)
        | Error::SelfLoop(..)
        | Error::DuplicateEdge(..)
        | Error::EmptySet
        | Error::AlphaTooSmall { .. }
        | Error::TooSmall(..)
        | Error::UnknownFixture(..)
        | Error::InvalidSpec(..) => PyValueError::new_err(e.to_string()),
        other => PyRuntimeError::new_err(other.to_string()),
    }
}

fn json_to_py(py: Python<'_>, v: &Value) -> PyResult<Py<PyAny>> {
    match v {
        Value::Null => Ok(py.None()),
        Value::Bool(b) => b.into_py_any(py),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_py_any(py)
            } else if let Some(u) = n.as_u64() {
                u.into_py_any(py)
            } else {
                n.as_f64().unwrap_or(f64::NAN).into_py_any(py)
            }
        }
        Value::String(s) => s.into_py_any(py),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(json_to_py(py, item)?)?;
            }
            list.into_py_any(py)
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, val) in map {
                dict.set_item(k, json_to_py(py, val)?)?;
            }
            dict.into_py_any(py)
        }
    }
}

/// An immutable simple undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", frozen, from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: graph::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges, labels=None))]
    fn new(n: usize, edges: Vec<(usize, usize)>, labels: Option<Vec<String>>) -> PyResult<Self> {
        Ok(PyGraph { inner: graph::Graph::with_labels(n, &edges, labels).map_err(err)? })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyGraph { inner: io::parse_graph_json(text).map_err(err)?.to_graph().map_err(err)? })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.order()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.order() {
            return Err(PyValueError::new_err("vertex out of range"));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn bfs(&self, source: usize) -> PyResult<Vec<Option<u32>>> {
        self.inner.bfs_distances(source).map_err(err)
    }

    fn distance(&self, u: usize, v: usize) -> PyResult<Option<u32>> {
        if u >= self.inner.order() || v >= self.inner.order() {
            return Err(PyValueError::new_err("vertex out of range"));
        }
        Ok(self.inner.distances().get(u, v))
    }

    fn eccentricities(&self) -> PyResult<Vec<u32>> {
        Ok(self.inner.eccentricity_profile().map_err(err)?.eccentricity)
    }

    fn radius(&self) -> PyResult<u32> {
        Ok(self.inner.eccentricity_profile().map_err(err)?.radius)
    }

    fn diameter(&self) -> PyResult<u32> {
        Ok(self.inner.eccentricity_profile().map_err(err)?.diameter)
    }

    fn center(&self) -> PyResult<Vec<usize>> {
        Ok(self.inner.eccentricity_profile().map_err(err)?.center())
    }

    /// Quasi-eccentric analysis of a vertex set: dict with `qcc`, `ecc`,
    /// `e`, `q`.
    fn qcc(&self, py: Python<'_>, target: Vec<usize>) -> PyResult<Py<PyAny>> {
        let r = qcc::qcc_set(&self.inner, &target).map_err(err)?;
        let v = serde_json::json!({
            "target": r.target, "qcc": r.qcc, "ecc": r.ecc,
            "e": r.eccentricity, "q": r.quasi_eccentricity,
        });
        json_to_py(py, &v)
    }

    fn dominates(&self, t: Vec<usize>, s: Vec<usize>) -> PyResult<bool> {
        self.inner.dominates(&t, &s).map_err(err)
    }

    fn is_separating_set(&self, s: Vec<usize>) -> PyResult<(bool, Vec<Vec<usize>>)> {
        let sep = self.inner.is_separating_set(&s).map_err(err)?;
        Ok((sep.separates, sep.components))
    }

    fn induced_subgraph(&self, s: Vec<usize>) -> PyResult<(PyGraph, Vec<usize>)> {
        let (g, back) = self.inner.induced_subgraph(&s).map_err(err)?;
        Ok((PyGraph { inner: g }, back))
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&io::GraphJson::from_graph(&self.inner)).expect("serializable")
    }

    fn dot(&self, highlight: Option<Vec<usize>>) -> String {
        io::to_dot(&self.inner, &highlight.unwrap_or_default())
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.order(), self.inner.size())
    }
}

/// A plane graph: a graph with a rotation system and derived faces.
#[pyclass(name = "PlaneGraph", frozen, from_py_object)]
#[derive(Clone)]
struct PyPlaneGraph {
    inner: plane::PlaneGraph,
}

#[pymethods]
impl PyPlaneGraph {
    /// Derive the unique embedding of a maximal planar graph.
    #[staticmethod]
    fn mpg(g: &PyGraph) -> PyResult<Self> {
        Ok(PyPlaneGraph { inner: plane::PlaneGraph::mpg(g.inner.clone()).map_err(err)? })
    }

    #[staticmethod]
    fn from_rotation(g: &PyGraph, rotation: Vec<Vec<usize>>) -> PyResult<Self> {
        Ok(PyPlaneGraph {
            inner: plane::PlaneGraph::from_rotation(g.inner.clone(), rotation).map_err(err)?,
        })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyPlaneGraph { inner: io::parse_graph_json(text).map_err(err)?.to_plane().map_err(err)? })
    }

    fn graph(&self) -> PyGraph {
        PyGraph { inner: self.inner.graph().clone() }
    }

    fn faces(&self) -> Vec<Vec<usize>> {
        self.inner.faces().map(|f| f.boundary).collect()
    }

    fn rotation(&self) -> Vec<Vec<usize>> {
        self.inner.rotation().to_vec()
    }

    fn is_maximal_plane(&self) -> bool {
        self.inner.is_maximal_plane()
    }

    fn cycle_sides(&self, cycle: Vec<usize>) -> PyResult<(Vec<usize>, Vec<usize>, Vec<usize>)> {
        let s = self.inner.cycle_sides(&cycle).map_err(err)?;
        Ok((s.on_cycle, s.side_a, s.side_b))
    }

    fn is_jordan_separating(&self, cycle: Vec<usize>) -> PyResult<bool> {
        self.inner.is_jordan_separating(&cycle).map_err(err)
    }

    /// Classification of one face's quasi-eccentric set, as a dict.
    fn face_configuration(&self, py: Python<'_>, face_id: usize) -> PyResult<Py<PyAny>> {
        if face_id >= self.inner.face_count() {
            return Err(PyValueError::new_err("face id out of range"));
        }
        let face = self.inner.face(face_id);
        let cfg = qcc::face_configuration(&self.inner, &face).map_err(err)?;
        let label = qcc::classify_case(&cfg).map_err(err)?;
        json_to_py(py, &io::configuration_json(&cfg, Some(label.kind.name())))
    }

    /// Face-criterion verdict at `alpha` (default: the diameter).
    #[pyo3(signature = (alpha=None))]
    fn qef_check(&self, py: Python<'_>, alpha: Option<u32>) -> PyResult<Py<PyAny>> {
        let profile = self.inner.graph().eccentricity_profile().map_err(err)?;
        let v = criteria::qef_criterion(&self.inner, alpha.unwrap_or(profile.diameter))
            .map_err(err)?;
        json_to_py(py, &io::qef_verdict_json(&v))
    }

    #[pyo3(signature = (max_len=None))]
    fn cycle_condition(&self, py: Python<'_>, max_len: Option<usize>) -> PyResult<Py<PyAny>> {
        let v = criteria::cycle_condition(&self.inner, max_len, None).map_err(err)?;
        json_to_py(py, &io::cycle_verdict_json(&v))
    }

    fn has_dominating_face(&self) -> PyResult<Option<Vec<usize>>> {
        Ok(criteria::has_dominating_face(&self.inner)
            .map_err(err)?
            .map(|f| f.boundary))
    }

    /// Build and certify the host in which every input vertex has
    /// eccentricity exactly `alpha` (default: the diameter).
    #[pyo3(signature = (alpha=None))]
    fn synthesize(&self, py: Python<'_>, alpha: Option<u32>) -> PyResult<Py<PyAny>> {
        let profile = self.inner.graph().eccentricity_profile().map_err(err)?;
        let r = synthesis::build_supergraph(&self.inner, alpha.unwrap_or(profile.diameter))
            .map_err(err)?;
        json_to_py(py, &io::synthesis_json(&r))
    }

    /// Build the trimmed planar host whose center is exactly the input
    /// (default `alpha`: diameter + 3).
    #[pyo3(signature = (alpha=None))]
    fn center_host(&self, py: Python<'_>, alpha: Option<u32>) -> PyResult<Py<PyAny>> {
        let profile = self.inner.graph().eccentricity_profile().map_err(err)?;
        let r = synthesis::build_center_host(&self.inner, alpha.unwrap_or(profile.diameter + 3))
            .map_err(err)?;
        json_to_py(py, &io::synthesis_json(&r))
    }

    fn canonical_code(&self) -> String {
        enumerate::canonical_code(&self.inner).to_string()
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&io::GraphJson::from_plane(&self.inner)).expect("serializable")
    }

    fn __repr__(&self) -> String {
        format!(
            "PlaneGraph(n={}, m={}, faces={})",
            self.inner.graph().order(),
            self.inner.graph().size(),
            self.inner.face_count()
        )
    }
}

#[pyfunction]
fn cartesian_product(g: &PyGraph, h: &PyGraph) -> PyGraph {
    PyGraph { inner: graph::cartesian_product(&g.inner, &h.inner) }
}

#[pyfunction]
fn hedetniemi(g: &PyGraph) -> PyResult<(PyGraph, Vec<usize>)> {
    let (aug, image) = synthesis::hedetniemi(&g.inner).map_err(err)?;
    Ok((PyGraph { inner: aug }, image))
}

#[pyfunction]
fn stacked_triangulation(n: usize) -> PyResult<PyPlaneGraph> {
    Ok(PyPlaneGraph { inner: enumerate::stacked_triangulation(n).map_err(err)? })
}

#[pyfunction]
fn diagonal_flip(pg: &PyPlaneGraph, u: usize, v: usize) -> PyResult<Option<PyPlaneGraph>> {
    Ok(enumerate::diagonal_flip(&pg.inner, u, v)
        .map_err(err)?
        .map(|p| PyPlaneGraph { inner: p }))
}

#[pyfunction]
fn enumerate_mpgs(n: usize) -> PyResult<Vec<PyPlaneGraph>> {
    Ok(enumerate::enumerate_mpgs(n)
        .map_err(err)?
        .into_iter()
        .map(|p| PyPlaneGraph { inner: p })
        .collect())
}

#[pyfunction]
#[pyo3(signature = (n, alpha_offset=0))]
fn census(py: Python<'_>, n: usize, alpha_offset: u32) -> PyResult<Py<PyAny>> {
    let policy = if alpha_offset == 0 {
        enumerate::AlphaPolicy::Diameter
    } else {
        enumerate::AlphaPolicy::DiameterPlus(alpha_offset)
    };
    let rows = enumerate::census(n, policy).map_err(err)?;
    let list = PyList::empty(py);
    for row in &rows {
        list.append(json_to_py(py, &io::census_row_json(row))?)?;
    }
    list.into_py_any(py)
}

/// Build one gadget variant and return it as a dict: its plane-graph JSON
/// plus the special-vertex map. `singles` is a subset of "xyz"; `pairs` a
/// list drawn from {"xy", "yz", "zx"}.
#[pyfunction]
#[pyo3(signature = (depth, singles="", pairs=vec![]))]
fn gadget(py: Python<'_>, depth: u32, singles: &str, pairs: Vec<String>) -> PyResult<Py<PyAny>> {
    use planar_center::gadget::{Gadget, GadgetSpec};
    use planar_center::qcc::{Corner, CornerPair, CornerSet};
    let mut set = CornerSet::EMPTY;
    for ch in singles.chars() {
        match ch {
            'x' => set.insert(Corner::X),
            'y' => set.insert(Corner::Y),
            'z' => set.insert(Corner::Z),
            other => return Err(PyValueError::new_err(format!("bad corner `{other}`"))),
        }
    }
    let pair_list: Vec<CornerPair> = pairs
        .iter()
        .map(|p| {
            CornerPair::ALL
                .into_iter()
                .find(|c| c.name() == p)
                .ok_or_else(|| PyValueError::new_err(format!("bad pair `{p}`")))
        })
        .collect::<PyResult<_>>()?;
    let g = Gadget::build(GadgetSpec::with_pairs(depth, set, &pair_list)).map_err(err)?;
    json_to_py(py, &io::gadget_json(&g))
}

#[pyfunction]
fn fixture_names() -> Vec<&'static str> {
    fixtures::all_fixture_names()
}

/// Load a built-in example: dict with the graph JSON, named vertices, and
/// per-fact verification outcomes.
#[pyfunction]
fn fixture(py: Python<'_>, name: &str) -> PyResult<Py<PyAny>> {
    let fx = fixtures::build_unverified(name).map_err(err)?;
    let checks = fixtures::verify_facts(&fx).map_err(err)?;
    let graph_json = match &fx.plane {
        Some(p) => serde_json::to_value(io::GraphJson::from_plane(p)),
        None => serde_json::to_value(io::GraphJson::from_graph(&fx.graph)),
    }
    .expect("serializable");
    let v = serde_json::json!({
        "name": fx.name,
        "description": fx.description,
        "graph": graph_json,
        "named": fx.named,
        "facts": checks.iter().map(|(d, ok)| serde_json::json!({"fact": d, "pass": ok})).collect::<Vec<_>>(),
        "all_pass": checks.iter().all(|(_, ok)| *ok),
    });
    json_to_py(py, &v)
}

#[pymodule]
fn planar_center_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyPlaneGraph>()?;
    m.add_function(wrap_pyfunction!(cartesian_product, m)?)?;
    m.add_function(wrap_pyfunction!(hedetniemi, m)?)?;
    m.add_function(wrap_pyfunction!(stacked_triangulation, m)?)?;
    m.add_function(wrap_pyfunction!(diagonal_flip, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_mpgs, m)?)?;
    m.add_function(wrap_pyfunction!(census, m)?)?;
    m.add_function(wrap_pyfunction!(gadget, m)?)?;
    m.add_function(wrap_pyfunction!(fixture_names, m)?)?;
    m.add_function(wrap_pyfunction!(fixture, m)?)?;
    Ok(())
}
