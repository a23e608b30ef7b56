//! Python bindings: `afkit.Graph` for exact computations on small graphs and
//! `afkit.Chain` for the linear-time chain formulas.

use afkit::chain::{self, ChainSpec, Family};
use afkit::io::{read_graph, write_graph};
use afkit::verify::verify_chain;
use afkit::{Caps, EdgeId, FaceSet, Matching};
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(afkit, CapExceededError, PyException, "An enumeration cap was exceeded.");

fn to_py(e: afkit::Error) -> PyErr {
    match e {
        afkit::Error::CapExceeded(_) => CapExceededError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn chain_err(e: chain::ChainError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

type Pair = (usize, usize);

#[pyclass(name = "Graph", module = "afkit", frozen)]
struct PyGraph {
    inner: afkit::Graph,
    faces: Option<FaceSet>,
    caps: Caps,
}

impl PyGraph {
    fn pairs(&self, ids: &[EdgeId]) -> Vec<Pair> {
        ids.iter().map(|&e| self.inner.edge(e)).collect()
    }

    fn matching(&self, m: &Matching) -> Vec<Pair> {
        self.pairs(m.edge_ids())
    }

    fn lookup(&self, matching: Vec<Pair>) -> PyResult<Matching> {
        let ids = matching
            .iter()
            .map(|&(u, v)| {
                self.inner.edge_id(u, v).ok_or_else(|| PyValueError::new_err(format!("no edge ({u}, {v})")))
            })
            .collect::<PyResult<Vec<_>>>()?;
        Matching::perfect(&self.inner, &ids).map_err(to_py)
    }
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges, cycle_cap = afkit::DEFAULT_CYCLE_CAP, pm_cap = afkit::DEFAULT_PM_CAP))]
    fn new(n: usize, edges: Vec<Pair>, cycle_cap: usize, pm_cap: usize) -> PyResult<Self> {
        let inner = afkit::Graph::new(n, &edges).map_err(to_py)?;
        Ok(PyGraph { inner, faces: None, caps: Caps { cycle_cap, pm_cap } })
    }

    /// Parses the plain-text graph format, faces included.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        let file = read_graph(text).map_err(to_py)?;
        let faces = if file.has_faces() { Some(file.face_set().map_err(to_py)?) } else { None };
        Ok(PyGraph { inner: file.graph, faces, caps: Caps::default() })
    }

    fn to_text(&self) -> String {
        write_graph(&self.inner, self.faces.as_ref())
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edges(&self) -> Vec<Pair> {
        self.inner.edges().to_vec()
    }

    fn perfect_matchings(&self) -> PyResult<Vec<Vec<Pair>>> {
        let all = afkit::enumerate_perfect_matchings(&self.inner, self.caps.pm_cap).map_err(to_py)?;
        Ok(all.iter().map(|m| self.matching(m)).collect())
    }

    /// Anti-forcing number of one perfect matching and a minimum witness.
    fn af_of_matching(&self, matching: Vec<Pair>) -> PyResult<(usize, Vec<Pair>)> {
        let m = self.lookup(matching)?;
        let r = afkit::af_of_matching(&self.inner, &m, &self.caps).map_err(to_py)?;
        Ok((r.value, self.pairs(&r.witness)))
    }

    fn c_prime(&self, matching: Vec<Pair>) -> PyResult<Vec<Vec<Pair>>> {
        let m = self.lookup(matching)?;
        let set = afkit::c_prime(&self.inner, &m, &self.caps).map_err(to_py)?;
        Ok(set.cycles.iter().map(|c| self.pairs(c.edge_ids())).collect())
    }

    fn min_af(&self, py: Python<'_>) -> PyResult<(usize, Vec<Pair>)> {
        let (v, m) = py.detach(|| afkit::min_anti_forcing(&self.inner, &self.caps)).map_err(to_py)?;
        Ok((v, self.matching(&m)))
    }

    fn max_af(&self, py: Python<'_>) -> PyResult<(usize, Vec<Vec<Pair>>)> {
        let (v, ms) = py.detach(|| afkit::max_anti_forcing(&self.inner, &self.caps)).map_err(to_py)?;
        Ok((v, ms.iter().map(|m| self.matching(m)).collect()))
    }

    fn spectrum(&self, py: Python<'_>) -> PyResult<Vec<usize>> {
        py.detach(|| afkit::spectrum_exact(&self.inner, &self.caps, false)).map(|s| s.values).map_err(to_py)
    }

    fn anti_forcing_edges(&self) -> PyResult<Vec<Pair>> {
        Ok(self.pairs(&afkit::anti_forcing_edges(&self.inner).map_err(to_py)?))
    }

    fn forcing_edges(&self) -> PyResult<Vec<Pair>> {
        Ok(self.pairs(&afkit::forcing_edges(&self.inner).map_err(to_py)?))
    }

    fn is_extremal(&self) -> PyResult<bool> {
        afkit::is_extremal(&self.inner, &self.caps).map_err(to_py)
    }

    /// (nodes, links, connected) of the Z-transformation graph.
    fn z_graph(&self) -> PyResult<(usize, usize, bool)> {
        let faces = self.faces.as_ref().ok_or_else(|| PyValueError::new_err("graph has no faces"))?;
        let z = afkit::z_graph(&self.inner, faces, &self.caps).map_err(to_py)?;
        Ok((z.nodes.len(), z.links.len(), afkit::z_connected(&z)))
    }

    fn __repr__(&self) -> String {
        format!("Graph(vertices={}, edges={})", self.inner.vertex_count(), self.inner.edge_count())
    }
}

#[pyclass(name = "Chain", module = "afkit", frozen, eq)]
#[derive(PartialEq)]
struct PyChain {
    spec: ChainSpec,
}

#[pymethods]
impl PyChain {
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        Ok(PyChain { spec: chain::parse_chain(spec).map_err(chain_err)? })
    }

    #[getter]
    fn lengths(&self) -> Vec<usize> {
        self.spec.lengths().to_vec()
    }

    #[getter]
    fn offsets(&self) -> Vec<usize> {
        self.spec.offsets().to_vec()
    }

    fn __len__(&self) -> usize {
        self.spec.len()
    }

    fn af(&self) -> usize {
        chain::segment_decomposition(&self.spec).count()
    }

    fn max_af(&self) -> usize {
        chain::all_kink_decomposition(&self.spec).total()
    }

    fn spectrum(&self) -> Vec<usize> {
        chain::spectrum_chain(&self.spec).values
    }

    fn kinks(&self) -> Vec<bool> {
        chain::kink_flags(&self.spec).flags
    }

    fn k_count(&self) -> usize {
        chain::maximal_linear_chain_count(&self.spec)
    }

    /// Segments as inclusive (first, last) face ranges.
    fn segments(&self) -> Vec<Pair> {
        chain::segment_decomposition(&self.spec).segments.iter().map(|r| (r.first, r.last)).collect()
    }

    fn blocks(&self) -> Vec<Pair> {
        chain::all_kink_decomposition(&self.spec).blocks.iter().map(|r| (r.first, r.last)).collect()
    }

    fn realize(&self) -> PyGraph {
        let r = chain::realize(&self.spec);
        PyGraph { inner: r.graph, faces: Some(r.faces), caps: Caps::default() }
    }

    /// Compares the chain formulas against the exact solver; returns a dict
    /// with both sides and a list of mismatches.
    fn verify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let r = py.detach(|| verify_chain(&self.spec, &Caps::default(), None)).map_err(to_py)?;
        let d = PyDict::new(py);
        d.set_item("ok", r.ok())?;
        d.set_item("matchings", r.matchings)?;
        d.set_item("chain_af", r.chain_af)?;
        d.set_item("oracle_af", r.oracle_af)?;
        d.set_item("chain_max_af", r.chain_max_af)?;
        d.set_item("oracle_max_af", r.oracle_max_af)?;
        d.set_item("chain_spectrum", r.chain_spectrum)?;
        d.set_item("oracle_spectrum", r.oracle_spectrum)?;
        let mismatches: Vec<(String, String, String)> =
            r.mismatches.into_iter().map(|m| (m.check, m.chain, m.oracle)).collect();
        d.set_item("mismatches", mismatches)?;
        Ok(d)
    }

    fn __str__(&self) -> String {
        self.spec.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Chain({:?})", self.spec.to_string())
    }
}

#[pyfunction]
#[pyo3(signature = (family, n, modes = "", seed = None))]
fn generate(family: &str, n: usize, modes: &str, seed: Option<u64>) -> PyResult<PyChain> {
    let family: Family = family.parse().map_err(chain_err)?;
    if family == Family::Random && seed.is_none() {
        return Err(PyValueError::new_err("random chains need a seed"));
    }
    let spec = chain::generate(family, n, modes, seed.unwrap_or(0)).map_err(chain_err)?;
    Ok(PyChain { spec })
}

#[pymodule]
#[pyo3(name = "afkit")]
fn afkit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyChain>()?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add("CapExceededError", m.py().get_type::<CapExceededError>())?;
    Ok(())
}
