//! Python bindings: `import powersdim`.

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use sdim_core::graph::io::{from_edge_list_json, from_graph6, to_edge_list_json, to_graph6};
use sdim_core::{BuildOptions, GroupSpec};

create_exception!(powersdim, SdimError, PyException);

fn err(e: sdim_core::Error) -> PyErr {
    SdimError::new_err(e.to_string())
}

/// Outcome of one strong-dimension computation.
#[pyclass(frozen, get_all, module = "powersdim")]
struct SdimResult {
    value: usize,
    omega_reduced: Option<usize>,
    method: String,
    closed_form: Option<String>,
    witness: Option<Vec<usize>>,
    verified: bool,
}

impl From<sdim_core::SdimResult> for SdimResult {
    fn from(r: sdim_core::SdimResult) -> Self {
        SdimResult {
            value: r.value,
            omega_reduced: r.omega_reduced,
            method: r.method.to_string(),
            closed_form: r.closed_form.map(|m| m.to_string()),
            witness: r.witness,
            verified: r.verified,
        }
    }
}

#[pymethods]
impl SdimResult {
    fn __repr__(&self) -> String {
        format!("SdimResult(value={}, method={}, verified={})", self.value, self.method, self.verified)
    }
}

/// A finite group built from a spec string such as `"D12"`, `"Z3xQ8"` or
/// `"perm:gens.txt"`.
#[pyclass(frozen, module = "powersdim")]
struct Group {
    inner: sdim_core::Group,
}

#[pymethods]
impl Group {
    #[new]
    #[pyo3(signature = (spec, trust_table = false))]
    fn new(spec: &str, trust_table: bool) -> PyResult<Self> {
        let spec: GroupSpec = spec.parse().map_err(err)?;
        let options = BuildOptions {
            trust_large_tables: trust_table,
            ..BuildOptions::default()
        };
        let inner = sdim_core::build_group_with(&spec, &options).map_err(err)?;
        Ok(Group { inner })
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn spec(&self) -> String {
        self.inner.spec().to_string()
    }

    fn is_cyclic(&self) -> bool {
        self.inner.is_cyclic()
    }

    fn is_abelian(&self) -> bool {
        self.inner.is_abelian()
    }

    fn is_cp_group(&self) -> bool {
        sdim_core::is_cp_group(&self.inner)
    }

    fn mul(&self, a: usize, b: usize) -> PyResult<usize> {
        let n = self.inner.order();
        if a >= n || b >= n {
            return Err(SdimError::new_err(format!("element index out of range 0..{n}")));
        }
        Ok(self.inner.mul(a, b))
    }

    fn element_orders(&self) -> Vec<usize> {
        self.inner.element_orders().to_vec()
    }

    /// Element sets of the maximal cyclic subgroups.
    fn maximal_cyclic_subgroups(&self) -> Vec<Vec<usize>> {
        let family = sdim_core::maximal_cyclic_subgroups(&self.inner);
        family.all.iter().map(|m| m.elements.clone()).collect()
    }

    fn alpha_p(&self, p: u64) -> PyResult<usize> {
        sdim_core::chain_analysis(&self.inner, p).map_err(err)?;
        Ok(sdim_core::alpha_p(&self.inner, p))
    }

    fn omega_reduced(&self) -> usize {
        sdim_core::omega_reduced_group(&self.inner)
    }

    fn sdim(&self) -> PyResult<SdimResult> {
        sdim_core::sdim_group(&self.inner).map(Into::into).map_err(err)
    }

    #[pyo3(signature = (cap = sdim_core::sdim::DEFAULT_ORACLE_CAP))]
    fn sdim_oracle(&self, cap: usize) -> PyResult<SdimResult> {
        let graph = sdim_core::power_graph(&self.inner);
        sdim_core::sdim_oracle_with_cap(&graph, cap).map(Into::into).map_err(err)
    }

    /// `(label, description)` when sdim = n - 2, otherwise `None`.
    fn classify(&self) -> Option<(String, String)> {
        sdim_core::classify_n_minus_2(&self.inner).map(|c| (c.label().to_string(), c.to_string()))
    }

    fn clique_witness(&self, p: u64) -> PyResult<Vec<usize>> {
        sdim_core::chain_analysis(&self.inner, p).map_err(err)?;
        sdim_core::clique_witness_alpha_p(&self.inner, p).map_err(err)
    }

    fn power_graph_edges(&self) -> Vec<(usize, usize)> {
        sdim_core::power_graph(&self.inner).edges().collect()
    }

    fn power_graph_graph6(&self) -> PyResult<String> {
        to_graph6(&sdim_core::power_graph(&self.inner)).map_err(err)
    }

    fn power_graph_json(&self) -> String {
        to_edge_list_json(&sdim_core::power_graph(&self.inner))
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!("Group('{}')", self.inner.spec())
    }
}

/// 1 for prime powers, otherwise the sum of the prime exponents of `n`.
#[pyfunction]
fn sigma(n: u64) -> PyResult<u32> {
    if n == 0 {
        return Err(SdimError::new_err("sigma is defined for n >= 1"));
    }
    Ok(sdim_core::group::sigma_of(n))
}

#[pyfunction]
fn sdim_group(spec: &str) -> PyResult<SdimResult> {
    Group::new(spec, false)?.sdim()
}

/// Oracle value for a graph given as graph6 text or an edge-list JSON object.
#[pyfunction]
#[pyo3(signature = (graph, cap = sdim_core::sdim::DEFAULT_ORACLE_CAP))]
fn sdim_oracle(graph: &str, cap: usize) -> PyResult<SdimResult> {
    let graph = graph.trim();
    let parsed = if graph.starts_with('{') {
        from_edge_list_json(graph)
    } else {
        from_graph6(graph)
    };
    let graph = parsed.map_err(err)?;
    sdim_core::sdim_oracle_with_cap(&graph, cap).map(Into::into).map_err(err)
}

/// `(orders, elements)` of the cyclic clique witness in `Z_n`.
#[pyfunction]
fn clique_witness_cyclic(n: u64) -> PyResult<(Vec<u64>, Vec<usize>)> {
    if n < 2 {
        return Err(SdimError::new_err("n must be at least 2"));
    }
    let w = sdim_core::clique_witness_cyclic(n);
    Ok((w.orders, w.elements))
}

#[pyfunction]
fn corpus() -> Vec<&'static str> {
    sdim_core::corpus::CORPUS.to_vec()
}

#[pymodule]
fn powersdim(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Group>()?;
    m.add_class::<SdimResult>()?;
    m.add("SdimError", m.py().get_type::<SdimError>())?;
    m.add_function(wrap_pyfunction!(sigma, m)?)?;
    m.add_function(wrap_pyfunction!(sdim_group, m)?)?;
    m.add_function(wrap_pyfunction!(sdim_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(clique_witness_cyclic, m)?)?;
    m.add_function(wrap_pyfunction!(corpus, m)?)?;
    Ok(())
}
