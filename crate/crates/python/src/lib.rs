//! Python bindings for `plane_trees`.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use plane_trees::bijections::Bijection;
use plane_trees::counting;
use plane_trees::identities::{self, Variant};
use plane_trees::objects::{self, ObjectKind};
use plane_trees::statistics;
use plane_trees::verify::{self, Suite};

fn err(e: plane_trees::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A plane tree in parenthesis notation, e.g. `(()())`.
#[pyclass(name = "PlaneTree", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPlaneTree {
    inner: plane_trees::PlaneTree,
}

#[pymethods]
impl PyPlaneTree {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        let inner = plane_trees::PlaneTree::parse(text).map_err(err)?;
        Ok(Self { inner })
    }

    #[getter]
    fn edges(&self) -> usize {
        self.inner.edges()
    }

    #[getter]
    fn old_leaves(&self) -> usize {
        statistics::tree_stats(&self.inner).old_leaves
    }

    #[getter]
    fn young_leaves(&self) -> usize {
        statistics::tree_stats(&self.inner).young_leaves
    }

    fn mirror(&self) -> Self {
        Self {
            inner: self.inner.mirror(),
        }
    }

    /// Image under a named bijection, as text.
    fn map(&self, bijection: &str) -> PyResult<String> {
        let b: Bijection = bijection.parse().map_err(err)?;
        b.apply_text(&self.inner.render(), false).map_err(err)
    }

    fn stats<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let s = statistics::tree_stats(&self.inner);
        let d = PyDict::new(py);
        d.set_item("edges", s.edges)?;
        d.set_item("leaves", s.leaves)?;
        d.set_item("old_leaves", s.old_leaves)?;
        d.set_item("young_leaves", s.young_leaves)?;
        d.set_item("critical_leaf_preorder_index", s.critical_leaf_preorder_index)?;
        Ok(d)
    }

    fn __str__(&self) -> String {
        self.inner.render()
    }

    fn __repr__(&self) -> String {
        format!("PlaneTree('{}')", self.inner.render())
    }
}

/// Every object of the given kind and size, in canonical order.
#[pyfunction]
fn enumerate(kind: &str, n: usize) -> PyResult<Vec<String>> {
    let kind: ObjectKind = kind.parse().map_err(err)?;
    Ok(objects::enumerate(kind, n).map(|o| o.render()).collect())
}

/// Applies a bijection (or its inverse) to one encoded object.
#[pyfunction]
#[pyo3(signature = (bijection, text, inverse = false))]
fn map(bijection: &str, text: &str, inverse: bool) -> PyResult<String> {
    let b: Bijection = bijection.parse().map_err(err)?;
    b.apply_text(text, inverse).map_err(err)
}

#[pyfunction]
fn catalan(n: u64) -> BigInt {
    counting::catalan(n)
}

#[pyfunction]
fn motzkin(n: u64) -> BigInt {
    counting::motzkin(n)
}

#[pyfunction]
fn narayana(n: u64, k: u64) -> PyResult<BigInt> {
    counting::narayana(n, k).map_err(err)
}

/// Number of plane trees with `n` edges, `i` old and `j` young leaves.
#[pyfunction]
fn count_old_young(n: u64, i: u64, j: u64) -> PyResult<BigInt> {
    counting::count_old_young(n, i, j).map_err(err)
}

#[pyfunction]
fn count_old(n: u64, k: u64) -> PyResult<BigInt> {
    counting::count_old(n, k).map_err(err)
}

#[pyfunction]
fn count_young(n: u64, k: u64) -> PyResult<BigInt> {
    counting::count_young(n, k).map_err(err)
}

/// `[z^0] .. [z^max_order]` of the generating function, as polynomial text.
#[pyfunction]
fn gf_series(max_order: usize) -> Vec<String> {
    counting::gf_series(max_order)
        .iter()
        .map(|p| p.to_string())
        .collect()
}

#[pyfunction]
fn gf_closed_eval(t: f64, s: f64, z: f64) -> PyResult<f64> {
    counting::gf_closed_eval(t, s, z).map_err(err)
}

/// Both sides of a named identity at `n`, as polynomial text.
#[pyfunction]
#[pyo3(signature = (name, n, variant = "corrected"))]
fn identity_sides(name: &str, n: u64, variant: &str) -> PyResult<(String, String)> {
    let variant: Variant = variant.parse().map_err(err)?;
    let pair = match name {
        "cok1" => identities::coker1_sides(n).map(|(l, r)| (l.to_string(), r.to_string())),
        "cok2" => identities::coker2_sides(n).map(|(l, r)| (l.to_string(), r.to_string())),
        "cok1ref" => identities::cok1ref_sides(n, variant).map(|(l, r)| (l.to_string(), r.to_string())),
        "cok2ref" => identities::cok2ref_sides(n).map(|(l, r)| (l.to_string(), r.to_string())),
        other => return Err(PyValueError::new_err(format!("unknown identity {other:?}"))),
    };
    pair.map_err(err)
}

/// Runs a verification suite; returns `(passed, report text)`.
#[pyfunction]
#[pyo3(signature = (suite, n_max, variant = "corrected"))]
fn run_suite(py: Python<'_>, suite: &str, n_max: u64, variant: &str) -> PyResult<(bool, String)> {
    let suite: Suite = suite.parse().map_err(err)?;
    let variant: Variant = variant.parse().map_err(err)?;
    let report = py
        .detach(|| verify::run_suite(suite, n_max, variant))
        .map_err(err)?;
    Ok((report.passed(), report.render()))
}

#[pymodule]
fn plane_trees_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPlaneTree>()?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(map, m)?)?;
    m.add_function(wrap_pyfunction!(catalan, m)?)?;
    m.add_function(wrap_pyfunction!(motzkin, m)?)?;
    m.add_function(wrap_pyfunction!(narayana, m)?)?;
    m.add_function(wrap_pyfunction!(count_old_young, m)?)?;
    m.add_function(wrap_pyfunction!(count_old, m)?)?;
    m.add_function(wrap_pyfunction!(count_young, m)?)?;
    m.add_function(wrap_pyfunction!(gf_series, m)?)?;
    m.add_function(wrap_pyfunction!(gf_closed_eval, m)?)?;
    m.add_function(wrap_pyfunction!(identity_sides, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}
