//! Python bindings. Coefficients go in as anything whose `str()` is a
//! rational literal (`int`, `fractions.Fraction`, `"3/4"`) and come back as
//! `fractions.Fraction`.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyList;

use riordan_core::rational::{format_rational, parse_rational};
use riordan_core as core;
use riordan_core::{JsonForm, Rational, DEFAULT_ORDER};

fn py_err(e: core::Error) -> PyErr {
    match e {
        core::Error::Defect(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn to_rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    parse_rational(&obj.str()?.to_string()).map_err(py_err)
}

fn to_fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((format_rational(r),))
}

fn fraction_list<'py>(py: Python<'py>, rs: &[Rational]) -> PyResult<Bound<'py, PyList>> {
    let items = rs.iter().map(|r| to_fraction(py, r)).collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

#[pyclass(name = "Series", module = "riordan", frozen, skip_from_py_object, eq)]
#[derive(Clone, PartialEq)]
pub struct PySeries(core::Series);

#[pymethods]
impl PySeries {
    #[new]
    #[pyo3(signature = (coeffs, order = DEFAULT_ORDER))]
    fn new(coeffs: Vec<Bound<'_, PyAny>>, order: usize) -> PyResult<Self> {
        let cs = coeffs.iter().map(to_rational).collect::<PyResult<Vec<_>>>()?;
        core::Series::new(cs, order).map(PySeries).map_err(py_err)
    }

    #[staticmethod]
    #[pyo3(signature = (text, order = DEFAULT_ORDER))]
    fn parse(text: &str, order: usize) -> PyResult<Self> {
        core::Series::parse_literal(text, order).map(PySeries).map_err(py_err)
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    #[getter]
    fn coeffs<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        fraction_list(py, self.0.coeffs())
    }

    fn parity(&self) -> String {
        self.0.parity().to_string()
    }

    fn literal(&self) -> String {
        self.0.to_literal()
    }

    fn __add__(&self, other: &PySeries) -> PyResult<Self> {
        self.0.add(&other.0).map(PySeries).map_err(py_err)
    }

    fn __sub__(&self, other: &PySeries) -> PyResult<Self> {
        self.0.sub(&other.0).map(PySeries).map_err(py_err)
    }

    fn __mul__(&self, other: &PySeries) -> PyResult<Self> {
        self.0.mul(&other.0).map(PySeries).map_err(py_err)
    }

    fn __neg__(&self) -> Self {
        PySeries(self.0.neg())
    }

    fn reciprocal(&self) -> PyResult<Self> {
        self.0.reciprocal().map(PySeries).map_err(py_err)
    }

    fn compose(&self, inner: &PySeries) -> PyResult<Self> {
        self.0.compose(&inner.0).map(PySeries).map_err(py_err)
    }

    fn comp_inverse(&self) -> PyResult<Self> {
        self.0.comp_inverse().map(PySeries).map_err(py_err)
    }

    fn exp(&self) -> PyResult<Self> {
        self.0.exp_series().map(PySeries).map_err(py_err)
    }

    fn log(&self) -> PyResult<Self> {
        self.0.log_series().map(PySeries).map_err(py_err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Series({}, order={})", self.0.to_literal(), self.0.order())
    }
}

#[pyclass(name = "RiordanArray", module = "riordan", frozen, skip_from_py_object, eq)]
#[derive(Clone, PartialEq)]
pub struct PyRiordanArray(core::RiordanArray);

#[pymethods]
impl PyRiordanArray {
    #[new]
    fn new(f: &PySeries, g: &PySeries) -> PyResult<Self> {
        core::RiordanArray::new(f.0.clone(), g.0.clone())
            .map(PyRiordanArray)
            .map_err(py_err)
    }

    /// `identity`, `minus-identity`, `pascal` or `alternating`.
    #[staticmethod]
    #[pyo3(signature = (name, order = DEFAULT_ORDER))]
    fn preset(name: &str, order: usize) -> PyResult<Self> {
        core::presets::array_preset(name, order)
            .map(PyRiordanArray)
            .map_err(py_err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        core::RiordanArray::from_json(text)
            .map(PyRiordanArray)
            .map_err(py_err)
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    #[getter]
    fn f(&self) -> PySeries {
        PySeries(self.0.f().clone())
    }

    #[getter]
    fn g(&self) -> PySeries {
        PySeries(self.0.g().clone())
    }

    fn matrix<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        let m = self.0.to_matrix();
        let rows = m
            .rows()
            .iter()
            .map(|r| fraction_list(py, r))
            .collect::<PyResult<Vec<_>>>()?;
        PyList::new(py, rows)
    }

    fn __matmul__(&self, other: &PyRiordanArray) -> PyResult<Self> {
        self.0.multiply(&other.0).map(PyRiordanArray).map_err(py_err)
    }

    fn inverse(&self) -> Self {
        PyRiordanArray(self.0.inverse())
    }

    fn pow(&self, k: usize) -> Self {
        PyRiordanArray(self.0.pow(k))
    }

    fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    fn is_involution(&self) -> bool {
        self.0.is_involution()
    }

    fn is_pseudo_involution(&self) -> bool {
        self.0.is_pseudo_involution()
    }

    #[pyo3(signature = (max = 8))]
    fn probe_order(&self, max: usize) -> Option<usize> {
        self.0.probe_order(max)
    }

    fn __repr__(&self) -> String {
        format!(
            "RiordanArray(f={}, g={}, order={})",
            self.0.f().to_literal(),
            self.0.g().to_literal(),
            self.0.order()
        )
    }
}

#[pyclass(name = "InvolutionParams", module = "riordan", frozen, skip_from_py_object, eq)]
#[derive(Clone, PartialEq)]
pub struct PyInvolutionParams(core::InvolutionParams);

#[pymethods]
impl PyInvolutionParams {
    #[new]
    fn new(phi: &PySeries, u: &PySeries, sign: i64) -> PyResult<Self> {
        let sign = core::Sign::from_i64(sign).map_err(py_err)?;
        core::InvolutionParams::new(phi.0.clone(), u.0.clone(), sign)
            .map(PyInvolutionParams)
            .map_err(py_err)
    }

    #[getter]
    fn phi(&self) -> PySeries {
        PySeries(self.0.phi().clone())
    }

    #[getter]
    fn u(&self) -> PySeries {
        PySeries(self.0.u().clone())
    }

    #[getter]
    fn sign(&self) -> i64 {
        self.0.sign().as_i64()
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    fn __repr__(&self) -> String {
        format!(
            "InvolutionParams(phi={}, u={}, sign={})",
            self.0.phi().to_literal(),
            self.0.u().to_literal(),
            self.0.sign()
        )
    }
}

#[pyclass(name = "Weight", module = "riordan", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyWeight(core::Weight);

#[pymethods]
impl PyWeight {
    #[new]
    fn new(h: &PySeries) -> PyResult<Self> {
        core::Weight::new(h.0.clone()).map(PyWeight).map_err(py_err)
    }

    /// `ones`, `exp` or `harmonic`.
    #[staticmethod]
    #[pyo3(signature = (name, order = DEFAULT_ORDER))]
    fn preset(name: &str, order: usize) -> PyResult<Self> {
        core::Weight::preset(name, order).map(PyWeight).map_err(py_err)
    }

    #[getter]
    fn series(&self) -> PySeries {
        PySeries(self.0.series().clone())
    }
}

#[pyclass(name = "PolySequence", module = "riordan", frozen, skip_from_py_object, eq)]
#[derive(Clone, PartialEq)]
pub struct PyPolySequence(core::PolySequence);

#[pymethods]
impl PyPolySequence {
    #[staticmethod]
    fn from_riordan(t: &PyRiordanArray) -> Self {
        PyPolySequence(core::PolySequence::from_riordan(&t.0))
    }

    #[staticmethod]
    fn neutral(h: &PyWeight) -> Self {
        PyPolySequence(core::PolySequence::neutral(&h.0))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        core::PolySequence::from_json(text)
            .map(PyPolySequence)
            .map_err(py_err)
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    fn polynomial<'py>(&self, py: Python<'py>, n: usize) -> PyResult<Bound<'py, PyList>> {
        if n > self.0.order() {
            return Err(PyValueError::new_err(format!(
                "index {n} exceeds order {}",
                self.0.order()
            )));
        }
        fraction_list(py, self.0.polynomial(n))
    }

    fn weight(&self, h: &PyWeight) -> PyResult<Self> {
        self.0.weight(&h.0).map(PyPolySequence).map_err(py_err)
    }

    fn umbral_compose(&self, q: &PyPolySequence, h: &PyWeight) -> PyResult<Self> {
        self.0
            .umbral_compose(&q.0, &h.0)
            .map(PyPolySequence)
            .map_err(py_err)
    }

    fn n_fold(&self, times: usize, h: &PyWeight) -> PyResult<Self> {
        self.0.n_fold(times, &h.0).map(PyPolySequence).map_err(py_err)
    }

    fn is_neutral(&self, h: &PyWeight) -> bool {
        self.0.is_neutral(&h.0)
    }
}

#[pyfunction]
fn build_involution(p: &PyInvolutionParams) -> PyResult<PyRiordanArray> {
    core::build_involution(&p.0)
        .map(PyRiordanArray)
        .map_err(py_err)
}

#[pyfunction]
fn decompose_involution(t: &PyRiordanArray) -> PyResult<PyInvolutionParams> {
    core::decompose_involution(&t.0)
        .map(PyInvolutionParams)
        .map_err(py_err)
}

#[pyfunction]
fn g_from_phi(phi: &PySeries) -> PyResult<PySeries> {
    core::g_from_phi(&phi.0).map(PySeries).map_err(py_err)
}

#[pyfunction]
fn a_sequence(phi: &PySeries) -> PyResult<PySeries> {
    core::a_sequence(&phi.0).map(PySeries).map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (alpha, order = DEFAULT_ORDER))]
fn alpha_log_phi(alpha: &Bound<'_, PyAny>, order: usize) -> PyResult<PySeries> {
    core::alpha_log_phi(&to_rational(alpha)?, order)
        .map(PySeries)
        .map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (order = DEFAULT_ORDER))]
fn laguerre(order: usize) -> PyPolySequence {
    PyPolySequence(core::laguerre(order))
}

/// Returns `(sheffer_side, group_side)`.
#[pyfunction]
fn prop1_equivalence(d: &PyRiordanArray, times: usize, h: &PyWeight) -> PyResult<(bool, bool)> {
    core::prop1_equivalence(&d.0, times, &h.0).map_err(py_err)
}

#[pymodule]
fn riordan(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySeries>()?;
    m.add_class::<PyRiordanArray>()?;
    m.add_class::<PyInvolutionParams>()?;
    m.add_class::<PyWeight>()?;
    m.add_class::<PyPolySequence>()?;
    m.add_function(wrap_pyfunction!(build_involution, m)?)?;
    m.add_function(wrap_pyfunction!(decompose_involution, m)?)?;
    m.add_function(wrap_pyfunction!(g_from_phi, m)?)?;
    m.add_function(wrap_pyfunction!(a_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(alpha_log_phi, m)?)?;
    m.add_function(wrap_pyfunction!(laguerre, m)?)?;
    m.add_function(wrap_pyfunction!(prop1_equivalence, m)?)?;
    Ok(())
}
