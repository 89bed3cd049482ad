//! Python bindings. Exact values cross the boundary as strings (`"p/q"`) or
//! Python ints; nothing is converted to floating point.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use inose_core::algebra::rational::format_rational;
use inose_core::algebra::{parse_rational, RatFunc, Rational, UniPoly, Var};
use inose_core::elliptic;
use inose_core::inose::{self as pipeline, Computation};
use inose_core::job::{self, JobSpec};

create_exception!(
    inose,
    InoseError,
    PyValueError,
    "A pipeline or input error."
);

fn py_err(e: inose_core::Error) -> PyErr {
    InoseError::new_err(format!("{}: {e}", e.name()))
}

/// Accepts a Python int, a `"p/q"` string or anything whose `str()` is one
/// (such as `fractions.Fraction`).
fn rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    if obj.is_instance_of::<pyo3::types::PyFloat>() {
        return Err(InoseError::new_err("Parse: floats are not exact"));
    }
    parse_rational(&obj.str()?.to_cow()?).map_err(py_err)
}

fn poly(items: &Bound<'_, PyAny>) -> PyResult<UniPoly> {
    let coeffs = items
        .try_iter()?
        .map(|c| rational(&c?))
        .collect::<PyResult<Vec<_>>>()?;
    Ok(UniPoly::new(Var::X1, coeffs))
}

fn strings(p: &UniPoly) -> Vec<String> {
    job::coeff_array(p)
}

/// `y^2 = x^3 + a2 x^2 + a4 x + a6`.
#[pyclass(frozen, skip_from_py_object, module = "inose")]
#[derive(Clone)]
struct EllipticCurve {
    inner: elliptic::EllipticCurve,
}

#[pymethods]
impl EllipticCurve {
    #[new]
    fn new(a2: &Bound<'_, PyAny>, a4: &Bound<'_, PyAny>, a6: &Bound<'_, PyAny>) -> PyResult<Self> {
        let inner = elliptic::EllipticCurve::new(rational(a2)?, rational(a4)?, rational(a6)?)
            .map_err(py_err)?;
        Ok(EllipticCurve { inner })
    }

    fn discriminant(&self) -> String {
        format_rational(&self.inner.discriminant())
    }

    fn j_invariant(&self) -> String {
        format_rational(&self.inner.j_invariant())
    }

    fn __repr__(&self) -> String {
        format!("EllipticCurve({})", self.inner)
    }
}

/// `(x, y) -> (x_num / x_den, y * y_num / y_den)`; coefficient lists ascend.
#[pyclass(frozen, skip_from_py_object, module = "inose")]
#[derive(Clone)]
struct RationalMap {
    inner: elliptic::RationalMap,
}

#[pymethods]
impl RationalMap {
    #[new]
    fn new(
        x_num: &Bound<'_, PyAny>,
        x_den: &Bound<'_, PyAny>,
        y_num: &Bound<'_, PyAny>,
        y_den: &Bound<'_, PyAny>,
        degree: u32,
    ) -> PyResult<Self> {
        let inner = elliptic::RationalMap::new(
            poly(x_num)?,
            poly(x_den)?,
            poly(y_num)?,
            poly(y_den)?,
            degree,
        )
        .map_err(py_err)?;
        Ok(RationalMap { inner })
    }

    #[getter]
    fn degree(&self) -> u32 {
        self.inner.degree()
    }

    fn __repr__(&self) -> String {
        format!(
            "RationalMap(x = ({}) / ({}), y = y * ({}) / ({}), degree {})",
            self.inner.x_num(),
            self.inner.x_den(),
            self.inner.y_num(),
            self.inner.y_den(),
            self.inner.degree()
        )
    }
}

/// The section on `F^(1)` and its height.
#[pyclass(frozen, module = "inose")]
struct Section {
    x: RatFunc,
    y: RatFunc,
    #[pyo3(get)]
    height: String,
    #[pyo3(get)]
    intersection: u32,
    #[pyo3(get)]
    degree: u32,
    document: String,
}

impl Section {
    fn from_computation(c: &Computation) -> PyResult<Self> {
        let (Some(x), Some(y)) = (c.section.x(), c.section.y()) else {
            return Err(py_err(inose_core::Error::ZeroSection));
        };
        Ok(Section {
            x: x.clone(),
            y: y.clone(),
            height: format_rational(&c.section.height),
            intersection: c.section.intersection,
            degree: c.setup.degree(),
            document: job::result_document(c, false).to_string(),
        })
    }
}

#[pymethods]
impl Section {
    /// `(numerator, denominator)` coefficient strings in `s`, ascending, with
    /// a monic denominator.
    #[getter]
    fn x(&self) -> (Vec<String>, Vec<String>) {
        (strings(&self.x.num()), strings(&self.x.den()))
    }

    #[getter]
    fn y(&self) -> (Vec<String>, Vec<String>) {
        (strings(&self.y.num()), strings(&self.y.den()))
    }

    fn x_text(&self) -> String {
        self.x.to_string()
    }

    fn y_text(&self) -> String {
        self.y.to_string()
    }

    /// The same JSON document the command-line tool writes.
    fn to_json(&self) -> String {
        self.document.clone()
    }

    fn __repr__(&self) -> String {
        format!("Section(degree={}, height={})", self.degree, self.height)
    }
}

#[pyfunction]
fn verify_isogeny<'py>(
    py: Python<'py>,
    e1: &EllipticCurve,
    e2: &EllipticCurve,
    phi: &RationalMap,
) -> PyResult<Bound<'py, PyDict>> {
    let r = elliptic::verify_isogeny(&e1.inner, &e2.inner, &phi.inner);
    let d = PyDict::new(py);
    d.set_item("passed", r.passed())?;
    d.set_item("identity_holds", r.identity_holds)?;
    d.set_item("degree_ok", r.degree_ok)?;
    d.set_item("declared_degree", r.declared_degree)?;
    Ok(d)
}

/// `{"A", "B", "delta1", "delta2"}` of the surface, as exact strings.
#[pyfunction]
fn inose_coefficients<'py>(
    py: Python<'py>,
    e1: &EllipticCurve,
    e2: &EllipticCurve,
) -> PyResult<Bound<'py, PyDict>> {
    let data = pipeline::inose_coefficients(&e1.inner, &e2.inner).map_err(py_err)?;
    let d = PyDict::new(py);
    d.set_item("A", format_rational(&data.a))?;
    d.set_item("B", format_rational(&data.b))?;
    d.set_item("delta1", format_rational(&data.delta1))?;
    d.set_item("delta2", format_rational(&data.delta2))?;
    Ok(d)
}

/// Runs the full construction; raises `InoseError` on failure.
#[pyfunction]
fn compute_section(
    py: Python<'_>,
    e1: &EllipticCurve,
    e2: &EllipticCurve,
    phi: &RationalMap,
) -> PyResult<Section> {
    let c = py
        .detach(|| pipeline::compute_section(&e1.inner, &e2.inner, &phi.inner))
        .map_err(py_err)?;
    Section::from_computation(&c)
}

/// Runs a JSON job (the command-line input format) and returns the result
/// document as JSON text.
#[pyfunction]
#[pyo3(signature = (text, intermediates = false))]
fn compute_job(py: Python<'_>, text: &str, intermediates: bool) -> PyResult<String> {
    let spec = JobSpec::from_json(text).map_err(py_err)?;
    let c = py
        .detach(|| pipeline::compute_section(&spec.e1, &spec.e2, &spec.phi))
        .map_err(py_err)?;
    Ok(job::result_document(&c, intermediates).to_string())
}

/// Stage-by-stage comparison against a built-in example (`"d5"` or `"d6"`):
/// a list of `(stage, passed, detail)`.
#[pyfunction]
fn verify_example<'py>(py: Python<'py>, name: &str) -> PyResult<Bound<'py, PyList>> {
    let ex = pipeline::worked_example(name)
        .ok_or_else(|| InoseError::new_err(format!("unknown example {name:?}")))?;
    let report = py.detach(|| pipeline::verify_example(&ex));
    let rows: Vec<(String, bool, String)> = report
        .into_iter()
        .map(|r| (r.stage, r.passed, r.detail))
        .collect();
    PyList::new(py, rows)
}

#[pymodule]
fn inose(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<EllipticCurve>()?;
    m.add_class::<RationalMap>()?;
    m.add_class::<Section>()?;
    m.add_function(wrap_pyfunction!(verify_isogeny, m)?)?;
    m.add_function(wrap_pyfunction!(inose_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(compute_section, m)?)?;
    m.add_function(wrap_pyfunction!(compute_job, m)?)?;
    m.add_function(wrap_pyfunction!(verify_example, m)?)?;
    m.add("InoseError", m.py().get_type::<InoseError>())?;
    Ok(())
}
