//! Python bindings. Reports are returned as plain `dict`/`list` values with
//! rationals encoded as `"n/d"` strings, matching the JSON produced by the
//! command-line tool.

use conjrel::cli::{parse_poly, report};
use conjrel::families;
use conjrel::galois;
use conjrel::numeric;
use conjrel::poly::{trace_normalize, BigRat, QPoly};
use conjrel::relations;
use num_bigint::BigInt;
use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::types::PyString;
use serde_json::Value;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_python(py: Python<'_>, v: &Value) -> PyResult<Py<PyAny>> {
    let json = py.import("json")?;
    Ok(json.call_method1("loads", (v.to_string(),))?.unbind())
}

fn parse_bigint(s: &str) -> PyResult<BigInt> {
    s.trim().parse().map_err(|_| value_error(format!("not an integer: {s:?}")))
}

/// Accepts `int`, `fractions.Fraction` (anything with `numerator` and
/// `denominator`) or a string `"n"` / `"n/d"`.
fn extract_rat(obj: &Bound<'_, PyAny>) -> PyResult<BigRat> {
    if let Ok(s) = obj.cast::<PyString>() {
        let s = s.to_str()?;
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (parse_bigint(n)?, parse_bigint(d)?),
            None => (parse_bigint(s)?, BigInt::from(1)),
        };
        if d == BigInt::from(0) {
            return Err(PyZeroDivisionError::new_err("zero denominator"));
        }
        return Ok(BigRat::new(n, d));
    }
    let n = obj.getattr("numerator")?.str()?;
    let d = obj.getattr("denominator")?.str()?;
    Ok(BigRat::new(parse_bigint(n.to_str()?)?, parse_bigint(d.to_str()?)?))
}

/// A univariate polynomial with rational coefficients.
#[pyclass(name = "Poly", module = "conjrel_py", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyPoly {
    inner: QPoly,
}

impl From<QPoly> for PyPoly {
    fn from(inner: QPoly) -> Self {
        PyPoly { inner }
    }
}

#[pymethods]
impl PyPoly {
    /// `Poly("x^4 - 2x^3 + x - 1")` or `Poly([c0, c1, ...])` with the
    /// constant term first.
    #[new]
    fn new(spec: &Bound<'_, PyAny>) -> PyResult<Self> {
        if let Ok(s) = spec.cast::<PyString>() {
            return parse_poly(s.to_str()?).map(PyPoly::from).map_err(value_error);
        }
        let coeffs = spec.try_iter()?.map(|c| extract_rat(&c?)).collect::<PyResult<Vec<_>>>()?;
        Ok(QPoly::from_rats(coeffs).into())
    }

    #[getter]
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    /// Coefficients as `"n/d"` strings, constant term first.
    fn coeffs(&self) -> Vec<String> {
        self.inner.coeffs().iter().map(ToString::to_string).collect()
    }

    fn discriminant(&self) -> String {
        self.inner.discriminant().to_string()
    }

    fn is_irreducible(&self) -> bool {
        conjrel::factor::is_irreducible(&self.inner)
    }

    /// Monic irreducible factors with multiplicities.
    fn factor(&self) -> Vec<(PyPoly, usize)> {
        conjrel::factor::factor_over_q(&self.inner).factors.into_iter().map(|(f, m)| (f.into(), m)).collect()
    }

    /// The monic polynomial with roots `alpha - r`, `r = trace / degree`, and `r`.
    fn trace_normalize(&self) -> PyResult<(PyPoly, String)> {
        let (p, shift) = trace_normalize(&self.inner).map_err(value_error)?;
        Ok((p.into(), shift.r.to_string()))
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly('{}')", self.inner)
    }
}

fn poly_arg(obj: &Bound<'_, PyAny>) -> PyResult<QPoly> {
    if let Ok(p) = obj.cast::<PyPoly>() {
        return Ok(p.get().inner.clone());
    }
    PyPoly::new(obj).map(|p| p.inner)
}

/// Exact relation report for an irreducible polynomial of degree 4..=7.
#[pyfunction]
fn detect(py: Python<'_>, p: &Bound<'_, PyAny>) -> PyResult<Py<PyAny>> {
    let r = relations::detect_relations(&poly_arg(p)?).map_err(value_error)?;
    to_python(py, &report::relations(&r))
}

/// Galois group via the splitting field.
#[pyfunction]
#[pyo3(signature = (p, order_cap = 48))]
fn galois_group(py: Python<'_>, p: &Bound<'_, PyAny>, order_cap: usize) -> PyResult<Py<PyAny>> {
    let g = galois::galois_group(&poly_arg(p)?, order_cap).map_err(value_error)?;
    to_python(py, &report::galois(&g))
}

/// Certified numeric roots and the relations found by exhaustive scan.
#[pyfunction]
#[pyo3(signature = (p, bits = 64))]
fn oracle(py: Python<'_>, p: &Bound<'_, PyAny>, bits: u32) -> PyResult<Py<PyAny>> {
    let (roots, rep) = numeric::oracle_relations(&poly_arg(p)?, bits).map_err(value_error)?;
    to_python(py, &report::oracle(&roots, &rep))
}

/// Split a quadratic-plus-cubic sextic into `x^2 - a` and `x^3 + bx + c`.
#[pyfunction]
fn decompose(py: Python<'_>, p: &Bound<'_, PyAny>) -> PyResult<Py<PyAny>> {
    let d = families::decompose_quad_cubic(&poly_arg(p)?).map_err(value_error)?;
    to_python(py, &report::decomposition(&d))
}

/// Minimal polynomial of `sqrt(a) + theta` where `theta^3 + b theta + c = 0`.
#[pyfunction]
fn gen_quad_cubic(a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>, c: &Bound<'_, PyAny>) -> PyResult<PyPoly> {
    families::gen_quad_cubic(&extract_rat(a)?, &extract_rat(b)?, &extract_rat(c)?).map(Into::into).map_err(value_error)
}

#[pyfunction]
fn gen_even_quartic(a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>) -> PyResult<PyPoly> {
    Ok(families::gen_even_quartic(&extract_rat(a)?, &extract_rat(b)?).into())
}

#[pyfunction]
fn gen_even_sextic(a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>, c: &Bound<'_, PyAny>) -> PyResult<PyPoly> {
    Ok(families::gen_even_sextic(&extract_rat(a)?, &extract_rat(b)?, &extract_rat(c)?).into())
}

/// Group name of a quadratic-plus-cubic sextic from the cubic discriminant alone.
#[pyfunction]
fn quad_cubic_group(a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>, c: &Bound<'_, PyAny>) -> PyResult<String> {
    Ok(galois::quad_cubic_galois_fast(&extract_rat(a)?, &extract_rat(b)?, &extract_rat(c)?).to_string())
}

/// Exact labeling of the six roots satisfying the three-sum system.
/// Returns the group name, the relabeled group as image lists and the
/// minimal polynomial of the common pair sum.
#[pyfunction]
fn certify_labeling(p: &Bound<'_, PyAny>) -> PyResult<(String, Vec<Vec<usize>>, PyPoly)> {
    let lab = galois::certify_three_sum_labeling(&poly_arg(p)?).map_err(value_error)?;
    let perms = lab.group.iter().map(|g| g.images().to_vec()).collect();
    Ok((lab.name.to_string(), perms, lab.beta_minpoly.into()))
}

/// Run the command-line tool in-process and return its exit code.
#[pyfunction]
fn run_cli(args: Vec<String>) -> i32 {
    conjrel::cli::run(std::iter::once("conjrel".to_string()).chain(args))
}

#[pymodule]
fn conjrel_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPoly>()?;
    m.add_function(wrap_pyfunction!(detect, m)?)?;
    m.add_function(wrap_pyfunction!(galois_group, m)?)?;
    m.add_function(wrap_pyfunction!(oracle, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(gen_quad_cubic, m)?)?;
    m.add_function(wrap_pyfunction!(gen_even_quartic, m)?)?;
    m.add_function(wrap_pyfunction!(gen_even_sextic, m)?)?;
    m.add_function(wrap_pyfunction!(quad_cubic_group, m)?)?;
    m.add_function(wrap_pyfunction!(certify_labeling, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}
