//! Python bindings for `weyl-core`.

use pyo3::exceptions::{PyTypeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyModule;

use weyl_core::dc::{dc_check_with, omega_classify, DCOptions};
use weyl_core::error::Error;
use weyl_core::geometry::{ntp as ntp_of, roof as roof_of, Point};
use weyl_core::parse;
use weyl_core::poisson::poisson_bracket;
use weyl_core::poly::Direction;
use weyl_core::report::{report_json, to_json, OmegaJson};
use weyl_core::transforms::{apply_aut, AutWord};
use weyl_core::weyl;

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn loads(py: Python<'_>, text: &str) -> PyResult<Py<PyAny>> {
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

/// An element of the Weyl algebra in normal-ordered form.
#[pyclass(
    name = "WeylElement",
    module = "weyl_py",
    frozen,
    eq,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
struct PyWeyl(weyl::WeylElement);

impl PyWeyl {
    fn coerce(other: &Bound<'_, PyAny>) -> PyResult<weyl::WeylElement> {
        if let Ok(w) = other.cast::<PyWeyl>() {
            return Ok(w.get().0.clone());
        }
        if let Ok(s) = other.extract::<String>() {
            return parse::weyl(&s).map_err(err);
        }
        if let Ok(n) = other.extract::<i64>() {
            return Ok(weyl::WeylElement::constant(weyl_core::poly::rat(n)));
        }
        Err(PyTypeError::new_err("expected WeylElement, str or int"))
    }
}

#[pymethods]
impl PyWeyl {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        parse::weyl(text).map(PyWeyl).map_err(err)
    }

    #[staticmethod]
    fn p() -> Self {
        PyWeyl(weyl::WeylElement::p())
    }

    #[staticmethod]
    fn q() -> Self {
        PyWeyl(weyl::WeylElement::q())
    }

    fn __add__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(PyWeyl(&self.0 + &Self::coerce(other)?))
    }

    fn __radd__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.__add__(other)
    }

    fn __sub__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(PyWeyl(&self.0 - &Self::coerce(other)?))
    }

    fn __mul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(PyWeyl(&self.0 * &Self::coerce(other)?))
    }

    fn __rmul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(PyWeyl(&Self::coerce(other)? * &self.0))
    }

    fn __neg__(&self) -> Self {
        PyWeyl(-self.0.clone())
    }

    fn __pow__(&self, n: u32, _modulo: Option<Py<PyAny>>) -> Self {
        PyWeyl(self.0.pow(n))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("WeylElement('{}')", self.0)
    }

    fn commutator(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(PyWeyl(self.0.commutator(&Self::coerce(other)?)))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `[(k, component), ...]` with `k` decreasing.
    fn graded(&self) -> PyResult<Vec<(i64, String)>> {
        if self.0.is_zero() {
            return Ok(Vec::new());
        }
        let d = self.0.graded_decomp().map_err(err)?;
        Ok(d.parts.iter().map(|(k, c)| (*k, c.to_string())).collect())
    }

    /// `(degree, leading form)`; the degree is `None` for zero.
    fn leading(&self, rho: i64, sigma: i64) -> PyResult<(Option<i64>, String)> {
        let d = Direction::new(rho, sigma).map_err(err)?;
        let lf = self.0.leading_form(d).map_err(err)?;
        Ok((self.0.v_deg(d).finite(), lf.to_string()))
    }

    fn apply(&self, word: &str) -> PyResult<Self> {
        let word: AutWord = word.parse().map_err(err)?;
        apply_aut(&word, &self.0).map(PyWeyl).map_err(err)
    }
}

/// Normal-ordered form of a Weyl expression.
#[pyfunction]
fn eval(text: &str) -> PyResult<String> {
    parse::weyl(text).map(|z| z.to_string()).map_err(err)
}

/// Commutator of two Weyl expressions.
#[pyfunction]
fn bracket(a: &str, b: &str) -> PyResult<String> {
    let (a, b) = (parse::weyl(a).map_err(err)?, parse::weyl(b).map_err(err)?);
    Ok(a.commutator(&b).to_string())
}

/// Poisson bracket of two polynomials in `X, Y`.
#[pyfunction]
fn poisson(f: &str, g: &str) -> PyResult<String> {
    let (f, g) = (parse::poly(f).map_err(err)?, parse::poly(g).map_err(err)?);
    Ok(poisson_bracket(&f, &g).to_string())
}

/// `(ntp vertices, roof points)`.
#[pyfunction]
fn ntp(text: &str) -> PyResult<(Vec<Point>, Vec<Point>)> {
    let z = parse::weyl(text).map_err(err)?;
    let chain = roof_of(&z).map_err(err)?;
    Ok((ntp_of(&z).vertices().to_vec(), chain.points))
}

#[pyfunction]
fn classify_omega(py: Python<'_>, f: &str, g: &str) -> PyResult<Py<PyAny>> {
    let (f, g) = (parse::poly(f).map_err(err)?, parse::poly(g).map_err(err)?);
    let class = omega_classify(&f, &g).map_err(err)?;
    loads(py, &to_json(&OmegaJson::from(&class)))
}

/// The generation report as a dict, with the same layout as `weyl dc-check`.
#[pyfunction]
#[pyo3(signature = (z, w, pre_word=None, assume_centralizer_cyclic=false))]
fn dc_check(
    py: Python<'_>,
    z: &str,
    w: &str,
    pre_word: Option<&str>,
    assume_centralizer_cyclic: bool,
) -> PyResult<Py<PyAny>> {
    let (z, w) = (parse::weyl(z).map_err(err)?, parse::weyl(w).map_err(err)?);
    let opts = DCOptions {
        pre_word: pre_word
            .map(str::parse::<AutWord>)
            .transpose()
            .map_err(err)?,
        assume_centralizer_cyclic,
    };
    let rep = dc_check_with(&z, &w, &opts);
    loads(py, &to_json(&report_json(&z, &w, &rep)))
}

#[pymodule]
fn weyl_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyWeyl>()?;
    m.add_function(wrap_pyfunction!(eval, m)?)?;
    m.add_function(wrap_pyfunction!(bracket, m)?)?;
    m.add_function(wrap_pyfunction!(poisson, m)?)?;
    m.add_function(wrap_pyfunction!(ntp, m)?)?;
    m.add_function(wrap_pyfunction!(classify_omega, m)?)?;
    m.add_function(wrap_pyfunction!(dc_check, m)?)?;
    Ok(())
}
