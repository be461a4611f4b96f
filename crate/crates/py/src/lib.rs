//! Python bindings: `import golden_calculus`.
//!
//! Integers cross as Python `int`, rationals as `fractions.Fraction`, and
//! polynomials as coefficient lists from the leading term down.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use golden_core::carlitz;
use golden_core::goldpoly;
use golden_core::sequences;
use golden_core::verify::{parse_suites, run_suites, SweepLimits};
use golden_core::{IntMatrix, Poly, Rational};

fn value_error(e: golden_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((r.numer().clone(), r.denom().clone()))
}

/// Accepts anything with integer `numerator` and `denominator` (int, Fraction).
fn from_fraction(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    let num: BigInt = obj.getattr("numerator")?.extract()?;
    let den: BigInt = obj.getattr("denominator")?.extract()?;
    if den == BigInt::from(0) {
        return Err(PyValueError::new_err("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

fn poly_to_py<'py>(py: Python<'py>, p: &Poly<Rational>) -> PyResult<Vec<Bound<'py, PyAny>>> {
    p.descending().iter().map(|c| to_fraction(py, c)).collect()
}

fn poly_from_py(coeffs: &[Bound<'_, PyAny>]) -> PyResult<Poly<Rational>> {
    let c = coeffs.iter().map(from_fraction).collect::<PyResult<Vec<_>>>()?;
    Ok(Poly::from_descending(c))
}

/// `a + b·phi` with integer `a`, `b`.
#[pyclass(name = "GoldenInt", module = "golden_calculus", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyGoldenInt(golden_core::GoldenInt);

#[pymethods]
impl PyGoldenInt {
    #[new]
    #[pyo3(signature = (a, b = BigInt::from(0)))]
    fn new(a: BigInt, b: BigInt) -> Self {
        Self(golden_core::GoldenInt::new(a, b))
    }

    #[staticmethod]
    fn phi() -> Self {
        Self(golden_core::GoldenInt::phi())
    }

    #[staticmethod]
    fn phi_conj() -> Self {
        Self(golden_core::GoldenInt::phi_conj())
    }

    /// `phi**n` for any integer `n`.
    #[staticmethod]
    fn phi_pow(n: i64) -> Self {
        Self(golden_core::GoldenInt::phi_pow(n))
    }

    #[getter]
    fn a(&self) -> BigInt {
        self.0.a().clone()
    }

    #[getter]
    fn b(&self) -> BigInt {
        self.0.b().clone()
    }

    fn conj(&self) -> Self {
        Self(self.0.conj())
    }

    fn norm(&self) -> BigInt {
        self.0.norm()
    }

    fn __add__(&self, o: &Self) -> Self {
        Self(&self.0 + &o.0)
    }

    fn __sub__(&self, o: &Self) -> Self {
        Self(&self.0 - &o.0)
    }

    fn __mul__(&self, o: &Self) -> Self {
        Self(&self.0 * &o.0)
    }

    fn __neg__(&self) -> Self {
        Self(-&self.0)
    }

    fn __pow__(&self, e: u64, _modulo: Option<Bound<'_, PyAny>>) -> Self {
        Self(self.0.pow(e))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("GoldenInt({}, {})", self.0.a(), self.0.b())
    }
}

/// A Carlitz binomial matrix, or one of its powers.
#[pyclass(name = "CarlitzMatrix", module = "golden_calculus", frozen)]
struct PyCarlitzMatrix {
    matrix: IntMatrix,
}

#[pymethods]
impl PyCarlitzMatrix {
    #[new]
    fn new(order: usize) -> PyResult<Self> {
        Ok(Self {
            matrix: carlitz::build_carlitz(order).map_err(value_error)?,
        })
    }

    #[getter]
    fn order(&self) -> usize {
        self.matrix.order()
    }

    fn rows(&self) -> Vec<Vec<BigInt>> {
        self.matrix.rows()
    }

    fn pow(&self, k: u64) -> Self {
        Self {
            matrix: carlitz::mat_pow(&self.matrix, k),
        }
    }

    fn trace(&self) -> BigInt {
        self.matrix.trace()
    }

    fn det(&self) -> BigInt {
        self.matrix.det()
    }

    /// Monic characteristic polynomial, leading coefficient first.
    fn char_poly(&self) -> Vec<BigInt> {
        carlitz::char_poly(&self.matrix).descending()
    }

    fn __repr__(&self) -> String {
        format!("CarlitzMatrix({:?})", self.matrix.rows().iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>())
    }
}

#[pyfunction]
fn fib(n: i64) -> BigInt {
    sequences::fib(n)
}

#[pyfunction]
fn fib_factorial(n: u64) -> BigInt {
    sequences::fib_factorial(n)
}

#[pyfunction]
fn fibonomial(n: u64, k: u64) -> PyResult<BigInt> {
    sequences::fibonomial(n, k).map_err(value_error)
}

/// `F_{nk} / F_k`.
#[pyfunction]
fn fib_divisor(k: u64, n: i64) -> PyResult<BigInt> {
    sequences::fib_divisor(k, n).map_err(value_error)
}

/// `(x - a)^n_F`.
#[pyfunction]
#[pyo3(signature = (n, a = None))]
fn golden_binomial<'py>(py: Python<'py>, n: u64, a: Option<Bound<'py, PyAny>>) -> PyResult<Vec<Bound<'py, PyAny>>> {
    let a = a.as_ref().map(from_fraction).transpose()?.unwrap_or_else(|| Rational::from_integer(1.into()));
    poly_to_py(py, &goldpoly::golden_binomial(n, &a))
}

/// `(x - a)^n_F / F_n!`.
#[pyfunction]
#[pyo3(signature = (n, a = None))]
fn golden_poly<'py>(py: Python<'py>, n: u64, a: Option<Bound<'py, PyAny>>) -> PyResult<Vec<Bound<'py, PyAny>>> {
    let a = a.as_ref().map(from_fraction).transpose()?.unwrap_or_else(|| Rational::from_integer(1.into()));
    poly_to_py(py, &goldpoly::golden_poly_p(n, &a))
}

#[pyfunction]
fn golden_derivative<'py>(py: Python<'py>, coeffs: Vec<Bound<'py, PyAny>>) -> PyResult<Vec<Bound<'py, PyAny>>> {
    poly_to_py(py, &goldpoly::golden_derivative(&poly_from_py(&coeffs)?))
}

/// The golden translate of a polynomial by `a`.
#[pyfunction]
fn golden_translate<'py>(py: Python<'py>, coeffs: Vec<Bound<'py, PyAny>>, a: Bound<'py, PyAny>) -> PyResult<Vec<Bound<'py, PyAny>>> {
    let p = poly_from_py(&coeffs)?;
    poly_to_py(py, &goldpoly::golden_translate(&p, &from_fraction(&a)?))
}

/// `(scale, factors)` with `P_m = scale * prod(factors)`.
#[pyfunction]
#[pyo3(signature = (m, a = None))]
#[allow(clippy::type_complexity)]
fn quadratic_factors<'py>(
    py: Python<'py>,
    m: u64,
    a: Option<Bound<'py, PyAny>>,
) -> PyResult<(Bound<'py, PyAny>, Vec<Vec<Bound<'py, PyAny>>>)> {
    let a = a.as_ref().map(from_fraction).transpose()?.unwrap_or_else(|| Rational::from_integer(1.into()));
    let q = goldpoly::quadratic_factor_form(m, &a);
    let factors = q.factors.iter().map(|f| poly_to_py(py, f)).collect::<PyResult<_>>()?;
    Ok((to_fraction(py, &q.scale)?, factors))
}

/// `(trace of A^k, F^(k)_order)`.
#[pyfunction]
fn trace_invariant(order: usize, k: u64) -> PyResult<(BigInt, BigInt)> {
    carlitz::trace_invariant(order, k).map_err(value_error)
}

/// `(det of A^k, expected sign)`.
#[pyfunction]
fn det_invariant(order: usize, k: u64) -> PyResult<(BigInt, BigInt)> {
    carlitz::det_invariant(order, k).map_err(value_error)
}

/// Eigenvalues `phi^j phi'^(order-1-j)` of the order-`order` Carlitz matrix.
#[pyfunction]
fn eigen_powers(order: usize) -> PyResult<Vec<PyGoldenInt>> {
    Ok(carlitz::eigen_powers(order)
        .map_err(value_error)?
        .into_iter()
        .map(PyGoldenInt)
        .collect())
}

/// Runs identity sweeps and returns the JSON report as a string.
#[pyfunction]
#[pyo3(signature = (suites = vec!["all".to_string()], max_n = None, max_k = None, max_degree = None, seed = 0))]
fn verify(
    py: Python<'_>,
    suites: Vec<String>,
    max_n: Option<u64>,
    max_k: Option<u64>,
    max_degree: Option<u64>,
    seed: u64,
) -> PyResult<String> {
    let suites = parse_suites(&suites).map_err(value_error)?;
    let limits = SweepLimits {
        max_n,
        max_k,
        max_degree,
        seed,
    };
    let report = py.detach(|| run_suites(&suites, &limits));
    Ok(report.to_json().to_string())
}

#[pymodule]
fn golden_calculus(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGoldenInt>()?;
    m.add_class::<PyCarlitzMatrix>()?;
    m.add_function(wrap_pyfunction!(fib, m)?)?;
    m.add_function(wrap_pyfunction!(fib_factorial, m)?)?;
    m.add_function(wrap_pyfunction!(fibonomial, m)?)?;
    m.add_function(wrap_pyfunction!(fib_divisor, m)?)?;
    m.add_function(wrap_pyfunction!(golden_binomial, m)?)?;
    m.add_function(wrap_pyfunction!(golden_poly, m)?)?;
    m.add_function(wrap_pyfunction!(golden_derivative, m)?)?;
    m.add_function(wrap_pyfunction!(golden_translate, m)?)?;
    m.add_function(wrap_pyfunction!(quadratic_factors, m)?)?;
    m.add_function(wrap_pyfunction!(trace_invariant, m)?)?;
    m.add_function(wrap_pyfunction!(det_invariant, m)?)?;
    m.add_function(wrap_pyfunction!(eigen_powers, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
